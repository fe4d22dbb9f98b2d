"""
Árvores de desdobramento, fórmula característica Θ e o oráculo por
enumeração de derivações.

O oráculo não reaproveita a busca de `core.slr`: enumera as árvores
até o limite N(σ), monta Θ e decide a fórmula sem predicados
distribuindo as tuplas por permutação e resolvendo as igualdades
restantes por união-busca (o universo é infinito, então existenciais
sem tupla sempre têm valor novo disponível).
"""
from itertools import permutations, product
from typing import Dict, Iterator, List, Optional, Set, Tuple

from core.slr import check_predicates, flatten, flatten_rule, unflatten
from model.estrutura_model import Store, Structure
from model.slr_model import Eq, FormulaPlana, Neq, PredAtom, RelAtom, Sid, SlrFormula
from model.termo_model import Const, Term, Var
from model.unfolding_model import UnfoldingTree
from parsers.slr_parser import free_variables
from util.exceptions import InvalidTreeError, UnboundVariableError, UnknownConstantError
from util.logger_config import logger

# árvore aninhada: (índice da regra, subárvores, nós, átomos relacionais)
_Aninhada = Tuple[int, Tuple["_Aninhada", ...], int, int]


def derivation_size_bound(s: Structure, sid: Sid) -> int:
    """
    N(σ): tuplas (dobradas se alguma regra ramifica) + predicados ×
    regras sem átomos relacionais + 1.

    Numa derivação que ramifica, t folhas com tuplas pedem até t − 1
    nós de composição além delas. As árvores com mais átomos
    relacionais do que tuplas são cortadas na enumeração.
    """
    planas = [flatten_rule(r) for r in sid.rules]
    ramifica = any(len(p.predicates) > 1 for p in planas)
    tuplas = s.tuple_count() * (2 if ramifica else 1)
    sem_relacoes = sum(1 for p in planas if not p.relations)
    return tuplas + len(sid.predicates()) * sem_relacoes + 1


def enumerate_unfolding_trees(atomo: PredAtom, sid: Sid, max_nodes: int,
                              max_relations: Optional[int] = None) -> Iterator[UnfoldingTree]:
    """
    Todas as árvores de desdobramento de `atomo` com até `max_nodes` nós
    (e até `max_relations` átomos relacionais, se informado), cada uma
    uma vez, em ordem lexicográfica dos índices de regra em pré-ordem.

    Raises:
        UnknownPredicateError: Predicado sem regras nem declaração
    """
    check_predicates(sid, atomo)
    planas = {i: flatten_rule(r) for i, r in enumerate(sid.rules)}
    limite_rel = max_relations if max_relations is not None else float("inf")

    def arvores(predicado: str, nos: int, relacoes: float) -> Iterator[_Aninhada]:
        if nos < 1:
            return
        for indice, _ in sid.defining(predicado):
            plana = planas[indice]
            proprias = len(plana.relations)
            if proprias > relacoes:
                continue
            for filhos, n_filhos, r_filhos in listas(plana.predicates, nos - 1, relacoes - proprias):
                yield indice, filhos, 1 + n_filhos, proprias + r_filhos

    def listas(atomos, nos: int, relacoes: float) -> Iterator[Tuple[Tuple[_Aninhada, ...], int, int]]:
        if not atomos:
            yield (), 0, 0
            return
        reserva = len(atomos) - 1
        for primeira in arvores(atomos[0].pred, nos - reserva, relacoes):
            for resto, n_resto, r_resto in listas(atomos[1:], nos - primeira[2], relacoes - primeira[3]):
                yield (primeira,) + resto, primeira[2] + n_resto, primeira[3] + r_resto

    for aninhada in arvores(atomo.pred, max_nodes, limite_rel):
        yield _numerar(atomo.pred, aninhada)


def _numerar(predicado: str, aninhada: _Aninhada) -> UnfoldingTree:
    filhos: Dict[int, Tuple[int, ...]] = {}
    rotulos: Dict[int, int] = {}

    def visitar(no: _Aninhada) -> int:
        atual = len(rotulos)
        rotulos[atual] = no[0]
        filhos[atual] = tuple(visitar(f) for f in no[1])
        return atual

    visitar(aninhada)
    return UnfoldingTree(predicado, filhos, rotulos)


def tree_problem(arvore: UnfoldingTree, sid: Sid) -> Optional[str]:
    """Descreve por que a árvore não é de desdobramento para o seu predicado, ou None."""
    for no in arvore.nodes:
        indice = arvore.labels[no]
        if not 0 <= indice < len(sid.rules):
            return f"nó {no}: regra {indice} inexistente"
    raiz = sid.rules[arvore.labels[arvore.root]]
    if raiz.head != arvore.predicate:
        return f"a regra da raiz define {raiz.head}, não {arvore.predicate}"
    for no in arvore.nodes:
        plana = flatten_rule(sid.rules[arvore.labels[no]])
        filhos = arvore.children.get(no, ())
        if len(filhos) != len(plana.predicates):
            return f"nó {no}: {len(filhos)} filhos para {len(plana.predicates)} átomos de predicado"
        for atomo, filho in zip(plana.predicates, filhos):
            if filho not in arvore.labels:
                return f"nó {no}: filho {filho} sem rótulo"
            if sid.rules[arvore.labels[filho]].head != atomo.pred:
                return f"nó {filho}: regra não define {atomo.pred}"
    return None


def characteristic_formula(arvore: UnfoldingTree, atomo: PredAtom, sid: Sid) -> SlrFormula:
    """
    Θ: substitui recursivamente cada átomo de predicado pelo corpo da
    regra do nó filho. Existenciais do nó n viram `y_<n>_<i>`; átomos
    relacionais recebem a marca `n<n>`.

    Raises:
        InvalidTreeError: A árvore não casa com o SID
    """
    problema = tree_problem(arvore, sid)
    if problema:
        raise InvalidTreeError(problema)
    reservados = free_variables(atomo)
    existenciais: List[str] = []
    puros: List = []
    relacoes: List[RelAtom] = []

    def nome_ligado(no: int, i: int) -> str:
        nome = f"y_{no}_{i}"
        while nome in reservados:
            nome += "_"
        return nome

    def expandir(no: int, argumentos: Tuple[Term, ...]):
        regra = sid.rules[arvore.labels[no]]
        plana = flatten_rule(regra)
        mapa: Dict[str, Term] = dict(zip(regra.params, argumentos))
        for i, y in enumerate(plana.existentials, start=1):
            novo = nome_ligado(no, i)
            existenciais.append(novo)
            mapa[y] = Var(novo)

        def sub(t: Term) -> Term:
            return mapa[t.name] if isinstance(t, Var) else t

        for a in plana.pure:
            puros.append(type(a)(sub(a.left), sub(a.right)))
        for a in plana.relations:
            relacoes.append(RelAtom(a.rel, tuple(sub(t) for t in a.args), f"n{no}"))
        for a, filho in zip(plana.predicates, arvore.children.get(no, ())):
            expandir(filho, tuple(sub(t) for t in a.args))

    expandir(arvore.root, atomo.args)
    return unflatten(FormulaPlana(tuple(existenciais), tuple(puros), tuple(relacoes), ()))


# === Decisão de fórmulas sem predicados ===

class _Classes:
    """União-busca sobre termos com valor fixo opcional por classe."""

    def __init__(self):
        self.pai: Dict[Term, Term] = {}
        self.valor: Dict[Term, int] = {}

    def achar(self, t: Term) -> Term:
        self.pai.setdefault(t, t)
        while self.pai[t] != t:
            self.pai[t] = self.pai[self.pai[t]]
            t = self.pai[t]
        return t

    def fixar(self, t: Term, v: int) -> bool:
        raiz = self.achar(t)
        if raiz in self.valor:
            return self.valor[raiz] == v
        self.valor[raiz] = v
        return True

    def unir(self, a: Term, b: Term) -> bool:
        ra, rb = self.achar(a), self.achar(b)
        if ra == rb:
            return True
        va, vb = self.valor.get(ra), self.valor.get(rb)
        if va is not None and vb is not None and va != vb:
            return False
        self.pai[rb] = ra
        if va is None and vb is not None:
            self.valor[ra] = vb
        return True

    def distintos(self, a: Term, b: Term) -> bool:
        ra, rb = self.achar(a), self.achar(b)
        if ra == rb:
            return False
        va, vb = self.valor.get(ra), self.valor.get(rb)
        return va is None or vb is None or va != vb


def satisfies_predicate_free(s: Structure, store: Store, formula: SlrFormula) -> bool:
    """
    Decide (σ, ν) ⊨ φ para φ sem átomos de predicado.

    Os átomos relacionais devem consumir exatamente as tuplas de σ;
    cada distribuição por permutação fixa valores, e igualdades e
    desigualdades entre os termos restantes são resolvidas por classes.
    """
    plana = flatten(formula)
    if plana.predicates:
        raise InvalidTreeError("fórmula ainda contém átomos de predicado")
    por_relacao: Dict[str, List[RelAtom]] = {}
    for a in plana.relations:
        por_relacao.setdefault(a.rel, []).append(a)
    tuplas = {nome: sorted(s.tuples.get(nome, ())) for nome in s.signature.relation_names}
    for nome, ts in tuplas.items():
        if len(ts) != len(por_relacao.get(nome, [])):
            return False
    if any(nome not in tuplas for nome in por_relacao):
        return False
    livres = free_variables(formula)
    fixos: Dict[Term, int] = {}
    for v in livres:
        if v not in store.first_order:
            raise UnboundVariableError(v)
        fixos[Var(v)] = store.first_order[v]
    for c in _constantes(plana):
        if c.name not in s.constant_values:
            raise UnknownConstantError(c.name)
        fixos[c] = s.constant_values[c.name]

    nomes = sorted(por_relacao)
    escolhas = [permutations(tuplas[nome]) for nome in nomes]
    for combinacao in product(*escolhas):
        classes = _Classes()
        consistente = all(classes.fixar(t, v) for t, v in fixos.items())
        for nome, ordem in zip(nomes, combinacao):
            if not consistente:
                break
            for atomo, t in zip(por_relacao[nome], ordem):
                consistente = consistente and all(classes.fixar(termo, v) for termo, v in zip(atomo.args, t))
        if not consistente:
            continue
        if not all(classes.unir(a.left, a.right) for a in plana.pure if isinstance(a, Eq)):
            continue
        if all(classes.distintos(a.left, a.right) for a in plana.pure if isinstance(a, Neq)):
            return True
    return False


def _constantes(plana: FormulaPlana) -> Set[Const]:
    termos: List[Term] = []
    for a in plana.pure:
        termos += [a.left, a.right]
    for a in plana.relations:
        termos += list(a.args)
    return {t for t in termos if isinstance(t, Const)}


def oracle_check(s: Structure, store: Store, atomo: PredAtom, sid: Sid) -> bool:
    """
    Verdadeiro se alguma árvore de desdobramento com até N(σ) nós e
    exatamente |tuplas de σ| átomos relacionais tem Θ satisfeita.
    """
    check_predicates(sid, atomo)
    limite = derivation_size_bound(s, sid)
    total = s.tuple_count()
    examinadas = 0
    for arvore in enumerate_unfolding_trees(atomo, sid, limite, total):
        theta = characteristic_formula(arvore, atomo, sid)
        if len(flatten(theta).relations) != total:
            continue
        examinadas += 1
        if satisfies_predicate_free(s, store, theta):
            logger.debug(f"Oráculo: árvore com {arvore.size()} nós satisfaz {atomo.pred}")
            return True
    logger.debug(f"Oráculo: {examinadas} árvores examinadas sem sucesso (N = {limite})")
    return False


def relation_labels(sid: Sid) -> Dict[int, List[str]]:
    """Símbolos de relação de cada regra, para as marcas R^n das árvores."""
    return {i: [a.rel for a in flatten_rule(r).relations] for i, r in enumerate(sid.rules)}
