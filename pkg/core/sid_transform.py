"""
Transformações de SIDs que preservam modelos: normalização (eliminação
das igualdades entre variáveis) e separação de átomos relacionais
repetidos numa mesma regra.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Set, Tuple, Union

from core.combinatoria import partition_of_values, set_partitions
from core.slr import check_predicates, check_slr, flatten_rule, term_value, unflatten
from model.estrutura_model import Store, Structure
from model.slr_model import Eq, FormulaPlana, Neq, PredAtom, RelAtom, Rule, Sid
from model.termo_model import Const, Term, Var
from util.exceptions import UnknownPredicateError
from util.logger_config import logger

Particao = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class NormalizationResult:
    """
    SID normalizado e o mapa (predicado original, partição dos
    parâmetros) → predicado A_I que o representa.
    """
    sid: Sid
    names: Mapping[Tuple[str, Particao], str] = field(default_factory=dict)
    source: Sid = field(default_factory=Sid)


def is_normalized(sid: Sid) -> bool:
    """Verdadeiro se nenhuma regra tem igualdade entre duas variáveis distintas."""
    for regra in sid.rules:
        for atomo in flatten_rule(regra).pure:
            if isinstance(atomo, Eq) and isinstance(atomo.left, Var) and isinstance(atomo.right, Var):
                if atomo.left != atomo.right:
                    return False
    return True


def _termos_da_regra(regra: Rule, plana: FormulaPlana) -> List[Term]:
    termos: List[Term] = [Var(p) for p in regra.params] + [Var(y) for y in plana.existentials]
    atomos = list(plana.pure) + list(plana.relations) + list(plana.predicates)
    for atomo in atomos:
        argumentos = (atomo.left, atomo.right) if isinstance(atomo, (Eq, Neq)) else atomo.args
        for t in argumentos:
            if isinstance(t, Const) and t not in termos:
                termos.append(t)
    return termos


def _representante(classe: List[Term], params: Set[str]) -> Term:
    for t in classe:
        if isinstance(t, Var) and t.name in params:
            return t
    for t in classe:
        if isinstance(t, Const):
            return t
    return classe[0]


class _Normalizador:
    def __init__(self, sid: Sid):
        self.sid = sid
        self.usados: Set[str] = set(check_predicates(sid))
        for regra in sid.rules:
            self.usados.update(a.rel for a in flatten_rule(regra).relations)
        self.nomes: Dict[Tuple[str, Particao], str] = {}

    def nome(self, predicado: str, particao: Particao) -> str:
        chave = (predicado, particao)
        if chave not in self.nomes:
            sufixo = "_".join("x".join(str(i) for i in bloco) for bloco in particao)
            novo = f"{predicado}__{sufixo}" if particao else f"{predicado}__"
            while novo in self.usados:
                novo += "_"
            self.usados.add(novo)
            self.nomes[chave] = novo
        return self.nomes[chave]

    def variantes(self, regra: Rule) -> List[Rule]:
        """Uma regra A_I por equivalência ≈ compatível com as igualdades do corpo."""
        plana = flatten_rule(regra)
        termos = _termos_da_regra(regra, plana)
        params = set(regra.params)
        iguais = [(a.left, a.right) for a in plana.pure if isinstance(a, Eq)]
        geradas = []
        for particao in set_partitions(termos):
            classe_de = {t: i for i, bloco in enumerate(particao) for t in bloco}
            if any(classe_de[a] != classe_de[b] for a, b in iguais):
                continue
            reps = [_representante(bloco, params) for bloco in particao]

            def sub(t: Term) -> Term:
                return reps[classe_de[t]]

            puros: List[Union[Eq, Neq]] = []
            insatisfazivel = False
            for atomo in plana.pure:
                esquerda, direita = sub(atomo.left), sub(atomo.right)
                if isinstance(atomo, Neq):
                    if esquerda == direita:
                        insatisfazivel = True
                        break
                    puros.append(Neq(esquerda, direita))
                elif esquerda != direita and Eq(esquerda, direita) not in puros:
                    puros.append(Eq(esquerda, direita))
            if insatisfazivel:
                continue
            for bloco, rep in zip(particao, reps):
                for t in bloco:
                    if isinstance(t, Const) and t != rep and Eq(rep, t) not in puros and Eq(t, rep) not in puros:
                        puros.append(Eq(rep, t))

            blocos_cabeca: Dict[int, List[int]] = {}
            for posicao, p in enumerate(regra.params, start=1):
                blocos_cabeca.setdefault(classe_de[Var(p)], []).append(posicao)
            cabeca_particao = tuple(tuple(b) for b in blocos_cabeca.values())
            cabeca_params = tuple(regra.params[b[0] - 1] for b in cabeca_particao)

            relacoes = tuple(RelAtom(a.rel, tuple(sub(t) for t in a.args)) for a in plana.relations)
            predicados = []
            for atomo in plana.predicates:
                argumentos = [sub(t) for t in atomo.args]
                blocos: Dict[Term, List[int]] = {}
                for posicao, t in enumerate(argumentos, start=1):
                    blocos.setdefault(t, []).append(posicao)
                particao_filho = tuple(tuple(b) for b in blocos.values())
                predicados.append(PredAtom(
                    self.nome(atomo.pred, particao_filho),
                    tuple(argumentos[b[0] - 1] for b in particao_filho),
                ))

            ocorrem: Set[str] = set()
            for atomo in puros:
                ocorrem.update(t.name for t in (atomo.left, atomo.right) if isinstance(t, Var))
            for atomo in list(relacoes) + predicados:
                ocorrem.update(t.name for t in atomo.args if isinstance(t, Var))
            existenciais = tuple(
                y for y in plana.existentials if Var(y) in reps and y in ocorrem
            )
            corpo = unflatten(FormulaPlana(existenciais, tuple(puros), relacoes, tuple(predicados)))
            geradas.append(Rule(self.nome(regra.head, cabeca_particao), cabeca_params, corpo, regra.linha))
        return geradas


def normalize_sid(sid: Sid) -> NormalizationResult:
    """
    Constrói um SID normalizado equivalente.

    Para cada regra e cada equivalência ≈ entre os termos da regra
    compatível com suas igualdades, emite uma regra para o predicado
    A_I, onde I é a partição dos parâmetros induzida por ≈. Cada classe
    é substituída pelo seu representante (parâmetro, senão constante,
    senão o primeiro existencial); regras com x ≠ x são descartadas.

    Os predicados originais não aparecem no resultado: um átomo
    A(ξ1..ξn) corresponde a A_I(representantes), com I dada pela
    igualdade dos valores dos argumentos (ver `check_normalized`).
    """
    normalizador = _Normalizador(sid)
    regras: List[Rule] = []
    for regra in sid.rules:
        regras.extend(normalizador.variantes(regra))
    aridades = {nome: len(particao) for (_, particao), nome in normalizador.nomes.items()}
    declarados = tuple(sorted(aridades.items()))
    normalizado = Sid(tuple(regras), sid.constants, declarados)
    logger.info(f"SID normalizado: {len(sid.rules)} regras para {len(regras)} regras")
    return NormalizationResult(normalizado, dict(normalizador.nomes), sid)


def check_normalized(s: Structure, store: Store, atomo: PredAtom, resultado: NormalizationResult) -> bool:
    """
    Decide A(ξ̄) sob o SID normalizado, consultando A_I com I a partição
    das posições pela igualdade dos valores dos argumentos.
    """
    if atomo.pred not in resultado.source.predicates():
        raise UnknownPredicateError(atomo.pred)
    valores = [store.value(t.name) if isinstance(t, Var) else term_value(t, {}, s) for t in atomo.args]
    particao = partition_of_values(valores)
    nome = resultado.names.get((atomo.pred, particao))
    if nome is None:
        return False
    variaveis = [f"_a{i}" for i in range(len(particao))]
    store_normalizado = Store({v: valores[b[0] - 1] for v, b in zip(variaveis, particao)})
    return check_slr(s, store_normalizado, PredAtom(nome, tuple(Var(v) for v in variaveis)), resultado.sid)


def split_relation_atoms(sid: Sid) -> Sid:
    """
    Garante no máximo uma ocorrência de cada símbolo de relação por regra.

    Cada ocorrência repetida R(t̄) vira um átomo P(v̄) sobre as variáveis
    distintas de t̄, com a nova regra `P(v̄) <- R(t̄)` acrescentada ao
    final do SID. Regras já conformes são mantidas como estão.
    """
    usados: Set[str] = set(check_predicates(sid))
    for regra in sid.rules:
        usados.update(a.rel for a in flatten_rule(regra).relations)
    regras = list(sid.rules)
    novas: List[Rule] = []
    for indice, regra in enumerate(sid.rules):
        plana = flatten_rule(regra)
        vistos: Set[str] = set()
        mantidas: List[RelAtom] = []
        extras: List[PredAtom] = []
        for atomo in plana.relations:
            if atomo.rel not in vistos:
                vistos.add(atomo.rel)
                mantidas.append(atomo)
                continue
            nome = f"{regra.head}_{atomo.rel}"
            contador = 1
            while f"{nome}_{contador}" in usados:
                contador += 1
            nome = f"{nome}_{contador}"
            usados.add(nome)
            variaveis: List[str] = []
            for t in atomo.args:
                if isinstance(t, Var) and t.name not in variaveis:
                    variaveis.append(t.name)
            novas.append(Rule(nome, tuple(variaveis), RelAtom(atomo.rel, atomo.args)))
            extras.append(PredAtom(nome, tuple(Var(v) for v in variaveis)))
        if not extras:
            continue
        corpo = unflatten(FormulaPlana(plana.existentials, plana.pure, tuple(mantidas),
                                       plana.predicates + tuple(extras)))
        regras[indice] = Rule(regra.head, regra.params, corpo, regra.linha)
    if novas:
        logger.debug(f"Separação de átomos relacionais: {len(novas)} predicados novos")
    return Sid(tuple(regras + novas), sid.constants, sid.declared)
