"""
Satisfação de fórmulas SLR sob um SID.

A busca é descendente e memoizada em (predicado, argumentos canônicos,
conjunto de tuplas restantes). Argumentos fora de Dom(σ) são trocados
pelo índice de primeira ocorrência (negativo), o que torna iguais as
consultas isomorfas. Reentrar numa consulta em andamento falha o ramo
(menor ponto fixo); falhas que dependem dessa poda não são memoizadas.
"""
import sys
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Set, Tuple

from core.structures import fresh_ids
from model.estrutura_model import Store, Structure, Tupla
from model.slr_model import (
    Derivation, Emp, Eq, Exists, FormulaPlana, Neq, PredAtom, RelAtom, Rule, Sid, SlrFormula, Star,
)
from model.termo_model import Const, Term, Var
from parsers.slr_parser import free_variables
from util.config import SLR_DEPTH_CAP
from util.exceptions import BudgetExceededError, UnknownConstantError, UnknownPredicateError
from util.logger_config import logger

OBJETIVO = "_objetivo"

Chave = Tuple[str, Tupla, FrozenSet[Tuple[str, Tupla]]]
_INFINITO = float("inf")


# === Forma prenex ===

def _renomear_termo(termo: Term, nomes: Mapping[str, str]) -> Term:
    if isinstance(termo, Var):
        return Var(nomes.get(termo.name, termo.name))
    return termo


def flatten(formula: SlrFormula, reservados: Set[str] = frozenset()) -> FormulaPlana:
    """
    Coloca a fórmula em forma prenex, separando os átomos por tipo.

    Variáveis ligadas que colidem com `reservados` ou entre si recebem
    o sufixo `_<n>`.
    """
    usados = set(reservados) | free_variables(formula)
    existenciais: List[str] = []
    puros: List = []
    relacoes: List[RelAtom] = []
    predicados: List[PredAtom] = []

    def visitar(f: SlrFormula, nomes: Dict[str, str]):
        if isinstance(f, Emp):
            return
        if isinstance(f, (Eq, Neq)):
            puros.append(type(f)(_renomear_termo(f.left, nomes), _renomear_termo(f.right, nomes)))
        elif isinstance(f, RelAtom):
            relacoes.append(RelAtom(f.rel, tuple(_renomear_termo(t, nomes) for t in f.args), f.tag))
        elif isinstance(f, PredAtom):
            predicados.append(PredAtom(f.pred, tuple(_renomear_termo(t, nomes) for t in f.args)))
        elif isinstance(f, Star):
            visitar(f.left, nomes)
            visitar(f.right, nomes)
        else:
            novo = f.var
            if novo in usados:
                indice = 1
                while f"{f.var}_{indice}" in usados:
                    indice += 1
                novo = f"{f.var}_{indice}"
            usados.add(novo)
            existenciais.append(novo)
            visitar(f.body, {**nomes, f.var: novo})

    visitar(formula, {})
    return FormulaPlana(tuple(existenciais), tuple(puros), tuple(relacoes), tuple(predicados))


def flatten_rule(regra: Rule) -> FormulaPlana:
    return flatten(regra.body, set(regra.params))


def unflatten(plana: FormulaPlana) -> SlrFormula:
    """Reconstrói `∃ȳ. puros * relações * predicados` (emp se não houver átomos)."""
    atomos = list(plana.pure) + list(plana.relations) + list(plana.predicates)
    corpo: SlrFormula = atomos[0] if atomos else Emp()
    for atomo in atomos[1:]:
        corpo = Star(corpo, atomo)
    for v in reversed(plana.existentials):
        corpo = Exists(v, corpo)
    return corpo


def predicate_atoms(formula: SlrFormula) -> List[PredAtom]:
    if isinstance(formula, PredAtom):
        return [formula]
    if isinstance(formula, Star):
        return predicate_atoms(formula.left) + predicate_atoms(formula.right)
    if isinstance(formula, Exists):
        return predicate_atoms(formula.body)
    return []


def check_predicates(sid: Sid, formula: Optional[SlrFormula] = None) -> Dict[str, int]:
    """Confere que todo átomo de predicado usado tem definição ou declaração."""
    conhecidos = sid.predicates()
    corpos = [r.body for r in sid.rules] + ([formula] if formula is not None else [])
    for corpo in corpos:
        for atomo in predicate_atoms(corpo):
            if atomo.pred not in conhecidos:
                raise UnknownPredicateError(atomo.pred)
    return conhecidos


def with_goal_rule(sid: Sid, formula: SlrFormula, nome: str = OBJETIVO) -> Tuple[Sid, Rule]:
    """Acrescenta a regra `nome(fv) <- φ`; os parâmetros são as variáveis livres em ordem alfabética."""
    regra = Rule(nome, tuple(sorted(free_variables(formula))), formula)
    return Sid(sid.rules + (regra,), sid.constants, sid.declared), regra


def term_value(termo: Term, ligacao: Mapping[str, int], s: Structure) -> int:
    if isinstance(termo, Const):
        if termo.name not in s.constant_values:
            raise UnknownConstantError(termo.name)
        return s.constant_values[termo.name]
    return ligacao[termo.name]


def match_terms(termos: Tuple[Term, ...], valores: Tupla, ligacao: Dict[str, int],
                s: Structure) -> Optional[Dict[str, int]]:
    """Unifica termos com valores, estendendo a ligação; None se houver conflito."""
    nova = dict(ligacao)
    for termo, valor in zip(termos, valores):
        if isinstance(termo, Const):
            if term_value(termo, nova, s) != valor:
                return None
        elif termo.name in nova:
            if nova[termo.name] != valor:
                return None
        else:
            nova[termo.name] = valor
    return nova


def pure_holds(puros, ligacao: Mapping[str, int], s: Structure) -> bool:
    for atomo in puros:
        iguais = term_value(atomo.left, ligacao, s) == term_value(atomo.right, ligacao, s)
        if iguais != isinstance(atomo, Eq):
            return False
    return True


def match_relations(relacoes: Tuple[RelAtom, ...], ligacao: Dict[str, int],
                    disponiveis: FrozenSet[Tuple[str, Tupla]], s: Structure
                    ) -> Iterator[Tuple[Dict[str, int], Tuple[Tuple[str, Tupla], ...]]]:
    """Associa cada átomo relacional a uma tupla distinta disponível, em todas as formas possíveis."""
    if not relacoes:
        yield ligacao, ()
        return
    atomo, resto = relacoes[0], relacoes[1:]
    for nome, t in sorted(disponiveis):
        if nome != atomo.rel or len(t) != len(atomo.args):
            continue
        estendida = match_terms(atomo.args, t, ligacao, s)
        if estendida is None:
            continue
        for final, usadas in match_relations(resto, estendida, disponiveis - {(nome, t)}, s):
            yield final, ((nome, t),) + usadas


# === Verificador ===

class _Verificador:
    """Estado de uma chamada: memo e consultas em andamento."""

    def __init__(self, s: Structure, sid: Sid):
        self.s = s
        self.sid = sid
        self.dominio = s.dom()
        self.planas = {i: flatten_rule(r) for i, r in enumerate(sid.rules)}
        self.memo: Dict[Chave, Optional[Derivation]] = {}
        self.em_andamento: Dict[Chave, int] = {}

    def canonizar(self, args: Tupla) -> Tupla:
        mapa: Dict[int, int] = {}
        canonicos = []
        for v in args:
            if v in self.dominio:
                canonicos.append(v)
            else:
                mapa.setdefault(v, -(len(mapa) + 1))
                canonicos.append(mapa[v])
        return tuple(canonicos)

    def satisfazer(self, predicado: str, args: Tupla, mascara: FrozenSet, profundidade: int
                   ) -> Tuple[Optional[Derivation], float]:
        chave = (predicado, args, mascara)
        if chave in self.memo:
            return self.memo[chave], _INFINITO
        if chave in self.em_andamento:
            return None, self.em_andamento[chave]
        if profundidade > SLR_DEPTH_CAP:
            raise BudgetExceededError(profundidade)
        self.em_andamento[chave] = profundidade
        baixo = _INFINITO
        encontrada = None
        try:
            for indice, regra in self.sid.defining(predicado):
                encontrada, dependencia = self.aplicar(indice, regra, args, mascara, profundidade)
                baixo = min(baixo, dependencia)
                if encontrada is not None:
                    break
        finally:
            del self.em_andamento[chave]
        if encontrada is not None or baixo >= profundidade:
            self.memo[chave] = encontrada
            return encontrada, _INFINITO
        return None, baixo

    def candidatos(self, args: Tupla, quantidade: int) -> List[int]:
        fora = sorted({v for v in args if v not in self.dominio}, reverse=True)
        return sorted(self.dominio) + fora + fresh_ids(self.dominio, quantidade)

    def aplicar(self, indice: int, regra: Rule, args: Tupla, mascara: FrozenSet, profundidade: int
                ) -> Tuple[Optional[Derivation], float]:
        plana = self.planas[indice]
        if not plana.predicates and len(plana.relations) != len(mascara):
            return None, _INFINITO
        if len(plana.relations) > len(mascara):
            return None, _INFINITO
        baixo = _INFINITO
        inicial = dict(zip(regra.params, args))
        for ligacao, usadas in match_relations(plana.relations, inicial, mascara, self.s):
            livres = [y for y in plana.existentials if y not in ligacao]
            opcoes = self.candidatos(args, len(plana.existentials))
            for escolha in product(opcoes, repeat=len(livres)):
                completa = {**ligacao, **dict(zip(livres, escolha))}
                if not pure_holds(plana.pure, completa, self.s):
                    continue
                filhos, dependencia = self.distribuir(plana.predicates, completa, mascara - set(usadas), profundidade)
                baixo = min(baixo, dependencia)
                if filhos is not None:
                    return Derivation(indice, regra.head, args, completa, usadas, tuple(filhos)), baixo
        return None, baixo

    def distribuir(self, atomos: Tuple[PredAtom, ...], ligacao: Dict[str, int], resto: FrozenSet,
                   profundidade: int) -> Tuple[Optional[List[Derivation]], float]:
        if not atomos:
            return ([] if not resto else None), _INFINITO
        atomo = atomos[0]
        args = self.canonizar(tuple(term_value(t, ligacao, self.s) for t in atomo.args))
        baixo = _INFINITO
        ordenadas = sorted(resto)
        tamanhos = [len(ordenadas)] if len(atomos) == 1 else range(len(ordenadas) + 1)
        for tamanho in tamanhos:
            for parte in combinations(ordenadas, tamanho):
                subconjunto = frozenset(parte)
                filho, dependencia = self.satisfazer(atomo.pred, args, subconjunto, profundidade + 1)
                baixo = min(baixo, dependencia)
                if filho is None:
                    continue
                demais, dependencia = self.distribuir(atomos[1:], ligacao, resto - subconjunto, profundidade)
                baixo = min(baixo, dependencia)
                if demais is not None:
                    return [filho] + demais, baixo
        return None, baixo

    def instanciar(self, canonica: Derivation, reais: Tupla, usados: Set[int]) -> Derivation:
        """Traduz uma derivação memoizada (ids canônicos) para os argumentos reais."""
        mapa = dict(zip(canonica.args, reais))

        def real(v: int) -> int:
            if v in self.dominio:
                return v
            if v not in mapa:
                novo = fresh_ids(usados, 1)[0]
                usados.add(novo)
                mapa[v] = novo
            return mapa[v]

        ligacao = {x: real(v) for x, v in canonica.bindings.items()}
        filhos = []
        for atomo, filho in zip(self.planas[canonica.rule_index].predicates, canonica.children):
            args_filho = tuple(term_value(t, ligacao, self.s) for t in atomo.args)
            filhos.append(self.instanciar(filho, args_filho, usados))
        return Derivation(canonica.rule_index, canonica.predicate, tuple(reais), ligacao,
                          canonica.tuples, tuple(filhos))


def _garantir_pilha():
    # cada nível da busca usa algumas chamadas aninhadas
    necessario = 20 * SLR_DEPTH_CAP
    if sys.getrecursionlimit() < necessario:
        sys.setrecursionlimit(necessario)


def find_derivation(s: Structure, store: Store, formula: SlrFormula, sid: Sid) -> Optional[Derivation]:
    """
    Procura uma derivação de (σ, ν) ⊨_Δ φ.

    Para um átomo de predicado a derivação começa na regra aplicada a
    ele; para outras fórmulas, na regra sintética `_objetivo(fv) <- φ`,
    cujo índice é len(sid.rules).

    Returns:
        Derivation com valores reais, ou None se não há satisfação

    Raises:
        UnboundVariableError: Variável livre sem valor no store
        UnknownPredicateError: Predicado sem regras nem declaração
        BudgetExceededError: Profundidade da busca acima do limite
    """
    check_predicates(sid, formula)
    if isinstance(formula, PredAtom):
        alvo, sid_busca = formula, sid
    else:
        sid_busca, regra = with_goal_rule(sid, formula)
        alvo = PredAtom(regra.head, tuple(Var(p) for p in regra.params))
    reais = tuple(
        store.value(t.name) if isinstance(t, Var) else term_value(t, {}, s) for t in alvo.args
    )
    _garantir_pilha()
    verificador = _Verificador(s, sid_busca)
    canonica, _ = verificador.satisfazer(alvo.pred, verificador.canonizar(reais), frozenset(s.all_tuples()), 0)
    logger.debug(
        f"check_slr {alvo.pred}{reais}: {'satisfeito' if canonica else 'não satisfeito'}, "
        f"{len(verificador.memo)} consultas memoizadas"
    )
    if canonica is None:
        return None
    usados = set(verificador.dominio) | set(store.values()) | set(reais)
    return verificador.instanciar(canonica, reais, usados)


def check_slr(s: Structure, store: Store, formula: SlrFormula, sid: Sid) -> bool:
    """Decide (σ, ν) ⊨_Δ φ pela leitura de menor ponto fixo."""
    return find_derivation(s, store, formula, sid) is not None


@dataclass(frozen=True)
class ResumoDerivacao:
    """Contagens de uma derivação, usadas em relatórios."""
    regras: int
    tuplas: int
    altura: int


def summarize_derivation(derivacao: Derivation) -> ResumoDerivacao:
    def altura(d: Derivation) -> int:
        return 1 + max((altura(f) for f in d.children), default=0)
    return ResumoDerivacao(derivacao.size(), len(derivacao.consumed()), altura(derivacao))
