"""
Avaliação de fórmulas SO/MSO em domínios finitos, rank de
quantificadores, variáveis livres e o corpus de sentenças MSO.

Quantificadores de segunda ordem são enumerados por força bruta
enquanto o número de relações candidatas não passa de
SO_BRUTE_FORCE_LIMIT; acima disso a subfórmula vai para o solver.
"""
from itertools import chain, combinations, islice, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Set, Tuple, Union

from model.estrutura_model import PaddedStructure, Signature, Store, Structure, Tupla
from model.so_model import (
    And, BackendSO, ExistsFO, ExistsSO, ForallFO, ForallSO, Not, SoEq, SoFormula, SoRel, SoVarAtom, conj, disj,
)
from model.termo_model import Const, Term, Var
from core.so_solver import decide_with_solver
from parsers.so_parser import format_so
from util.config import SO_BRUTE_FORCE_LIMIT
from util.exceptions import (
    ArityMismatchError, DomainTooSmallError, UnboundVariableError, UnknownConstantError,
    UnknownRelationError,
)
from util.logger_config import logger

Dominio = Union[PaddedStructure, Iterable[int]]
LigacaoSO = Dict[str, Tuple[int, FrozenSet[Tupla]]]


def evaluation_domain(s: Structure, dominio: Dominio) -> Tuple[int, ...]:
    """
    Normaliza o domínio de avaliação e confere que contém Dom(s).

    Raises:
        DomainTooSmallError: Algum elemento de Dom(s) fora do domínio
    """
    elementos = frozenset(dominio.domain if isinstance(dominio, PaddedStructure) else dominio)
    faltando = s.dom() - elementos
    if faltando:
        raise DomainTooSmallError(sorted(faltando))
    return tuple(sorted(elementos))


def candidate_count(tamanho_dominio: int, aridade: int) -> int:
    """Número de relações de dada aridade sobre o domínio: 2^(n^a)."""
    return 2 ** (tamanho_dominio ** aridade)


def all_relations(dominio: Tuple[int, ...], aridade: int) -> Iterator[FrozenSet[Tupla]]:
    """Todas as relações de dada aridade sobre o domínio, das menores para as maiores."""
    tuplas = list(product(dominio, repeat=aridade))
    for tamanho in range(len(tuplas) + 1):
        for escolha in combinations(tuplas, tamanho):
            yield frozenset(escolha)


class _Avaliador:
    def __init__(self, s: Structure, dominio: Tuple[int, ...], com_solver: bool = True):
        self.s = s
        self.dominio = dominio
        self.com_solver = com_solver

    def termo(self, t: Term, fo: Mapping[str, int]) -> int:
        if isinstance(t, Const):
            if t.name not in self.s.constant_values:
                raise UnknownConstantError(t.name)
            return self.s.constant_values[t.name]
        if t.name not in fo:
            raise UnboundVariableError(t.name)
        return fo[t.name]

    def avaliar(self, f: SoFormula, fo: Dict[str, int], so: LigacaoSO) -> bool:
        if isinstance(f, SoEq):
            return self.termo(f.left, fo) == self.termo(f.right, fo)
        if isinstance(f, SoRel):
            if not self.s.signature.has_relation(f.rel):
                raise UnknownRelationError(f.rel)
            return tuple(self.termo(t, fo) for t in f.args) in self.s.tuples[f.rel]
        if isinstance(f, SoVarAtom):
            if f.var not in so:
                raise UnboundVariableError(f.var)
            aridade, tuplas = so[f.var]
            if aridade != len(f.args):
                raise ArityMismatchError(f.var, aridade, len(f.args))
            return tuple(self.termo(t, fo) for t in f.args) in tuplas
        if isinstance(f, Not):
            return not self.avaliar(f.body, fo, so)
        if isinstance(f, And):
            return all(self.avaliar(p, fo, so) for p in f.parts)
        if isinstance(f, ExistsFO):
            anterior = fo.get(f.var)
            try:
                for e in self.dominio:
                    fo[f.var] = e
                    if self.avaliar(f.body, fo, so):
                        return True
                return False
            finally:
                if anterior is None:
                    fo.pop(f.var, None)
                else:
                    fo[f.var] = anterior
        if isinstance(f, ExistsSO):
            if self.com_solver and candidate_count(len(self.dominio), f.arity) > SO_BRUTE_FORCE_LIMIT:
                return decide_with_solver(self.s, self.dominio, dict(fo), dict(so), f)
            for relacao in all_relations(self.dominio, f.arity):
                if self.avaliar(f.body, fo, {**so, f.var: (f.arity, relacao)}):
                    return True
            return False
        raise TypeError(f"Nó de fórmula desconhecido: {type(f).__name__}")


def eval_so(s: Structure, dominio: Dominio, store: Store, formula: SoFormula,
            backend: BackendSO = BackendSO.AUTO) -> bool:
    """
    Decide (σ, ν) ⊩ ψ com os quantificadores variando sobre `dominio`.

    Args:
        s: Estrutura
        dominio: Domínio de avaliação (⊇ Dom(s)) ou estrutura preenchida
        store: Valores das variáveis livres de primeira e segunda ordem
        formula: Fórmula SO
        backend: AUTO, ENUMERACAO (nunca usa o solver) ou SOLVER (fórmula inteira no z3)

    Raises:
        DomainTooSmallError: O domínio não contém Dom(s)
        UnboundVariableError: Variável livre sem valor no store
        ArityMismatchError: Variável de segunda ordem usada com outra aridade
    """
    elementos = evaluation_domain(s, dominio)
    fo_livres, so_livres = free_variables_so(formula)
    for v in sorted(fo_livres):
        store.value(v)
    for v in sorted(so_livres):
        if v not in store.second_order:
            raise UnboundVariableError(v)
    ligacao_so = {nome: (a, ts) for nome, (a, ts) in store.second_order.items()}
    if backend == BackendSO.SOLVER:
        return decide_with_solver(s, elementos, dict(store.first_order), ligacao_so, formula)
    com_solver = backend != BackendSO.ENUMERACAO
    return _Avaliador(s, elementos, com_solver).avaliar(formula, dict(store.first_order), ligacao_so)


def quantifier_rank(formula: SoFormula) -> int:
    """qr: 0 nos átomos, a negação repassa, a conjunção toma o máximo, cada quantificador soma 1."""
    if isinstance(formula, (SoEq, SoRel, SoVarAtom)):
        return 0
    if isinstance(formula, Not):
        return quantifier_rank(formula.body)
    if isinstance(formula, And):
        return max((quantifier_rank(p) for p in formula.parts), default=0)
    return 1 + quantifier_rank(formula.body)


def free_variables_so(formula: SoFormula) -> Tuple[Set[str], Dict[str, int]]:
    """Variáveis livres de primeira ordem e de segunda ordem (com aridade de uso)."""
    if isinstance(formula, (SoEq, SoRel, SoVarAtom)):
        termos = (formula.left, formula.right) if isinstance(formula, SoEq) else formula.args
        fo = {t.name for t in termos if isinstance(t, Var)}
        so = {formula.var: len(formula.args)} if isinstance(formula, SoVarAtom) else {}
        return fo, so
    if isinstance(formula, Not):
        return free_variables_so(formula.body)
    if isinstance(formula, And):
        fo: Set[str] = set()
        so: Dict[str, int] = {}
        for p in formula.parts:
            f, s = free_variables_so(p)
            fo |= f
            so.update(s)
        return fo, so
    fo, so = free_variables_so(formula.body)
    if isinstance(formula, ExistsFO):
        fo.discard(formula.var)
    else:
        so.pop(formula.var, None)
    return fo, so


def is_sentence(formula: SoFormula) -> bool:
    fo, so = free_variables_so(formula)
    return not fo and not so


def is_monadic(formula: SoFormula) -> bool:
    """Verdadeiro se toda variável de segunda ordem quantificada é unária."""
    if isinstance(formula, (SoEq, SoRel, SoVarAtom)):
        return True
    if isinstance(formula, And):
        return all(is_monadic(p) for p in formula.parts)
    if isinstance(formula, ExistsSO) and formula.arity != 1:
        return False
    return is_monadic(formula.body)


def atom_shapes(formula: SoFormula) -> FrozenSet[Tuple[str, int]]:
    """Relações (com aridade) mencionadas pela fórmula."""
    if isinstance(formula, SoRel):
        return frozenset({(formula.rel, len(formula.args))})
    if isinstance(formula, (SoEq, SoVarAtom)):
        return frozenset()
    if isinstance(formula, And):
        return frozenset().union(*(atom_shapes(p) for p in formula.parts))
    return atom_shapes(formula.body)


# === Corpus de sentenças MSO ===

def _atomos(assinatura: Signature, fo: Tuple[str, ...], so: Tuple[str, ...]) -> List[SoFormula]:
    termos: List[Term] = [Var(v) for v in fo] + [Const(c) for c in assinatura.constants]
    atomos: List[SoFormula] = []
    for nome, aridade in assinatura.relations:
        atomos.extend(SoRel(nome, args) for args in product(termos, repeat=aridade))
    for i, a in enumerate(termos):
        for b in termos[i + 1:]:
            atomos.append(SoEq(a, b))
    for x in so:
        atomos.extend(SoVarAtom(x, (t,)) for t in termos)
    return atomos


def _corpos(assinatura: Signature, fo: Tuple[str, ...], so: Tuple[str, ...], rank: int) -> Iterator[SoFormula]:
    literais = list(chain.from_iterable((a, Not(a)) for a in _atomos(assinatura, fo, so)))
    if rank == 0:
        yield from literais
        for i, a in enumerate(literais):
            for b in literais[i + 1:]:
                yield conj((a, b))
                yield disj((a, b))
        return
    profundidade = len(fo) + len(so) + 1
    x, conjunto = f"x{profundidade}", f"X{profundidade}"
    for corpo in _corpos(assinatura, fo + (x,), so, rank - 1):
        yield ExistsFO(x, corpo)
        yield ForallFO(x, corpo)
    if fo:
        for corpo in _corpos(assinatura, fo, so + (conjunto,), rank - 1):
            yield ExistsSO(conjunto, 1, corpo)
            yield ForallSO(conjunto, 1, corpo)


def enumerate_sentences(assinatura: Signature, max_rank: int, limite: int = 2000) -> List[SoFormula]:
    """
    Corpus determinístico de sentenças MSO de rank ≤ max_rank.

    Cada rank recebe uma fatia igual do limite; sentenças repetidas
    (mesma impressão) são descartadas.
    """
    corpus: List[SoFormula] = []
    vistos: Set[str] = set()
    fatia = max(1, limite // (max_rank + 1))
    for rank in range(max_rank + 1):
        for sentenca in islice(_prefixados(assinatura, rank), fatia):
            texto = format_so(sentenca)
            if texto not in vistos:
                vistos.add(texto)
                corpus.append(sentenca)
    logger.debug(f"Corpus de sentenças: {len(corpus)} sentenças até o rank {max_rank}")
    return corpus


def _prefixados(assinatura: Signature, rank: int) -> Iterator[SoFormula]:
    if rank == 0:
        if assinatura.constants:
            yield from _corpos(assinatura, (), (), 0)
        return
    yield from _corpos(assinatura, (), (), rank)
