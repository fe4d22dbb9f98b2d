"""
Árvore sintática das fórmulas de segunda ordem (SO/MSO) e do tipo MSO.

Os conectivos primitivos são igualdade, átomos de relação e de variável
de segunda ordem, negação, conjunção n-ária e os dois quantificadores
existenciais. Disjunção, implicação, quantificadores universais e
desigualdade são abreviações construídas pelas funções deste módulo,
no estilo das fábricas `Or`/`Implies` de solvers SMT.
"""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple, Union

from model.estrutura_model import Signature
from model.termo_model import Term
from util.enum_base import EnumEntidade


@dataclass(frozen=True)
class SoEq:
    left: Term
    right: Term


@dataclass(frozen=True)
class SoRel:
    rel: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class SoVarAtom:
    var: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Not:
    body: "SoFormula"


@dataclass(frozen=True)
class And:
    parts: Tuple["SoFormula", ...]


@dataclass(frozen=True)
class ExistsFO:
    var: str
    body: "SoFormula"


@dataclass(frozen=True)
class ExistsSO:
    var: str
    arity: int
    body: "SoFormula"


SoFormula = Union[SoEq, SoRel, SoVarAtom, Not, And, ExistsFO, ExistsSO]

TRUE: SoFormula = And(())
FALSE: SoFormula = Not(And(()))


def conj(partes: Iterable[SoFormula]) -> SoFormula:
    lista = tuple(partes)
    if len(lista) == 1:
        return lista[0]
    return And(lista)


def disj(partes: Iterable[SoFormula]) -> SoFormula:
    lista = tuple(partes)
    if not lista:
        return FALSE
    if len(lista) == 1:
        return lista[0]
    return Not(And(tuple(Not(p) for p in lista)))


def Or(*partes: SoFormula) -> SoFormula:
    return disj(partes)


def Implies(antecedente: SoFormula, consequente: SoFormula) -> SoFormula:
    return Not(And((antecedente, Not(consequente))))


def Iff(a: SoFormula, b: SoFormula) -> SoFormula:
    return And((Implies(a, b), Implies(b, a)))


def Neq(left: Term, right: Term) -> SoFormula:
    return Not(SoEq(left, right))


def ForallFO(var: str, body: SoFormula) -> SoFormula:
    return Not(ExistsFO(var, Not(body)))


def ForallSO(var: str, arity: int, body: SoFormula) -> SoFormula:
    return Not(ExistsSO(var, arity, Not(body)))


def exists_fo(variaveis: Iterable[str], body: SoFormula) -> SoFormula:
    for v in reversed(tuple(variaveis)):
        body = ExistsFO(v, body)
    return body


def forall_fo(variaveis: Iterable[str], body: SoFormula) -> SoFormula:
    for v in reversed(tuple(variaveis)):
        body = ForallFO(v, body)
    return body


@dataclass(frozen=True)
class MsoType:
    """
    Tipo MSO de rank r, codificado como conjuntos aninhados (vai-e-volta).

    Rank 0: frozenset dos átomos verdadeiros sobre as constantes.
    Rank n+1: par (tipos de rank n das extensões por uma constante nova,
    tipos de rank n das extensões por um conjunto novo).

    Attributes:
        rank: Rank r do tipo
        signature: Assinatura (com portas) sobre a qual o tipo foi calculado
        value: Codificação canônica em frozensets aninhados
        vocabulary: Relações (nome, aridade) consideradas (None = todas)
    """
    rank: int
    signature: Signature
    value: object
    vocabulary: Optional[FrozenSet[Tuple[str, int]]] = None


class BackendSO(EnumEntidade):
    """
    Estratégia de decisão de `eval_so`: AUTO enumera e só recorre ao
    solver nos quantificadores de segunda ordem grandes; SOLVER instancia
    a fórmula inteira de uma vez.
    """
    AUTO = "auto"
    ENUMERACAO = "enumeracao"
    SOLVER = "solver"
