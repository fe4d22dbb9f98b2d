from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple, Union

from model.estrutura_model import Tupla
from model.termo_model import Term
from util.exceptions import ArityError, UnknownPredicateError


@dataclass(frozen=True)
class Emp:
    pass


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Neq:
    left: Term
    right: Term


@dataclass(frozen=True)
class RelAtom:
    """Átomo relacional; `tag` guarda a anotação de nó (R^n) nas fórmulas características."""
    rel: str
    args: Tuple[Term, ...]
    tag: Optional[str] = field(default=None, compare=False)


@dataclass(frozen=True)
class PredAtom:
    pred: str
    args: Tuple[Term, ...]


@dataclass(frozen=True)
class Star:
    left: "SlrFormula"
    right: "SlrFormula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "SlrFormula"


SlrFormula = Union[Emp, Eq, Neq, RelAtom, PredAtom, Star, Exists]


@dataclass(frozen=True)
class Rule:
    """Regra indutiva `head(params) <- body`, com parâmetros distintos."""
    head: str
    params: Tuple[str, ...]
    body: SlrFormula
    linha: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class Sid:
    """
    Conjunto de definições indutivas.

    Attributes:
        rules: Regras em ordem; o índice de cada regra é a sua referência
            nas árvores de desdobramento e nas derivações
        constants: Nomes de constantes que os corpos podem mencionar
        declared: Predicados declarados sem depender de regras (aridade)
    """
    rules: Tuple[Rule, ...] = ()
    constants: Tuple[str, ...] = ()
    declared: Tuple[Tuple[str, int], ...] = ()

    def predicates(self) -> Dict[str, int]:
        """Predicados do SID com suas aridades, na ordem de primeira aparição."""
        aridades: Dict[str, int] = {}
        for nome, aridade in self.declared:
            aridades.setdefault(nome, aridade)
        for regra in self.rules:
            anterior = aridades.setdefault(regra.head, len(regra.params))
            if anterior != len(regra.params):
                raise ArityError(regra.head, anterior, len(regra.params))
        return aridades

    def arity(self, predicado: str) -> int:
        aridades = self.predicates()
        if predicado not in aridades:
            raise UnknownPredicateError(predicado)
        return aridades[predicado]

    def defining(self, predicado: str) -> List[Tuple[int, Rule]]:
        """def_Δ(A): pares (índice, regra) das regras cuja cabeça é o predicado."""
        return [(i, r) for i, r in enumerate(self.rules) if r.head == predicado]


@dataclass(frozen=True)
class Derivation:
    """
    Derivação que testemunha uma satisfação: aplicação de regra com os
    valores de parâmetros e existenciais, as tuplas consumidas pelos
    átomos relacionais do corpo (na ordem do corpo) e as derivações
    dos átomos de predicado (também na ordem do corpo).
    """
    rule_index: int
    predicate: str
    args: Tupla
    bindings: Mapping[str, int]
    tuples: Tuple[Tuple[str, Tupla], ...]
    children: Tuple["Derivation", ...] = ()

    def consumed(self) -> List[Tuple[str, Tupla]]:
        """Multiconjunto (como lista) de todas as tuplas consumidas na derivação."""
        resultado = list(self.tuples)
        for filho in self.children:
            resultado.extend(filho.consumed())
        return resultado

    def size(self) -> int:
        return 1 + sum(f.size() for f in self.children)


@dataclass(frozen=True)
class FormulaPlana:
    """
    Forma prenex de um corpo de regra: existenciais (renomeados para
    nomes distintos dos parâmetros e entre si), átomos puros, átomos
    relacionais e átomos de predicado, cada grupo na ordem do corpo.
    """
    existentials: Tuple[str, ...]
    pure: Tuple[Union[Eq, Neq], ...]
    relations: Tuple[RelAtom, ...]
    predicates: Tuple[PredAtom, ...]

    def variables(self, params: Tuple[str, ...] = ()) -> Tuple[str, ...]:
        return tuple(params) + self.existentials
