from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from util.exceptions import (
    ArityError,
    DuplicateDeclarationError,
    InvalidInputError,
    UnboundVariableError,
    UnknownConstantError,
    UnknownRelationError,
)

Tupla = Tuple[int, ...]


@dataclass(frozen=True)
class Signature:
    """
    Assinatura relacional: relações com aridade e constantes, em ordem.

    A ordem das declarações é preservada; ela fixa a ordem de impressão
    e a numeração das constantes de porta.
    """
    relations: Tuple[Tuple[str, int], ...] = ()
    constants: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple((str(n), int(a)) for n, a in self.relations))
        object.__setattr__(self, "constants", tuple(str(c) for c in self.constants))
        vistos = set()
        for nome in [n for n, _ in self.relations] + list(self.constants):
            if nome in vistos:
                raise DuplicateDeclarationError(nome)
            vistos.add(nome)
        for nome, aridade in self.relations:
            if aridade < 1:
                raise InvalidInputError(f"Aridade de '{nome}' deve ser >= 1, obtida {aridade}")

    @property
    def relation_names(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.relations)

    def has_relation(self, nome: str) -> bool:
        return any(n == nome for n, _ in self.relations)

    def arity(self, nome: str) -> int:
        for n, a in self.relations:
            if n == nome:
                return a
        raise UnknownRelationError(nome)

    def with_relations(self, extras: Iterable[Tuple[str, int]]) -> "Signature":
        return Signature(self.relations + tuple(extras), self.constants)

    def with_constants(self, extras: Iterable[str]) -> "Signature":
        return Signature(self.relations, self.constants + tuple(extras))

    def without_relation(self, nome: str) -> "Signature":
        if not self.has_relation(nome):
            raise UnknownRelationError(nome)
        return Signature(tuple(r for r in self.relations if r[0] != nome), self.constants)

    def without_constant(self, nome: str) -> "Signature":
        if nome not in self.constants:
            raise UnknownConstantError(nome)
        return Signature(self.relations, tuple(c for c in self.constants if c != nome))

    def union(self, outra: "Signature") -> "Signature":
        """Une duas assinaturas mantendo a ordem de `self` e acrescentando as novidades de `outra`."""
        relacoes = list(self.relations)
        for nome, aridade in outra.relations:
            if self.has_relation(nome):
                if self.arity(nome) != aridade:
                    raise ArityError(nome, self.arity(nome), aridade)
                continue
            relacoes.append((nome, aridade))
        constantes = list(self.constants) + [c for c in outra.constants if c not in self.constants]
        return Signature(tuple(relacoes), tuple(constantes))


@dataclass(frozen=True)
class Structure:
    """
    Estrutura finita: interpretação das relações e constantes sobre
    identificadores inteiros não negativos.

    Os campos são normalizados na construção: toda relação da assinatura
    tem um frozenset (possivelmente vazio) e toda constante tem valor.
    Estruturas são valores imutáveis; as operações devolvem novas.
    """
    signature: Signature
    tuples: Mapping[str, FrozenSet[Tupla]] = field(default_factory=dict)
    constant_values: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        normalizadas: Dict[str, FrozenSet[Tupla]] = {}
        for nome in self.tuples:
            if not self.signature.has_relation(nome):
                raise UnknownRelationError(nome)
        for nome, aridade in self.signature.relations:
            conjunto = frozenset(tuple(int(e) for e in t) for t in self.tuples.get(nome, ()))
            for t in conjunto:
                if len(t) != aridade:
                    raise ArityError(nome, aridade, len(t))
                if any(e < 0 for e in t):
                    raise InvalidInputError(f"Elementos devem ser inteiros não negativos: {nome}{t}")
            normalizadas[nome] = conjunto
        for nome in self.constant_values:
            if nome not in self.signature.constants:
                raise UnknownConstantError(nome)
        valores = {}
        for nome in self.signature.constants:
            if nome not in self.constant_values:
                raise InvalidInputError(f"Constante '{nome}' sem valor na estrutura")
            valores[nome] = int(self.constant_values[nome])
        object.__setattr__(self, "tuples", normalizadas)
        object.__setattr__(self, "constant_values", valores)

    def __hash__(self) -> int:
        return hash((
            self.signature,
            tuple(sorted((n, tuple(sorted(ts))) for n, ts in self.tuples.items())),
            tuple(sorted(self.constant_values.items())),
        ))

    def of(self, relacao: str) -> FrozenSet[Tupla]:
        if relacao not in self.tuples:
            raise UnknownRelationError(relacao)
        return self.tuples[relacao]

    def rel(self) -> FrozenSet[int]:
        """Rel(σ): elementos que ocorrem em alguma tupla."""
        return frozenset(e for ts in self.tuples.values() for t in ts for e in t)

    def dom(self) -> FrozenSet[int]:
        """Dom(σ) = Rel(σ) ∪ imagens das constantes."""
        return self.rel() | frozenset(self.constant_values.values())

    def tuple_count(self) -> int:
        return sum(len(ts) for ts in self.tuples.values())

    def all_tuples(self) -> Tuple[Tuple[str, Tupla], ...]:
        """Todas as tuplas em ordem determinística (ordem da assinatura, depois lexicográfica)."""
        return tuple(
            (nome, t) for nome in self.signature.relation_names for t in sorted(self.tuples[nome])
        )

    def is_empty(self) -> bool:
        return self.tuple_count() == 0


@dataclass(frozen=True)
class Store:
    """
    Store ν: valores de variáveis de primeira ordem e relações ligadas
    a variáveis de segunda ordem (aridade, conjunto de tuplas).
    """
    first_order: Mapping[str, int] = field(default_factory=dict)
    second_order: Mapping[str, Tuple[int, FrozenSet[Tupla]]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "first_order", {str(k): int(v) for k, v in self.first_order.items()})
        segunda = {}
        for nome, (aridade, tuplas) in self.second_order.items():
            conjunto = frozenset(tuple(t) for t in tuplas)
            for t in conjunto:
                if len(t) != aridade:
                    raise ArityError(nome, aridade, len(t))
            segunda[str(nome)] = (int(aridade), conjunto)
        object.__setattr__(self, "second_order", segunda)

    def value(self, variavel: str) -> int:
        if variavel not in self.first_order:
            raise UnboundVariableError(variavel)
        return self.first_order[variavel]

    def bind(self, variavel: str, valor: int) -> "Store":
        return Store({**self.first_order, variavel: valor}, self.second_order)

    def bind_so(self, variavel: str, aridade: int, tuplas: Iterable[Tupla]) -> "Store":
        return Store(self.first_order, {**self.second_order, variavel: (aridade, frozenset(tuplas))})

    def values(self) -> FrozenSet[int]:
        return frozenset(self.first_order.values())


@dataclass(frozen=True)
class PaddedStructure:
    """Estrutura acompanhada do domínio finito de avaliação (Dom mais elementos frescos)."""
    structure: Structure
    domain: FrozenSet[int]

    @property
    def padding(self) -> FrozenSet[int]:
        return self.domain - self.structure.dom()

    def sorted_domain(self) -> Tuple[int, ...]:
        return tuple(sorted(self.domain))


@dataclass(frozen=True)
class IsomorphismResult:
    isomorphic: bool
    witness: Optional[Mapping[int, int]] = None

    def __bool__(self) -> bool:
        return self.isomorphic


