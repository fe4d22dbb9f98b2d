from dataclasses import dataclass
from typing import FrozenSet, List, Tuple

from util.exceptions import InvalidInputError


@dataclass(frozen=True)
class Production:
    """Produção `head -> body`; corpo vazio representa ε."""
    head: str
    body: Tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.head} -> {' '.join(self.body)}".rstrip()


@dataclass(frozen=True)
class Cfg:
    """
    Gramática livre de contexto. Não terminais são as cabeças das
    produções mais o símbolo inicial; todo outro símbolo é terminal.
    """
    nonterminals: Tuple[str, ...]
    start: str
    productions: Tuple[Production, ...]

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise InvalidInputError(f"Símbolo inicial '{self.start}' não declarado")
        for p in self.productions:
            if p.head not in self.nonterminals:
                raise InvalidInputError(f"Cabeça de produção não declarada: '{p.head}'")

    @property
    def terminals(self) -> FrozenSet[str]:
        return frozenset(s for p in self.productions for s in p.body if s not in self.nonterminals)

    def of(self, nao_terminal: str) -> List[Production]:
        return [p for p in self.productions if p.head == nao_terminal]
