from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class Var:
    """Variável de primeira ordem."""
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Const:
    """Constante da assinatura, referida pelo nome."""
    name: str

    def __str__(self) -> str:
        return self.name


Term = Union[Var, Const]
