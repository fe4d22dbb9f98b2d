"""
Classe base para os Enums do kit (backends de avaliação, tipos de
rastreamento da tradução, escalas da suíte).

Os membros herdam de str: comparam direto com os valores vindos da
linha de comando e serializam como texto nos relatórios JSON.
"""

from enum import Enum
from typing import List, TypeVar

from util.exceptions import InvalidInputError

E = TypeVar("E", bound="EnumEntidade")


class EnumEntidade(str, Enum):
    """
    Example:
        >>> class Escala(EnumEntidade):
        ...     DESK = "desk"
        ...     RAPIDA = "rapida"
        ...
        >>> Escala.valores()
        ['desk', 'rapida']
        >>> Escala.converter("rapida")
        <Escala.RAPIDA: 'rapida'>
    """

    def __str__(self) -> str:
        return self.value

    @classmethod
    def valores(cls) -> List[str]:
        """Valores dos membros, na ordem de declaração (usados como `choices` no argparse)."""
        return [item.value for item in cls]

    @classmethod
    def converter(cls: type[E], valor: str) -> E:
        """
        Membro correspondente a `valor` (aceita também o próprio membro).

        Raises:
            InvalidInputError: Valor fora do Enum
        """
        try:
            return cls(valor)
        except ValueError:
            raise InvalidInputError(
                f'Valor inválido para {cls.__name__}: "{valor}". Valores aceitos: {", ".join(cls.valores())}'
            ) from None
