"""Enumerações combinatórias usadas pelas construções de SIDs e tipos."""
from typing import Iterator, List, Sequence, Tuple, TypeVar

T = TypeVar("T")


def set_partitions(itens: Sequence[T]) -> Iterator[List[List[T]]]:
    """
    Todas as partições de `itens` em blocos não vazios.

    Os blocos preservam a ordem dos itens e aparecem ordenados pelo
    primeiro elemento; a enumeração é determinística.
    """
    if not itens:
        yield []
        return
    primeiro, resto = itens[0], itens[1:]
    for particao in set_partitions(resto):
        yield [[primeiro]] + particao
        for i in range(len(particao)):
            yield [[primeiro] + particao[i]] + particao[:i] + particao[i + 1:]


def partition_of_values(valores: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Partição das posições (a partir de 1) por igualdade de valores, blocos pela primeira posição."""
    blocos: dict = {}
    for posicao, v in enumerate(valores, start=1):
        blocos.setdefault(v, []).append(posicao)
    return tuple(tuple(b) for b in sorted(blocos.values(), key=lambda b: b[0]))
