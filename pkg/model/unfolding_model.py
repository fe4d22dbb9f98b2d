from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple


@dataclass(frozen=True)
class UnfoldingTree:
    """
    Árvore de desdobramento de um átomo de predicado.

    Os nós são numerados em pré-ordem a partir de 0 (a raiz); `children`
    guarda os filhos em ordem (o j-ésimo filho corresponde ao j-ésimo
    átomo de predicado do corpo) e `labels` o índice da regra no SID.
    """
    predicate: str
    children: Mapping[int, Tuple[int, ...]]
    labels: Mapping[int, int]
    root: int = 0

    def __post_init__(self):
        object.__setattr__(self, "children", {int(n): tuple(c) for n, c in self.children.items()})
        object.__setattr__(self, "labels", {int(n): int(r) for n, r in self.labels.items()})

    @property
    def nodes(self) -> List[int]:
        return sorted(self.labels)

    def size(self) -> int:
        return len(self.labels)

    def edges(self) -> List[Tuple[int, int]]:
        return [(p, c) for p in self.nodes for c in self.children.get(p, ())]

    def annotations(self, rotulos_relacoes: Mapping[int, List[str]]) -> Dict[int, List[str]]:
        """Marcas R^n por nó, dados os símbolos de relação de cada regra."""
        return {n: [f"{r}^{n}" for r in rotulos_relacoes.get(self.labels[n], [])] for n in self.nodes}
