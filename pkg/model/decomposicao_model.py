from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from model.estrutura_model import Tupla


@dataclass(frozen=True)
class TreeDecomposition:
    """
    Decomposição em árvore enraizada: nós, arestas pai→filho (em ordem),
    raiz e bags.

    `padding` registra os elementos frescos introduzidos para completar
    bags (redução); `witnesses` associa folhas às tuplas que testemunham.
    """
    nodes: FrozenSet[int]
    edges: Tuple[Tuple[int, int], ...]
    root: int
    bags: Mapping[int, FrozenSet[int]]
    padding: FrozenSet[int] = frozenset()
    witnesses: Mapping[int, Tuple[str, Tupla]] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "edges", tuple((int(p), int(c)) for p, c in self.edges))
        object.__setattr__(self, "bags", {int(n): frozenset(self.bags.get(n, ())) for n in self.nodes})
        object.__setattr__(self, "padding", frozenset(self.padding))
        object.__setattr__(self, "witnesses", dict(self.witnesses))

    @property
    def width(self) -> int:
        """Largura = maior bag − 1; por convenção 0 quando todas as bags são vazias."""
        if not self.bags:
            return 0
        return max(0, max(len(b) for b in self.bags.values()) - 1)

    def children(self, no: int) -> List[int]:
        return [c for p, c in self.edges if p == no]

    def parents(self) -> Dict[int, int]:
        return {c: p for p, c in self.edges}

    def leaves(self) -> List[int]:
        com_filhos = {p for p, _ in self.edges}
        return sorted(n for n in self.nodes if n not in com_filhos)

    def tree_problem(self) -> Optional[str]:
        """Descreve por que (nós, arestas, raiz) não formam uma árvore enraizada, ou None."""
        if self.root not in self.nodes:
            return f"raiz {self.root} não é um nó"
        pais: Dict[int, int] = {}
        for p, c in self.edges:
            if p not in self.nodes or c not in self.nodes:
                return f"aresta ({p}, {c}) usa nó inexistente"
            if c in pais:
                return f"nó {c} tem mais de um pai"
            pais[c] = p
        if self.root in pais:
            return "a raiz tem pai"
        alcancados = set(self.preorder())
        if alcancados != set(self.nodes):
            return f"nós inalcançáveis a partir da raiz: {sorted(set(self.nodes) - alcancados)}"
        return None

    def preorder(self) -> List[int]:
        ordem: List[int] = []
        vistos = set()
        pilha = [self.root]
        while pilha:
            no = pilha.pop()
            if no in vistos:
                continue
            vistos.add(no)
            ordem.append(no)
            pilha.extend(reversed(self.children(no)))
        return ordem


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    clause: Optional[int] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    decomposition: TreeDecomposition
