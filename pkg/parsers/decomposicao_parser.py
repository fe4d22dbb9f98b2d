"""
Parser e impressora de decomposições em árvore e árvores de desdobramento.

Decomposição:

    node 0
    node 1
    edge 0 1
    root 0
    bag 0 1 2
    bag 1 2 3
    pad 7 8            # opcional: elementos de preenchimento
    witness 1 E 2 3    # opcional: folha e tupla testemunhada

Árvore de desdobramento (mesmo formato, mais `pred` e `label`):

    pred Chain
    node 0
    root 0
    label 0 1
"""
from typing import Dict, List, Tuple

import pyparsing as pp

from model.decomposicao_model import TreeDecomposition
from model.unfolding_model import UnfoldingTree
from parsers.comum import COMENTARIO, IDENT, INTEIRO, com_posicao, executar
from util.exceptions import DuplicateDeclarationError, InvalidTreeError, ParseSyntaxError

_NUMS = pp.Group(pp.ZeroOrMore(INTEIRO))
_DECL = (
    (pp.Keyword("node") + INTEIRO)
    | (pp.Keyword("edge") + INTEIRO + INTEIRO)
    | (pp.Keyword("root") + INTEIRO)
    | (pp.Keyword("bag") + INTEIRO + _NUMS)
    | (pp.Keyword("pad") + _NUMS)
    | (pp.Keyword("witness") + INTEIRO + IDENT + _NUMS)
    | (pp.Keyword("label") + INTEIRO + INTEIRO)
    | (pp.Keyword("pred") + IDENT)
)
_ARQUIVO = pp.ZeroOrMore(com_posicao(_DECL)) + pp.StringEnd()
_ARQUIVO.ignore(COMENTARIO)


class _Declaracoes:
    """Acumula as declarações lidas, verificando duplicidades."""

    def __init__(self):
        self.nos: List[int] = []
        self.arestas: List[Tuple[int, int]] = []
        self.raiz = None
        self.bags: Dict[int, Tuple[int, ...]] = {}
        self.padding: List[int] = []
        self.testemunhas: Dict[int, Tuple[str, Tuple[int, ...]]] = {}
        self.rotulos: Dict[int, int] = {}
        self.predicado = None

    def ler(self, resultado: pp.ParseResults) -> "_Declaracoes":
        for linha, coluna, decl in resultado:
            tipo = decl[0]
            if tipo == "node":
                if decl[1] in self.nos:
                    raise DuplicateDeclarationError(str(decl[1]), "nó")
                self.nos.append(decl[1])
            elif tipo == "edge":
                self.arestas.append((decl[1], decl[2]))
            elif tipo == "root":
                if self.raiz is not None:
                    raise DuplicateDeclarationError("root", "raiz")
                self.raiz = decl[1]
            elif tipo == "bag":
                if decl[1] in self.bags:
                    raise DuplicateDeclarationError(str(decl[1]), "bag")
                self.bags[decl[1]] = tuple(decl[2])
            elif tipo == "pad":
                self.padding.extend(decl[1])
            elif tipo == "witness":
                self.testemunhas[decl[1]] = (decl[2], tuple(decl[3]))
            elif tipo == "label":
                if decl[1] in self.rotulos:
                    raise DuplicateDeclarationError(str(decl[1]), "rótulo")
                self.rotulos[decl[1]] = decl[2]
            else:
                self.predicado = decl[1]
        if self.raiz is None:
            raise ParseSyntaxError(1, 1, "declaração 'root'")
        for no in list(self.bags) + list(self.rotulos):
            if no not in self.nos:
                raise ParseSyntaxError(1, 1, f"declaração 'node {no}'")
        return self


def parse_decomposition(texto: str) -> TreeDecomposition:
    """
    Lê uma decomposição em árvore.

    Raises:
        ParseSyntaxError: Sintaxe inválida, raiz ausente ou nó não declarado
        InvalidTreeError: Nós e arestas não formam uma árvore enraizada
    """
    def construir(resultado):
        d = _Declaracoes().ler(resultado)
        td = TreeDecomposition(
            nodes=frozenset(d.nos),
            edges=tuple(d.arestas),
            root=d.raiz,
            bags={n: frozenset(d.bags.get(n, ())) for n in d.nos},
            padding=frozenset(d.padding),
            witnesses=d.testemunhas,
        )
        problema = td.tree_problem()
        if problema:
            raise InvalidTreeError(problema)
        return td
    return executar(_ARQUIVO, texto, construir)


def format_decomposition(td: TreeDecomposition) -> str:
    """Imprime a decomposição com nós em pré-ordem e bags ordenadas."""
    ordem = td.preorder()
    linhas = [f"node {n}" for n in ordem]
    linhas += [f"edge {p} {c}" for p in ordem for c in td.children(p)]
    linhas.append(f"root {td.root}")
    linhas += [f"bag {n} {' '.join(str(e) for e in sorted(td.bags[n]))}".rstrip() for n in ordem]
    if td.padding:
        linhas.append(f"pad {' '.join(str(e) for e in sorted(td.padding))}")
    for n in ordem:
        if n in td.witnesses:
            rel, t = td.witnesses[n]
            linhas.append(f"witness {n} {rel} {' '.join(str(e) for e in t)}")
    return "\n".join(linhas) + "\n"


def parse_tree(texto: str) -> UnfoldingTree:
    """
    Lê uma árvore de desdobramento; os nós são renumerados em pré-ordem.

    Raises:
        ParseSyntaxError: Sintaxe inválida, `pred` ausente ou nó sem rótulo
        InvalidTreeError: Nós e arestas não formam uma árvore enraizada
    """
    def construir(resultado):
        d = _Declaracoes().ler(resultado)
        if d.predicado is None:
            raise ParseSyntaxError(1, 1, "declaração 'pred'")
        for no in d.nos:
            if no not in d.rotulos:
                raise ParseSyntaxError(1, 1, f"declaração 'label {no} <regra>'")
        forma = TreeDecomposition(frozenset(d.nos), tuple(d.arestas), d.raiz, {})
        problema = forma.tree_problem()
        if problema:
            raise InvalidTreeError(problema)
        ordem = forma.preorder()
        novo = {antigo: i for i, antigo in enumerate(ordem)}
        return UnfoldingTree(
            predicate=d.predicado,
            children={novo[n]: tuple(novo[c] for c in forma.children(n)) for n in ordem},
            labels={novo[n]: d.rotulos[n] for n in ordem},
        )
    return executar(_ARQUIVO, texto, construir)


def format_tree(arvore: UnfoldingTree) -> str:
    linhas = [f"pred {arvore.predicate}"]
    linhas += [f"node {n}" for n in arvore.nodes]
    linhas += [f"edge {p} {c}" for p, c in arvore.edges()]
    linhas.append(f"root {arvore.root}")
    linhas += [f"label {n} {arvore.labels[n]}" for n in arvore.nodes]
    return "\n".join(linhas) + "\n"
