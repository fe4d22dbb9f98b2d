"""
Decomposições em árvore: validação, treewidth exata, forma reduzida.

A treewidth exata é procurada por aprofundamento iterativo sobre a
largura, testando a existência de uma ordem de eliminação no grafo de
Gaifman da estrutura. A forma reduzida segue a construção por nós
intermediários: bags completadas com elementos frescos, pentes binários
de bags iguais e cadeias de trocas de um elemento entre bags distintas.
"""
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx
from networkx.algorithms import bipartite

from core.structures import fresh_ids
from model.decomposicao_model import TreeDecomposition, TreewidthResult, ValidationResult
from model.estrutura_model import Structure, Tupla
from model.slr_model import Derivation
from util.config import TREEWIDTH_CAP
from util.exceptions import InvalidInputError, TooLargeError
from util.logger_config import logger


def gaifman_graph(s: Structure) -> nx.Graph:
    """Grafo com vértices Dom(s) e arestas entre elementos que ocorrem juntos numa tupla."""
    grafo = nx.Graph()
    grafo.add_nodes_from(sorted(s.dom()))
    for _, t in s.all_tuples():
        distintos = sorted(set(t))
        for i, u in enumerate(distintos):
            for v in distintos[i + 1:]:
                grafo.add_edge(u, v)
    return grafo


# === Validação ===

def validate(td: TreeDecomposition, s: Structure) -> ValidationResult:
    """
    Verifica as duas cláusulas da definição de decomposição em árvore.

    Cláusula 1: toda tupla está contida em alguma bag.
    Cláusula 2: para todo u ∈ Dom(s), os nós cujas bags contêm u formam
    um conjunto não vazio e conexo.
    """
    problema = td.tree_problem()
    if problema:
        return ValidationResult(False, None, problema)
    for nome, t in s.all_tuples():
        elementos = set(t)
        if not any(elementos <= td.bags[n] for n in td.nodes):
            return ValidationResult(False, 1, f"tupla {nome}{t} não coberta")
    pais = td.parents()
    for u in sorted(s.dom()):
        nos = {n for n in td.nodes if u in td.bags[n]}
        if not nos:
            return ValidationResult(False, 2, f"elemento {u} fora de todas as bags")
        topos = [n for n in nos if pais.get(n) not in nos]
        if len(topos) != 1:
            return ValidationResult(False, 2, f"nós com o elemento {u} não são conexos")
    return ValidationResult(True)


# === Treewidth exata ===

def _eliminacao_possivel(grafo: nx.Graph, largura: int) -> Optional[List[int]]:
    vertices = tuple(sorted(grafo.nodes))
    vizinhos = {v: frozenset(grafo.neighbors(v)) for v in vertices}

    def grau_eliminacao(eliminados: FrozenSet[int], v: int) -> int:
        # vizinhos de v no grafo preenchido: alcançáveis por caminhos internos a `eliminados`
        alcancados: Set[int] = set()
        visitados = {v}
        pilha = [v]
        while pilha:
            atual = pilha.pop()
            for w in vizinhos[atual]:
                if w in visitados:
                    continue
                visitados.add(w)
                if w in eliminados:
                    pilha.append(w)
                else:
                    alcancados.add(w)
        return len(alcancados)

    @lru_cache(maxsize=None)
    def resolver(eliminados: FrozenSet[int]) -> Optional[Tuple[int, ...]]:
        if len(eliminados) == len(vertices):
            return ()
        for v in vertices:
            if v in eliminados or grau_eliminacao(eliminados, v) > largura:
                continue
            resto = resolver(eliminados | {v})
            if resto is not None:
                return (v,) + resto
        return None

    ordem = resolver(frozenset())
    return list(ordem) if ordem is not None else None


def _decomposicao_por_ordem(grafo: nx.Graph, ordem: List[int]) -> TreeDecomposition:
    preenchido = grafo.copy()
    posicao = {v: i for i, v in enumerate(ordem)}
    bags: Dict[int, FrozenSet[int]] = {}
    arestas: List[Tuple[int, int]] = []
    ultimo = len(ordem) - 1
    for i, v in enumerate(ordem):
        posteriores = set(preenchido.neighbors(v))
        bags[i] = frozenset(posteriores | {v})
        lista = sorted(posteriores)
        for a, u in enumerate(lista):
            for w in lista[a + 1:]:
                preenchido.add_edge(u, w)
        preenchido.remove_node(v)
        if i == ultimo:
            continue
        if posteriores:
            pai = min(posicao[u] for u in posteriores)
        else:
            pai = ultimo
        arestas.append((pai, i))
    return TreeDecomposition(frozenset(bags), tuple(arestas), ultimo, bags)


def exact_treewidth(s: Structure, limite: int = TREEWIDTH_CAP) -> TreewidthResult:
    """
    Treewidth exata por busca exaustiva, com decomposição testemunha.

    Raises:
        TooLargeError: |Dom(s)| acima do limite configurado
    """
    dominio = s.dom()
    if len(dominio) > limite:
        raise TooLargeError(len(dominio), limite, "treewidth exata")
    if not dominio:
        return TreewidthResult(0, TreeDecomposition(frozenset({0}), (), 0, {0: frozenset()}))
    grafo = gaifman_graph(s)
    for largura in range(len(dominio)):
        ordem = _eliminacao_possivel(grafo, largura)
        if ordem is not None:
            td = _decomposicao_por_ordem(grafo, ordem)
            logger.debug(f"Treewidth {largura} para |Dom| = {len(dominio)}, ordem {ordem}")
            return TreewidthResult(largura, td)
    raise AssertionError("toda estrutura tem ordem de eliminação com largura |Dom| - 1")


# === Forma reduzida ===

class _Construtor:
    """Monta a decomposição reduzida nó a nó, numerando na ordem de criação."""

    def __init__(self):
        self.bags: Dict[int, FrozenSet[int]] = {}
        self.filhos: Dict[int, List[int]] = {}
        self.testemunhas: Dict[int, Tuple[str, Tupla]] = {}

    def no(self, bag: FrozenSet[int], filhos: Iterable[int] = ()) -> int:
        novo = len(self.bags)
        self.bags[novo] = bag
        self.filhos[novo] = list(filhos)
        return novo

    def pente(self, itens: List[int], bag: FrozenSet[int]) -> int:
        """Une itens de mesma bag numa cadeia de nós binários com essa bag."""
        if len(itens) == 1:
            return itens[0]
        direita = itens[-1]
        for item in reversed(itens[:-1]):
            direita = self.no(bag, [item, direita])
        return direita

    def cadeia(self, origem: FrozenSet[int], destino: FrozenSet[int], raiz_destino: int) -> int:
        """Nós que trocam um elemento por vez de `origem` até `destino`; devolve o topo."""
        sai = sorted(origem - destino)
        entra = sorted(destino - origem)
        atual = raiz_destino
        for j in range(len(sai) - 1, 0, -1):
            bag = (origem - set(sai[:j])) | set(entra[:j])
            atual = self.no(frozenset(bag), [atual])
        return self.no(origem, [atual])

    def decomposicao(self, raiz: int, padding: Set[int]) -> TreeDecomposition:
        ordem: List[int] = []
        pilha = [raiz]
        while pilha:
            n = pilha.pop()
            ordem.append(n)
            pilha.extend(reversed(self.filhos[n]))
        novo = {antigo: i for i, antigo in enumerate(ordem)}
        return TreeDecomposition(
            nodes=frozenset(novo.values()),
            edges=tuple((novo[p], novo[c]) for p in ordem for c in self.filhos[p]),
            root=0,
            bags={novo[n]: self.bags[n] for n in ordem},
            padding=frozenset(e for n in ordem for e in self.bags[n] if e in padding),
            witnesses={novo[n]: t for n, t in self.testemunhas.items()},
        )


def reduce(td: TreeDecomposition, s: Structure) -> TreeDecomposition:
    """
    Transforma uma decomposição válida de largura k numa decomposição
    reduzida de mesma largura.

    Cada tupla vira uma folha testemunha sob o primeiro nó (em pré-ordem)
    que a cobre; subárvores sem tuplas são descartadas. Elementos fora de
    todas as tuplas (constantes isoladas) ocupam as posições livres da
    bag da raiz; os que não couberem entram por nós de troca acima dela,
    sendo esquecidos na subida como o preenchimento. Estruturas sem
    tuplas resultam em um único nó completado com elementos frescos.

    Raises:
        InvalidInputError: `td` não é decomposição de `s`
    """
    resultado = validate(td, s)
    if not resultado.valid:
        raise InvalidInputError(f"Decomposição inválida (cláusula {resultado.clause}): {resultado.detail}")
    k = td.width
    isoladas = sorted(s.dom() - s.rel())
    bags = {n: td.bags[n] - set(isoladas) for n in td.nodes}
    usados = set(s.dom()) | {e for b in td.bags.values() for e in b}
    padding: Set[int] = set()
    completas: Dict[int, FrozenSet[int]] = {}
    pendentes = list(isoladas)
    for n in td.preorder():
        faltam = k + 1 - len(bags[n])
        if n == td.root:
            proprias, pendentes = pendentes[:faltam], pendentes[faltam:]
            faltam -= len(proprias)
        else:
            proprias = []
        frescos = fresh_ids(usados, faltam)
        usados.update(frescos)
        padding.update(frescos)
        completas[n] = bags[n] | frozenset(proprias) | frozenset(frescos)

    atribuidas: Dict[int, List[Tuple[str, Tupla]]] = {n: [] for n in td.nodes}
    ordem = td.preorder()
    for nome, t in s.all_tuples():
        dono = next(n for n in ordem if set(t) <= bags[n])
        atribuidas[dono].append((nome, t))

    construtor = _Construtor()

    def itens(n: int) -> List[int]:
        bag = completas[n]
        lista = []
        for tupla in atribuidas[n]:
            folha = construtor.no(bag)
            construtor.testemunhas[folha] = tupla
            lista.append(folha)
        for c in td.children(n):
            sub = itens(c)
            if not sub:
                continue
            if completas[c] == bag:
                lista.extend(sub)
            else:
                lista.append(construtor.cadeia(bag, completas[c], construtor.pente(sub, completas[c])))
        return lista

    raizes = itens(td.root)
    raiz = construtor.pente(raizes, completas[td.root]) if raizes else construtor.no(completas[td.root])
    for elemento in pendentes:
        topo = construtor.bags[raiz]
        sai = min(topo & padding) if topo & padding else min(topo)
        raiz = construtor.no((topo - {sai}) | {elemento}, [raiz])
    reduzida = construtor.decomposicao(raiz, padding)
    logger.debug(f"Decomposição reduzida: {len(td.nodes)} nós para {len(reduzida.nodes)} nós, largura {k}")
    return reduzida


def reduced_violations(td: TreeDecomposition, s: Structure) -> List[int]:
    """
    Cláusulas (1 a 6) da forma reduzida violadas por `td`.

    Devolve [0] quando `td` nem é decomposição válida de `s`. A
    correspondência folha–tupla das cláusulas 1 e 2 é verificada como
    emparelhamento perfeito entre folhas e tuplas que elas cobrem.
    Uma estrutura sem tuplas cuja decomposição tem uma única folha é aceita.
    """
    if not validate(td, s).valid:
        return [0]
    violadas: Set[int] = set()
    k = td.width
    folhas = td.leaves()
    tuplas = list(s.all_tuples())
    degenerado = not tuplas and len(folhas) == 1
    if not degenerado:
        grafo = nx.Graph()
        grafo.add_nodes_from((("folha", f) for f in folhas), bipartite=0)
        grafo.add_nodes_from((("tupla", t) for t in tuplas), bipartite=1)
        for f in folhas:
            for t in tuplas:
                if set(t[1]) <= td.bags[f]:
                    grafo.add_edge(("folha", f), ("tupla", t))
        if any(grafo.degree(("tupla", t)) == 0 for t in tuplas):
            violadas.add(1)
        emparelhamento = bipartite.maximum_matching(grafo, top_nodes=[("folha", f) for f in folhas])
        casadas = sum(1 for f in folhas if ("folha", f) in emparelhamento)
        if casadas < len(tuplas):
            violadas.add(1)
        if casadas < len(folhas) or len(folhas) != len(tuplas):
            violadas.add(2)
    for n in td.nodes:
        filhos = td.children(n)
        bag = td.bags[n]
        if len(filhos) > 2:
            violadas.add(3)
        if len(filhos) == 2 and not (td.bags[filhos[0]] == bag == td.bags[filhos[1]]):
            violadas.add(4)
        if len(filhos) == 1:
            m = filhos[0]
            testemunha = bag == td.bags[m] and not td.children(m)
            troca = len(bag - td.bags[m]) == 1 and len(td.bags[m] - bag) == 1
            if not (testemunha or troca):
                violadas.add(5)
        if len(bag) != k + 1:
            violadas.add(6)
    return sorted(violadas)


def derivation_decomposition(derivacao: Derivation) -> TreeDecomposition:
    """
    Decomposição induzida por uma derivação: um nó por aplicação de regra,
    com bag formada pelos valores dos parâmetros da regra e pelos
    elementos das tuplas consumidas nela que os parâmetros de nenhum
    filho cobrem. Cada elemento é então acrescentado ao caminho entre
    as bags em que aparece, o que garante a conexidade.

    Para Δ(k) as bags são os valores de x1..x_{k+1} e a largura é k:
    a tupla 𝔇(y) das trocas fica com o filho, que recebe y como parâmetro.
    """
    bags: Dict[int, Set[int]] = {}
    pais: Dict[int, int] = {}
    arestas: List[Tuple[int, int]] = []

    def visitar(d: Derivation, pai: Optional[int]) -> None:
        no = len(bags)
        if pai is not None:
            pais[no] = pai
            arestas.append((pai, no))
        cobertos = [set(f.args) for f in d.children]
        elementos = set(d.args)
        for _, t in d.tuples:
            if not any(set(t) <= c for c in cobertos):
                elementos.update(t)
        bags[no] = elementos
        for filho in d.children:
            visitar(filho, no)

    visitar(derivacao, None)
    _conectar(bags, pais)
    return TreeDecomposition(frozenset(bags), tuple(arestas), 0, {n: frozenset(b) for n, b in bags.items()})


def _conectar(bags: Dict[int, Set[int]], pais: Dict[int, int]) -> None:
    """Acrescenta cada elemento às bags do caminho até o ancestral comum das bags que o contêm."""
    def ascendentes(no: int) -> List[int]:
        caminho = [no]
        while caminho[-1] in pais:
            caminho.append(pais[caminho[-1]])
        return caminho

    for elemento in set().union(*bags.values()):
        caminhos = [ascendentes(n) for n, b in bags.items() if elemento in b]
        if len(caminhos) < 2:
            continue
        comuns = set(caminhos[0]).intersection(*caminhos[1:])
        for caminho in caminhos:
            for no in caminho:
                bags[no].add(elemento)
                if no in comuns:
                    break
