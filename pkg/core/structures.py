"""
Álgebra de estruturas: composição, glue, forget, isomorfismo,
D-extensões, portas e preenchimento com elementos frescos.

Todas as funções são puras e devolvem novas estruturas.
"""
from itertools import chain, combinations
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Sequence, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from model.estrutura_model import IsomorphismResult, PaddedStructure, Signature, Store, Structure
from util.config import D_EXTENSION_FRESH, RELACAO_D
from util.exceptions import (
    IncompatibleError,
    NotDisjointError,
    SignatureMismatchError,
    UnknownConstantError,
    UnknownRelationError,
)
from util.logger_config import logger


def fresh_ids(usados: Iterable[int], quantidade: int) -> List[int]:
    """Os `quantidade` menores inteiros não negativos fora de `usados`, em ordem crescente."""
    ocupados = set(usados)
    frescos: List[int] = []
    candidato = 0
    while len(frescos) < quantidade:
        if candidato not in ocupados:
            frescos.append(candidato)
        candidato += 1
    return frescos


def compose(a: Structure, b: Structure) -> Structure:
    """
    Composição σ1 • σ2 de estruturas disjuntas e compatíveis.

    Raises:
        SignatureMismatchError: Assinaturas diferentes
        NotDisjointError: Alguma tupla ocorre nas duas estruturas
        IncompatibleError: Alguma constante tem valores diferentes
    """
    if a.signature != b.signature:
        raise SignatureMismatchError("Composição exige a mesma assinatura")
    for c in a.signature.constants:
        if a.constant_values[c] != b.constant_values[c]:
            raise IncompatibleError(c)
    tuplas = {}
    for nome in a.signature.relation_names:
        comuns = a.tuples[nome] & b.tuples[nome]
        if comuns:
            raise NotDisjointError(nome, min(comuns))
        tuplas[nome] = a.tuples[nome] | b.tuples[nome]
    return Structure(a.signature, tuplas, a.constant_values)


def glue(a: Structure, b: Structure) -> Structure:
    """
    União disjunta seguida da fusão das constantes comuns às duas assinaturas.

    Os elementos do resultado são renumerados a partir de 0 pela ordem de
    primeira ocorrência: constantes de `a`, tuplas de `a`, constantes de
    `b`, tuplas de `b`. Assim glue(a, b) ≃ glue(b, a).
    """
    pai: Dict[Hashable, Hashable] = {}

    def achar(x):
        pai.setdefault(x, x)
        while pai[x] != x:
            pai[x] = pai[pai[x]]
            x = pai[x]
        return x

    def unir(x, y):
        rx, ry = achar(x), achar(y)
        if rx != ry:
            pai[ry] = rx

    for c in a.signature.constants:
        if c in b.signature.constants:
            unir(("a", a.constant_values[c]), ("b", b.constant_values[c]))

    novos: Dict[Hashable, int] = {}

    def numerar(lado: str, elemento: int) -> int:
        classe = achar((lado, elemento))
        if classe not in novos:
            novos[classe] = len(novos)
        return novos[classe]

    constantes: Dict[str, int] = {}
    tuplas: Dict[str, set] = {}
    for lado, estrutura in (("a", a), ("b", b)):
        for c in estrutura.signature.constants:
            constantes[c] = numerar(lado, estrutura.constant_values[c])
        for nome, t in estrutura.all_tuples():
            tuplas.setdefault(nome, set()).add(tuple(numerar(lado, e) for e in t))
    return Structure(a.signature.union(b.signature), tuplas, constantes)


def forget_constant(s: Structure, constante: str) -> Structure:
    """Remove a constante da assinatura; tuplas e demais constantes ficam iguais."""
    if constante not in s.signature.constants:
        raise UnknownConstantError(constante)
    valores = {c: v for c, v in s.constant_values.items() if c != constante}
    return Structure(s.signature.without_constant(constante), s.tuples, valores)


def relabel(s: Structure, h: Mapping[int, int]) -> Structure:
    """Aplica a renomeação h aos elementos (elementos fora de h ficam fixos)."""
    def f(e: int) -> int:
        return h.get(e, e)
    tuplas = {nome: {tuple(f(e) for e in t) for t in ts} for nome, ts in s.tuples.items()}
    return Structure(s.signature, tuplas, {c: f(v) for c, v in s.constant_values.items()})


def _grafo_incidencia(s: Structure) -> nx.DiGraph:
    grafo = nx.DiGraph()
    for e in s.dom():
        nomes = frozenset(c for c, v in s.constant_values.items() if v == e)
        grafo.add_node(("e", e), tipo="elemento", constantes=nomes)
    for nome, t in s.all_tuples():
        no_tupla = ("t", nome, t)
        grafo.add_node(no_tupla, tipo=nome, constantes=frozenset())
        for e in set(t):
            posicoes = frozenset(i for i, x in enumerate(t) if x == e)
            grafo.add_edge(no_tupla, ("e", e), posicoes=posicoes)
    return grafo


def is_isomorphic(a: Structure, b: Structure) -> IsomorphismResult:
    """
    Decide se existe uma renomeação de elementos levando `a` em `b`.

    A busca é feita pelo VF2 do networkx sobre o grafo de incidência
    elemento–tupla (posições nas arestas, constantes nos vértices).

    Returns:
        IsomorphismResult com a bijeção Dom(a) → Dom(b) quando existe

    Raises:
        SignatureMismatchError: Assinaturas diferentes
    """
    if a.signature != b.signature:
        raise SignatureMismatchError("Isomorfismo exige a mesma assinatura")
    if len(a.dom()) != len(b.dom()) or any(len(a.tuples[r]) != len(b.tuples[r]) for r in a.tuples):
        return IsomorphismResult(False)
    casador = isomorphism.DiGraphMatcher(
        _grafo_incidencia(a),
        _grafo_incidencia(b),
        node_match=lambda x, y: x["tipo"] == y["tipo"] and x["constantes"] == y["constantes"],
        edge_match=lambda x, y: x["posicoes"] == y["posicoes"],
    )
    if not casador.is_isomorphic():
        return IsomorphismResult(False)
    bijecao = {u[1]: v[1] for u, v in casador.mapping.items() if u[0] == "e"}
    logger.debug(f"Isomorfismo encontrado entre estruturas com {len(bijecao)} elementos")
    return IsomorphismResult(True, bijecao)


# === D-extensões ===

def add_d(s: Structure, elementos: Iterable[int], relacao_d: str = RELACAO_D) -> Structure:
    """Acrescenta a relação unária 𝔇 interpretada por `elementos`."""
    assinatura = s.signature.with_relations([(relacao_d, 1)])
    tuplas = dict(s.tuples)
    tuplas[relacao_d] = {(e,) for e in elementos}
    return Structure(assinatura, tuplas, s.constant_values)


def d_extension_check(base: Structure, ext: Structure, relacao_d: str = RELACAO_D) -> bool:
    """
    Verifica se `ext` é D-extensão de `base`: concorda em Σ e ext(𝔇) ⊇ Rel(base).

    Raises:
        SignatureMismatchError: Assinatura de `ext` não é a de `base` mais 𝔇
    """
    esperada = base.signature.with_relations([(relacao_d, 1)])
    if set(ext.signature.relations) != set(esperada.relations) or set(ext.signature.constants) != set(base.signature.constants):
        raise SignatureMismatchError(f"A extensão deve ter a assinatura da base mais {relacao_d}/1")
    if any(ext.tuples[r] != base.tuples[r] for r in base.signature.relation_names):
        return False
    if any(ext.constant_values[c] != base.constant_values[c] for c in base.signature.constants):
        return False
    cobertos = {t[0] for t in ext.tuples[relacao_d]}
    return base.rel() <= cobertos


def strip_d(s: Structure, relacao_d: str = RELACAO_D) -> Structure:
    """rem_𝔇: restrição da estrutura a Σ."""
    if not s.signature.has_relation(relacao_d):
        raise UnknownRelationError(relacao_d)
    tuplas = {r: ts for r, ts in s.tuples.items() if r != relacao_d}
    return Structure(s.signature.without_relation(relacao_d), tuplas, s.constant_values)


def d_extensions(s: Structure, frescos: int = D_EXTENSION_FRESH, relacao_d: str = RELACAO_D) -> Iterator[Structure]:
    """
    Enumera as D-extensões com Rel(s) ⊆ 𝔇 ⊆ Dom(s) ∪ {frescos}.

    A ordem é por número de elementos extras e depois lexicográfica.
    """
    obrigatorios = sorted(s.rel())
    extras = sorted(s.dom() - s.rel()) + fresh_ids(s.dom(), frescos)
    for tamanho in range(len(extras) + 1):
        for escolha in combinations(extras, tamanho):
            yield add_d(s, chain(obrigatorios, escolha), relacao_d)


# === Portas e preenchimento ===

def port_names(assinatura: Signature, k: int) -> List[str]:
    """
    Nomes das k+1 constantes de porta c_{M+1}..c_{M+k+1}.

    Um nome que colide com símbolo da assinatura recebe o sufixo `_p`.
    """
    usados = set(assinatura.constants) | set(assinatura.relation_names)
    m = len(assinatura.constants)
    nomes = []
    for i in range(1, k + 2):
        nome = f"c{m + i}"
        while nome in usados:
            nome += "_p"
        usados.add(nome)
        nomes.append(nome)
    return nomes


def encode_ports(s: Structure, store: Store, variaveis: Sequence[str]) -> Structure:
    """
    encode(σ, ν): acrescenta as portas c_{M+i} ↦ ν(x_i).

    Raises:
        UnboundVariableError: Alguma variável sem valor no store
    """
    portas = port_names(s.signature, len(variaveis) - 1)
    valores = dict(s.constant_values)
    for porta, variavel in zip(portas, variaveis):
        valores[porta] = store.value(variavel)
    return Structure(s.signature.with_constants(portas), s.tuples, valores)


def pad(s: Structure, m: int) -> PaddedStructure:
    """Domínio de avaliação Dom(s) mais os m menores ids frescos."""
    dominio = s.dom() | frozenset(fresh_ids(s.dom(), m))
    return PaddedStructure(s, dominio)


def from_tuples(assinatura: Signature, tuplas: Iterable[Tuple[str, Tuple[int, ...]]],
                constantes: Mapping[str, int] = None) -> Structure:
    """Constrói uma estrutura a partir de uma lista de (relação, tupla)."""
    agrupadas: Dict[str, set] = {}
    for nome, t in tuplas:
        agrupadas.setdefault(nome, set()).add(tuple(t))
    return Structure(assinatura, agrupadas, dict(constantes or {}))
