"""
Parser e impressora do formato textual de estruturas.

Formato (orientado a linhas, comentários com `#`):

    rel E 2
    const b 1
    tuple E 1 2

Declarações duplicadas e aridades inconsistentes são erros.
"""
from typing import Dict, List, Set, Tuple

import pyparsing as pp

from model.estrutura_model import Signature, Structure
from parsers.comum import COMENTARIO, IDENT, INTEIRO, com_posicao, executar
from util.exceptions import ArityError, DuplicateDeclarationError, ParseSyntaxError

_REL = pp.Keyword("rel") + IDENT + INTEIRO
_CONST = pp.Keyword("const") + IDENT + INTEIRO
_TUPLE = pp.Keyword("tuple") + IDENT + pp.Group(pp.ZeroOrMore(INTEIRO))

_ARQUIVO = pp.ZeroOrMore(com_posicao(_REL | _CONST | _TUPLE)) + pp.StringEnd()
_ARQUIVO.ignore(COMENTARIO)

_ITEM_ASSINATURA = pp.Group(IDENT + pp.Optional(pp.Suppress("/") + INTEIRO))
_ASSINATURA = pp.Optional(pp.delimited_list(_ITEM_ASSINATURA, delim=",")) + pp.StringEnd()


def parse_structure(texto: str) -> Structure:
    """
    Lê uma estrutura no formato textual.

    Args:
        texto: Conteúdo do arquivo

    Returns:
        Structure com a assinatura declarada

    Raises:
        ParseSyntaxError: Sintaxe inválida ou tupla de relação não declarada
        DuplicateDeclarationError: Relação, constante ou tupla repetida
        ArityError: Tupla com número de elementos diferente da aridade
    """
    return executar(_ARQUIVO, texto, _construir_estrutura)


def _construir_estrutura(resultado: pp.ParseResults) -> Structure:
    relacoes: List[Tuple[str, int]] = []
    aridades: Dict[str, int] = {}
    constantes: Dict[str, int] = {}
    tuplas: Dict[str, Set[Tuple[int, ...]]] = {}
    for linha, coluna, decl in resultado:
        tipo = decl[0]
        if tipo == "rel":
            nome, aridade = decl[1], decl[2]
            if nome in aridades or nome in constantes:
                raise DuplicateDeclarationError(nome, "relação")
            aridades[nome] = aridade
            relacoes.append((nome, aridade))
            tuplas[nome] = set()
        elif tipo == "const":
            nome, valor = decl[1], decl[2]
            if nome in constantes or nome in aridades:
                raise DuplicateDeclarationError(nome, "constante")
            constantes[nome] = valor
        else:
            nome, elementos = decl[1], tuple(decl[2])
            if nome not in aridades:
                raise ParseSyntaxError(linha, coluna, "relação declarada antes da tupla", nome)
            if len(elementos) != aridades[nome]:
                raise ArityError(nome, aridades[nome], len(elementos))
            if elementos in tuplas[nome]:
                raise DuplicateDeclarationError(f"{nome}{elementos}", "tupla")
            tuplas[nome].add(elementos)
    assinatura = Signature(tuple(relacoes), tuple(constantes))
    return Structure(assinatura, tuplas, constantes)


def format_structure(estrutura: Structure) -> str:
    """Imprime a estrutura no formato textual, em ordem estável."""
    linhas = [f"rel {nome} {aridade}" for nome, aridade in estrutura.signature.relations]
    linhas += [f"const {c} {estrutura.constant_values[c]}" for c in estrutura.signature.constants]
    linhas += [f"tuple {nome} {' '.join(str(e) for e in t)}" for nome, t in estrutura.all_tuples()]
    return "\n".join(linhas) + "\n"


def parse_signature(texto: str) -> Signature:
    """
    Lê uma assinatura compacta: `E/2,V/1,c` (nomes sem aridade são constantes).

    Raises:
        ParseSyntaxError: Sintaxe inválida
    """
    def construir(resultado: pp.ParseResults) -> Signature:
        relacoes = [(item[0], item[1]) for item in resultado if len(item) == 2]
        constantes = [item[0] for item in resultado if len(item) == 1]
        return Signature(tuple(relacoes), tuple(constantes))
    return executar(_ASSINATURA, texto.strip(), construir)


def format_signature(assinatura: Signature) -> str:
    partes = [f"{n}/{a}" for n, a in assinatura.relations] + list(assinatura.constants)
    return ",".join(partes)
