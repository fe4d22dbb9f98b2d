"""
Parser e impressora de gramáticas livres de contexto.

    start S
    prod S -> a S B
    prod S -> a B
    prod B -> b

Uma produção sem símbolos à direita é uma produção ε.
"""
from typing import List

import pyparsing as pp

from model.gramatica_model import Cfg, Production
from parsers.comum import COMENTARIO, IDENT, executar
from util.exceptions import DuplicateDeclarationError, ParseSyntaxError

_SIMBOLO = ~(pp.Keyword("prod") | pp.Keyword("start")) + IDENT
_START = pp.Keyword("start") + _SIMBOLO
_PROD = pp.Keyword("prod") + _SIMBOLO + pp.Suppress("->") + pp.Group(pp.ZeroOrMore(_SIMBOLO))
_ARQUIVO = pp.ZeroOrMore(pp.Group(_START | _PROD)) + pp.StringEnd()
_ARQUIVO.ignore(COMENTARIO)


def parse_cfg(texto: str) -> Cfg:
    """
    Lê uma gramática.

    Raises:
        ParseSyntaxError: Sintaxe inválida ou `start` ausente
        DuplicateDeclarationError: Mais de um `start`
    """
    def construir(resultado: pp.ParseResults) -> Cfg:
        inicial = None
        producoes: List[Production] = []
        for decl in resultado:
            if decl[0] == "start":
                if inicial is not None:
                    raise DuplicateDeclarationError("start", "símbolo inicial")
                inicial = decl[1]
            else:
                producoes.append(Production(decl[1], tuple(decl[2])))
        if inicial is None:
            raise ParseSyntaxError(1, 1, "declaração 'start'")
        nao_terminais = [inicial]
        for p in producoes:
            if p.head not in nao_terminais:
                nao_terminais.append(p.head)
        return Cfg(tuple(nao_terminais), inicial, tuple(producoes))
    return executar(_ARQUIVO, texto, construir)


def format_cfg(gramatica: Cfg) -> str:
    linhas = [f"start {gramatica.start}"]
    linhas += [f"prod {p}" for p in gramatica.productions]
    return "\n".join(linhas) + "\n"
