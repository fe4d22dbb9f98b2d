"""
Elementos de gramática compartilhados pelos parsers textuais.

Todos os formatos usam comentários no estilo `#`, identificadores no
estilo Python e inteiros não negativos como elementos.
"""
from typing import Callable, TypeVar

import pyparsing as pp

from util.exceptions import ParseSyntaxError

pp.ParserElement.enablePackrat()

T = TypeVar("T")

IDENT = pp.Word(pp.alphas + "_", pp.alphanums + "_")
INTEIRO = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
COMENTARIO = pp.pythonStyleComment


def com_posicao(expr: pp.ParserElement) -> pp.ParserElement:
    """Agrupa `expr` e prefixa o resultado com (linha, coluna) do início."""
    def anotar(s, loc, toks):
        return [(pp.lineno(loc, s), pp.col(loc, s), toks[0])]
    return pp.Group(expr).set_parse_action(anotar)


def executar(gramatica: pp.ParserElement, texto: str, construir: Callable[[pp.ParseResults], T]) -> T:
    """
    Aplica a gramática ao texto inteiro e converte erros do pyparsing.

    Args:
        gramatica: Gramática completa (deve terminar em StringEnd)
        texto: Entrada
        construir: Função que transforma o resultado no valor final

    Returns:
        O valor construído

    Raises:
        ParseSyntaxError: Com linha, coluna e o que era esperado
    """
    try:
        resultado = gramatica.parse_string(texto, parse_all=True)
    except pp.ParseBaseException as e:
        raise ParseSyntaxError(e.lineno, e.col, _esperado(e)) from None
    return construir(resultado)


def _esperado(erro: pp.ParseBaseException) -> str:
    mensagem = str(erro.msg)
    if mensagem.lower().startswith("expected "):
        return mensagem[len("expected "):]
    return mensagem
