"""
Tratamento centralizado de erros da linha de comando.

Erros do domínio (`ErroLogica`) e de validação de entrada (pydantic)
viram uma mensagem de uma linha em stderr e o código de saída 2.
Qualquer outra exceção é um defeito e é propagada.
"""
from typing import TextIO

from pydantic import ValidationError

from util.exceptions import ErroLogica
from util.logger_config import logger

CODIGO_ERRO = 2


def mensagem_validacao(exc: ValidationError) -> str:
    """Junta as mensagens do pydantic como `campo: mensagem`."""
    erros = []
    for error in exc.errors():
        campo = " -> ".join(str(loc) for loc in error["loc"])
        mensagem = error["msg"].removeprefix("Value error, ")
        erros.append(f"{campo}: {mensagem}" if campo else mensagem)
    return "; ".join(erros)


def tratar_erro(exc: Exception, verbo: str, erro: TextIO) -> int:
    """
    Registra o erro e escreve a mensagem em `erro`.

    Returns:
        Código de saída 2

    Raises:
        Exception: A própria exceção, se não for de domínio nem de validação
    """
    if isinstance(exc, ValidationError):
        mensagem = f"entrada inválida: {mensagem_validacao(exc)}"
    elif isinstance(exc, ErroLogica):
        mensagem = f"{type(exc).__name__}: {exc}"
    elif isinstance(exc, OSError):
        mensagem = f"erro de leitura: {exc}"
    else:
        raise exc
    logger.error(f"Comando '{verbo}' falhou - {mensagem}")
    erro.write(f"erro: {mensagem}\n")
    return CODIGO_ERRO
