"""
Módulo de validadores reutilizáveis para os DTOs da linha de comando.

Cada função devolve um validador para `field_validator`, levantando
ValueError com mensagem em português; o pydantic converte em
ValidationError, que a CLI trata como erro de uso (código 2).

Uso:
    from dtos.validators import validar_inteiro_faixa, validar_entrada

    class MeuDTO(BaseModel):
        k: int
        estrutura: str

        _validar_k = field_validator('k')(validar_inteiro_faixa('k', minimo=1))
        _validar_estrutura = field_validator('estrutura')(validar_entrada('Estrutura'))
"""

from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from core.grammars import ALFABETO
from parsers.estrutura_parser import parse_signature
from util.exceptions import ErroLogica

ENTRADA_PADRAO = "-"


# ===== TEXTO =====


def validar_string_obrigatoria(nome_campo: str = "Campo") -> Callable[[Any, Any], Any]:
    """
    Valida string obrigatória, removendo espaços das bordas.

    Example:
        _validar_objetivo = field_validator('objetivo')(validar_string_obrigatoria('Objetivo'))
    """

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        if not isinstance(v, str) or not v.strip():
            raise ValueError(f"{nome_campo} é obrigatório.")
        return v.strip()

    return validator


def validar_palavra(alfabeto: Sequence[str] = ALFABETO) -> Callable[[Any, Any], Any]:
    """Valida palavra não vazia sobre o alfabeto."""

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        if not v:
            raise ValueError("A palavra não pode ser vazia.")
        invalidas = sorted({letra for letra in v if letra not in alfabeto})
        if invalidas:
            raise ValueError(
                f"Letras fora do alfabeto: {', '.join(invalidas)}. Alfabeto: {', '.join(alfabeto)}."
            )
        return v

    return validator


# ===== NÚMEROS =====


def validar_inteiro_faixa(
    nome_campo: str,
    minimo: Optional[int] = None,
    maximo: Optional[int] = None,
) -> Callable[[Any, Any], Any]:
    """
    Valida inteiro dentro de uma faixa (limites opcionais e inclusivos).

    Example:
        _validar_rank = field_validator('rank')(validar_inteiro_faixa('Rank', minimo=0, maximo=2))
    """

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        if v is None:
            return v
        if minimo is not None and v < minimo:
            raise ValueError(f"{nome_campo} deve ser no mínimo {minimo}.")
        if maximo is not None and v > maximo:
            raise ValueError(f"{nome_campo} deve ser no máximo {maximo}.")
        return v

    return validator


def validar_lista_faixa(nome_campo: str, minimo: int, maximo: int) -> Callable[[Any, Any], Any]:
    """Valida que todos os itens de uma lista de inteiros estão na faixa."""

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        fora = [item for item in v if not minimo <= item <= maximo]
        if fora:
            raise ValueError(f"{nome_campo} fora da faixa {minimo}..{maximo}: {fora}.")
        return v

    return validator


# ===== ARQUIVOS E ASSINATURAS =====


def validar_entrada(nome_campo: str = "Arquivo") -> Callable[[Any, Any], Any]:
    """
    Valida caminho de arquivo de entrada existente, ou `-` para a entrada padrão.
    """

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        if not v:
            raise ValueError(f"{nome_campo} é obrigatório.")
        if v != ENTRADA_PADRAO and not Path(v).is_file():
            raise ValueError(f"{nome_campo} '{v}' não encontrado.")
        return v

    return validator


def validar_assinatura(nome_campo: str = "Assinatura") -> Callable[[Any, Any], Any]:
    """Valida assinatura compacta (`E/2,V/1,c`)."""

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        if v is None:
            return v
        try:
            parse_signature(v)
        except ErroLogica as e:
            raise ValueError(f"{nome_campo} inválida: {e}")
        return v

    return validator


def validar_tipo(nome_campo: str, tipo_enum: Any) -> Callable[[Any, Any], Any]:
    """
    Valida valor de um Enum do kit.

    Example:
        from model.so_model import BackendSO
        _validar_backend = field_validator('backend')(validar_tipo('Backend', BackendSO))
    """

    def validator(cls: Any, v: Any) -> Any:  # noqa: N805
        valores_validos = [t.value for t in tipo_enum]
        if v not in valores_validos:
            tipos_validos = ", ".join([f"'{t.value}'" for t in tipo_enum])
            raise ValueError(
                f"{nome_campo} deve ter um valor válido. Valores válidos: {tipos_validos}."
            )
        return v

    return validator
