"""DTOs de entrada dos verbos da linha de comando, validados antes de qualquer trabalho."""
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator

from dtos.validators import (
    validar_assinatura,
    validar_entrada,
    validar_inteiro_faixa,
    validar_lista_faixa,
    validar_palavra,
    validar_string_obrigatoria,
    validar_tipo,
)
from model.aceitacao_model import EscalaSuite
from model.so_model import BackendSO
from util.config import MSO_TYPE_RANK_CAP


class CheckSlrDTO(BaseModel):
    """DTO para `check-slr` e `oracle-check`."""

    estrutura: str = Field(..., description="Arquivo da estrutura (ou '-')")
    sid: str = Field(..., description="Arquivo do SID (ou '-')")
    objetivo: str = Field(..., description="Fórmula objetivo", examples=["Chain(b,e)"])
    valores: List[str] = Field(default_factory=list, description="Valores de variáveis livres, x=3")

    _validar_estrutura = field_validator("estrutura")(validar_entrada("Estrutura"))
    _validar_sid = field_validator("sid")(validar_entrada("SID"))
    _validar_objetivo = field_validator("objetivo")(validar_string_obrigatoria("Objetivo"))

    @field_validator("valores")
    @classmethod
    def validar_valores(cls, v: List[str]) -> List[str]:
        for item in v:
            nome, _, valor = item.partition("=")
            if not nome.strip() or not valor.strip().isdigit():
                raise ValueError(f"Valor '{item}' deve ter a forma variavel=inteiro.")
        return v


class CheckSoDTO(BaseModel):
    """DTO para `check-so`."""

    estrutura: str
    formula: str = Field(..., description="Arquivo da fórmula SO (ou '-')")
    pad: Optional[int] = Field(None, description="Elementos frescos no domínio (padrão 2^qr)")
    backend: str = Field(BackendSO.AUTO.value, examples=BackendSO.valores())

    _validar_estrutura = field_validator("estrutura")(validar_entrada("Estrutura"))
    _validar_formula = field_validator("formula")(validar_entrada("Fórmula"))
    _validar_pad = field_validator("pad")(validar_inteiro_faixa("Padding", minimo=0))
    _validar_backend = field_validator("backend")(validar_tipo("Backend", BackendSO))


class SidDTO(BaseModel):
    """DTO para `normalize`."""

    sid: str

    _validar_sid = field_validator("sid")(validar_entrada("SID"))


class TranslateSoDTO(BaseModel):
    """DTO para `translate-so`."""

    sid: str
    objetivo: str
    assinatura: Optional[str] = None
    estatisticas: bool = False

    _validar_sid = field_validator("sid")(validar_entrada("SID"))
    _validar_objetivo = field_validator("objetivo")(validar_string_obrigatoria("Objetivo"))
    _validar_assinatura = field_validator("assinatura")(validar_assinatura())


class GenTwkDTO(BaseModel):
    """DTO para `gen-twk` e `gen-twk-mso` (com a fórmula)."""

    k: int
    assinatura: str
    formula: Optional[str] = None

    _validar_k = field_validator("k")(validar_inteiro_faixa("k", minimo=1))
    _validar_assinatura = field_validator("assinatura")(validar_assinatura())


class GramaticaDTO(BaseModel):
    """DTO para `cfg2sid`."""

    gramatica: str

    _validar_gramatica = field_validator("gramatica")(validar_entrada("Gramática"))


class PalavraDTO(BaseModel):
    """DTO para `word2struct`."""

    palavra: str

    _validar_palavra = field_validator("palavra")(validar_palavra())


class EstruturaDTO(BaseModel):
    """DTO para `treewidth`."""

    estrutura: str
    reduzida: bool = False

    _validar_estrutura = field_validator("estrutura")(validar_entrada("Estrutura"))


class IsoDTO(BaseModel):
    """DTO para `iso`."""

    primeira: str
    segunda: str

    _validar_primeira = field_validator("primeira")(validar_entrada("Primeira estrutura"))
    _validar_segunda = field_validator("segunda")(validar_entrada("Segunda estrutura"))


class MsoTypeDTO(BaseModel):
    """DTO para `mso-type`."""

    estrutura: str
    rank: int

    _validar_estrutura = field_validator("estrutura")(validar_entrada("Estrutura"))
    _validar_rank = field_validator("rank")(validar_inteiro_faixa("Rank", minimo=0, maximo=MSO_TYPE_RANK_CAP))


class SuiteDTO(BaseModel):
    """DTO para `suite`."""

    escala: str = EscalaSuite.DESK.value
    criterios: List[int] = Field(default_factory=list, description="Critérios (vazio = todos)")
    workers: int = 1
    semente: Optional[int] = None

    _validar_escala = field_validator("escala")(validar_tipo("Escala", EscalaSuite))
    _validar_criterios = field_validator("criterios")(validar_lista_faixa("Critérios", 1, 10))
    _validar_workers = field_validator("workers")(validar_inteiro_faixa("Processos", minimo=1))
