"""DTOs - Data Transfer Objects para validação das entradas da linha de comando"""

from .comando_dto import (
    CheckSlrDTO, CheckSoDTO, EstruturaDTO, GenTwkDTO, GramaticaDTO, IsoDTO, MsoTypeDTO,
    PalavraDTO, SidDTO, SuiteDTO, TranslateSoDTO,
)
from .relatorio_dto import RelatorioDTO

__all__ = [
    "CheckSlrDTO",
    "CheckSoDTO",
    "EstruturaDTO",
    "GenTwkDTO",
    "GramaticaDTO",
    "IsoDTO",
    "MsoTypeDTO",
    "PalavraDTO",
    "SidDTO",
    "SuiteDTO",
    "TranslateSoDTO",
    "RelatorioDTO",
]
