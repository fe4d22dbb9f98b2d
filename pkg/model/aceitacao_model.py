from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from util.enum_base import EnumEntidade


class EscalaSuite(EnumEntidade):
    """Escala da suíte de aceitação: DESK roda os tamanhos completos, RAPIDA uma amostra."""
    DESK = "desk"
    RAPIDA = "rapida"


@dataclass(frozen=True)
class ParametrosEscala:
    """
    Tamanhos usados por cada critério numa escala.

    Attributes:
        cliques: Valores de n para K_n
        tamanho_palavras: Palavras de comprimento até este valor
        sids_aleatorios: SIDs sorteados para normalização e oráculo
        sids_oraculo: Quantos desses SIDs também passam pelo oráculo
        tuplas_normalizacao: Máximo de tuplas nas estruturas de normalização
        sids_aciclicos: SIDs acíclicos traduzidos para SO
        tuplas_traducao: Máximo de tuplas nas estruturas traduzidas
        tuplas_twk: Máximo de tuplas nas estruturas de Δ(k) e Δ(k, φ)
        estruturas_padding: Estruturas sorteadas na estabilidade do padding
        casos_propriedade: Casos por propriedade na suíte randomizada
    """
    cliques: Tuple[int, ...]
    tamanho_palavras: int
    sids_aleatorios: int
    sids_oraculo: int
    tuplas_normalizacao: int
    sids_aciclicos: int
    tuplas_traducao: int
    tuplas_twk: int
    estruturas_padding: int
    casos_propriedade: int


PARAMETROS = {
    EscalaSuite.DESK: ParametrosEscala(
        cliques=(2, 3, 4, 5, 6),
        tamanho_palavras=6,
        sids_aleatorios=200,
        sids_oraculo=200,
        tuplas_normalizacao=2,
        sids_aciclicos=3,
        tuplas_traducao=3,
        tuplas_twk=3,
        estruturas_padding=50,
        casos_propriedade=1000,
    ),
    EscalaSuite.RAPIDA: ParametrosEscala(
        cliques=(2, 3, 4),
        tamanho_palavras=4,
        sids_aleatorios=12,
        sids_oraculo=4,
        tuplas_normalizacao=1,
        sids_aciclicos=1,
        tuplas_traducao=1,
        tuplas_twk=2,
        estruturas_padding=8,
        casos_propriedade=40,
    ),
}


@dataclass
class ResultadoCriterio:
    """Resultado de um critério: casos examinados, falhas (resumidas) e tempo gasto."""
    numero: int
    nome: str
    casos: int = 0
    falhas: List[str] = field(default_factory=list)
    segundos: float = 0.0
    limite_segundos: Optional[float] = None

    @property
    def dentro_do_tempo(self) -> bool:
        return self.limite_segundos is None or self.segundos <= self.limite_segundos

    @property
    def aprovado(self) -> bool:
        return not self.falhas and self.dentro_do_tempo


@dataclass
class RelatorioSuite:
    escala: EscalaSuite
    semente: int
    resultados: List[ResultadoCriterio] = field(default_factory=list)

    @property
    def aprovado(self) -> bool:
        return all(r.aprovado for r in self.resultados)

    @property
    def segundos(self) -> float:
        return sum(r.segundos for r in self.resultados)
