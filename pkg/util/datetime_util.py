"""
Módulo de utilitários para medição de tempo com timezone.

Centraliza a criação de datetimes e a cronometragem das operações
que aparecem nos relatórios da linha de comando.
"""
import time
from contextlib import contextmanager
from datetime import datetime
from typing import Dict, Iterator

from util.config import APP_TIMEZONE


def agora() -> datetime:
    """Instante atual no timezone configurado (TIMEZONE); usado no nome dos arquivos de log."""
    return datetime.now(APP_TIMEZONE)


@contextmanager
def cronometrar(tempos: Dict[str, float], etapa: str) -> Iterator[None]:
    """
    Mede o tempo de parede de um bloco e acumula em `tempos[etapa]`.

    Args:
        tempos: Dicionário de tempos (segundos) do relatório
        etapa: Nome da etapa medida

    Example:
        >>> tempos = {}
        >>> with cronometrar(tempos, "parse"):
        ...     estrutura = parse_structure(texto)
        >>> tempos["parse"] >= 0
        True
    """
    inicio = time.perf_counter()
    try:
        yield
    finally:
        tempos[etapa] = round(tempos.get(etapa, 0.0) + time.perf_counter() - inicio, 6)
