"""
Configuração do logging do kit.

Relatórios dos verbos vão para stdout; o log vai para stderr e, se
LOG_DIR não estiver vazio, para um arquivo por dia (app.YYYY.MM.DD.log)
com retenção de LOG_RETENTION_DAYS arquivos.
"""

import logging
import os
import time
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import List

from util.config import LOG_DIR, LOG_LEVEL, LOG_RETENTION_DAYS
from util.datetime_util import agora

FORMATO = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
FORMATO_DATA = "%Y-%m-%d %H:%M:%S"


class ArquivoDiarioHandler(TimedRotatingFileHandler):
    """
    Handler com a data no nome do arquivo desde a criação: à meia-noite
    passa a escrever no arquivo do novo dia em vez de renomear o antigo.
    """

    PADRAO = "app.*.log"

    def __init__(self, diretorio: str, retencao: int):
        self.diretorio = Path(diretorio)
        self.diretorio.mkdir(parents=True, exist_ok=True)
        super().__init__(self._arquivo_do_dia(), when="midnight", backupCount=retencao, encoding="utf-8")

    def _arquivo_do_dia(self) -> str:
        return str(self.diretorio / f"app.{agora():%Y.%m.%d}.log")

    def _excedentes(self) -> List[Path]:
        arquivos = sorted(self.diretorio.glob(self.PADRAO))
        return arquivos[:-self.backupCount] if len(arquivos) > self.backupCount else []

    def doRollover(self):
        if self.stream:
            self.stream.close()
            self.stream = None  # type: ignore[assignment]
        self.baseFilename = self._arquivo_do_dia()
        if self.backupCount > 0:
            for antigo in self._excedentes():
                antigo.unlink(missing_ok=True)
        agora_s = int(time.time())
        proximo = self.computeRollover(agora_s)
        while proximo <= agora_s:
            proximo += self.interval
        self.rolloverAt = proximo
        if not self.delay:
            self.stream = self._open()


def configurar_logger(nome: str = "relkit") -> logging.Logger:
    """
    Configura (uma única vez) o logger do kit.

    O nível vem de LOG_LEVEL no ambiente no momento da chamada, o que
    permite aos testes silenciar o log antes da primeira importação.
    """
    logger = logging.getLogger(nome)
    logger.setLevel(getattr(logging, os.getenv("LOG_LEVEL", LOG_LEVEL).upper()))
    logger.propagate = False
    if logger.handlers:
        return logger

    formato = logging.Formatter(FORMATO, datefmt=FORMATO_DATA)
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if LOG_DIR:
        handlers.append(ArquivoDiarioHandler(LOG_DIR, LOG_RETENTION_DAYS))
    for handler in handlers:
        handler.setFormatter(formato)
        logger.addHandler(handler)
    return logger


logger = configurar_logger()
