"""
Utilitários compartilhados pelos verbos: leitura de arquivos (com `-`
para a entrada padrão), carregamento dos formatos textuais e medição
de tempo das etapas.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import ContextManager, Dict, Iterable, List, TextIO

from dtos.validators import ENTRADA_PADRAO
from model.estrutura_model import Store, Structure
from model.gramatica_model import Cfg
from model.slr_model import Sid
from model.so_model import SoFormula
from parsers.estrutura_parser import parse_structure
from parsers.gramatica_parser import parse_cfg
from parsers.slr_parser import parse_sid
from parsers.so_parser import parse_so
from util.datetime_util import cronometrar
from util.exceptions import InvalidInputError
from util.logger_config import logger


@dataclass
class ContextoCli:
    """Entrada padrão do processo e tempos medidos durante um verbo."""
    entrada: TextIO
    tempos: Dict[str, float] = field(default_factory=dict)
    _entrada_lida: bool = False

    def ler(self, caminho: str) -> str:
        if caminho == ENTRADA_PADRAO:
            if self._entrada_lida:
                raise InvalidInputError("A entrada padrão ('-') só pode ser usada uma vez por comando")
            self._entrada_lida = True
            return self.entrada.read()
        logger.debug(f"Lendo {caminho}")
        return Path(caminho).read_text(encoding="utf-8")

    def cronometro(self, etapa: str) -> ContextManager[None]:
        return cronometrar(self.tempos, etapa)

    def estrutura(self, caminho: str) -> Structure:
        return parse_structure(self.ler(caminho))

    def sid(self, caminho: str, constantes: Iterable[str] = ()) -> Sid:
        return parse_sid(self.ler(caminho), constantes)

    def formula_so(self, caminho: str, constantes: Iterable[str] = ()) -> SoFormula:
        return parse_so(self.ler(caminho), constantes)

    def gramatica(self, caminho: str) -> Cfg:
        return parse_cfg(self.ler(caminho))


def store_de_valores(valores: List[str]) -> Store:
    """Store a partir de pares `x=3` já validados pelo DTO."""
    pares = (item.partition("=") for item in valores)
    return Store({nome.strip(): int(valor) for nome, _, valor in pares})
