"""
Configurações e fixtures para testes pytest.

Fornece estruturas, SIDs e gramáticas de exemplo reutilizáveis, além
do isolamento do registro global de tipos MSO entre testes.
"""
import os

# Configurar o log ANTES de importar os módulos do kit: só erros, sem arquivo
os.environ["LOG_LEVEL"] = "ERROR"
os.environ["LOG_DIR"] = ""

import random

import pytest

from core import amostras
from core.mso_types import registro_tipos
from model.estrutura_model import Signature, Structure


@pytest.fixture(scope="function", autouse=True)
def limpar_registro_tipos():
    """Limpa o registro global de tipos antes e depois de cada teste"""
    registro_tipos.limpar()
    yield
    registro_tipos.limpar()


@pytest.fixture
def rng():
    """Gerador pseudoaleatório com semente fixa"""
    return random.Random(1234)


@pytest.fixture
def assinatura_grafo():
    """Assinatura {E/2}"""
    return Signature((("E", 2),))


@pytest.fixture
def caminho_3():
    """Caminho dirigido 1 -> 2 -> 3 sobre {E/2}"""
    return Structure(Signature((("E", 2),)), {"E": {(1, 2), (2, 3)}})


@pytest.fixture
def triangulo():
    """Triângulo não dirigido K_3 sobre {V/1, E/2}"""
    return amostras.k3_structure()


@pytest.fixture
def chain_sid():
    """SID da cadeia: Chain(x,y) com componentes C ligados por I"""
    return amostras.chain_sid()


@pytest.fixture
def ring_sid():
    """SID do anel: Ring() fecha uma cadeia com uma aresta I"""
    return amostras.ring_sid()


@pytest.fixture
def cadeia_3():
    """Cadeia 1 -> 2 -> 3 com C nos elementos 1 e 2"""
    return Structure(
        amostras.chain_signature(),
        {"C": {(1,), (2,)}, "I": {(1, 2), (2, 3)}},
    )


@pytest.fixture
def anel_3():
    """Anel de três elementos cuja âncora (1) não tem C"""
    return amostras.ring3_structure()


@pytest.fixture
def gramatica_anbn():
    """Gramática S -> ab | aSb"""
    return amostras.anbn_grammar()


@pytest.fixture
def dados_dir():
    """Diretório das fixtures textuais"""
    return amostras.DIRETORIO_DADOS
