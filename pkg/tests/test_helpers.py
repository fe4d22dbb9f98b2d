"""
Test helpers e funções auxiliares para assertions.

Fornece funções helper reutilizáveis para simplificar e padronizar
assertions nos testes.
"""
import io
from typing import List, Optional, Tuple

from core.decomposition import validate
from core.structures import is_isomorphic
from model.decomposicao_model import TreeDecomposition
from model.estrutura_model import Structure


def assert_isomorfas(a: Structure, b: Structure):
    """
    Helper para verificar isomorfismo e a bijeção testemunha.

    Example:
        >>> assert_isomorfas(glue(a, b), glue(b, a))
    """
    resultado = is_isomorphic(a, b)
    assert resultado.isomorphic, "Estruturas deveriam ser isomorfas"
    h = resultado.witness
    for nome, ts in a.tuples.items():
        assert {tuple(h[e] for e in t) for t in ts} == b.tuples[nome]
    for c, v in a.constant_values.items():
        assert h[v] == b.constant_values[c]


def assert_decomposicao_valida(td: TreeDecomposition, s: Structure, largura: Optional[int] = None):
    """
    Helper para verificar que a decomposição cobre a estrutura.

    Args:
        td: Decomposição
        s: Estrutura
        largura: Largura esperada (opcional)
    """
    resultado = validate(td, s)
    assert resultado.valid, f"Decomposição inválida: cláusula {resultado.clause} ({resultado.detail})"
    if largura is not None:
        assert td.width == largura


def assert_mesmos_vereditos(pares: List[Tuple[object, bool, bool]]):
    """
    Helper para comparar duas rotas de decisão caso a caso.

    Args:
        pares: Lista de (caso, veredito esperado, veredito obtido)
    """
    divergentes = [caso for caso, esperado, obtido in pares if esperado != obtido]
    assert not divergentes, f"{len(divergentes)} casos divergentes, por exemplo: {divergentes[:3]}"


def executar_cli(argv: List[str], entrada: str = "") -> Tuple[int, str, str]:
    """
    Executa a linha de comando em memória.

    Returns:
        (código de saída, stdout, stderr)

    Example:
        >>> codigo, saida, _ = executar_cli(["word2struct", "ab"])
    """
    from main import run

    saida, erro = io.StringIO(), io.StringIO()
    codigo = run(argv, saida=saida, entrada=io.StringIO(entrada), erro=erro)
    return codigo, saida.getvalue(), erro.getvalue()


def assert_codigo_saida(argv: List[str], esperado: int, entrada: str = "") -> str:
    """
    Helper para verificar o código de saída de um verbo.

    Returns:
        A saída padrão produzida, para verificações adicionais
    """
    codigo, saida, erro = executar_cli(argv, entrada)
    assert codigo == esperado, f"Código {codigo} (esperado {esperado}); stderr: {erro}"
    return saida
