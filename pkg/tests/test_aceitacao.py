"""
Testes da suíte de aceitação.

A escala rápida roda em cada execução; a escala de bancada fica
marcada como lenta.
"""
import pytest

from core.acceptance import CRITERIOS, run_suite
from model.aceitacao_model import EscalaSuite, RelatorioSuite, ResultadoCriterio
from util.exceptions import InvalidInputError


class TestResultado:
    """Testes dos resultados de critério e do relatório"""

    def test_aprovado_sem_falhas_e_no_tempo(self):
        """Deve aprovar só sem falhas e dentro do limite de tempo"""
        assert ResultadoCriterio(1, "x", casos=3).aprovado
        assert not ResultadoCriterio(1, "x", falhas=["f"]).aprovado
        assert not ResultadoCriterio(1, "x", segundos=2.0, limite_segundos=1.0).aprovado

    def test_relatorio_agrega(self):
        """Deve reprovar o relatório quando algum critério falha"""
        relatorio = RelatorioSuite(EscalaSuite.RAPIDA, 1, [
            ResultadoCriterio(1, "a", segundos=1.0),
            ResultadoCriterio(2, "b", falhas=["f"], segundos=0.5),
        ])
        assert not relatorio.aprovado
        assert relatorio.segundos == 1.5


class TestSuiteRapida:
    """Testes dos critérios na escala rápida"""

    def test_dez_criterios(self):
        """Deve registrar os critérios de 1 a 10"""
        assert sorted(CRITERIOS) == list(range(1, 11))

    def test_criterio_inexistente(self):
        """Deve rejeitar número de critério desconhecido"""
        with pytest.raises(InvalidInputError):
            run_suite(EscalaSuite.RAPIDA, [42], workers=1)

    def test_escala_inexistente(self):
        """Deve rejeitar escala desconhecida"""
        with pytest.raises(InvalidInputError):
            run_suite("enorme", [1], workers=1)

    @pytest.mark.integration
    @pytest.mark.parametrize("numero", sorted(CRITERIOS))
    def test_criterio_aprovado(self, numero):
        """Deve aprovar cada critério na escala rápida"""
        relatorio = run_suite(EscalaSuite.RAPIDA, [numero], workers=1, semente=7)
        [resultado] = relatorio.resultados
        assert resultado.numero == numero
        assert resultado.casos > 0
        assert resultado.falhas == []
        assert resultado.limite_segundos is None

    @pytest.mark.integration
    def test_processos_paralelos_preservam_ordem(self):
        """Deve devolver os resultados na ordem dos critérios"""
        relatorio = run_suite("rapida", [2, 1], workers=2)
        assert [r.numero for r in relatorio.resultados] == [1, 2]
        assert relatorio.aprovado


@pytest.mark.slow
class TestSuiteDesk:
    """Testes da suíte completa, na escala de bancada"""

    def test_suite_completa(self):
        """Deve aprovar todos os critérios dentro dos limites de tempo"""
        relatorio = run_suite(EscalaSuite.DESK)
        reprovados = [(r.numero, r.falhas) for r in relatorio.resultados if not r.aprovado]
        assert not reprovados
