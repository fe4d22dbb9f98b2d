"""
Testes dos DTOs da linha de comando e do relatório.
"""
import pytest
from pydantic import ValidationError

from dtos.comando_dto import (
    CheckSlrDTO, CheckSoDTO, GenTwkDTO, MsoTypeDTO, PalavraDTO, SuiteDTO, TranslateSoDTO,
)
from dtos.relatorio_dto import RelatorioDTO
from util.config import MSO_TYPE_RANK_CAP
from util.exception_handlers import mensagem_validacao


class TestRelatorioDTO:
    """Testes do relatório de um verbo"""

    @pytest.mark.parametrize("veredito,codigo", [(None, 0), (True, 0), (False, 1)])
    def test_codigo_saida(self, veredito, codigo):
        """Deve mapear o veredito no código de saída"""
        assert RelatorioDTO(verb="x", verdict=veredito).codigo_saida == codigo

    def test_texto_ordem_estavel(self):
        """Deve imprimir o veredito e depois as testemunhas na ordem de inserção"""
        relatorio = RelatorioDTO(verb="iso", verdict=True, witnesses={"b": "1 -> 2\n", "a": 3})
        assert relatorio.texto() == "true\n1 -> 2\n3\n"

    def test_texto_vazio(self):
        """Deve produzir texto vazio sem veredito nem testemunhas"""
        assert RelatorioDTO(verb="normalize").texto() == ""


class TestValidadores:
    """Testes dos validadores dos DTOs"""

    def test_arquivo_existente_e_entrada_padrao(self, tmp_path):
        """Deve aceitar arquivo existente e '-'"""
        arquivo = tmp_path / "s.struct"
        arquivo.write_text("rel E 2\n", encoding="utf-8")
        dto = CheckSlrDTO(estrutura=str(arquivo), sid="-", objetivo="  A(x) ", valores=["x=3"])
        assert dto.objetivo == "A(x)"

    def test_arquivo_inexistente(self):
        """Deve rejeitar arquivo que não existe"""
        with pytest.raises(ValidationError) as exc:
            CheckSlrDTO(estrutura="nao_existe", sid="-", objetivo="A()")
        assert "não encontrado" in mensagem_validacao(exc.value)

    @pytest.mark.parametrize("valor", ["x", "x=", "=3", "x=-1", "x=a"])
    def test_valor_mal_formado(self, valor):
        """Deve exigir a forma variavel=inteiro"""
        with pytest.raises(ValidationError):
            CheckSlrDTO(estrutura="-", sid="-", objetivo="A()", valores=[valor])

    def test_objetivo_vazio(self):
        """Deve exigir objetivo não vazio"""
        with pytest.raises(ValidationError):
            CheckSlrDTO(estrutura="-", sid="-", objetivo="   ")

    def test_palavra(self):
        """Deve aceitar palavra sobre {a, b} e listar as letras inválidas"""
        assert PalavraDTO(palavra="abba").palavra == "abba"
        with pytest.raises(ValidationError) as exc:
            PalavraDTO(palavra="abcd")
        assert mensagem_validacao(exc.value).startswith("palavra: Letras fora do alfabeto: c, d.")

    def test_assinatura(self):
        """Deve validar a assinatura compacta"""
        assert GenTwkDTO(k=1, assinatura="E/2,V/1").k == 1
        assert TranslateSoDTO(sid="-", objetivo="A()").assinatura is None
        with pytest.raises(ValidationError):
            GenTwkDTO(k=1, assinatura="E/")

    def test_k_minimo(self):
        """Deve exigir k ≥ 1"""
        with pytest.raises(ValidationError):
            GenTwkDTO(k=0, assinatura="E/2")

    def test_backend_e_padding(self):
        """Deve aceitar só backends conhecidos e padding não negativo"""
        assert CheckSoDTO(estrutura="-", formula="-", backend="solver").backend == "solver"
        with pytest.raises(ValidationError):
            CheckSoDTO(estrutura="-", formula="-", backend="sat")
        with pytest.raises(ValidationError):
            CheckSoDTO(estrutura="-", formula="-", pad=-1)

    def test_rank_limitado(self):
        """Deve limitar o rank do tipo MSO"""
        assert MsoTypeDTO(estrutura="-", rank=MSO_TYPE_RANK_CAP).rank == MSO_TYPE_RANK_CAP
        with pytest.raises(ValidationError):
            MsoTypeDTO(estrutura="-", rank=MSO_TYPE_RANK_CAP + 1)

    def test_suite(self):
        """Deve validar escala, critérios e processos"""
        dto = SuiteDTO(escala="rapida", criterios=[1, 10])
        assert dto.criterios == [1, 10]
        for campos in ({"escala": "enorme"}, {"criterios": [0]}, {"criterios": [11]}, {"workers": 0}):
            with pytest.raises(ValidationError):
                SuiteDTO(**campos)
