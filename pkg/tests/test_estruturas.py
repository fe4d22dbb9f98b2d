"""
Testes da álgebra de estruturas e do formato textual de estruturas.
"""
import pytest

from core.structures import (
    add_d, compose, d_extension_check, d_extensions, encode_ports, forget_constant, fresh_ids, glue,
    is_isomorphic, pad, port_names, relabel, strip_d,
)
from model.estrutura_model import Signature, Store, Structure
from parsers.estrutura_parser import format_signature, format_structure, parse_signature, parse_structure
from tests.test_helpers import assert_isomorfas
from util.exceptions import (
    ArityError, DuplicateDeclarationError, IncompatibleError, InvalidInputError, NotDisjointError, ParseSyntaxError,
    SignatureMismatchError, UnboundVariableError, UnknownConstantError,
)

GRAFO_A = Signature((("E", 2),), ("a",))


class TestModeloEstrutura:
    """Testes das invariantes de Signature e Structure"""

    def test_dom_inclui_constantes(self):
        """Dom deve incluir os valores das constantes fora das tuplas"""
        s = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 7})
        assert s.rel() == {1, 2}
        assert s.dom() == {1, 2, 7}

    def test_aridade_errada(self):
        """Deve rejeitar tupla com aridade diferente da declarada"""
        with pytest.raises(ArityError):
            Structure(Signature((("E", 2),)), {"E": {(1, 2, 3)}})

    def test_constante_sem_valor(self):
        """Toda constante da assinatura deve ter valor"""
        with pytest.raises(InvalidInputError):
            Structure(GRAFO_A, {"E": {(1, 2)}})

    def test_nome_duplicado(self):
        """Relação e constante não podem ter o mesmo nome"""
        with pytest.raises(DuplicateDeclarationError):
            Signature((("E", 2),), ("E",))

    def test_all_tuples_ordem_estavel(self):
        """Tuplas devem sair na ordem da assinatura e depois lexicográfica"""
        s = Structure(Signature((("V", 1), ("E", 2))), {"E": {(2, 1), (1, 2)}, "V": {(3,)}})
        assert s.all_tuples() == (("V", (3,)), ("E", (1, 2)), ("E", (2, 1)))


class TestComposicao:
    """Testes de compose e glue"""

    def test_compose_disjuntas(self, caminho_3):
        """Composição deve unir as tuplas"""
        outra = Structure(caminho_3.signature, {"E": {(3, 4)}})
        assert compose(caminho_3, outra).of("E") == {(1, 2), (2, 3), (3, 4)}

    def test_compose_nao_disjuntas(self, caminho_3):
        """Deve rejeitar tupla presente nas duas estruturas"""
        with pytest.raises(NotDisjointError):
            compose(caminho_3, Structure(caminho_3.signature, {"E": {(1, 2)}}))

    def test_compose_constantes_incompativeis(self):
        """Deve rejeitar constante com valores diferentes"""
        a = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1})
        b = Structure(GRAFO_A, {"E": {(3, 4)}}, {"a": 3})
        with pytest.raises(IncompatibleError):
            compose(a, b)

    def test_compose_assinaturas_diferentes(self, caminho_3):
        """Deve rejeitar assinaturas diferentes"""
        with pytest.raises(SignatureMismatchError):
            compose(caminho_3, Structure(Signature((("V", 1),)), {"V": {(1,)}}))

    def test_glue_funde_constantes(self):
        """Glue deve identificar os elementos das constantes comuns"""
        a = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1})
        b = Structure(GRAFO_A, {"E": {(5, 6)}}, {"a": 6})
        colado = glue(a, b)
        assert colado.constant_values == {"a": 0}
        assert colado.of("E") == {(0, 1), (2, 0)}
        assert len(colado.dom()) == 3

    def test_glue_comutativo(self):
        """glue(a, b) deve ser isomorfo a glue(b, a)"""
        a = Structure(GRAFO_A, {"E": {(1, 2), (2, 2)}}, {"a": 2})
        b = Structure(GRAFO_A, {"E": {(5, 6)}}, {"a": 5})
        assert_isomorfas(glue(a, b), glue(b, a))

    def test_glue_sem_constantes_comuns_e_disjunto(self, caminho_3):
        """Sem constantes comuns, glue é a união disjunta"""
        colado = glue(caminho_3, caminho_3)
        assert len(colado.dom()) == 6
        assert colado.tuple_count() == 4


class TestForgetERelabel:
    """Testes de forget_constant e relabel"""

    def test_forget_remove_constante(self):
        """Deve remover a constante preservando tuplas"""
        s = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1})
        esquecida = forget_constant(s, "a")
        assert esquecida.signature.constants == ()
        assert esquecida.of("E") == {(1, 2)}

    def test_forget_constante_inexistente(self, caminho_3):
        """Deve rejeitar constante desconhecida"""
        with pytest.raises(UnknownConstantError):
            forget_constant(caminho_3, "a")

    def test_relabel_gera_isomorfa(self, caminho_3):
        """Renomear elementos deve produzir estrutura isomorfa"""
        copia = relabel(caminho_3, {1: 7, 2: 5, 3: 9})
        assert copia.of("E") == {(7, 5), (5, 9)}
        resultado = is_isomorphic(caminho_3, copia)
        assert resultado.witness == {1: 7, 2: 5, 3: 9}


class TestIsomorfismo:
    """Testes de is_isomorphic"""

    def test_direcao_importa(self):
        """Caminho e estrela com mesmo número de arestas não são isomorfos"""
        sig = Signature((("E", 2),))
        caminho = Structure(sig, {"E": {(1, 2), (2, 3)}})
        estrela = Structure(sig, {"E": {(1, 2), (1, 3)}})
        assert not is_isomorphic(caminho, estrela)

    def test_constantes_precisam_corresponder(self):
        """A bijeção deve respeitar as constantes"""
        a = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1})
        b = Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 2})
        assert not is_isomorphic(a, b)

    def test_assinaturas_diferentes(self, caminho_3):
        """Assinaturas diferentes são erro"""
        with pytest.raises(SignatureMismatchError):
            is_isomorphic(caminho_3, Structure(Signature((("V", 1),))))

    def test_estrutura_isomorfa_a_si_mesma(self, triangulo):
        """Toda estrutura deve ser isomorfa a si mesma"""
        assert_isomorfas(triangulo, triangulo)


class TestDExtensoes:
    """Testes das D-extensões"""

    def test_add_e_strip(self, caminho_3):
        """strip_d deve desfazer add_d"""
        estendida = add_d(caminho_3, [1, 2, 3, 9])
        assert estendida.of("D") == {(1,), (2,), (3,), (9,)}
        assert strip_d(estendida) == caminho_3

    def test_check_exige_cobertura(self, caminho_3):
        """D deve cobrir Rel(σ)"""
        assert d_extension_check(caminho_3, add_d(caminho_3, [1, 2, 3]))
        assert not d_extension_check(caminho_3, add_d(caminho_3, [1, 2]))

    def test_enumeracao_limitada(self, caminho_3):
        """Deve enumerar Rel ⊆ D ⊆ Dom ∪ frescos, do menor para o maior"""
        extensoes = list(d_extensions(caminho_3, 2))
        assert len(extensoes) == 4
        assert extensoes[0].of("D") == {(1,), (2,), (3,)}
        assert all(d_extension_check(caminho_3, e) for e in extensoes)


class TestPortasEPadding:
    """Testes de portas, encode e padding"""

    def test_port_names_numeracao(self):
        """Portas devem continuar a numeração das constantes"""
        assert port_names(Signature((("E", 2),), ("b",)), 1) == ["c2", "c3"]

    def test_port_names_colisao(self):
        """Nome em colisão recebe sufixo"""
        assert port_names(Signature((("c1", 1),)), 0) == ["c1_p"]

    def test_encode_ports(self, caminho_3):
        """encode deve fixar as portas nos valores do store"""
        codificada = encode_ports(caminho_3, Store({"x": 1, "y": 3}), ["x", "y"])
        assert codificada.constant_values == {"c1": 1, "c2": 3}

    def test_encode_ports_variavel_sem_valor(self, caminho_3):
        """Variável sem valor é erro"""
        with pytest.raises(UnboundVariableError):
            encode_ports(caminho_3, Store({"x": 1}), ["x", "y"])

    def test_fresh_ids(self):
        """Frescos são os menores inteiros não usados"""
        assert fresh_ids({0, 1, 3}, 3) == [2, 4, 5]

    def test_pad(self, caminho_3):
        """pad deve acrescentar m elementos frescos ao domínio"""
        preenchida = pad(caminho_3, 2)
        assert preenchida.domain == {0, 1, 2, 3, 4}
        assert preenchida.padding == {0, 4}


class TestFormatoEstrutura:
    """Testes do parser e da impressora de estruturas"""

    def test_ida_e_volta(self, triangulo):
        """Imprimir e ler deve reconstruir a estrutura"""
        assert parse_structure(format_structure(triangulo)) == triangulo

    def test_comentarios_e_constantes(self):
        """Deve ignorar comentários e ler constantes"""
        s = parse_structure("# exemplo\nrel E 2\nconst b 1\ntuple E 1 2  # aresta\n")
        assert s.constant_values == {"b": 1}
        assert s.of("E") == {(1, 2)}

    def test_tupla_de_relacao_nao_declarada(self):
        """Tupla antes da declaração da relação é erro de sintaxe"""
        with pytest.raises(ParseSyntaxError):
            parse_structure("tuple E 1 2\n")

    def test_tupla_repetida(self):
        """Tupla repetida é declaração duplicada"""
        with pytest.raises(DuplicateDeclarationError):
            parse_structure("rel E 2\ntuple E 1 2\ntuple E 1 2\n")

    def test_assinatura_compacta(self):
        """Assinatura compacta deve separar relações e constantes"""
        assinatura = parse_signature("E/2,V/1,c")
        assert assinatura.relations == (("E", 2), ("V", 1))
        assert assinatura.constants == ("c",)
        assert format_signature(assinatura) == "E/2,V/1,c"
