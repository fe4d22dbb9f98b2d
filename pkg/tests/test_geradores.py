"""
Testes de Δ(k), Δ(k, φ) e das cliques.
"""
import pytest

from core.decomposition import derivation_decomposition, exact_treewidth, validate
from core.generators import (
    clique_structure, find_twk_model, gen_twk_mso_sid, gen_twk_rule_count, gen_twk_sid, has_twk_model,
    strip_annotations, twk_mso_top_name, twk_names,
)
from core.slr import find_derivation
from core.structures import d_extension_check, from_tuples
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import PredAtom
from parsers.so_parser import parse_so
from util.config import RELACAO_D
from util.exceptions import InvalidInputError, ReservedSymbolError, UnknownRelationError

GRAFOS = Signature((("E", 2),))
SEM_LACOS = parse_so("! exists x . E(x,x)")


def _topo(k: int, assinatura: Signature) -> PredAtom:
    return PredAtom(twk_names(k, assinatura)[1], ())


def _grafo(*arestas) -> Structure:
    return from_tuples(GRAFOS, [("E", a) for a in arestas])


class TestDeltaK:
    """Testes de gen_twk_sid"""

    @pytest.mark.parametrize("k, assinatura, esperado", [
        (1, GRAFOS, 8),
        (2, Signature((("V", 1), ("E", 2))), 17),
    ])
    def test_contagem_de_regras(self, k, assinatura, esperado):
        """Composição, trocas, uma regra por mapa de argumentos e o topo"""
        assert len(gen_twk_sid(k, assinatura).rules) == esperado
        assert gen_twk_rule_count(k, assinatura) == esperado

    def test_nomes_evitam_colisao(self):
        """Relação chamada A força outro nome de predicado"""
        assert twk_names(1, Signature((("A", 1),))) == ("A_", "A_1")

    def test_simbolo_reservado(self):
        """D não pode estar na assinatura"""
        with pytest.raises(ReservedSymbolError):
            gen_twk_sid(1, Signature(((RELACAO_D, 1),)))

    def test_k_invalido(self):
        """k precisa ser positivo"""
        with pytest.raises(InvalidInputError):
            gen_twk_sid(0, GRAFOS)

    @pytest.mark.parametrize("arestas", [((1, 2),), ((1, 2), (2, 3)), ((1, 1), (1, 2))])
    def test_modelos_de_largura_1(self, arestas):
        """Estruturas de treewidth 1 têm D-extensão modelo de Δ(1)"""
        s = _grafo(*arestas)
        modelo = find_twk_model(s, gen_twk_sid(1, GRAFOS), _topo(1, GRAFOS))
        assert modelo is not None
        assert d_extension_check(s, modelo)

    def test_ciclo_nao_tem_modelo(self):
        """Um ciclo dirigido de três elementos tem treewidth 2"""
        ciclo = _grafo((1, 2), (2, 3), (3, 1))
        assert exact_treewidth(ciclo).width == 2
        assert not has_twk_model(ciclo, gen_twk_sid(1, GRAFOS), _topo(1, GRAFOS))

    def test_derivacao_induz_decomposicao_de_largura_k(self):
        """Deve obter decomposição válida de largura ≤ k da derivação de A_k"""
        sid = gen_twk_sid(1, GRAFOS)
        topo = _topo(1, GRAFOS)
        for arestas in [((1, 2),), ((1, 2), (2, 3)), ((1, 1), (1, 2))]:
            modelo = find_twk_model(_grafo(*arestas), sid, topo)
            derivacao = find_derivation(modelo, Store(), topo, sid)
            td = derivation_decomposition(derivacao)
            assert validate(td, modelo).valid
            assert td.width <= 1

    def test_estrutura_vazia(self):
        """A estrutura vazia não é modelo de A_k"""
        assert not has_twk_model(Structure(GRAFOS), gen_twk_sid(1, GRAFOS), _topo(1, GRAFOS))


class TestDeltaKPhi:
    """Testes de gen_twk_mso_sid e strip_annotations"""

    def test_modelos_sem_lacos(self):
        """Δ(1, φ) aceita o caminho e recusa o laço"""
        sid = gen_twk_mso_sid(1, GRAFOS, SEM_LACOS)
        topo = PredAtom(twk_mso_top_name(1, GRAFOS), ())
        assert has_twk_model(_grafo((1, 2)), sid, topo)
        assert not has_twk_model(_grafo((1, 1)), sid, topo)

    def test_apagar_anotacoes(self):
        """Sem anotações, as regras de Δ(k, φ) são regras de Δ(k)"""
        anotado = gen_twk_mso_sid(1, GRAFOS, SEM_LACOS)
        assert set(strip_annotations(anotado, 1, GRAFOS).rules) <= set(gen_twk_sid(1, GRAFOS).rules)

    def test_tautologia_equivale_a_delta_k(self):
        """Deve ter os mesmos modelos de Δ(k) quando φ é tautologia"""
        anotado = gen_twk_mso_sid(1, GRAFOS, parse_so("forall x . x = x"))
        topo_phi = PredAtom(twk_mso_top_name(1, GRAFOS), ())
        simples = gen_twk_sid(1, GRAFOS)
        assert set(strip_annotations(anotado, 1, GRAFOS).rules) == set(simples.rules)
        for arestas in [((1, 2),), ((1, 1),), ((1, 2), (2, 3)), ((1, 2), (2, 3), (3, 1))]:
            s = _grafo(*arestas)
            assert has_twk_model(s, anotado, topo_phi) == has_twk_model(s, simples, _topo(1, GRAFOS))

    def test_exige_sentenca(self):
        """φ com variável livre é recusada"""
        with pytest.raises(InvalidInputError):
            gen_twk_mso_sid(1, GRAFOS, parse_so("E(x,x)"))

    def test_exige_monadica(self):
        """Quantificação binária de segunda ordem é recusada"""
        with pytest.raises(InvalidInputError):
            gen_twk_mso_sid(1, GRAFOS, parse_so("exists2 R/2 . forall x . R(x,x)"))

    def test_relacao_fora_da_assinatura(self):
        """φ só pode mencionar relações de Σ"""
        with pytest.raises(UnknownRelationError):
            gen_twk_mso_sid(1, GRAFOS, parse_so("exists x . V(x)"))

    def test_sentenca_de_rank_0_sobre_constantes(self):
        """Deve gerar regras de topo só para a sentença de rank 0 satisfatível"""
        assinatura = Signature((("E", 2),), ("a",))
        topo = twk_mso_top_name(1, assinatura)
        satisfativel = gen_twk_mso_sid(1, assinatura, parse_so("a = a", ["a"]))
        insatisfativel = gen_twk_mso_sid(1, assinatura, parse_so("! (a = a)", ["a"]))
        assert any(r.head == topo for r in satisfativel.rules)
        assert not any(r.head == topo for r in insatisfativel.rules)
        assert satisfativel.constants == ("a",)

    def test_constante_da_assinatura_nos_modelos(self):
        """Deve decidir φ pela posição da constante, que nunca é esquecida"""
        assinatura = Signature((("E", 2),), ("a",))
        sid = gen_twk_mso_sid(1, assinatura, parse_so("exists x . E(a,x)", ["a"]))
        topo = PredAtom(twk_mso_top_name(1, assinatura), ())
        assert has_twk_model(from_tuples(assinatura, [("E", (1, 2))], {"a": 1}), sid, topo)
        assert not has_twk_model(from_tuples(assinatura, [("E", (1, 2))], {"a": 2}), sid, topo)


class TestCliques:
    """Testes de K_n"""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_treewidth_da_clique(self, n):
        """K_n tem treewidth n - 1"""
        assert exact_treewidth(clique_structure(n)).width == n - 1

    def test_n_invalido(self):
        """n precisa ser positivo"""
        with pytest.raises(InvalidInputError):
            clique_structure(0)
