"""
Propriedades das operações sobre estruturas, verificadas com hypothesis.
"""
import hypothesis.strategies as st
import pytest
from hypothesis import HealthCheck, given, settings

from core import amostras
from core.decomposition import exact_treewidth, reduce, reduced_violations
from core.slr import check_slr
from core.so import eval_so, quantifier_rank
from core.structures import glue, is_isomorphic, pad, relabel
from model.estrutura_model import Signature, Store, Structure

pytestmark = pytest.mark.property

IDS = st.integers(min_value=0, max_value=5)
PROPRIEDADE = settings(max_examples=60, deadline=None,
                       suppress_health_check=[HealthCheck.function_scoped_fixture])

GRAFO = Signature((("E", 2),))
GRAFO_COM_C = Signature((("E", 2),), ("c",))
VERTICES = Signature((("V", 1), ("E", 2)))

CHAIN = amostras.chain_sid()
CHAIN_OBJETIVO = amostras.chain_goal(CHAIN)
CLIQUE = amostras.clique_formula()


def estruturas(assinatura: Signature, max_tuplas: int = 5):
    """Estratégia de estruturas sobre os ids 0..5."""
    tuplas = st.sampled_from(assinatura.relations).flatmap(
        lambda rel: st.tuples(st.just(rel[0]), st.tuples(*[IDS] * rel[1]))
    )

    def montar(escolha, valores):
        agrupadas = {}
        for nome, t in escolha:
            agrupadas.setdefault(nome, set()).add(t)
        return Structure(assinatura, agrupadas, dict(zip(assinatura.constants, valores)))

    return st.builds(
        montar,
        st.lists(tuplas, max_size=max_tuplas),
        st.tuples(*[IDS] * len(assinatura.constants)),
    )


def renomeacoes(s: Structure):
    """Estratégia de bijeções de Dom(s) em ids até 20."""
    dominio = sorted(s.dom())
    return st.lists(st.integers(0, 20), min_size=len(dominio), max_size=len(dominio), unique=True).map(
        lambda imagens: dict(zip(dominio, imagens))
    )


class TestPropriedadesEstruturas:
    """Propriedades de glue e relabel"""

    @PROPRIEDADE
    @given(estruturas(GRAFO_COM_C), estruturas(GRAFO_COM_C))
    def test_glue_comutativo(self, a, b):
        """Deve valer glue(a, b) ≃ glue(b, a)"""
        assert is_isomorphic(glue(a, b), glue(b, a))

    @PROPRIEDADE
    @given(st.data())
    def test_relabel_produz_isomorfa(self, data):
        """Deve produzir estrutura isomorfa por qualquer bijeção"""
        s = data.draw(estruturas(GRAFO_COM_C))
        h = data.draw(renomeacoes(s))
        resultado = is_isomorphic(s, relabel(s, h))
        assert resultado
        assert all(resultado.witness[e] == h[e] for e in s.constant_values.values())


class TestPropriedadesDecisao:
    """Invariância dos procedimentos de decisão por isomorfismo"""

    @PROPRIEDADE
    @given(st.data())
    def test_check_slr_invariante(self, data):
        """Deve dar o mesmo veredito em estruturas isomorfas"""
        s = data.draw(estruturas(amostras.chain_signature(), max_tuplas=4))
        h = data.draw(renomeacoes(s))
        esperado = check_slr(s, Store(), CHAIN_OBJETIVO, CHAIN)
        assert check_slr(relabel(s, h), Store(), CHAIN_OBJETIVO, CHAIN) == esperado

    @PROPRIEDADE
    @given(st.data())
    def test_eval_so_invariante(self, data):
        """Deve dar o mesmo veredito da fórmula do clique em estruturas isomorfas"""
        s = data.draw(estruturas(VERTICES, max_tuplas=4))
        h = data.draw(renomeacoes(s))
        m = 2 ** quantifier_rank(CLIQUE)
        t = relabel(s, h)
        assert eval_so(s, pad(s, m), Store(), CLIQUE) == eval_so(t, pad(t, m), Store(), CLIQUE)


class TestPropriedadesDecomposicao:
    """Propriedades da forma reduzida"""

    @PROPRIEDADE
    @given(estruturas(GRAFO, max_tuplas=6))
    def test_forma_reduzida_sem_violacoes(self, s):
        """Deve reduzir a decomposição ótima sem violar nenhuma cláusula"""
        td = exact_treewidth(s).decomposition
        reduzida = reduce(td, s)
        assert reduced_violations(reduzida, s) == []
        assert reduzida.width <= td.width
