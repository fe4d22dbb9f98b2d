"""
Testes das amostras: fixtures em data/, enumeração exaustiva e sorteios.
"""
import random

import pytest

from core import amostras
from core.slr import check_slr, predicate_atoms
from core.structures import is_isomorphic
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import Exists, PredAtom
from util.exceptions import InvalidInputError


class TestFixtures:
    """Testes das fixtures textuais"""

    def test_carregar_fixture_inexistente(self):
        """Deve rejeitar fixture que não existe em data/"""
        with pytest.raises(InvalidInputError):
            amostras.carregar_texto("nao_existe.struct")

    def test_fixtures_carregam(self):
        """Deve carregar todas as fixtures de data/"""
        assert amostras.chain_sid().predicates() == {"Chain": 2}
        assert "Ring" in amostras.ring_sid().predicates()
        assert amostras.anbn_grammar().start == "S"
        assert len(amostras.k3_structure().dom()) == 3
        assert len(amostras.ring3_structure().tuples["I"]) == 3
        assert amostras.clique_formula() is not None

    def test_anel_sem_c_na_ancora(self):
        """Deve carregar o anel com C só fora da âncora, como as regras de Ring produzem"""
        anel = amostras.ring3_structure()
        assert anel.of("C") == {(2,), (3,)}
        assert amostras.carregar_texto("ring3.struct").splitlines()[1].startswith("# C(1)")
        assert check_slr(anel, Store(), PredAtom("Ring", ()), amostras.ring_sid())
        com_ancora = Structure(anel.signature, {"C": anel.of("C") | {(1,)}, "I": anel.of("I")})
        assert not check_slr(com_ancora, Store(), PredAtom("Ring", ()), amostras.ring_sid())

    def test_objetivo_da_cadeia_e_fechado(self):
        """Deve montar ∃x y. Chain(x,y)"""
        objetivo = amostras.chain_goal()
        assert isinstance(objetivo, Exists)
        assert [a.pred for a in predicate_atoms(objetivo)] == ["Chain"]


class TestEnumeracao:
    """Testes da enumeração exaustiva de estruturas pequenas"""

    def test_contagem_estruturas_pequenas(self):
        """Deve gerar a vazia e uma estrutura por tupla candidata"""
        estruturas = amostras.small_structures(amostras.ASSINATURA_GRAFOS, max_tuplas=1, max_id=2)
        assert len(estruturas) == 5
        assert sum(len(s.dom()) == 0 for s in estruturas) == 1

    def test_ordem_deterministica(self):
        """Deve enumerar sempre na mesma ordem"""
        a = amostras.small_structures(amostras.ASSINATURA_GRAFOS, 2, 2)
        b = amostras.small_structures(amostras.ASSINATURA_GRAFOS, 2, 2)
        assert a == b

    def test_up_to_iso(self):
        """Deve manter um representante por classe: vazia, laço e aresta"""
        estruturas = amostras.small_structures(amostras.ASSINATURA_GRAFOS, max_tuplas=1, max_id=2)
        representantes = amostras.up_to_iso(estruturas)
        assert len(representantes) == 3
        for i, a in enumerate(representantes):
            for b in representantes[i + 1:]:
                assert not is_isomorphic(a, b)


class TestSorteios:
    """Testes dos geradores aleatórios"""

    def test_mesma_semente_mesma_estrutura(self):
        """Deve reproduzir o sorteio com a mesma semente"""
        a = amostras.random_structure(random.Random(7), amostras.ASSINATURA_PEQUENA)
        b = amostras.random_structure(random.Random(7), amostras.ASSINATURA_PEQUENA)
        assert a == b

    def test_renomeacao_e_bijecao(self, rng, triangulo):
        """Deve sortear uma bijeção sobre Dom(s)"""
        h = amostras.random_relabeling(rng, triangulo)
        assert set(h) == triangulo.dom()
        assert len(set(h.values())) == len(h)

    def test_isomorfa_sorteada(self, rng, triangulo):
        """Deve produzir uma cópia isomorfa"""
        assert is_isomorphic(triangulo, amostras.random_isomorphic(rng, triangulo))

    def test_sid_aleatorio_tem_objetivo(self, rng):
        """Deve sempre definir o predicado A com ao menos uma regra"""
        for _ in range(20):
            sid = amostras.random_sid(rng)
            assert "A" in sid.predicates()
            assert any(r.head == "A" for r in sid.rules)

    def test_sid_aciclico_so_chama_predicados_posteriores(self, rng):
        """Deve gerar SIDs sem recursão"""
        for _ in range(30):
            sid = amostras.random_acyclic_sid(rng)
            for regra in sid.rules:
                assert all(a.pred > regra.head for a in predicate_atoms(regra.body))

    def test_objetivos_do_sid(self, rng):
        """Deve montar o átomo objetivo e sua versão fechada"""
        sid = amostras.random_sid(rng)
        atomo = amostras.goal_atom_for(sid)
        assert isinstance(atomo, PredAtom)
        assert len(atomo.args) == sid.arity("A")
        fechado = amostras.closed_goal_for(sid)
        assert predicate_atoms(fechado) == [atomo]

    def test_stores_para_atomo(self):
        """Deve enumerar todas as atribuições das variáveis do átomo"""
        sid = amostras.chain_sid()
        atomo = amostras.goal_atom_for(sid, "Chain")
        stores = list(amostras.stores_for(atomo, [1, 2, 3]))
        assert len(stores) == 9
        assert {s.value("g1") for s in stores} == {1, 2, 3}

    def test_assinatura_da_cadeia(self):
        """Deve expor a assinatura C/1, I/2"""
        assert amostras.chain_signature() == Signature((("C", 1), ("I", 2)))
