import pytest

from core.slr import check_slr, flatten
from core.unfolding import (
    characteristic_formula, derivation_size_bound, enumerate_unfolding_trees, oracle_check, relation_labels,
    satisfies_predicate_free, tree_problem,
)
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import PredAtom
from model.termo_model import Var
from model.unfolding_model import UnfoldingTree
from parsers.decomposicao_parser import format_tree, parse_tree
from parsers.slr_parser import parse_sid, parse_slr
from tests.test_helpers import assert_mesmos_vereditos
from util.exceptions import InvalidTreeError, UnboundVariableError

CHAIN_XY = PredAtom("Chain", (Var("x"), Var("y")))


def _rotulos(arvore: UnfoldingTree):
    return [arvore.labels[n] for n in arvore.nodes]


class TestEnumeracao:
    """Testes da enumeração de árvores de desdobramento"""

    def test_limite_n(self, chain_sid, cadeia_3):
        """N(σ) soma tuplas, regras sem relações e 1"""
        assert derivation_size_bound(cadeia_3, chain_sid) == 6

    def test_limite_n_do_anel(self, ring_sid, anel_3):
        """Deve somar as cinco tuplas do anel, dois predicados × uma regra sem relações e 1"""
        assert derivation_size_bound(anel_3, ring_sid) == 8

    def test_limite_n_com_ramificacao(self):
        """Deve contar duas vezes as tuplas quando alguma regra ramifica"""
        sid = parse_sid("T() <- T() * T() ;\nT() <- exists x . P(x) ;")
        s = Structure(Signature((("P", 1),)), {"P": {(1,), (2,), (3,), (4,)}})
        assert derivation_size_bound(s, sid) == 4 * 2 + 1 * 1 + 1
        # quatro folhas P e três nós de composição
        assert all(a.size() == 7 for a in enumerate_unfolding_trees(PredAtom("T", ()), sid, 10, 4)
                   if sum(1 for n in a.nodes if a.labels[n] == 1) == 4)
        assert not any(sum(1 for n in a.nodes if a.labels[n] == 1) == 4
                       for a in enumerate_unfolding_trees(PredAtom("T", ()), sid, 6, 4))
        assert oracle_check(s, Store(), PredAtom("T", ()), sid)
        assert check_slr(s, Store(), PredAtom("T", ()), sid)

    def test_arvores_ate_tres_nos(self, chain_sid):
        """Chain tem uma árvore por tamanho, em ordem lexicográfica"""
        arvores = list(enumerate_unfolding_trees(CHAIN_XY, chain_sid, 3))
        assert [_rotulos(a) for a in arvores] == [[0, 0, 1], [0, 1], [1]]

    def test_limite_de_relacoes(self, chain_sid):
        """max_relations corta árvores com átomos relacionais demais"""
        arvores = list(enumerate_unfolding_trees(CHAIN_XY, chain_sid, 5, max_relations=2))
        assert sorted(a.size() for a in arvores) == [1, 2]

    def test_sem_arvores(self, chain_sid):
        """Limite zero não produz árvores"""
        assert list(enumerate_unfolding_trees(CHAIN_XY, chain_sid, 0)) == []

    def test_formato_ida_e_volta(self, chain_sid):
        """Imprimir e ler uma árvore reconstrói a mesma árvore"""
        arvore = next(enumerate_unfolding_trees(CHAIN_XY, chain_sid, 3))
        assert parse_tree(format_tree(arvore)) == arvore

    def test_marcas_por_no(self, chain_sid):
        """Cada nó é anotado com os símbolos de relação da sua regra"""
        assert relation_labels(chain_sid) == {0: ["C", "I"], 1: []}
        arvore = next(enumerate_unfolding_trees(CHAIN_XY, chain_sid, 2))
        assert arvore.annotations(relation_labels(chain_sid)) == {0: ["C^0", "I^0"], 1: []}


class TestFormulaCaracteristica:
    """Testes de Θ e da decisão sem predicados"""

    def test_theta_de_dois_nos(self, chain_sid):
        """Θ renomeia existenciais por nó e marca relações"""
        arvore = UnfoldingTree("Chain", {0: (1,), 1: ()}, {0: 0, 1: 1})
        plana = flatten(characteristic_formula(arvore, CHAIN_XY, chain_sid))
        assert plana.existentials == ("y_0_1",)
        assert [a.rel for a in plana.relations] == ["C", "I"]
        assert {a.tag for a in plana.relations} == {"n0"}
        assert plana.predicates == ()

    def test_theta_satisfeita(self, chain_sid):
        """Θ da árvore de dois nós descreve uma aresta com C na origem"""
        arvore = UnfoldingTree("Chain", {0: (1,), 1: ()}, {0: 0, 1: 1})
        theta = characteristic_formula(arvore, CHAIN_XY, chain_sid)
        s = Structure(Signature((("C", 1), ("I", 2))), {"C": {(1,)}, "I": {(1, 2)}})
        assert satisfies_predicate_free(s, Store({"x": 1, "y": 2}), theta)
        assert not satisfies_predicate_free(s, Store({"x": 2, "y": 1}), theta)

    def test_arvore_incompativel(self, chain_sid):
        """Folha com regra recursiva não é árvore de desdobramento"""
        arvore = UnfoldingTree("Chain", {0: ()}, {0: 0})
        assert tree_problem(arvore, chain_sid) is not None
        with pytest.raises(InvalidTreeError):
            characteristic_formula(arvore, CHAIN_XY, chain_sid)

    def test_regra_inexistente(self, chain_sid):
        """Rótulo fora do SID é problema de árvore"""
        assert "inexistente" in tree_problem(UnfoldingTree("Chain", {0: ()}, {0: 7}), chain_sid)

    def test_formula_com_predicado(self, chain_sid, cadeia_3):
        """A decisão direta só aceita fórmulas sem predicados"""
        with pytest.raises(InvalidTreeError):
            satisfies_predicate_free(cadeia_3, Store({"x": 1, "y": 3}), CHAIN_XY)

    def test_variavel_sem_valor(self):
        """Variável livre de Θ precisa de valor"""
        s = Structure(Signature((("C", 1),)), {"C": {(1,)}})
        with pytest.raises(UnboundVariableError):
            satisfies_predicate_free(s, Store(), parse_slr("C(x)"))


class TestOraculo:
    """Testes do oráculo por desdobramento"""

    @pytest.mark.parametrize("x, y", [(1, 3), (1, 2), (2, 3), (3, 3)])
    def test_concorda_com_check_slr(self, chain_sid, cadeia_3, x, y):
        """Oráculo e verificação direta devem concordar"""
        store = Store({"x": x, "y": y})
        assert_mesmos_vereditos([
            ((x, y), check_slr(cadeia_3, store, CHAIN_XY, chain_sid), oracle_check(cadeia_3, store, CHAIN_XY, chain_sid)),
        ])

    def test_anel(self, ring_sid, anel_3):
        """O anel é aceito pelo oráculo"""
        assert oracle_check(anel_3, Store(), PredAtom("Ring", ()), ring_sid)
