"""
Testes da tradução SLR → SO.
"""
import pytest

from core.slr import check_slr
from core.slr2so import (
    build_context, check_translated, derivation_for_context, emit_param_tracking, goal_for_formula, translate,
    translate_formula, translate_with_context, translation_domain, translation_matrix, translation_stats,
    witness_store,
)
from core.so import eval_so, free_variables_so, is_sentence
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import PredAtom
from model.so_model import BackendSO
from model.termo_model import Var
from parsers.slr_parser import parse_slr
from util.exceptions import ArityError, UnknownIndexError, UnknownPredicateError

CHAIN_XY = PredAtom("Chain", (Var("x"), Var("y")))


@pytest.fixture
def elo():
    """Uma aresta I de 1 para 2 com C em 1"""
    return Structure(Signature((("C", 1), ("I", 2))), {"C": {(1,)}, "I": {(1, 2)}})


class TestContexto:
    """Testes do inventário da tradução"""

    def test_inventario_chain(self, chain_sid):
        """Regras, filhos e variáveis de segunda ordem"""
        ctx = build_context(CHAIN_XY, chain_sid)
        assert ctx.rule_count == 2
        assert ctx.max_children == 1
        assert {"p1", "p2", "e1"} <= set(ctx.slots)
        nomes = [nome for nome, _ in ctx.so_variables()]
        assert nomes == ["X1", "X2", "Y1", "Z_C_1", "Z_I_1", "Z_I_2"]

    def test_raiz_nao_captura_objetivo(self, chain_sid):
        """A variável da raiz evita as variáveis livres do objetivo"""
        assert build_context(CHAIN_XY, chain_sid).root == "x_"

    def test_indices_invalidos(self, chain_sid):
        """Regra, aresta e coordenada inexistentes"""
        ctx = build_context(CHAIN_XY, chain_sid)
        with pytest.raises(UnknownIndexError):
            ctx.label_var(2)
        with pytest.raises(UnknownIndexError):
            ctx.edge_var(2)
        with pytest.raises(UnknownIndexError):
            ctx.coord_var("I", 3)

    def test_rastreamento(self, chain_sid):
        """isEq usa uma posição; varEq, duas"""
        ctx = build_context(CHAIN_XY, chain_sid)
        assert emit_param_tracking(ctx, "isEq", ["p1"]) is not None
        assert emit_param_tracking(ctx, "varEq", ["p1", "e1"]) is not None
        with pytest.raises(UnknownIndexError):
            emit_param_tracking(ctx, "varEq", ["p1"])
        with pytest.raises(UnknownIndexError):
            emit_param_tracking(ctx, "isEq", ["q9"])

    def test_aridade_do_objetivo(self, chain_sid):
        """O objetivo precisa ter a aridade do predicado"""
        with pytest.raises(ArityError):
            build_context(PredAtom("Chain", (Var("x"),)), chain_sid)

    def test_predicado_desconhecido(self, chain_sid):
        """Objetivo sem regras é erro"""
        with pytest.raises(UnknownPredicateError):
            translate(PredAtom("Ring", ()), chain_sid)


class TestFormulaTraduzida:
    """Testes da forma da tradução"""

    def test_variaveis_livres(self, chain_sid):
        """Só as variáveis do objetivo ficam livres"""
        assert free_variables_so(translate(CHAIN_XY, chain_sid)) == ({"x", "y"}, {})

    def test_sentenca_fechada(self, chain_sid):
        """Fórmula fechada traduz para sentença"""
        formula = parse_slr("exists x y . Chain(x,y)", chain_sid.predicates())
        assert is_sentence(translate_formula(formula, chain_sid))
        atomo, estendido = goal_for_formula(formula, chain_sid)
        assert atomo.args == ()
        assert len(estendido.rules) == len(chain_sid.rules) + 1

    def test_estatisticas(self, chain_sid):
        """Estatísticas da tradução"""
        ctx, formula = translate_with_context(CHAIN_XY, chain_sid)
        estatisticas = translation_stats(ctx, formula)
        assert estatisticas["regras"] == 2
        assert estatisticas["filhos_max"] == 1
        assert estatisticas["variaveis_so"] == 6
        assert estatisticas["nos"] > 0

    def test_dominio_da_traducao(self, chain_sid, elo):
        """O domínio tem ao menos N(σ) elementos e contém o store"""
        dominio = translation_domain(elo, chain_sid, Store({"x": 9}))
        assert {1, 2, 9} <= dominio.domain
        assert len(dominio.domain) >= 4


class TestEquivalencia:
    """A tradução decide o mesmo que a satisfação SLR"""

    @pytest.mark.parametrize("x, y", [(1, 2), (2, 1), (1, 1)])
    def test_chain_sobre_um_elo(self, chain_sid, elo, x, y):
        """Tradução e check_slr concordam"""
        store = Store({"x": x, "y": y})
        assert check_translated(elo, store, CHAIN_XY, chain_sid) == check_slr(elo, store, CHAIN_XY, chain_sid)

    def test_store_testemunha(self, chain_sid, elo):
        """A derivação materializa uma atribuição que satisfaz a matriz"""
        store = Store({"x": 1, "y": 2})
        ctx = build_context(CHAIN_XY, chain_sid, elo.signature)
        derivacao = derivation_for_context(elo, store, ctx)
        dominio = translation_domain(elo, ctx.sid, store)
        testemunha = witness_store(ctx, derivacao, dominio, store)
        assert eval_so(elo, dominio, testemunha, translation_matrix(ctx), BackendSO.SOLVER)
