import pytest

from core.mso_types import (
    RegistroTipos, abstract_forget, abstract_glue, format_type, mso_type, registro_tipos, rho, structure_type,
    type_cost,
)
from core.so import enumerate_sentences, eval_so
from core.structures import forget_constant, glue, pad, relabel
from model.estrutura_model import Signature, Store, Structure
from util.exceptions import (
    RankMismatchError, RankTooLargeError, TooLargeError, UnknownConstantError, UnregisteredTypeError,
)

GRAFO_A = Signature((("E", 2),), ("a",))


@pytest.fixture
def aresta_a():
    """Aresta 1 -> 2 com a constante a em 1"""
    return Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1})


@pytest.fixture
def aresta_b():
    """Aresta 5 -> 6 com a constante a em 6"""
    return Structure(GRAFO_A, {"E": {(5, 6)}}, {"a": 6})


class TestTipo:
    """Testes do cálculo de tipos"""

    def test_custo(self):
        """Custo do jogo é (n + 2^n)^r"""
        assert type_cost(2, 1) == 6
        assert type_cost(3, 2) == 121

    def test_isomorfas_mesmo_tipo(self, aresta_a):
        """Estruturas isomorfas têm o mesmo tipo"""
        copia = relabel(aresta_a, {1: 40, 2: 30})
        assert structure_type(aresta_a, 1) == structure_type(copia, 1)

    def test_laco_distingue(self):
        """Rank 1 distingue laço de aresta simples"""
        sig = Signature((("E", 2),))
        laco = Structure(sig, {"E": {(1, 1)}})
        aresta = Structure(sig, {"E": {(1, 2)}})
        assert structure_type(laco, 1) != structure_type(aresta, 1)

    def test_rank_0_sem_constantes(self, caminho_3):
        """Sem constantes o tipo de rank 0 é vazio"""
        assert structure_type(caminho_3, 0).value == frozenset()

    def test_vocabulario_restrito(self):
        """Relações fora do vocabulário são ignoradas"""
        sig = Signature((("V", 1), ("E", 2)))
        a = Structure(sig, {"V": {(1,)}, "E": {(1, 1)}})
        b = Structure(sig, {"E": {(1, 1)}})
        vocabulario = frozenset({("E", 2)})
        assert structure_type(a, 1, vocabulario) == structure_type(b, 1, vocabulario)
        assert structure_type(a, 1) != structure_type(b, 1)

    def test_registra_representante(self, aresta_a):
        """O primeiro cálculo registra o representante"""
        tipo = structure_type(aresta_a, 1)
        assert registro_tipos.contem(tipo)
        assert registro_tipos.representante(tipo).structure == aresta_a

    def test_rank_acima_do_limite(self, aresta_a):
        """Rank acima do limite configurado"""
        with pytest.raises(RankTooLargeError):
            mso_type(aresta_a, aresta_a.dom(), 3)

    def test_custo_acima_do_limite(self, triangulo):
        """Rank 2 sobre sete elementos passa do custo de referência"""
        with pytest.raises(TooLargeError):
            structure_type(triangulo, 2)

    def test_impressao(self):
        """A impressão lista os átomos verdadeiros sobre as constantes"""
        laco = Structure(GRAFO_A, {"E": {(1, 1)}}, {"a": 1})
        assert format_type(structure_type(laco, 0)) == "r0:{E(a a)}"

    def test_tipo_decide_sentencas_do_rank(self):
        """Deve dar o mesmo veredito a toda sentença de rank ≤ 1 em estruturas de mesmo tipo"""
        estruturas = [
            Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 1}),
            Structure(GRAFO_A, {"E": {(1, 2), (3, 4)}}, {"a": 1}),
            Structure(GRAFO_A, {"E": {(1, 2), (2, 3)}}, {"a": 1}),
            Structure(GRAFO_A, {"E": {(1, 2)}}, {"a": 2}),
            Structure(GRAFO_A, {"E": {(1, 1)}}, {"a": 1}),
        ]
        por_tipo = {}
        for s in estruturas:
            por_tipo.setdefault(structure_type(s, 1), []).append(s)
        assert max(len(grupo) for grupo in por_tipo.values()) >= 2
        corpus = enumerate_sentences(GRAFO_A, 1, limite=120)
        for grupo in por_tipo.values():
            vereditos = {
                tuple(eval_so(s, pad(s, 2), Store(), phi) for phi in corpus) for s in grupo
            }
            assert len(vereditos) == 1


class TestOperacoesAbstratas:
    """Testes de glue♯, fgcst♯ e ρ"""

    def test_glue_abstrato(self, aresta_a, aresta_b):
        """glue♯ coincide com o tipo da colagem de representantes isomorfos"""
        t1, t2 = structure_type(aresta_a, 1), structure_type(aresta_b, 1)
        outra = relabel(aresta_a, {1: 11, 2: 12})
        assert abstract_glue(t1, t2) == structure_type(glue(outra, aresta_b), 1)

    def test_forget_abstrato(self, aresta_a):
        """fgcst♯ coincide com o tipo da estrutura sem a constante"""
        tipo = structure_type(aresta_a, 1)
        assert abstract_forget(tipo, "a") == structure_type(forget_constant(aresta_a, "a"), 1)

    def test_forget_constante_desconhecida(self, aresta_a):
        """Constante fora da assinatura do tipo"""
        with pytest.raises(UnknownConstantError):
            abstract_forget(structure_type(aresta_a, 1), "b")

    def test_ranks_diferentes(self, aresta_a, aresta_b):
        """glue♯ exige o mesmo rank"""
        with pytest.raises(RankMismatchError):
            abstract_glue(structure_type(aresta_a, 0), structure_type(aresta_b, 1))

    def test_tipo_sem_representante(self, aresta_a, aresta_b):
        """Registro vazio não resolve representantes"""
        proprio = RegistroTipos()
        t1 = structure_type(aresta_a, 1, registro=proprio)
        t2 = structure_type(aresta_b, 1, registro=proprio)
        with pytest.raises(UnregisteredTypeError):
            abstract_glue(t1, t2, registro=RegistroTipos())
        assert len(proprio) == 2

    def test_rho(self):
        """ρ é o tipo de um elemento isolado nomeado pela constante"""
        isolado = Structure(Signature((), ("a",)), {}, {"a": 5})
        assert rho("a", 1) == structure_type(isolado, 1)

    def test_representante_indiferente(self, aresta_a, aresta_b):
        """Deve dar o mesmo glue♯ e fgcst♯ qualquer que seja o representante usado"""
        outro = Structure(GRAFO_A, {"E": {(1, 2), (3, 4)}}, {"a": 1})
        registros = (RegistroTipos(), RegistroTipos())
        for registro, ordem in zip(registros, ((aresta_a, outro), (outro, aresta_a))):
            for s in ordem:
                structure_type(s, 1, registro=registro)
        tipo = structure_type(aresta_a, 1, registro=registros[0])
        assert tipo == structure_type(outro, 1, registro=registros[1])
        assert registros[0].representante(tipo).structure != registros[1].representante(tipo).structure
        t2 = [structure_type(aresta_b, 1, registro=r) for r in registros]
        colados = [abstract_glue(tipo, t, registro=r) for t, r in zip(t2, registros)]
        esquecidos = [abstract_forget(tipo, "a", registro=r) for r in registros]
        assert colados[0] == colados[1]
        assert esquecidos[0] == esquecidos[1]
