import pytest

from core.grammars import (
    cfg_to_sid, cyk_member, goal_atom, greibach_normalize, is_greibach, nullable, word_to_structure, words_up_to,
)
from core.slr import check_slr, flatten_rule
from model.estrutura_model import Store
from model.slr_model import Eq
from model.termo_model import Var
from parsers.gramatica_parser import format_cfg, parse_cfg
from parsers.slr_parser import parse_sid
from tests.test_helpers import assert_mesmos_vereditos
from util.exceptions import (
    DuplicateDeclarationError, EmptyWordDerivableError, EmptyWordError, InvalidInputError, NotGreibachError,
    ParseSyntaxError,
)

RECURSAO_ESQUERDA = "start S\nprod S -> S a\nprod S -> b\n"
UNITARIA = "start S\nprod S -> A\nprod A -> a A\nprod A -> b\n"


class TestParserGramatica:
    """Testes do formato de gramáticas"""

    def test_leitura(self, gramatica_anbn):
        """Não terminais são o inicial e as cabeças"""
        assert gramatica_anbn.nonterminals == ("S",)
        assert gramatica_anbn.terminals == {"a", "b"}
        assert parse_cfg(format_cfg(gramatica_anbn)) == gramatica_anbn

    def test_sem_inicial(self):
        """A declaração start é obrigatória"""
        with pytest.raises(ParseSyntaxError):
            parse_cfg("prod S -> a\n")

    def test_inicial_repetido(self):
        """Só pode haver um start"""
        with pytest.raises(DuplicateDeclarationError):
            parse_cfg("start S\nstart T\nprod S -> a\n")


class TestPertinencia:
    """Testes de CYK"""

    @pytest.mark.parametrize("palavra, esperado", [
        ("ab", True), ("aabb", True), ("aaabbb", True), ("aab", False), ("ba", False), ("", False),
    ])
    def test_anbn(self, gramatica_anbn, palavra, esperado):
        """a^n b^n com n >= 1"""
        assert cyk_member(gramatica_anbn, palavra) == esperado

    def test_palavra_vazia(self):
        """Gramática com ε aceita a palavra vazia"""
        g = parse_cfg("start S\nprod S -> a S\nprod S ->\n")
        assert nullable(g) == {"S"}
        assert cyk_member(g, "")
        assert cyk_member(g, "aaa")
        assert not cyk_member(g, "b")


class TestGreibach:
    """Testes da forma normal de Greibach"""

    @pytest.mark.parametrize("texto", [RECURSAO_ESQUERDA, UNITARIA])
    def test_preserva_linguagem(self, texto):
        """A forma normal reconhece as mesmas palavras não vazias"""
        g = parse_cfg(texto)
        normal = greibach_normalize(g)
        assert is_greibach(normal)
        assert_mesmos_vereditos([(w, cyk_member(g, w), cyk_member(normal, w)) for w in words_up_to(5)])

    def test_anbn(self, gramatica_anbn):
        """a S b precisa de um não terminal para b"""
        assert not is_greibach(gramatica_anbn)
        assert is_greibach(greibach_normalize(gramatica_anbn))

    def test_gramatica_anulavel(self):
        """Gramática que deriva ε não tem forma de Greibach"""
        with pytest.raises(EmptyWordDerivableError):
            greibach_normalize(parse_cfg("start S\nprod S -> a S\nprod S ->\n"))


class TestCodificacao:
    """Testes de σ_w e do SID da gramática"""

    def test_estrutura_da_palavra(self):
        """Posições, sucessores, letras e extremos"""
        s = word_to_structure("ab")
        assert s.of("V") == {(1,), (2,)}
        assert s.of("E") == {(1, 2)}
        assert s.of("P_a") == {(1,)}
        assert s.of("P_b") == {(2,)}
        assert s.constant_values == {"b": 1, "e": 2}

    def test_palavra_vazia(self):
        """A palavra vazia não tem estrutura"""
        with pytest.raises(EmptyWordError):
            word_to_structure("")

    def test_letra_desconhecida(self):
        """Letras fora do alfabeto são recusadas"""
        with pytest.raises(InvalidInputError):
            word_to_structure("abc")

    def test_palavras(self):
        """Palavras não vazias por tamanho e ordem lexicográfica"""
        assert words_up_to(2) == ["a", "b", "aa", "ab", "ba", "bb"]

    def test_exige_greibach(self, gramatica_anbn):
        """cfg_to_sid recusa produções fora da forma normal"""
        with pytest.raises(NotGreibachError):
            cfg_to_sid(gramatica_anbn)

    def test_regra_de_uma_letra(self):
        """Deve consumir V(x1) * P_α(x1) na regra de uma letra, com x2 preso a x1"""
        g = parse_cfg("start S\nprod S -> a\n")
        sid = cfg_to_sid(g)
        [regra] = sid.rules
        plana = flatten_rule(regra)
        assert {(a.rel, a.args) for a in plana.relations} == {("V", (Var("x1"),)), ("P_a", (Var("x1"),))}
        assert plana.pure == (Eq(Var("x1"), Var("x2")),)
        assert not plana.predicates and not plana.existentials
        sem_igualdade = parse_sid("A_S(x1,x2) <- V(x1) * P_a(x1) ;", ["b", "e"])
        objetivo = goal_atom(g)
        for w in words_up_to(3):
            s = word_to_structure(w)
            assert check_slr(s, Store(), objetivo, sid) == check_slr(s, Store(), objetivo, sem_igualdade) == (w == "a")

    def test_sid_reconhece_linguagem(self, gramatica_anbn):
        """A_S(b, e) vale em σ_w exatamente quando w ∈ L(G)"""
        normal = greibach_normalize(gramatica_anbn)
        sid = cfg_to_sid(normal)
        objetivo = goal_atom(normal)
        assert_mesmos_vereditos([
            (w, cyk_member(gramatica_anbn, w), check_slr(word_to_structure(w), Store(), objetivo, sid))
            for w in words_up_to(4)
        ])
