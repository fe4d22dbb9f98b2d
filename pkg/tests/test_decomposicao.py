import pytest

from core.decomposition import exact_treewidth, gaifman_graph, reduce, reduced_violations, validate
from core.structures import from_tuples
from model.decomposicao_model import TreeDecomposition
from model.estrutura_model import Signature, Structure
from parsers.decomposicao_parser import format_decomposition, parse_decomposition
from tests.test_helpers import assert_decomposicao_valida
from util.exceptions import InvalidInputError, InvalidTreeError, ParseSyntaxError, TooLargeError


def _caminho(n: int) -> Structure:
    return from_tuples(Signature((("E", 2),)), [("E", (i, i + 1)) for i in range(1, n)])


class TestValidacao:
    """Testes das cláusulas de decomposição em árvore"""

    def test_tupla_nao_coberta(self, caminho_3):
        """Tupla fora de todas as bags viola a cláusula 1"""
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1, 2})})
        resultado = validate(td, caminho_3)
        assert not resultado.valid
        assert resultado.clause == 1

    def test_elemento_desconexo(self, caminho_3):
        """Nós com o mesmo elemento precisam ser conexos"""
        td = TreeDecomposition(
            frozenset({0, 1, 2}), ((0, 1), (1, 2)), 0,
            {0: frozenset({1, 2}), 1: frozenset({3}), 2: frozenset({2, 3})},
        )
        resultado = validate(td, caminho_3)
        assert not resultado.valid
        assert resultado.clause == 2

    def test_nao_e_arvore(self, caminho_3):
        """Raiz inexistente não forma árvore"""
        td = TreeDecomposition(frozenset({0}), (), 5, {0: frozenset({1, 2, 3})})
        resultado = validate(td, caminho_3)
        assert not resultado.valid
        assert resultado.clause is None

    def test_bag_unica_valida(self, caminho_3):
        """Uma bag com todo o domínio é sempre decomposição"""
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1, 2, 3})})
        assert_decomposicao_valida(td, caminho_3, largura=2)


class TestTreewidthExata:
    """Testes de exact_treewidth"""

    def test_gaifman_triangulo(self, triangulo):
        """O grafo de Gaifman de K_3 tem três arestas"""
        assert gaifman_graph(triangulo).number_of_edges() == 3

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_caminho_tem_largura_1(self, n):
        """Caminhos com ao menos uma aresta têm treewidth 1"""
        s = _caminho(n)
        resultado = exact_treewidth(s)
        assert resultado.width == 1
        assert_decomposicao_valida(resultado.decomposition, s, largura=1)

    def test_triangulo(self, triangulo):
        """K_3 tem treewidth 2"""
        resultado = exact_treewidth(triangulo)
        assert resultado.width == 2
        assert_decomposicao_valida(resultado.decomposition, triangulo, largura=2)

    def test_ciclo_de_quatro(self):
        """Um ciclo tem treewidth 2"""
        s = from_tuples(Signature((("E", 2),)), [("E", (1, 2)), ("E", (2, 3)), ("E", (3, 4)), ("E", (4, 1))])
        assert exact_treewidth(s).width == 2

    def test_estrutura_vazia(self):
        """Estrutura sem elementos tem treewidth 0"""
        assert exact_treewidth(Structure(Signature((("E", 2),)))).width == 0

    def test_limite_de_tamanho(self):
        """Domínio acima do limite é recusado"""
        with pytest.raises(TooLargeError):
            exact_treewidth(_caminho(5), limite=3)


class TestFormaReduzida:
    """Testes de reduce e reduced_violations"""

    def test_reduzida_do_triangulo(self, triangulo):
        """A forma reduzida mantém a largura e tem uma folha por tupla"""
        td = exact_treewidth(triangulo).decomposition
        reduzida = reduce(td, triangulo)
        assert reduced_violations(reduzida, triangulo) == []
        assert reduzida.width == td.width
        assert len(reduzida.leaves()) == triangulo.tuple_count()
        assert sorted(reduzida.witnesses.values()) == sorted(triangulo.all_tuples())

    def test_padding_e_fresco(self, triangulo):
        """Elementos de completamento não pertencem ao domínio"""
        reduzida = reduce(exact_treewidth(triangulo).decomposition, triangulo)
        assert not reduzida.padding & triangulo.dom()
        assert all(len(b) == 3 for b in reduzida.bags.values())

    def test_caminho_longo(self):
        """Caminho com quatro arestas reduz sem violações"""
        s = _caminho(5)
        reduzida = reduce(exact_treewidth(s).decomposition, s)
        assert reduced_violations(reduzida, s) == []
        assert_decomposicao_valida(reduzida, s, largura=1)

    def test_estrutura_sem_tuplas(self):
        """Sem tuplas a forma reduzida é um único nó"""
        s = Structure(Signature((("E", 2),)))
        reduzida = reduce(exact_treewidth(s).decomposition, s)
        assert len(reduzida.nodes) == 1
        assert reduced_violations(reduzida, s) == []

    def test_elemento_isolado(self):
        """Deve manter a constante fora de tuplas na bag da raiz"""
        s = Structure(Signature((("E", 2),), ("c",)), {"E": {(1, 2)}}, {"c": 3})
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1, 2, 3})})
        reduzida = reduce(td, s)
        assert reduced_violations(reduzida, s) == []
        assert 3 in reduzida.bags[reduzida.root]

    def test_elemento_isolado_por_troca(self):
        """Deve trocar o elemento isolado da raiz pela folha testemunha"""
        s = Structure(Signature((("E", 2),), ("c",)), {"E": {(1, 2)}}, {"c": 3})
        td = TreeDecomposition(frozenset({0, 1}), ((0, 1),), 0, {0: frozenset({2, 3}), 1: frozenset({1, 2})})
        reduzida = reduce(td, s)
        assert reduced_violations(reduzida, s) == []
        assert reduzida.bags[reduzida.root] == frozenset({2, 3})
        assert reduzida.width == 1

    def test_elemento_isolado_acima_da_raiz(self):
        """Deve acrescentar nó de troca quando a raiz não tem posição livre"""
        s = Structure(Signature((("E", 2),), ("a",)), {"E": {(1, 2)}}, {"a": 5})
        td = TreeDecomposition(frozenset({0, 1}), ((0, 1),), 0, {0: frozenset({1, 2}), 1: frozenset({5})})
        reduzida = reduce(td, s)
        assert reduced_violations(reduzida, s) == []
        assert 5 in reduzida.bags[reduzida.root]
        assert_decomposicao_valida(reduzida, s, 1)

    def test_so_constantes(self):
        """Deve reduzir estrutura sem tuplas a uma única bag com as constantes"""
        s = Structure(Signature((("E", 2),), ("a",)), {}, {"a": 4})
        reduzida = reduce(exact_treewidth(s).decomposition, s)
        assert reduced_violations(reduzida, s) == []
        assert reduzida.bags[reduzida.root] == frozenset({4})

    def test_decomposicao_invalida(self, caminho_3):
        """reduce exige decomposição válida"""
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1, 2})})
        with pytest.raises(InvalidInputError):
            reduce(td, caminho_3)

    def test_violacoes_de_decomposicao_comum(self, caminho_3):
        """Uma bag única com duas tuplas não tem folhas suficientes"""
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1, 2, 3})})
        assert 2 in reduced_violations(td, caminho_3)

    def test_violacao_de_decomposicao_invalida(self, caminho_3):
        """Decomposição inválida é sinalizada com 0"""
        td = TreeDecomposition(frozenset({0}), (), 0, {0: frozenset({1})})
        assert reduced_violations(td, caminho_3) == [0]

    def test_impressao(self, triangulo):
        """A impressão lista nós, raiz e testemunhas"""
        texto = format_decomposition(reduce(exact_treewidth(triangulo).decomposition, triangulo))
        assert "root 0" in texto
        assert "witness" in texto

    def test_leitura_da_impressao(self, triangulo):
        """A decomposição impressa é lida de volta com as mesmas bags e testemunhas"""
        td = reduce(exact_treewidth(triangulo).decomposition, triangulo)
        lida = parse_decomposition(format_decomposition(td))
        assert lida.root == td.root
        assert lida.bags == td.bags
        assert lida.witnesses == td.witnesses
        assert reduced_violations(lida, triangulo) == []

    def test_leitura_sem_raiz(self):
        with pytest.raises(ParseSyntaxError):
            parse_decomposition("node 0\nbag 0 1 2\n")

    def test_leitura_de_ciclo(self):
        """Arestas que fecham um ciclo não formam árvore"""
        with pytest.raises(InvalidTreeError):
            parse_decomposition("node 0\nnode 1\nedge 0 1\nedge 1 0\nroot 0\n")
