"""
Exceções customizadas do kit de lógicas relacionais.

Todas herdam de ErroLogica, que é capturada pela linha de comando e
convertida em código de saída 2 com uma mensagem de uma linha.
Os atributos de cada exceção carregam o diagnóstico em forma
estruturada, para testes e para o relatório --json.
"""

from typing import Optional, Sequence


class ErroLogica(Exception):
    """
    Exceção base de todos os erros de domínio do kit.

    Example:
        >>> try:
        ...     compose(a, b)
        ... except ErroLogica as e:
        ...     logger.error(str(e))
    """


# === Entrada e parsing ===

class ParseSyntaxError(ErroLogica):
    """
    Erro de sintaxe em qualquer um dos formatos textuais.

    Attributes:
        linha: Linha (1-based) onde o erro foi detectado
        coluna: Coluna (1-based) onde o erro foi detectado
        esperado: Descrição do que o parser esperava encontrar

    Example:
        >>> parse_sid("A(x) <- R(x,y) ;")
        Traceback (most recent call last):
        ParseSyntaxError: linha 1, coluna 1: esperado parâmetro declarado ...

    Note:
        O nome evita sombrear o SyntaxError embutido do Python.
    """

    def __init__(self, linha: int, coluna: int, esperado: str, detalhe: str = ""):
        self.linha = linha
        self.coluna = coluna
        self.esperado = esperado
        self.detalhe = detalhe
        mensagem = f"linha {linha}, coluna {coluna}: esperado {esperado}"
        if detalhe:
            mensagem += f" ({detalhe})"
        super().__init__(mensagem)


class ArityError(ErroLogica):
    """Símbolo usado com número de argumentos diferente da aridade declarada."""

    def __init__(self, simbolo: str, esperada: int, obtida: int):
        self.simbolo = simbolo
        self.esperada = esperada
        self.obtida = obtida
        super().__init__(f"Aridade de '{simbolo}': esperada {esperada}, obtida {obtida}")


class DuplicateDeclarationError(ErroLogica):
    """Declaração repetida de relação, constante ou nó."""

    def __init__(self, nome: str, tipo: str = "símbolo"):
        self.nome = nome
        self.tipo = tipo
        super().__init__(f"Declaração duplicada de {tipo} '{nome}'")


class InvalidInputError(ErroLogica):
    """Entrada que viola uma pré-condição da operação."""


# === Estruturas ===

class NotDisjointError(ErroLogica):
    """
    Composição de estruturas que compartilham uma tupla.

    Attributes:
        relacao: Nome da relação onde a tupla se repete
        tupla: A tupla presente nas duas estruturas
    """

    def __init__(self, relacao: str, tupla: tuple):
        self.relacao = relacao
        self.tupla = tupla
        super().__init__(f"Estruturas não disjuntas: {relacao}{tupla} ocorre nas duas")


class IncompatibleError(ErroLogica):
    """
    Composição de estruturas que interpretam uma constante de forma diferente.

    Attributes:
        constante: Nome da constante em conflito
    """

    def __init__(self, constante: str):
        self.constante = constante
        super().__init__(f"Estruturas incompatíveis na constante '{constante}'")


class UnknownConstantError(ErroLogica):
    """Constante que não pertence à assinatura."""

    def __init__(self, constante: str):
        self.constante = constante
        super().__init__(f"Constante desconhecida: '{constante}'")


class UnknownRelationError(ErroLogica):
    """Relação que não pertence à assinatura."""

    def __init__(self, relacao: str):
        self.relacao = relacao
        super().__init__(f"Relação desconhecida: '{relacao}'")


class SignatureMismatchError(ErroLogica):
    """Operação binária sobre estruturas de assinaturas diferentes."""


class ReservedSymbolError(ErroLogica):
    """Assinatura que já usa um símbolo reservado pelos geradores (ex.: D)."""

    def __init__(self, simbolo: str):
        self.simbolo = simbolo
        super().__init__(f"Símbolo reservado já presente na assinatura: '{simbolo}'")


# === Avaliação ===

class UnboundVariableError(ErroLogica):
    """Variável livre sem valor no store."""

    def __init__(self, variavel: str):
        self.variavel = variavel
        super().__init__(f"Variável sem valor no store: '{variavel}'")


class UnknownPredicateError(ErroLogica):
    """Predicado sem declaração no SID."""

    def __init__(self, predicado: str):
        self.predicado = predicado
        super().__init__(f"Predicado desconhecido: '{predicado}'")


class BudgetExceededError(ErroLogica):
    """
    A busca de derivações atingiu o limite de profundidade sem decidir.

    Attributes:
        profundidade: Profundidade de recursão atingida
    """

    def __init__(self, profundidade: int):
        self.profundidade = profundidade
        super().__init__(f"Limite de profundidade da busca excedido ({profundidade})")


class NormalizationRequiredError(ErroLogica):
    """A satisfação injetiva exige um SID normalizado."""


class PoolExhaustedError(ErroLogica):
    """
    O conjunto finito de elementos disponíveis acabou antes de decidir.

    Note:
        O universo da definição injetiva é infinito; o pool finito só
        aproxima por baixo, por isso a falta de elementos é reportada
        separadamente de uma refutação.
    """

    def __init__(self, tamanho_pool: int):
        self.tamanho_pool = tamanho_pool
        super().__init__(f"Pool de {tamanho_pool} elemento(s) insuficiente para a derivação")


class TooLargeError(ErroLogica):
    """
    Instância acima de um limite configurado.

    Attributes:
        tamanho: Medida da instância
        limite: Limite configurado que foi ultrapassado
    """

    def __init__(self, tamanho: int, limite: int, contexto: str = ""):
        self.tamanho = tamanho
        self.limite = limite
        self.contexto = contexto
        prefixo = f"{contexto}: " if contexto else ""
        super().__init__(f"{prefixo}tamanho {tamanho} acima do limite {limite}")


class InvalidTreeError(ErroLogica):
    """Árvore de desdobramento incompatível com as regras do SID."""


class DomainTooSmallError(ErroLogica):
    """Domínio de avaliação que não contém Dom(s)."""

    def __init__(self, faltando: Sequence[int]):
        self.faltando = tuple(faltando)
        super().__init__(f"Domínio de avaliação não contém os elementos {sorted(self.faltando)}")


class ArityMismatchError(ErroLogica):
    """Variável de segunda ordem usada com aridade diferente da ligada."""

    def __init__(self, variavel: str, esperada: int, obtida: int):
        self.variavel = variavel
        self.esperada = esperada
        self.obtida = obtida
        super().__init__(f"Variável de segunda ordem '{variavel}': aridade {esperada}, usada com {obtida}")


class SolverInconclusiveError(ErroLogica):
    """O backend de satisfatibilidade respondeu 'unknown' (timeout ou limite)."""


# === Tipos MSO ===

class UnregisteredTypeError(ErroLogica):
    """Tipo sem representante registrado."""


class RankMismatchError(ErroLogica):
    """Operação abstrata sobre tipos de ranks diferentes."""

    def __init__(self, rank_a: int, rank_b: int):
        self.rank_a = rank_a
        self.rank_b = rank_b
        super().__init__(f"Ranks diferentes: {rank_a} e {rank_b}")


class RankTooLargeError(ErroLogica):
    """Rank de quantificadores acima do limite configurado."""

    def __init__(self, rank: int, limite: int):
        self.rank = rank
        self.limite = limite
        super().__init__(f"Rank de quantificadores {rank} acima do limite {limite}")


# === Gramáticas ===

class EmptyWordDerivableError(ErroLogica):
    """A gramática deriva (ou declara) a palavra vazia."""


class NotGreibachError(ErroLogica):
    """Produção fora da forma normal de Greibach."""

    def __init__(self, producao: str):
        self.producao = producao
        super().__init__(f"Produção fora da forma normal de Greibach: {producao}")


class EmptyWordError(ErroLogica):
    """Palavra vazia não tem codificação como estrutura."""

    def __init__(self, mensagem: Optional[str] = None):
        super().__init__(mensagem or "A palavra vazia não tem estrutura associada")


# === Tradução SLR → SO ===

class UnknownIndexError(ErroLogica):
    """Índice de regra, coordenada ou variável inexistente no contexto."""
