"""
Gramáticas livres de contexto: pertinência por CYK generalizado,
forma normal de Greibach, codificação de palavras como estruturas e
o SID que reconhece a linguagem sobre essas estruturas.
"""
from itertools import product
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from model.estrutura_model import Signature, Structure
from model.gramatica_model import Cfg, Production
from model.slr_model import Eq, Exists, PredAtom, RelAtom, Rule, Sid, SlrFormula, Star
from model.termo_model import Const, Var
from util.exceptions import EmptyWordDerivableError, EmptyWordError, InvalidInputError, NotGreibachError
from util.logger_config import logger

ALFABETO = ("a", "b")


# === Pertinência ===

def nullable(g: Cfg) -> FrozenSet[str]:
    """Não terminais que derivam a palavra vazia."""
    anulaveis: Set[str] = set()
    mudou = True
    while mudou:
        mudou = False
        for p in g.productions:
            if p.head not in anulaveis and all(s in anulaveis for s in p.body):
                anulaveis.add(p.head)
                mudou = True
    return frozenset(anulaveis)


def cyk_member(g: Cfg, palavra: str) -> bool:
    """
    Decide w ∈ L(G) para gramáticas arbitrárias (com ε e produções
    unitárias), preenchendo a tabela de trechos por ponto fixo.
    """
    if not palavra:
        return g.start in nullable(g)
    n = len(palavra)
    anulaveis = nullable(g)
    tabela: Dict[Tuple[int, int], Set[str]] = {}

    def deriva(simbolo: str, i: int, j: int) -> bool:
        if simbolo not in g.nonterminals:
            return j == i + 1 and palavra[i] == simbolo
        if i == j:
            return simbolo in anulaveis
        return simbolo in tabela.get((i, j), ())

    def casa(corpo: Tuple[str, ...], i: int, j: int) -> bool:
        if not corpo:
            return i == j
        primeiro, resto = corpo[0], corpo[1:]
        return any(deriva(primeiro, i, m) and casa(resto, m, j) for m in range(i, j + 1))

    for tamanho in range(1, n + 1):
        for i in range(n - tamanho + 1):
            j = i + tamanho
            celula = tabela.setdefault((i, j), set())
            mudou = True
            while mudou:
                mudou = False
                for p in g.productions:
                    if p.head not in celula and casa(p.body, i, j):
                        celula.add(p.head)
                        mudou = True
    return g.start in tabela[(0, n)]


# === Forma normal de Greibach ===

class _Nomes:
    def __init__(self, g: Cfg):
        self.usados = set(g.nonterminals) | set(g.terminals)

    def novo(self, base: str) -> str:
        nome = base
        while nome in self.usados:
            nome += "_"
        self.usados.add(nome)
        return nome


def _sem_epsilon(producoes: List[Production], anulaveis: FrozenSet[str]) -> List[Production]:
    resultado: List[Production] = []
    for p in producoes:
        opcoes = [((s,), ()) if s in anulaveis else ((s,),) for s in p.body]
        for escolha in product(*opcoes):
            corpo = tuple(s for parte in escolha for s in parte)
            nova = Production(p.head, corpo)
            if corpo and nova not in resultado:
                resultado.append(nova)
    return resultado


def _sem_unitarias(producoes: List[Production], nao_terminais: Sequence[str]) -> List[Production]:
    alcance: Dict[str, List[str]] = {a: [a] for a in nao_terminais}
    for a in nao_terminais:
        fila = [a]
        while fila:
            atual = fila.pop()
            for p in producoes:
                if p.head == atual and len(p.body) == 1 and p.body[0] in alcance and p.body[0] not in alcance[a]:
                    alcance[a].append(p.body[0])
                    fila.append(p.body[0])
    resultado: List[Production] = []
    for a in nao_terminais:
        for b in alcance[a]:
            for p in producoes:
                unitaria = len(p.body) == 1 and p.body[0] in alcance
                if p.head == b and not unitaria:
                    nova = Production(a, p.body)
                    if nova not in resultado:
                        resultado.append(nova)
    return resultado


def _geradores(producoes: List[Production], nao_terminais: Set[str]) -> Set[str]:
    geradores: Set[str] = set()
    mudou = True
    while mudou:
        mudou = False
        for p in producoes:
            if p.head not in geradores and all(s in geradores or s not in nao_terminais for s in p.body):
                geradores.add(p.head)
                mudou = True
    return geradores


def is_greibach(g: Cfg) -> bool:
    return all(_producao_greibach(p, g) for p in g.productions)


def _producao_greibach(p: Production, g: Cfg) -> bool:
    return bool(p.body) and p.body[0] not in g.nonterminals and all(s in g.nonterminals for s in p.body[1:])


def greibach_normalize(g: Cfg) -> Cfg:
    """
    Converte para a forma normal de Greibach: remoção de ε e de
    produções unitárias, eliminação de recursão à esquerda em ordem fixa
    e substituição dos prefixos não terminais. Terminais fora da primeira
    posição são trocados por não terminais `T_<a>`.

    Raises:
        EmptyWordDerivableError: A gramática deriva a palavra vazia
    """
    if g.start in nullable(g):
        raise EmptyWordDerivableError(f"'{g.start}' deriva a palavra vazia")
    nomes = _Nomes(g)
    ordem: List[str] = list(g.nonterminals)
    producoes = _sem_unitarias(_sem_epsilon(list(g.productions), nullable(g)), ordem)
    geradores = _geradores(producoes, set(ordem))
    producoes = [p for p in producoes if p.head in geradores and all(s in geradores or s not in ordem for s in p.body)]

    por_cabeca: Dict[str, List[Tuple[str, ...]]] = {a: [] for a in ordem}
    for p in producoes:
        por_cabeca[p.head].append(p.body)

    auxiliares: List[str] = []
    for i, ai in enumerate(ordem):
        for aj in ordem[:i]:
            novos: List[Tuple[str, ...]] = []
            for corpo in por_cabeca[ai]:
                if corpo[0] == aj:
                    novos.extend(b + corpo[1:] for b in por_cabeca[aj])
                else:
                    novos.append(corpo)
            por_cabeca[ai] = list(dict.fromkeys(novos))
        recursivos = [c[1:] for c in por_cabeca[ai] if c[0] == ai]
        if recursivos:
            linha = nomes.novo(f"{ai}_R")
            auxiliares.append(linha)
            bases = [c for c in por_cabeca[ai] if c[0] != ai]
            por_cabeca[ai] = bases + [b + (linha,) for b in bases]
            por_cabeca[linha] = [a for a in recursivos if a] + [a + (linha,) for a in recursivos if a]

    for ai in reversed(ordem):
        novos = []
        for corpo in por_cabeca[ai]:
            if corpo[0] in por_cabeca:
                novos.extend(b + corpo[1:] for b in por_cabeca[corpo[0]])
            else:
                novos.append(corpo)
        por_cabeca[ai] = list(dict.fromkeys(novos))
    for linha in auxiliares:
        novos = []
        for corpo in por_cabeca[linha]:
            if corpo[0] in por_cabeca:
                novos.extend(b + corpo[1:] for b in por_cabeca[corpo[0]])
            else:
                novos.append(corpo)
        por_cabeca[linha] = list(dict.fromkeys(novos))

    terminais: Dict[str, str] = {}
    finais: List[Production] = []
    for cabeca in list(ordem) + auxiliares:
        for corpo in por_cabeca[cabeca]:
            cauda = []
            for s in corpo[1:]:
                if s in por_cabeca:
                    cauda.append(s)
                else:
                    if s not in terminais:
                        terminais[s] = nomes.novo(f"T_{s}")
                    cauda.append(terminais[s])
            finais.append(Production(cabeca, (corpo[0],) + tuple(cauda)))
    finais += [Production(t, (a,)) for a, t in terminais.items()]
    nao_terminais = tuple(ordem) + tuple(auxiliares) + tuple(terminais.values())
    resultado = Cfg(nao_terminais, g.start, tuple(dict.fromkeys(finais)))
    logger.debug(f"Greibach: {len(g.productions)} produções para {len(resultado.productions)}")
    return resultado


# === Codificação em SLR ===

def word_signature(alfabeto: Sequence[str] = ALFABETO) -> Signature:
    """Assinatura {V, E, P_α..., b, e} das palavras."""
    return Signature((("V", 1), ("E", 2)) + tuple((f"P_{a}", 1) for a in alfabeto), ("b", "e"))


def word_to_structure(palavra: str, alfabeto: Sequence[str] = ALFABETO) -> Structure:
    """
    σ_w: posições 1..n em V, sucessores em E, P_α nas posições rotuladas
    por α, b na primeira posição e e na última.

    Raises:
        EmptyWordError: Palavra vazia
        InvalidInputError: Letra fora do alfabeto
    """
    if not palavra:
        raise EmptyWordError()
    for letra in palavra:
        if letra not in alfabeto:
            raise InvalidInputError(f"Letra '{letra}' fora do alfabeto {list(alfabeto)}")
    n = len(palavra)
    tuplas = {
        "V": {(i,) for i in range(1, n + 1)},
        "E": {(i, i + 1) for i in range(1, n)},
    }
    for a in alfabeto:
        tuplas[f"P_{a}"] = {(i,) for i, letra in enumerate(palavra, start=1) if letra == a}
    return Structure(word_signature(alfabeto), tuplas, {"b": 1, "e": n})


def predicate_name(nao_terminal: str) -> str:
    return f"A_{nao_terminal}"


def _estrela(partes: List[SlrFormula]) -> SlrFormula:
    formula = partes[-1]
    for parte in reversed(partes[:-1]):
        formula = Star(parte, formula)
    return formula


def cfg_to_sid(g: Cfg) -> Sid:
    """
    Um predicado binário A_Y por não terminal. Para Y0 → α Y1…Yi com
    i ≥ 1, os trechos de Y1..Yi são encadeados por arestas E a partir de
    x1 e o último termina em x2; com i = 0 a regra consome V(x1) e
    P_α(x1) e fixa x1 = x2.

    Raises:
        NotGreibachError: Produção fora da forma de Greibach
    """
    regras: List[Rule] = []
    x1, x2 = Var("x1"), Var("x2")
    for p in g.productions:
        if not _producao_greibach(p, g):
            raise NotGreibachError(str(p))
        letra, filhos = p.body[0], p.body[1:]
        inicio: List[SlrFormula] = [RelAtom("V", (x1,)), RelAtom(f"P_{letra}", (x1,))]
        if not filhos:
            corpo = _estrela([Eq(x1, x2)] + inicio)
        else:
            i = len(filhos)
            y = [Var(f"y{j}") for j in range(1, 2 * i)] + [x2]
            partes = inicio + [RelAtom("E", (x1, y[0]))]
            for j, filho in enumerate(filhos):
                partes.append(PredAtom(predicate_name(filho), (y[2 * j], y[2 * j + 1])))
                if j + 1 < i:
                    partes.append(RelAtom("E", (y[2 * j + 1], y[2 * j + 2])))
            corpo = _estrela(partes)
            for v in reversed(y[:-1]):
                corpo = Exists(v.name, corpo)
        regras.append(Rule(predicate_name(p.head), ("x1", "x2"), corpo))
    declarados = tuple((predicate_name(a), 2) for a in g.nonterminals)
    return Sid(tuple(regras), ("b", "e"), declarados)


def goal_atom(g: Cfg) -> PredAtom:
    """A_S(b, e), o átomo que reconhece L(G) sobre σ_w."""
    return PredAtom(predicate_name(g.start), (Const("b"), Const("e")))


def words_up_to(tamanho: int, alfabeto: Sequence[str] = ALFABETO) -> List[str]:
    """Todas as palavras não vazias até o tamanho dado, por tamanho e depois lexicograficamente."""
    return ["".join(p) for n in range(1, tamanho + 1) for p in product(alfabeto, repeat=n)]
