"""
Amostras para testes e para a suíte de aceitação: fixtures lidas de
`data/`, enumeração exaustiva de estruturas pequenas e geradores
aleatórios (reprodutíveis por semente) de estruturas e SIDs.
"""
import random
from itertools import combinations, product
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from core.structures import is_isomorphic, relabel
from model.estrutura_model import Signature, Store, Structure, Tupla
from model.gramatica_model import Cfg
from model.slr_model import Emp, Eq, Exists, Neq, PredAtom, RelAtom, Rule, Sid, SlrFormula, Star
from model.so_model import SoFormula
from model.termo_model import Var
from parsers.estrutura_parser import parse_structure
from parsers.gramatica_parser import parse_cfg
from parsers.slr_parser import parse_sid, parse_slr
from parsers.so_parser import parse_so
from util.exceptions import InvalidInputError
from util.logger_config import logger

DIRETORIO_DADOS = Path(__file__).resolve().parent.parent / "data"

# Assinatura de dois símbolos usada pelos SIDs aleatórios
ASSINATURA_PEQUENA = Signature((("R", 1), ("S", 2)))
ASSINATURA_GRAFOS = Signature((("E", 2),))


# === Fixtures ===

def carregar_texto(nome: str) -> str:
    caminho = DIRETORIO_DADOS / nome
    if not caminho.is_file():
        raise InvalidInputError(f"Fixture '{nome}' não encontrada em {DIRETORIO_DADOS}")
    logger.debug(f"Carregando fixture {caminho}")
    return caminho.read_text(encoding="utf-8")


def chain_sid() -> Sid:
    return parse_sid(carregar_texto("chain.sid"))


def ring_sid() -> Sid:
    return parse_sid(carregar_texto("ring.sid"))


def anbn_grammar() -> Cfg:
    return parse_cfg(carregar_texto("anbn.cfg"))


def clique_formula() -> SoFormula:
    return parse_so(carregar_texto("clique.so"))


def k3_structure() -> Structure:
    return parse_structure(carregar_texto("k3.struct"))


def ring3_structure() -> Structure:
    return parse_structure(carregar_texto("ring3.struct"))


def chain_goal(sid: Optional[Sid] = None) -> SlrFormula:
    """Sentença `∃x y. Chain(x,y)`, objetivo fechado do SID da cadeia."""
    sid = sid or chain_sid()
    return parse_slr("exists x y . Chain(x,y)", sid.predicates())


def chain_signature() -> Signature:
    return Signature((("C", 1), ("I", 2)))


# === Enumeração exaustiva ===

def all_tuples(assinatura: Signature, ids: Sequence[int]) -> List[Tuple[str, Tupla]]:
    return [
        (nome, t)
        for nome, aridade in assinatura.relations
        for t in product(ids, repeat=aridade)
    ]


def small_structures(assinatura: Signature, max_tuplas: int, max_id: int) -> List[Structure]:
    """
    Todas as estruturas sem constantes com no máximo `max_tuplas` tuplas
    sobre os elementos 1..max_id, em ordem determinística.
    """
    candidatas = all_tuples(assinatura, range(1, max_id + 1))
    estruturas = []
    for tamanho in range(max_tuplas + 1):
        for escolha in combinations(candidatas, tamanho):
            tuplas: Dict[str, set] = {}
            for nome, t in escolha:
                tuplas.setdefault(nome, set()).add(t)
            estruturas.append(Structure(assinatura, tuplas))
    logger.debug(f"{len(estruturas)} estruturas com até {max_tuplas} tuplas sobre ids ≤ {max_id}")
    return estruturas


def _invariante(s: Structure) -> Tuple:
    graus: Dict[int, int] = {}
    for _, ts in s.tuples.items():
        for t in ts:
            for e in t:
                graus[e] = graus.get(e, 0) + 1
    return (
        len(s.dom()),
        tuple(sorted((n, len(ts)) for n, ts in s.tuples.items())),
        tuple(sorted(graus.values())),
    )


def up_to_iso(estruturas: Iterable[Structure]) -> List[Structure]:
    """Um representante por classe de isomorfismo, preservando a ordem de primeira ocorrência."""
    classes: Dict[Tuple, List[Structure]] = {}
    representantes = []
    for s in estruturas:
        grupo = classes.setdefault(_invariante(s), [])
        if any(is_isomorphic(s, r) for r in grupo):
            continue
        grupo.append(s)
        representantes.append(s)
    return representantes


# === Geradores aleatórios ===

def random_structure(rng: random.Random, assinatura: Signature, max_tuplas: int = 3,
                     max_id: int = 4) -> Structure:
    candidatas = all_tuples(assinatura, range(1, max_id + 1))
    escolha = rng.sample(candidatas, rng.randint(0, min(max_tuplas, len(candidatas))))
    tuplas: Dict[str, set] = {}
    for nome, t in escolha:
        tuplas.setdefault(nome, set()).add(t)
    return Structure(assinatura, tuplas)


def random_relabeling(rng: random.Random, s: Structure, folga: int = 5) -> Dict[int, int]:
    """Bijeção aleatória de Dom(s) em ids de 0 a |Dom(s)| + folga."""
    dominio = sorted(s.dom())
    imagens = rng.sample(range(len(dominio) + folga), len(dominio))
    return dict(zip(dominio, imagens))


def random_isomorphic(rng: random.Random, s: Structure) -> Structure:
    return relabel(s, random_relabeling(rng, s))


def _estrela(partes: List[SlrFormula]) -> SlrFormula:
    if not partes:
        return Emp()
    corpo = partes[0]
    for p in partes[1:]:
        corpo = Star(corpo, p)
    return corpo


class _GeradorSid:
    """
    Sorteia SIDs pequenos: predicado objetivo `A` e, às vezes, um
    auxiliar `B`; até `max_regras` regras com até `max_variaveis`
    variáveis cada, dois átomos relacionais, um átomo puro e no máximo
    um átomo de predicado.
    """

    def __init__(self, rng: random.Random, assinatura: Signature, max_regras: int, max_variaveis: int,
                 aciclico: bool):
        self.rng = rng
        self.assinatura = assinatura
        self.max_regras = max_regras
        self.max_variaveis = max_variaveis
        self.aciclico = aciclico

    def gerar(self) -> Sid:
        aridades = {"A": self.rng.randint(0, 2)}
        if self.rng.random() < 0.5:
            aridades["B"] = self.rng.randint(1, 2)
        nomes = list(aridades)
        cabecas = ["A"] + [self.rng.choice(nomes) for _ in range(self.rng.randint(0, self.max_regras - 1))]
        regras = [self.regra(c, aridades) for c in cabecas]
        return Sid(tuple(regras), (), tuple(aridades.items()))

    def regra(self, cabeca: str, aridades: Dict[str, int]) -> Rule:
        rng = self.rng
        params = tuple(f"x{i}" for i in range(1, aridades[cabeca] + 1))
        existenciais = tuple(
            f"y{i}" for i in range(1, rng.randint(0, self.max_variaveis - len(params)) + 1)
        )
        variaveis = [Var(v) for v in params + existenciais]
        partes: List[SlrFormula] = []
        if variaveis:
            for _ in range(rng.randint(0, 2)):
                nome, aridade = rng.choice(self.assinatura.relations)
                partes.append(RelAtom(nome, tuple(rng.choice(variaveis) for _ in range(aridade))))
            if rng.random() < 0.4:
                construtor = rng.choice((Eq, Neq))
                partes.append(construtor(rng.choice(variaveis), rng.choice(variaveis)))
        alvos = [p for p in aridades if not self.aciclico or p > cabeca]
        if alvos and rng.random() < 0.4:
            alvo = rng.choice(alvos)
            if aridades[alvo] == 0 or variaveis:
                partes.append(PredAtom(alvo, tuple(rng.choice(variaveis) for _ in range(aridades[alvo]))))
        corpo = _estrela(partes)
        for y in reversed(existenciais):
            corpo = Exists(y, corpo)
        return Rule(cabeca, params, corpo)


def random_sid(rng: random.Random, assinatura: Signature = ASSINATURA_PEQUENA, max_regras: int = 3,
               max_variaveis: int = 3) -> Sid:
    return _GeradorSid(rng, assinatura, max_regras, max_variaveis, aciclico=False).gerar()


def random_acyclic_sid(rng: random.Random, assinatura: Signature = ASSINATURA_PEQUENA, max_regras: int = 3,
                       max_variaveis: int = 3) -> Sid:
    """SID sem recursão: átomos de predicado só chamam predicados posteriores (A → B)."""
    return _GeradorSid(rng, assinatura, max_regras, max_variaveis, aciclico=True).gerar()


def goal_atom_for(sid: Sid, predicado: str = "A") -> PredAtom:
    return PredAtom(predicado, tuple(Var(f"g{i}") for i in range(1, sid.arity(predicado) + 1)))


def closed_goal_for(sid: Sid, predicado: str = "A") -> SlrFormula:
    """Sentença ∃ḡ. A(ḡ) com o objetivo do SID."""
    atomo = goal_atom_for(sid, predicado)
    formula: SlrFormula = atomo
    for t in reversed(atomo.args):
        formula = Exists(t.name, formula)
    return formula


def stores_for(atomo: PredAtom, valores: Sequence[int]) -> Iterator[Store]:
    """Todas as atribuições das variáveis do átomo a `valores`."""
    nomes = sorted({t.name for t in atomo.args if isinstance(t, Var)})
    for escolha in product(valores, repeat=len(nomes)):
        yield Store(dict(zip(nomes, escolha)))
