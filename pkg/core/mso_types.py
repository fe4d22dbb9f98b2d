"""
Tipos MSO de rank r pelo jogo de vai-e-volta, o registro de
representantes e as operações abstratas glue♯ e fgcst♯.

Um tipo de rank 0 é o conjunto de átomos verdadeiros sobre as
constantes (as da assinatura, `#i` para elementos escolhidos e `$k`
para conjuntos escolhidos). O tipo de rank n+1 é o par formado pelos
tipos de rank n de todas as extensões por um elemento e por um
conjunto do domínio.
"""
import threading
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from core.so import Dominio, evaluation_domain
from core.structures import forget_constant, glue, pad
from model.estrutura_model import PaddedStructure, Signature, Structure
from model.so_model import MsoType
from util.config import MSO_TYPE_DOMAIN_CAP, MSO_TYPE_RANK_CAP
from util.exceptions import (
    RankMismatchError, RankTooLargeError, TooLargeError, UnknownConstantError, UnregisteredTypeError,
)
from util.logger_config import logger

Vocabulario = Optional[FrozenSet[Tuple[str, int]]]


def type_cost(tamanho_dominio: int, rank: int) -> int:
    """Número de folhas da árvore do jogo: (n + 2^n)^r."""
    return (tamanho_dominio + 2 ** tamanho_dominio) ** rank


def _custo_maximo() -> int:
    return type_cost(MSO_TYPE_DOMAIN_CAP, 2)


def _subconjuntos(dominio: Tuple[int, ...]) -> List[FrozenSet[int]]:
    return [frozenset(c) for tamanho in range(len(dominio) + 1) for c in combinations(dominio, tamanho)]


class _Calculadora:
    def __init__(self, s: Structure, dominio: Tuple[int, ...], vocabulario: Vocabulario):
        self.s = s
        self.dominio = dominio
        self.subconjuntos = _subconjuntos(dominio)
        self.relacoes = [
            (nome, aridade) for nome, aridade in s.signature.relations
            if vocabulario is None or (nome, aridade) in vocabulario
        ]
        self.base = [(c, s.constant_values[c]) for c in sorted(s.signature.constants)]

    def atomos(self, escolhidos: Tuple[int, ...], conjuntos: Tuple[FrozenSet[int], ...]) -> FrozenSet:
        nomes = self.base + [(f"#{i}", e) for i, e in enumerate(escolhidos, start=1)]
        verdadeiros = set()
        for (a, va), (b, vb) in combinations(nomes, 2):
            if va == vb:
                verdadeiros.add(("=", (a, b)))
        for nome, aridade in self.relacoes:
            tuplas = self.s.tuples[nome]
            for args in product(nomes, repeat=aridade):
                if tuple(v for _, v in args) in tuplas:
                    verdadeiros.add((nome, tuple(n for n, _ in args)))
        for k, conjunto in enumerate(conjuntos, start=1):
            for nome, v in nomes:
                if v in conjunto:
                    verdadeiros.add((f"${k}", (nome,)))
        return frozenset(verdadeiros)

    def tipo(self, rank: int, escolhidos: Tuple[int, ...] = (), conjuntos: Tuple[FrozenSet[int], ...] = ()):
        if rank == 0:
            return self.atomos(escolhidos, conjuntos)
        elementos = frozenset(self.tipo(rank - 1, escolhidos + (e,), conjuntos) for e in self.dominio)
        colecoes = frozenset(self.tipo(rank - 1, escolhidos, conjuntos + (c,)) for c in self.subconjuntos)
        return elementos, colecoes


class RegistroTipos:
    """
    Registro de representantes: tipo → estruturas preenchidas que o
    realizam. Acesso exclusivo por trava; o primeiro representante
    registrado é o usado pelas operações abstratas.
    """

    def __init__(self):
        self._trava = threading.Lock()
        self._representantes: Dict[MsoType, List[PaddedStructure]] = {}

    def registrar(self, tipo: MsoType, representante: PaddedStructure) -> None:
        with self._trava:
            lista = self._representantes.setdefault(tipo, [])
            if representante not in lista:
                lista.append(representante)

    def representante(self, tipo: MsoType, indice: int = 0) -> PaddedStructure:
        with self._trava:
            lista = self._representantes.get(tipo)
            if not lista:
                raise UnregisteredTypeError(f"Tipo de rank {tipo.rank} sem representante registrado")
            return lista[min(indice, len(lista) - 1)]

    def representantes(self, tipo: MsoType) -> List[PaddedStructure]:
        with self._trava:
            return list(self._representantes.get(tipo, ()))

    def contem(self, tipo: MsoType) -> bool:
        with self._trava:
            return tipo in self._representantes

    def limpar(self) -> None:
        with self._trava:
            self._representantes.clear()

    def __len__(self) -> int:
        with self._trava:
            return len(self._representantes)


registro_tipos = RegistroTipos()


def mso_type(s: Structure, dominio: Dominio, rank: int, vocabulario: Vocabulario = None,
             registro: RegistroTipos = None) -> MsoType:
    """
    Tipo de rank r de s com os quantificadores sobre `dominio`.

    Args:
        s: Estrutura
        dominio: Domínio de avaliação (⊇ Dom(s))
        rank: Rank r
        vocabulario: Relações consideradas (None = toda a assinatura)
        registro: Registro onde o par (tipo, representante) é guardado

    Raises:
        RankTooLargeError: r acima de MSO_TYPE_RANK_CAP
        TooLargeError: Custo do jogo acima do custo de referência
    """
    if rank > MSO_TYPE_RANK_CAP:
        raise RankTooLargeError(rank, MSO_TYPE_RANK_CAP)
    vocabulario = frozenset(vocabulario) if vocabulario is not None else None
    elementos = evaluation_domain(s, dominio)
    custo = type_cost(len(elementos), rank)
    if custo > _custo_maximo():
        raise TooLargeError(custo, _custo_maximo(), f"tipo MSO de rank {rank} sobre {len(elementos)} elementos")
    valor = _Calculadora(s, elementos, vocabulario).tipo(rank)
    tipo = MsoType(rank, _assinatura_canonica(s.signature, vocabulario), valor, vocabulario)
    logger.debug(f"Tipo de rank {rank} calculado sobre {len(elementos)} elementos (custo {custo})")
    (registro if registro is not None else registro_tipos).registrar(tipo, PaddedStructure(s, frozenset(elementos)))
    return tipo


def structure_type(s: Structure, rank: int, vocabulario: Vocabulario = None,
                   registro: RegistroTipos = None) -> MsoType:
    """Tipo de s no universo infinito: avaliação sobre Dom(s) mais 2^r elementos frescos."""
    return mso_type(s, pad(s, 2 ** rank), rank, vocabulario, registro)


def abstract_glue(t1: MsoType, t2: MsoType, registro: RegistroTipos = None) -> MsoType:
    """
    glue♯: tipo de glue(rep(t1), rep(t2)) no mesmo rank e vocabulário.

    Raises:
        RankMismatchError: Tipos de ranks diferentes
        UnregisteredTypeError: Algum tipo sem representante
    """
    registro = registro if registro is not None else registro_tipos
    if t1.rank != t2.rank:
        raise RankMismatchError(t1.rank, t2.rank)
    a = registro.representante(t1).structure
    b = registro.representante(t2).structure
    return structure_type(glue(a, b), t1.rank, _unir_vocabularios(t1.vocabulary, t2.vocabulary), registro)


def abstract_forget(tipo: MsoType, constante: str, registro: RegistroTipos = None) -> MsoType:
    """
    fgcst♯: tipo de forget_constant(rep(t), constante).

    Raises:
        UnregisteredTypeError: Tipo sem representante
        UnknownConstantError: A constante não está na assinatura do tipo
    """
    registro = registro if registro is not None else registro_tipos
    if constante not in tipo.signature.constants:
        raise UnknownConstantError(constante)
    representante = registro.representante(tipo).structure
    return structure_type(forget_constant(representante, constante), tipo.rank, tipo.vocabulary, registro)


def rho(constante: str, rank: int, relacoes: Iterable[Tuple[str, int]] = (),
        vocabulario: Vocabulario = None, registro: RegistroTipos = None,
        apelidos: Iterable[str] = ()) -> MsoType:
    """
    ρ: tipo da estrutura de um só elemento, sem tuplas, nomeado pela
    constante. As constantes em `apelidos` nomeiam o mesmo elemento.
    """
    nomes = (constante,) + tuple(apelidos)
    unitaria = Structure(Signature(tuple(relacoes), nomes), {}, {c: 0 for c in nomes})
    return structure_type(unitaria, rank, vocabulario, registro)


def _unir_vocabularios(a: Vocabulario, b: Vocabulario) -> Vocabulario:
    if a is None or b is None:
        return None
    return a | b


def format_type(tipo: MsoType) -> str:
    """Impressão canônica em chaves aninhadas, estável entre execuções."""
    def imprimir(valor) -> str:
        if isinstance(valor, tuple) and len(valor) == 2 and all(isinstance(v, frozenset) for v in valor):
            return f"<{imprimir(valor[0])};{imprimir(valor[1])}>"
        if isinstance(valor, frozenset):
            return "{" + ",".join(sorted(imprimir(v) for v in valor)) + "}"
        nome, args = valor
        return f"{nome}({' '.join(args)})"
    return f"r{tipo.rank}:{imprimir(tipo.value)}"


def _assinatura_canonica(assinatura: Signature, vocabulario: Vocabulario) -> Signature:
    relacoes = [r for r in assinatura.relations if vocabulario is None or r in vocabulario]
    return Signature(tuple(sorted(relacoes)), tuple(sorted(assinatura.constants)))
