"""
Backend z3 para quantificadores de segunda ordem grandes demais para a
enumeração.

A fórmula é instanciada sobre o domínio finito: quantificadores de
primeira ordem viram disjunções, átomos sobre relações fixas viram
constantes booleanas e cada variável de segunda ordem vira uma família
de variáveis booleanas, uma por tupla do domínio. Existenciais em
posição positiva ficam livres; em posição negativa são expandidos em
disjunção quando pequenos e viram quantificadores z3 quando grandes.
"""
from itertools import combinations, count, product
from typing import Dict, FrozenSet, Mapping, Tuple, Union

import z3

from model.estrutura_model import Structure, Tupla
from model.so_model import And, ExistsFO, ExistsSO, Not, SoEq, SoFormula, SoRel, SoVarAtom
from model.termo_model import Const, Term
from util.config import SO_BRUTE_FORCE_LIMIT, SO_SOLVER_TIMEOUT_MS
from util.exceptions import (
    ArityMismatchError, SolverInconclusiveError, UnboundVariableError, UnknownConstantError,
    UnknownRelationError,
)
from util.logger_config import logger

Interpretacao = Union[FrozenSet[Tupla], Dict[Tupla, z3.BoolRef]]


class _Instanciador:
    def __init__(self, s: Structure, dominio: Tuple[int, ...]):
        self.s = s
        self.dominio = dominio
        self.contador = count()
        self.variaveis = 0

    def termo(self, t: Term, fo: Mapping[str, int]) -> int:
        if isinstance(t, Const):
            if t.name not in self.s.constant_values:
                raise UnknownConstantError(t.name)
            return self.s.constant_values[t.name]
        if t.name not in fo:
            raise UnboundVariableError(t.name)
        return fo[t.name]

    def booleanas(self, nome: str, aridade: int) -> Dict[Tupla, z3.BoolRef]:
        rotulo = next(self.contador)
        familia = {
            t: z3.Bool(f"{nome}#{rotulo}[{','.join(map(str, t))}]")
            for t in product(self.dominio, repeat=aridade)
        }
        self.variaveis += len(familia)
        return familia

    def instanciar(self, f: SoFormula, fo: Dict[str, int], so: Dict[str, Tuple[int, Interpretacao]],
                   positivo: bool) -> z3.BoolRef:
        if isinstance(f, SoEq):
            return z3.BoolVal(self.termo(f.left, fo) == self.termo(f.right, fo))
        if isinstance(f, SoRel):
            if not self.s.signature.has_relation(f.rel):
                raise UnknownRelationError(f.rel)
            return z3.BoolVal(tuple(self.termo(t, fo) for t in f.args) in self.s.tuples[f.rel])
        if isinstance(f, SoVarAtom):
            if f.var not in so:
                raise UnboundVariableError(f.var)
            aridade, interpretacao = so[f.var]
            if aridade != len(f.args):
                raise ArityMismatchError(f.var, aridade, len(f.args))
            t = tuple(self.termo(a, fo) for a in f.args)
            if isinstance(interpretacao, dict):
                return interpretacao[t]
            return z3.BoolVal(t in interpretacao)
        if isinstance(f, Not):
            return z3.Not(self.instanciar(f.body, fo, so, not positivo))
        if isinstance(f, And):
            partes = [self.instanciar(p, fo, so, positivo) for p in f.parts]
            return z3.And(*partes) if partes else z3.BoolVal(True)
        if isinstance(f, ExistsFO):
            casos = [self.instanciar(f.body, {**fo, f.var: e}, so, positivo) for e in self.dominio]
            return z3.Or(*casos) if casos else z3.BoolVal(False)
        if isinstance(f, ExistsSO):
            if not positivo and 2 ** (len(self.dominio) ** f.arity) <= SO_BRUTE_FORCE_LIMIT:
                return self.expandir(f, fo, so, positivo)
            familia = self.booleanas(f.var, f.arity)
            corpo = self.instanciar(f.body, fo, {**so, f.var: (f.arity, familia)}, positivo)
            if positivo or not familia:
                return corpo
            return z3.Exists(list(familia.values()), corpo)
        raise TypeError(f"Nó de fórmula desconhecido: {type(f).__name__}")

    def expandir(self, f: ExistsSO, fo: Dict[str, int], so: Dict[str, Tuple[int, Interpretacao]],
                 positivo: bool) -> z3.BoolRef:
        """Existencial pequeno em posição negativa: disjunção sobre todas as relações candidatas."""
        tuplas = list(product(self.dominio, repeat=f.arity))
        casos = [
            self.instanciar(f.body, fo, {**so, f.var: (f.arity, frozenset(escolha))}, positivo)
            for tamanho in range(len(tuplas) + 1)
            for escolha in combinations(tuplas, tamanho)
        ]
        return z3.Or(*casos)


def decide_with_solver(s: Structure, dominio: Tuple[int, ...], fo: Dict[str, int],
                       so: Dict[str, Tuple[int, FrozenSet[Tupla]]], formula: SoFormula) -> bool:
    """
    Decide a fórmula com z3 sob as ligações dadas.

    Raises:
        SolverInconclusiveError: O solver respondeu 'unknown'
    """
    instanciador = _Instanciador(s, dominio)
    ligacoes: Dict[str, Tuple[int, Interpretacao]] = dict(so)
    restricao = instanciador.instanciar(formula, dict(fo), ligacoes, True)
    solver = z3.Solver()
    solver.set("timeout", SO_SOLVER_TIMEOUT_MS)
    solver.add(restricao)
    resultado = solver.check()
    logger.debug(
        f"Solver: {instanciador.variaveis} variáveis booleanas sobre {len(dominio)} elementos: {resultado}"
    )
    if resultado == z3.sat:
        return True
    if resultado == z3.unsat:
        return False
    raise SolverInconclusiveError(f"Solver inconclusivo: {solver.reason_unknown()}")
