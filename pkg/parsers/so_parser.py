"""
Parser e impressora de fórmulas de segunda ordem.

    forall x. exists y. E(x,y)
    exists2 X/1. forall x. X(x) -> V(x)
    !(x = y) | c != d

Precedência, da mais forte para a mais fraca: `!`, `&`, `|`, `->`
(associativa à direita); quantificadores se estendem o máximo possível
para a direita. Um nome aplicado é variável de segunda ordem quando está
ligado por `exists2`/`forall2` (ou foi informado como livre); caso
contrário é relação.
"""
from typing import FrozenSet, Iterable, Set, Tuple

import pyparsing as pp

from model.so_model import (
    FALSE, TRUE, And, ExistsFO, ExistsSO, ForallFO, ForallSO, Implies, Not, SoEq, SoFormula,
    SoRel, SoVarAtom, disj,
)
from model.termo_model import Const, Term, Var
from parsers.comum import COMENTARIO, IDENT, INTEIRO, executar

_PALAVRAS = (
    pp.Keyword("forall") | pp.Keyword("exists") | pp.Keyword("exists2") | pp.Keyword("forall2")
    | pp.Keyword("true") | pp.Keyword("false")
)
_NOME = ~_PALAVRAS + IDENT
_LP, _RP = pp.Suppress("("), pp.Suppress(")")

_formula = pp.Forward()

_ARGS = pp.Group(pp.Optional(pp.delimited_list(_NOME, delim=",")))
_APLICACAO = (_NOME + _LP + _ARGS + _RP).set_parse_action(lambda t: ("app", t[0], tuple(t[1])))
_NEQ = (_NOME + pp.Suppress("!=") + _NOME).set_parse_action(lambda t: ("neq", t[0], t[1]))
_EQ = (_NOME + pp.Suppress("=") + _NOME).set_parse_action(lambda t: ("eq", t[0], t[1]))
_CONST_VERDADE = (
    pp.Keyword("true").set_parse_action(lambda t: ("true",))
    | pp.Keyword("false").set_parse_action(lambda t: ("false",))
)

_Q_FO = (pp.Keyword("forall") | pp.Keyword("exists")) + pp.Group(pp.OneOrMore(_NOME)) + pp.Suppress(".")
_Q_SO = (pp.Keyword("exists2") | pp.Keyword("forall2")) + pp.Group(_NOME + pp.Suppress("/") + INTEIRO) + pp.Suppress(".")
_QUANTIFICADA = ((_Q_SO | _Q_FO) + _formula).set_parse_action(lambda t: ("q", t[0], tuple(t[1]), t[2]))

_unario = pp.Forward()
_unario <<= (
    (pp.Suppress("!") + _unario).set_parse_action(lambda t: ("not", t[0]))
    | _QUANTIFICADA
    | (_LP + _formula + _RP)
    | _CONST_VERDADE
    | _APLICACAO
    | _NEQ
    | _EQ
)
_CONJUNCAO = (_unario + pp.ZeroOrMore(pp.Suppress("&") + _unario)).set_parse_action(
    lambda t: t[0] if len(t) == 1 else ("and", tuple(t))
)
_DISJUNCAO = (_CONJUNCAO + pp.ZeroOrMore(pp.Suppress("|") + _CONJUNCAO)).set_parse_action(
    lambda t: t[0] if len(t) == 1 else ("or", tuple(t))
)
_IMPLICACAO = (_DISJUNCAO + pp.Optional(pp.Suppress("->") + _formula)).set_parse_action(
    lambda t: t[0] if len(t) == 1 else ("imp", t[0], t[1])
)
_formula <<= _QUANTIFICADA | _IMPLICACAO

_ENTRADA = _formula + pp.StringEnd()
_ENTRADA.ignore(COMENTARIO)


class _Escopo:
    def __init__(self, constantes: Iterable[str], variaveis_so: Iterable[str]):
        self.constantes = set(constantes)
        self.so_livres = set(variaveis_so)

    def termo(self, nome: str, fo: FrozenSet[str]) -> Term:
        if nome in self.constantes and nome not in fo:
            return Const(nome)
        return Var(nome)

    def resolver(self, bruta, fo: FrozenSet[str], so: FrozenSet[str]) -> SoFormula:
        tipo = bruta[0]
        if tipo == "app":
            args = tuple(self.termo(a, fo) for a in bruta[2])
            if bruta[1] in so or bruta[1] in self.so_livres:
                return SoVarAtom(bruta[1], args)
            return SoRel(bruta[1], args)
        if tipo == "eq":
            return SoEq(self.termo(bruta[1], fo), self.termo(bruta[2], fo))
        if tipo == "neq":
            return Not(SoEq(self.termo(bruta[1], fo), self.termo(bruta[2], fo)))
        if tipo == "true":
            return TRUE
        if tipo == "false":
            return FALSE
        if tipo == "not":
            return Not(self.resolver(bruta[1], fo, so))
        if tipo == "and":
            return And(tuple(self.resolver(p, fo, so) for p in bruta[1]))
        if tipo == "or":
            return disj(self.resolver(p, fo, so) for p in bruta[1])
        if tipo == "imp":
            return Implies(self.resolver(bruta[1], fo, so), self.resolver(bruta[2], fo, so))
        quantificador, ligados, corpo = bruta[1], bruta[2], bruta[3]
        if quantificador in ("exists2", "forall2"):
            nome, aridade = ligados
            interno = self.resolver(corpo, fo, so | {nome})
            if quantificador == "exists2":
                return ExistsSO(nome, aridade, interno)
            return ForallSO(nome, aridade, interno)
        interno = self.resolver(corpo, fo | set(ligados), so)
        for v in reversed(ligados):
            interno = ExistsFO(v, interno) if quantificador == "exists" else ForallFO(v, interno)
        return interno


def parse_so(texto: str, constantes: Iterable[str] = (), variaveis_so: Iterable[str] = ()) -> SoFormula:
    """
    Lê uma fórmula SO.

    Args:
        texto: Fórmula
        constantes: Nomes lidos como constantes quando não ligados
        variaveis_so: Variáveis de segunda ordem livres (ligadas pelo store)

    Raises:
        ParseSyntaxError: Sintaxe inválida
    """
    escopo = _Escopo(constantes, variaveis_so)
    return executar(_ENTRADA, texto, lambda r: escopo.resolver(r[0], frozenset(), frozenset()))


# === Impressão ===

_QUANT, _IMP, _OU, _E, _UNARIO = range(5)


def format_so(formula: SoFormula) -> str:
    """Imprime a fórmula; parse_so da saída reconstrói a mesma árvore."""
    return _imprimir(formula, _QUANT)


def _imprimir(formula: SoFormula, minimo: int) -> str:
    texto, nivel = _imprimir_com_nivel(formula)
    if nivel < minimo:
        return f"({texto})"
    return texto


def _imprimir_com_nivel(f: SoFormula) -> Tuple[str, int]:
    if isinstance(f, SoRel):
        return f"{f.rel}({','.join(str(a) for a in f.args)})", _UNARIO
    if isinstance(f, SoVarAtom):
        return f"{f.var}({','.join(str(a) for a in f.args)})", _UNARIO
    if isinstance(f, SoEq):
        return f"{f.left} = {f.right}", _UNARIO
    if isinstance(f, ExistsFO):
        return f"exists {f.var}. {_imprimir(f.body, _QUANT)}", _QUANT
    if isinstance(f, ExistsSO):
        return f"exists2 {f.var}/{f.arity}. {_imprimir(f.body, _QUANT)}", _QUANT
    if isinstance(f, And):
        if not f.parts:
            return "true", _UNARIO
        return " & ".join(_imprimir(p, _UNARIO) for p in f.parts), _E
    corpo = f.body
    if isinstance(corpo, SoEq):
        return f"{corpo.left} != {corpo.right}", _UNARIO
    if isinstance(corpo, ExistsFO) and isinstance(corpo.body, Not):
        return f"forall {corpo.var}. {_imprimir(corpo.body.body, _QUANT)}", _QUANT
    if isinstance(corpo, ExistsSO) and isinstance(corpo.body, Not):
        return f"forall2 {corpo.var}/{corpo.arity}. {_imprimir(corpo.body.body, _QUANT)}", _QUANT
    if isinstance(corpo, And):
        if not corpo.parts:
            return "false", _UNARIO
        if len(corpo.parts) >= 2 and all(isinstance(p, Not) for p in corpo.parts):
            return " | ".join(_imprimir(p.body, _E) for p in corpo.parts), _OU
        if len(corpo.parts) == 2 and isinstance(corpo.parts[1], Not):
            esquerda = _imprimir(corpo.parts[0], _OU)
            direita = _imprimir(corpo.parts[1].body, _IMP)
            return f"{esquerda} -> {direita}", _IMP
    return f"!{_imprimir(corpo, _UNARIO)}", _UNARIO


def so_names(formula: SoFormula) -> Set[str]:
    """Nomes de relações mencionados (átomos SoRel)."""
    if isinstance(formula, SoRel):
        return {formula.rel}
    if isinstance(formula, (SoEq, SoVarAtom)):
        return set()
    if isinstance(formula, And):
        return set().union(*(so_names(p) for p in formula.parts)) if formula.parts else set()
    return so_names(formula.body)
