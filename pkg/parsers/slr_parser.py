"""
Parser e impressora de fórmulas SLR e de SIDs.

Gramática (uma regra por `;`):

    const b e ;                     # opcional: nomes de constantes
    pred B/2 ;                      # opcional: predicado sem regras
    Chain(x,y) <- exists z . C(x) * I(x,z) * Chain(z,y) ;
    Chain(x,y) <- emp * x = y ;

Um nome aplicado é predicado quando é cabeça de alguma regra ou foi
declarado com `pred`; caso contrário é relação.
"""
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple

import pyparsing as pp

from model.slr_model import Emp, Eq, Exists, Neq, PredAtom, RelAtom, Rule, Sid, SlrFormula, Star
from model.termo_model import Const, Term, Var
from parsers.comum import COMENTARIO, IDENT, INTEIRO, com_posicao, executar
from util.exceptions import ArityError, ParseSyntaxError, UnknownPredicateError

_PALAVRAS = pp.Keyword("exists") | pp.Keyword("emp") | pp.Keyword("const") | pp.Keyword("pred")
_NOME = ~_PALAVRAS + IDENT

_LP, _RP = pp.Suppress("("), pp.Suppress(")")
_ARGS = pp.Group(pp.Optional(pp.delimited_list(_NOME, delim=",")))

_formula = pp.Forward()
_APLICACAO = (_NOME + _LP + _ARGS + _RP).set_parse_action(lambda t: ("app", t[0], tuple(t[1])))
_NEQ = (_NOME + pp.Suppress("!=") + _NOME).set_parse_action(lambda t: ("neq", t[0], t[1]))
_EQ = (_NOME + pp.Suppress("=") + _NOME).set_parse_action(lambda t: ("eq", t[0], t[1]))
_EMP = pp.Keyword("emp").set_parse_action(lambda t: ("emp",))
_ATOMO = _EMP | _APLICACAO | _NEQ | _EQ | (_LP + _formula + _RP)
_ESTRELA = (_ATOMO + pp.ZeroOrMore(pp.Suppress("*") + _ATOMO)).set_parse_action(lambda t: ("star", tuple(t)))
_QUANTIFICADOR = pp.Suppress(pp.Keyword("exists")) + pp.Group(pp.OneOrMore(_NOME)) + pp.Suppress(".")
_formula <<= (pp.Optional(_QUANTIFICADOR) + _ESTRELA).set_parse_action(
    lambda t: ("exists", tuple(t[0]), t[1]) if len(t) == 2 else t[0]
)

_REGRA = _NOME + _LP + _ARGS + _RP + pp.Suppress("<-") + _formula + pp.Suppress(";")
_DECL_CONST = pp.Keyword("const") + pp.Group(pp.OneOrMore(_NOME)) + pp.Suppress(";")
_DECL_PRED = pp.Keyword("pred") + _NOME + pp.Suppress("/") + INTEIRO + pp.Suppress(";")
_SID = pp.ZeroOrMore(com_posicao(_DECL_CONST | _DECL_PRED | _REGRA)) + pp.StringEnd()
_SID.ignore(COMENTARIO)

_FORMULA_ISOLADA = _formula + pp.StringEnd()
_FORMULA_ISOLADA.ignore(COMENTARIO)


class _Resolvedor:
    """Converte a árvore bruta em AST, decidindo termos e átomos pelo contexto."""

    def __init__(self, predicados: Mapping[str, int], constantes: Iterable[str],
                 relacoes: Optional[Mapping[str, int]] = None):
        self.predicados = dict(predicados)
        self.constantes = set(constantes)
        self.relacoes_conhecidas = relacoes
        self.aridades_relacoes: Dict[str, int] = dict(relacoes or {})

    def termo(self, nome: str, ligadas: Set[str]) -> Term:
        if nome in self.constantes and nome not in ligadas:
            return Const(nome)
        return Var(nome)

    def formula(self, bruta, ligadas: Set[str]) -> SlrFormula:
        tipo = bruta[0]
        if tipo == "emp":
            return Emp()
        if tipo == "eq":
            return Eq(self.termo(bruta[1], ligadas), self.termo(bruta[2], ligadas))
        if tipo == "neq":
            return Neq(self.termo(bruta[1], ligadas), self.termo(bruta[2], ligadas))
        if tipo == "app":
            return self.aplicacao(bruta[1], bruta[2], ligadas)
        if tipo == "star":
            partes = [self.formula(p, ligadas) for p in bruta[1]]
            resultado = partes[0]
            for parte in partes[1:]:
                resultado = Star(resultado, parte)
            return resultado
        variaveis, corpo = bruta[1], bruta[2]
        interno = self.formula(corpo, ligadas | set(variaveis))
        for v in reversed(variaveis):
            interno = Exists(v, interno)
        return interno

    def aplicacao(self, nome: str, args: Tuple[str, ...], ligadas: Set[str]) -> SlrFormula:
        termos = tuple(self.termo(a, ligadas) for a in args)
        if nome in self.predicados:
            if len(termos) != self.predicados[nome]:
                raise ArityError(nome, self.predicados[nome], len(termos))
            return PredAtom(nome, termos)
        if self.relacoes_conhecidas is not None and nome not in self.relacoes_conhecidas:
            raise UnknownPredicateError(nome)
        anterior = self.aridades_relacoes.setdefault(nome, len(termos))
        if anterior != len(termos):
            raise ArityError(nome, anterior, len(termos))
        return RelAtom(nome, termos)


def parse_sid(texto: str, constantes: Iterable[str] = ()) -> Sid:
    """
    Lê um SID.

    Parâmetros repetidos na cabeça são renomeados e a igualdade é
    inserida no corpo: `A(x,x) <- φ` vira `A(x,x_2) <- x = x_2 * φ`.

    Args:
        texto: Conteúdo do arquivo de regras
        constantes: Nomes de constantes além dos declarados com `const`

    Returns:
        Sid com as regras na ordem do arquivo

    Raises:
        ParseSyntaxError: Sintaxe inválida ou variável livre fora dos parâmetros
        ArityError: Predicado ou relação usado com aridades diferentes
    """
    return executar(_SID, texto, lambda r: _construir_sid(r, tuple(constantes)))


def _construir_sid(resultado: pp.ParseResults, constantes_extra: Tuple[str, ...]) -> Sid:
    constantes: List[str] = list(constantes_extra)
    declarados: List[Tuple[str, int]] = []
    brutas = []
    for linha, coluna, decl in resultado:
        if decl[0] == "const":
            constantes += [c for c in decl[1] if c not in constantes]
        elif decl[0] == "pred":
            declarados.append((decl[1], decl[2]))
        else:
            brutas.append((linha, coluna, decl[0], tuple(decl[1]), decl[2]))
    aridades: Dict[str, int] = {}
    for nome, aridade in declarados:
        aridades.setdefault(nome, aridade)
    for linha, _, cabeca, params, _ in brutas:
        anterior = aridades.setdefault(cabeca, len(params))
        if anterior != len(params):
            raise ArityError(cabeca, anterior, len(params))
    resolvedor = _Resolvedor(aridades, constantes)
    regras = []
    for linha, coluna, cabeca, params, bruta in brutas:
        for p in params:
            if p in constantes:
                raise ParseSyntaxError(linha, coluna, "parâmetro variável", f"'{p}' é constante")
        corpo = resolvedor.formula(bruta, set())
        params_distintos, igualdades = _distinguir_parametros(params)
        for igualdade in igualdades:
            corpo = Star(igualdade, corpo)
        livres = free_variables(corpo) - set(params_distintos)
        if livres:
            raise ParseSyntaxError(
                linha, coluna, "parâmetro declarado", f"variável livre {sorted(livres)[0]} não é parâmetro"
            )
        regras.append(Rule(cabeca, params_distintos, corpo, linha))
    return Sid(tuple(regras), tuple(constantes), tuple(declarados))


def _distinguir_parametros(params: Tuple[str, ...]) -> Tuple[Tuple[str, ...], List[Eq]]:
    vistos: Set[str] = set()
    novos: List[str] = []
    igualdades: List[Eq] = []
    for posicao, p in enumerate(params, start=1):
        if p in vistos:
            novo = f"{p}_{posicao}"
            while novo in params or novo in novos:
                novo += "_"
            novos.append(novo)
            igualdades.append(Eq(Var(p), Var(novo)))
        else:
            vistos.add(p)
            novos.append(p)
    return tuple(novos), igualdades


def parse_slr(texto: str, predicados: Mapping[str, int] = None, constantes: Iterable[str] = (),
              relacoes: Optional[Mapping[str, int]] = None) -> SlrFormula:
    """
    Lê uma fórmula SLR isolada (ex.: o átomo objetivo `Chain(b,e)`).

    Args:
        texto: Fórmula
        predicados: Predicados conhecidos e aridades (tipicamente sid.predicates())
        constantes: Nomes a ler como constantes
        relacoes: Se informado, nomes aplicados fora de `predicados` e de
            `relacoes` são rejeitados com UnknownPredicateError
    """
    resolvedor = _Resolvedor(predicados or {}, constantes, relacoes)
    return executar(_FORMULA_ISOLADA, texto, lambda r: resolvedor.formula(r[0], set()))


def free_variables(formula: SlrFormula) -> Set[str]:
    """fv(φ): variáveis de primeira ordem livres."""
    if isinstance(formula, Emp):
        return set()
    if isinstance(formula, (Eq, Neq)):
        return {t.name for t in (formula.left, formula.right) if isinstance(t, Var)}
    if isinstance(formula, (RelAtom, PredAtom)):
        return {t.name for t in formula.args if isinstance(t, Var)}
    if isinstance(formula, Star):
        return free_variables(formula.left) | free_variables(formula.right)
    return free_variables(formula.body) - {formula.var}


# === Impressão ===

def format_slr(formula: SlrFormula) -> str:
    """Imprime uma fórmula SLR na gramática de entrada."""
    if isinstance(formula, Exists):
        variaveis = []
        corpo: SlrFormula = formula
        while isinstance(corpo, Exists):
            variaveis.append(corpo.var)
            corpo = corpo.body
        return f"exists {' '.join(variaveis)} . {format_slr(corpo)}"
    if isinstance(formula, Star):
        esquerda = format_slr(formula.left)
        if isinstance(formula.left, Exists):
            esquerda = f"({esquerda})"
        direita = format_slr(formula.right)
        if isinstance(formula.right, (Star, Exists)):
            direita = f"({direita})"
        return f"{esquerda} * {direita}"
    if isinstance(formula, Emp):
        return "emp"
    if isinstance(formula, Eq):
        return f"{formula.left} = {formula.right}"
    if isinstance(formula, Neq):
        return f"{formula.left} != {formula.right}"
    nome = formula.rel if isinstance(formula, RelAtom) else formula.pred
    return f"{nome}({','.join(str(a) for a in formula.args)})"


def format_rule(regra: Rule) -> str:
    return f"{regra.head}({','.join(regra.params)}) <- {format_slr(regra.body)} ;"


def format_sid(sid: Sid) -> str:
    """Imprime o SID; a saída é aceita por parse_sid e produz o mesmo SID."""
    linhas = []
    if sid.constants:
        linhas.append(f"const {' '.join(sid.constants)} ;")
    com_regras = {r.head for r in sid.rules}
    for nome, aridade in sid.declared:
        if nome not in com_regras:
            linhas.append(f"pred {nome}/{aridade} ;")
    linhas += [format_rule(r) for r in sid.rules]
    return "\n".join(linhas) + "\n"
