"""
Tradução de átomos SLR para fórmulas de segunda ordem.

A fórmula traduzida afirma a existência de uma árvore de desdobramento
cujos vértices são elementos do domínio:

    ∃X_1..X_R ∃Y_1..Y_P ∃Z_{R,ℓ}.. ∃x. 𝔗 ∧ 𝔉

X_i marca os vértices rotulados pela regra i, Y_j liga cada vértice ao
seu j-ésimo filho e Z_{R,ℓ} associa ao vértice que introduz uma tupla
de R a sua ℓ-ésima coordenada. 𝔗 descreve a forma da árvore e 𝔉 liga a
árvore à estrutura: tuplas consumidas uma única vez e igualdades e
desigualdades propagadas pela passagem de parâmetros.

A propagação (isEq/varEq) usa uma família de conjuntos S_<posição>,
um por posição de variável: um par (vértice, posição) está ligado a
outro quando pertence a todo conjunto fechado pelas igualdades das
regras e pela passagem de parâmetros ao longo das arestas.
"""
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple, Union

from core.sid_transform import split_relation_atoms
from core.slr import check_predicates, find_derivation, flatten_rule, with_goal_rule
from core.so import eval_so
from core.structures import fresh_ids
from core.unfolding import derivation_size_bound
from model.estrutura_model import PaddedStructure, Signature, Store, Structure
from model.slr_model import Derivation, Eq, Neq, PredAtom, Sid, SlrFormula
from model.so_model import (
    And, BackendSO, ExistsFO, ExistsSO, ForallSO, Iff, Implies, Not, SoEq, SoFormula, SoRel, SoVarAtom,
    conj, disj, exists_fo, forall_fo,
)
from model.termo_model import Const, Term, Var
from model.traducao_model import TipoRastreamento, TranslationContext
from util.exceptions import ArityError, InvalidInputError, TooLargeError, UnknownIndexError
from util.logger_config import logger

# valor(vértice, u): a âncora do vértice tem valor u
_Valor = Callable[[Term, Term], SoFormula]


# === Contexto ===

def build_context(atomo: PredAtom, sid: Sid, assinatura: Optional[Signature] = None) -> TranslationContext:
    """
    Separa os átomos relacionais repetidos e monta o inventário de
    regras, relações e posições. Relações da assinatura que nenhuma regra
    usa entram no inventário (e são forçadas vazias pela tradução).

    Raises:
        UnknownPredicateError: Predicado sem regras nem declaração
        ArityError: Átomo com número errado de argumentos
    """
    check_predicates(sid, atomo)
    if len(atomo.args) != sid.arity(atomo.pred):
        raise ArityError(atomo.pred, sid.arity(atomo.pred), len(atomo.args))
    separado = split_relation_atoms(sid)
    planas = tuple(flatten_rule(r) for r in separado.rules)
    mapas = []
    posicoes: Set[str] = set()
    for regra, plana in zip(separado.rules, planas):
        mapa = {p: f"p{i}" for i, p in enumerate(regra.params, start=1)}
        mapa.update({y: f"e{i}" for i, y in enumerate(plana.existentials, start=1)})
        mapas.append(mapa)
        posicoes.update(mapa.values())
        posicoes.update(f"k_{t.name}" for t in _termos(plana) if isinstance(t, Const))
    for aridade in separado.predicates().values():
        posicoes.update(f"p{i}" for i in range(1, aridade + 1))

    relacoes: Dict[str, int] = dict(assinatura.relations) if assinatura is not None else {}
    for plana in planas:
        for a in plana.relations:
            anterior = relacoes.setdefault(a.rel, len(a.args))
            if anterior != len(a.args):
                raise ArityError(a.rel, anterior, len(a.args))

    contexto = TranslationContext(
        sid=separado,
        goal=atomo,
        flat_rules=planas,
        slot_maps=tuple(mapas),
        relations=tuple(relacoes.items()),
        slots=tuple(sorted(posicoes)),
        max_children=max((len(p.predicates) for p in planas), default=0),
        reserved=frozenset(t.name for t in atomo.args if isinstance(t, Var)),
    )
    logger.debug(
        f"Contexto de tradução de {atomo.pred}: R={contexto.rule_count}, P={contexto.max_children}, "
        f"{len(contexto.slots)} posições, {len(contexto.relations)} relações"
    )
    return contexto


def _termos(plana) -> List[Term]:
    termos: List[Term] = []
    for a in plana.pure:
        termos += [a.left, a.right]
    for a in plana.relations + plana.predicates:
        termos += list(a.args)
    return termos


# === Átomos auxiliares ===

def _x(ctx: TranslationContext, i: int, t: Term) -> SoFormula:
    return SoVarAtom(ctx.label_var(i), (t,))


def _rotulado(ctx: TranslationContext, t: Term) -> SoFormula:
    return disj(_x(ctx, i, t) for i in range(ctx.rule_count))


def _define(ctx: TranslationContext, predicado: str, t: Term) -> SoFormula:
    return disj(_x(ctx, i, t) for i, r in enumerate(ctx.sid.rules) if r.head == predicado)


def _y(ctx: TranslationContext, j: int, a: Term, b: Term) -> SoFormula:
    return SoVarAtom(ctx.edge_var(j), (a, b))


def _aresta(ctx: TranslationContext, a: Term, b: Term) -> SoFormula:
    return disj(_y(ctx, j, a, b) for j in range(1, ctx.max_children + 1))


def _introduz(ctx: TranslationContext, relacao: str, t: Term) -> SoFormula:
    return disj(_x(ctx, i, t) for i in range(ctx.rule_count) if relacao in ctx.used_relations(i))


def _z(ctx: TranslationContext, relacao: str, l: int, n: Term, u: Term) -> SoFormula:
    return SoVarAtom(ctx.coord_var(relacao, l), (n, u))


def _s(ctx: TranslationContext, slot: str, t: Term) -> SoFormula:
    return SoVarAtom(ctx.slot_var(slot), (t,))


def _variaveis(ctx: TranslationContext, base: str, quantidade: int) -> List[Var]:
    return [Var(ctx.fo(f"{base}{i}")) for i in range(1, quantidade + 1)]


# === 𝔗: forma da árvore ===

def build_tree_formula(ctx: TranslationContext) -> SoFormula:
    """
    𝔗: (1) a raiz x é rotulada por uma regra do predicado objetivo;
    (2) os X_i são disjuntos; (3) todo vértice rotulado é alcançável de
    x (menor conjunto fechado pelas arestas); (4) a raiz não tem pai e
    os demais vértices rotulados têm exatamente uma aresta de entrada;
    (5) cada vértice tem exatamente um j-ésimo filho, rotulado por uma
    regra do j-ésimo átomo de predicado, para cada j da sua regra, e
    nenhum além disso.
    """
    x = Var(ctx.root)
    n, m, w, w2 = (Var(ctx.fo(b)) for b in ("n", "m", "w", "w2"))
    alcance = ctx.fo("T")
    r = ctx.rule_count

    raiz = _define(ctx, ctx.goal.pred, x)
    disjuntos = forall_fo([n], conj(
        [Not(And((_x(ctx, i, n), _x(ctx, l, n)))) for i in range(r) for l in range(i + 1, r)]
    ))
    fechado = And((
        SoVarAtom(alcance, (x,)),
        forall_fo([n, w], Implies(And((SoVarAtom(alcance, (n,)), _aresta(ctx, n, w))), SoVarAtom(alcance, (w,)))),
    ))
    alcancavel = ForallSO(alcance, 1, Implies(
        fechado, forall_fo([n], Implies(_rotulado(ctx, n), SoVarAtom(alcance, (n,))))
    ))

    pais: List[SoFormula] = [
        forall_fo([n], Not(_aresta(ctx, n, x))),
        forall_fo([w], Implies(And((_rotulado(ctx, w), Not(SoEq(w, x)))), exists_fo([n], _aresta(ctx, n, w)))),
    ]
    unicidade: List[SoFormula] = []
    for j in range(1, ctx.max_children + 1):
        unicidade.append(Implies(And((_y(ctx, j, n, w), _y(ctx, j, m, w))), SoEq(n, m)))
        for j2 in range(j + 1, ctx.max_children + 1):
            unicidade.append(Not(And((_y(ctx, j, n, w), _y(ctx, j2, m, w)))))
    if unicidade:
        pais.append(forall_fo([n, m, w], conj(unicidade)))

    perfis: List[SoFormula] = []
    for i, plana in enumerate(ctx.flat_rules):
        filhos: List[SoFormula] = []
        for j in range(1, ctx.max_children + 1):
            if j <= len(plana.predicates):
                filhos.append(exists_fo([w], And((_y(ctx, j, n, w), _define(ctx, plana.predicates[j - 1].pred, w)))))
                filhos.append(forall_fo([w, w2], Implies(And((_y(ctx, j, n, w), _y(ctx, j, n, w2))), SoEq(w, w2))))
            else:
                filhos.append(forall_fo([w], Not(_y(ctx, j, n, w))))
        if filhos:
            perfis.append(Implies(_x(ctx, i, n), conj(filhos)))
    if perfis:
        perfis = [forall_fo([n], conj(perfis))]
    if ctx.max_children:
        perfis.append(forall_fo([n, w], Implies(_aresta(ctx, n, w), _rotulado(ctx, n))))

    return conj([raiz, disjuntos, alcancavel] + pais + perfis)


# === Rastreamento de parâmetros ===

def _fechado(ctx: TranslationContext) -> SoFormula:
    """Os conjuntos S_<posição> são fechados pelas igualdades e pela passagem de parâmetros."""
    n, w = Var(ctx.fo("v1")), Var(ctx.fo("v2"))
    locais: List[SoFormula] = []
    passagem: List[SoFormula] = []
    for i, plana in enumerate(ctx.flat_rules):
        iguais = [
            Iff(_s(ctx, ctx.slot_of(i, a.left), n), _s(ctx, ctx.slot_of(i, a.right), n))
            for a in plana.pure if isinstance(a, Eq)
        ]
        if iguais:
            locais.append(Implies(_x(ctx, i, n), conj(iguais)))
        for j, atomo in enumerate(plana.predicates, start=1):
            ligacoes = [
                Iff(_s(ctx, ctx.slot_of(i, t), n), _s(ctx, f"p{p}", w))
                for p, t in enumerate(atomo.args, start=1)
            ]
            if ligacoes:
                passagem.append(Implies(And((_x(ctx, i, n), _y(ctx, j, n, w))), conj(ligacoes)))
    partes: List[SoFormula] = []
    if locais:
        partes.append(forall_fo([n], conj(locais)))
    if passagem:
        partes.append(forall_fo([n, w], conj(passagem)))
    return conj(partes)


def _ancoras(ctx: TranslationContext, i: int) -> List[Tuple[str, _Valor]]:
    """Posições da regra i com valor determinado: coordenadas de tuplas e constantes."""
    plana = ctx.flat_rules[i]
    ancoras: List[Tuple[str, _Valor]] = []
    for atomo in plana.relations:
        for l, t in enumerate(atomo.args, start=1):
            ancoras.append((ctx.slot_of(i, t), lambda n, u, rel=atomo.rel, l=l: _z(ctx, rel, l, n, u)))
    constantes = sorted({t.name for t in _termos(plana) if isinstance(t, Const)})
    for c in constantes:
        ancoras.append((f"k_{c}", lambda n, u, c=c: SoEq(u, Const(c))))
    return ancoras


def _ancoras_topo(ctx: TranslationContext) -> List[Tuple[str, Term]]:
    """(vii) os parâmetros da raiz valem os termos do objetivo."""
    return [(f"p{p}", t) for p, t in enumerate(ctx.goal.args, start=1)]


def _contem_ancoras(ctx: TranslationContext, u: Term) -> SoFormula:
    n, x = Var(ctx.fo("v1")), Var(ctx.root)
    por_regra = [
        Implies(_x(ctx, i, n), conj([Implies(valor(n, u), _s(ctx, slot, n)) for slot, valor in ancoras]))
        for i, ancoras in ((i, _ancoras(ctx, i)) for i in range(ctx.rule_count)) if ancoras
    ]
    topo = [Implies(SoEq(u, t), _s(ctx, slot, x)) for slot, t in _ancoras_topo(ctx)]
    return conj(([forall_fo([n], conj(por_regra))] if por_regra else []) + topo)


def _so_ancoras_de(ctx: TranslationContext, u: Term) -> SoFormula:
    n, x = Var(ctx.fo("v1")), Var(ctx.root)
    por_regra = [
        Implies(_x(ctx, i, n), conj([Implies(_s(ctx, slot, n), valor(n, u)) for slot, valor in ancoras]))
        for i, ancoras in ((i, _ancoras(ctx, i)) for i in range(ctx.rule_count)) if ancoras
    ]
    topo = [Implies(_s(ctx, slot, x), SoEq(u, t)) for slot, t in _ancoras_topo(ctx)]
    return conj(([forall_fo([n], conj(por_regra))] if por_regra else []) + topo)


def _para_todo_s(ctx: TranslationContext, corpo: SoFormula) -> SoFormula:
    for slot in reversed(ctx.slots):
        corpo = ForallSO(ctx.slot_var(slot), 1, corpo)
    return corpo


def _existe_s(ctx: TranslationContext, corpo: SoFormula) -> SoFormula:
    for slot in reversed(ctx.slots):
        corpo = ExistsSO(ctx.slot_var(slot), 1, corpo)
    return corpo


def emit_param_tracking(ctx: TranslationContext, tipo: Union[TipoRastreamento, str], indices: Sequence[str],
                        termos: Optional[Sequence[Term]] = None) -> SoFormula:
    """
    Fórmulas de rastreamento de parâmetros, na forma de menor conjunto.

    - isEq, índices (a,): com termos (n, u), a posição a do vértice n
      está ligada a alguma âncora de valor u (coordenada de tupla,
      constante ou termo do objetivo na raiz).
    - varEq, índices (a, b): com termos (n, m), a posição a de n e a
      posição b de m estão ligadas pela cadeia de igualdades e passagens
      de parâmetro.

    Os termos padrão são as variáveis `n`/`u` e `n`/`m`.

    Raises:
        UnknownIndexError: Posição inexistente ou número errado de índices
    """
    tipo = TipoRastreamento(tipo)
    for slot in indices:
        ctx.slot_var(slot)
    if tipo == TipoRastreamento.IS_EQ:
        if len(indices) != 1:
            raise UnknownIndexError(f"isEq espera uma posição, recebeu {len(indices)}")
        n, u = termos or (Var(ctx.fo("n")), Var(ctx.fo("u")))
        premissa = And((_fechado(ctx), _contem_ancoras(ctx, u)))
        return _para_todo_s(ctx, Implies(premissa, _s(ctx, indices[0], n)))
    if len(indices) != 2:
        raise UnknownIndexError(f"varEq espera duas posições, recebeu {len(indices)}")
    n, m = termos or (Var(ctx.fo("n")), Var(ctx.fo("m")))
    premissa = And((_fechado(ctx), _s(ctx, indices[0], n)))
    return _para_todo_s(ctx, Implies(premissa, _s(ctx, indices[1], m)))


# === 𝔉: ligação com a estrutura ===

def _clausulas_relacao(ctx: TranslationContext, relacao: str, aridade: int) -> List[SoFormula]:
    n, m = Var(ctx.fo("n")), Var(ctx.fo("m"))
    us = _variaveis(ctx, "u", aridade)
    tupla = SoRel(relacao, tuple(us))
    if not any(relacao in ctx.used_relations(i) for i in range(ctx.rule_count)):
        return [forall_fo(us, Not(tupla))]
    introduz = _introduz(ctx, relacao, n)
    coords_n = [_z(ctx, relacao, l, n, us[l - 1]) for l in range(1, aridade + 1)]
    coords_m = [_z(ctx, relacao, l, m, us[l - 1]) for l in range(1, aridade + 1)]
    clausulas: List[SoFormula] = []
    # (i) Z_{R,ℓ} é função parcial definida nos vértices que introduzem R
    u, u2 = Var(ctx.fo("a")), Var(ctx.fo("b"))
    for l in range(1, aridade + 1):
        funcional = And((
            exists_fo([u], _z(ctx, relacao, l, n, u)),
            forall_fo([u, u2], Implies(And((_z(ctx, relacao, l, n, u), _z(ctx, relacao, l, n, u2))), SoEq(u, u2))),
        ))
        clausulas.append(forall_fo([n], And((
            Implies(introduz, funcional),
            Implies(Not(introduz), forall_fo([u], Not(_z(ctx, relacao, l, n, u)))),
        ))))
    # (ii) a tupla introduzida pertence a R
    clausulas.append(forall_fo([n], Implies(introduz, exists_fo(us, conj(coords_n + [tupla])))))
    # (iii) vértices distintos introduzem tuplas distintas
    clausulas.append(forall_fo([n, m], Implies(
        conj([introduz, _introduz(ctx, relacao, m), Not(SoEq(n, m))]),
        Not(exists_fo(us, conj(coords_n + coords_m))),
    )))
    # (iv) toda tupla de R foi introduzida por algum vértice
    clausulas.append(forall_fo(us, Implies(tupla, exists_fo([n], conj([introduz] + coords_n)))))
    return clausulas


def _consistencia(ctx: TranslationContext) -> SoFormula:
    """
    (v)/(vii) para todo valor u, o menor conjunto fechado que contém as
    âncoras de valor u não contém âncora de outro valor. Equivale a
    ∀n. isEq(a)(n, u) → valor(n) = u para cada âncora, com um só
    conjunto por u em vez de um por vértice.
    """
    u = Var(ctx.fo("u"))
    return forall_fo([u], _existe_s(ctx, conj([_fechado(ctx), _contem_ancoras(ctx, u), _so_ancoras_de(ctx, u)])))


def _desigualdades(ctx: TranslationContext) -> List[SoFormula]:
    """(vi) os lados de cada desigualdade não estão ligados nem presos ao mesmo valor."""
    n, u = Var(ctx.fo("n")), Var(ctx.fo("u"))
    clausulas: List[SoFormula] = []
    for i, plana in enumerate(ctx.flat_rules):
        for atomo in plana.pure:
            if not isinstance(atomo, Neq):
                continue
            a, b = ctx.slot_of(i, atomo.left), ctx.slot_of(i, atomo.right)
            separados = Not(emit_param_tracking(ctx, TipoRastreamento.VAR_EQ, (a, b), (n, n)))
            valores = forall_fo([u], disj([
                Not(emit_param_tracking(ctx, TipoRastreamento.IS_EQ, (a,), (n, u))),
                Not(emit_param_tracking(ctx, TipoRastreamento.IS_EQ, (b,), (n, u))),
            ]))
            clausulas.append(forall_fo([n], Implies(_x(ctx, i, n), And((separados, valores)))))
    return clausulas


def build_link_formula(ctx: TranslationContext) -> SoFormula:
    """
    𝔉: (i) cada Z_{R,ℓ} é funcional nos vértices que introduzem R;
    (ii) a tupla introduzida está em R; (iii) vértices distintos
    introduzem tuplas distintas; (iv) toda tupla foi introduzida;
    (v) âncoras ligadas têm o mesmo valor; (vi) desigualdades valem;
    (vii) a raiz recebe os termos do objetivo. Relações sem regra que as
    introduza devem estar vazias.
    """
    clausulas: List[SoFormula] = []
    for nome, aridade in ctx.relations:
        clausulas.extend(_clausulas_relacao(ctx, nome, aridade))
    clausulas.append(_consistencia(ctx))
    clausulas.extend(_desigualdades(ctx))
    return conj(clausulas)


# === Montagem ===

def translation_matrix(ctx: TranslationContext) -> SoFormula:
    """𝔗 ∧ 𝔉, com x, X_i, Y_j e Z_{R,ℓ} livres."""
    return And((build_tree_formula(ctx), build_link_formula(ctx)))


def _fechar(ctx: TranslationContext, matriz: SoFormula) -> SoFormula:
    corpo = ExistsFO(ctx.root, matriz)
    for nome, aridade in reversed(ctx.so_variables()):
        corpo = ExistsSO(nome, aridade, corpo)
    return corpo


def translate(atomo: PredAtom, sid: Sid, assinatura: Optional[Signature] = None) -> SoFormula:
    """
    𝔄: fórmula SO com as variáveis livres do átomo, equivalente a
    (σ, ν) ⊨_Δ atomo quando avaliada num domínio com pelo menos
    N(σ) elementos que contenha Dom(σ) e os valores de ν.

    Raises:
        UnknownPredicateError: Predicado sem regras nem declaração
    """
    return translate_with_context(atomo, sid, assinatura)[1]


def translate_with_context(atomo: PredAtom, sid: Sid, assinatura: Optional[Signature] = None
                           ) -> Tuple[TranslationContext, SoFormula]:
    """Tradução acompanhada do contexto (inventário de posições e variáveis), usado pelas estatísticas."""
    ctx = build_context(atomo, sid, assinatura)
    return ctx, _fechar(ctx, translation_matrix(ctx))


def translate_formula(phi: SlrFormula, sid: Sid, assinatura: Optional[Signature] = None) -> SoFormula:
    """Tradução de uma fórmula qualquer através da regra `_objetivo(fv) <- φ`."""
    atomo, estendido = goal_for_formula(phi, sid)
    return translate(atomo, estendido, assinatura)


def goal_for_formula(phi: SlrFormula, sid: Sid) -> Tuple[PredAtom, Sid]:
    """Átomo objetivo e SID estendido usados por `translate_formula`."""
    estendido, regra = with_goal_rule(sid, phi)
    return PredAtom(regra.head, tuple(Var(p) for p in regra.params)), estendido


def translation_domain(s: Structure, sid: Sid, store: Store = Store()) -> PaddedStructure:
    """
    Domínio de avaliação das fórmulas traduzidas: Dom(σ), os valores do
    store e ids frescos até N(σ) elementos (os vértices da árvore podem
    reaproveitar elementos da estrutura).
    """
    base = s.dom() | store.values()
    alvo = max(derivation_size_bound(s, sid), len(base))
    extras = fresh_ids(base, alvo - len(base))
    return PaddedStructure(s, frozenset(base) | frozenset(extras))


def check_translated(s: Structure, store: Store, atomo: PredAtom, sid: Sid,
                     assinatura: Optional[Signature] = None) -> bool:
    """Decide a tradução de `atomo` sobre o domínio de `translation_domain`, pelo solver."""
    ctx = build_context(atomo, sid, assinatura or s.signature)
    formula = _fechar(ctx, translation_matrix(ctx))
    dominio = translation_domain(s, ctx.sid, store)
    veredito = eval_so(s, dominio, store, formula, BackendSO.SOLVER)
    logger.debug(f"Tradução de {atomo.pred} sobre {len(dominio.domain)} elementos: {veredito}")
    return veredito


def witness_store(ctx: TranslationContext, derivacao: Derivation, dominio: Union[PaddedStructure, Sequence[int]],
                  store: Store = Store()) -> Store:
    """
    Materializa a atribuição da direção de correção: os vértices da
    derivação recebem os menores elementos do domínio em pré-ordem,
    X_i = vértices rotulados pela regra i, Y_j = arestas para o j-ésimo
    filho e Z_{R,ℓ} = coordenadas das tuplas consumidas.

    A derivação deve ter sido obtida sobre `ctx.sid` para `ctx.goal`.

    Raises:
        TooLargeError: A derivação tem mais vértices que o domínio
        InvalidInputError: A derivação não corresponde ao contexto
    """
    elementos = sorted(dominio.domain if isinstance(dominio, PaddedStructure) else dominio)
    if derivacao.size() > len(elementos):
        raise TooLargeError(derivacao.size(), len(elementos), "vértices da derivação")
    if derivacao.predicate != ctx.goal.pred:
        raise InvalidInputError(f"Derivação de '{derivacao.predicate}', esperado '{ctx.goal.pred}'")
    rotulos: Dict[str, Set] = {nome: set() for nome, _ in ctx.so_variables()}
    proximo = iter(elementos)

    def visitar(d: Derivation) -> int:
        if not 0 <= d.rule_index < ctx.rule_count or ctx.sid.rules[d.rule_index].head != d.predicate:
            raise InvalidInputError(f"Regra {d.rule_index} não pertence ao SID da tradução")
        vertice = next(proximo)
        rotulos[ctx.label_var(d.rule_index)].add((vertice,))
        for atomo, (_, tupla) in zip(ctx.flat_rules[d.rule_index].relations, d.tuples):
            for l, valor in enumerate(tupla, start=1):
                rotulos[ctx.coord_var(atomo.rel, l)].add((vertice, valor))
        for j, filho in enumerate(d.children, start=1):
            rotulos[ctx.edge_var(j)].add((vertice, visitar(filho)))
        return vertice

    raiz = visitar(derivacao)
    aridades = dict(ctx.so_variables())
    segunda = {nome: (aridades[nome], frozenset(ts)) for nome, ts in rotulos.items()}
    return Store({**store.first_order, ctx.root: raiz}, {**store.second_order, **segunda})


def derivation_for_context(s: Structure, store: Store, ctx: TranslationContext) -> Optional[Derivation]:
    """Derivação de ctx.goal sobre o SID separado, pronta para `witness_store`."""
    return find_derivation(s, store, ctx.goal, ctx.sid)


def translation_stats(ctx: TranslationContext, formula: SoFormula) -> Dict[str, int]:
    """Contagens exibidas por `translate-so --emit-stats`."""
    return {
        "regras": ctx.rule_count,
        "filhos_max": ctx.max_children,
        "variaveis_so": len(ctx.so_variables()),
        "posicoes": len(ctx.slots),
        "nos": formula_size(formula),
    }


def formula_size(formula: SoFormula) -> int:
    if isinstance(formula, (SoEq, SoRel, SoVarAtom)):
        return 1
    if isinstance(formula, And):
        return 1 + sum(formula_size(p) for p in formula.parts)
    return 1 + formula_size(formula.body)
