"""
Satisfação injetiva ⊨^U para SIDs normalizados e a reconstrução de
modelos injetivos a partir de derivações comuns.

O conjunto U é finito aqui: cada existencial recebe um valor do pool
diferente dos parâmetros da regra e dos demais existenciais, e o
restante do pool é repartido entre os átomos de predicado do corpo.
Quando a busca falha e algum existencial ficou sem valor novo
disponível, a falha é atribuída ao tamanho do pool.
"""
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from core.slr import (
    check_predicates, find_derivation, flatten_rule, match_relations, pure_holds, term_value,
)
from core.sid_transform import is_normalized
from core.structures import fresh_ids, from_tuples
from model.estrutura_model import Store, Structure, Tupla
from model.slr_model import Derivation, Eq, PredAtom, Sid
from model.termo_model import Const, Var
from util.config import SLR_DEPTH_CAP
from util.exceptions import BudgetExceededError, NormalizationRequiredError, PoolExhaustedError
from util.logger_config import logger

_INFINITO = float("inf")


def sid_width_bound(sid: Sid) -> int:
    """Maior número de variáveis (livres e ligadas) no lado direito de uma regra; no mínimo 1."""
    maior = 1
    for regra in sid.rules:
        plana = flatten_rule(regra)
        maior = max(maior, len(set(regra.params) | set(plana.existentials)))
    return maior


class _VerificadorInjetivo:
    def __init__(self, s: Structure, sid: Sid):
        self.s = s
        self.sid = sid
        self.dominio = s.dom()
        self.planas = {i: flatten_rule(r) for i, r in enumerate(sid.rules)}
        self.memo: Dict[tuple, Optional[Derivation]] = {}
        self.em_andamento: Dict[tuple, int] = {}
        self.faltou_pool = False

    def satisfazer(self, predicado: str, args: Tupla, mascara: FrozenSet, pool: FrozenSet[int],
                   profundidade: int) -> Tuple[Optional[Derivation], float]:
        chave = (predicado, args, mascara, pool)
        if chave in self.memo:
            return self.memo[chave], _INFINITO
        if chave in self.em_andamento:
            return None, self.em_andamento[chave]
        if profundidade > SLR_DEPTH_CAP:
            raise BudgetExceededError(profundidade)
        self.em_andamento[chave] = profundidade
        baixo = _INFINITO
        encontrada = None
        try:
            for indice, regra in self.sid.defining(predicado):
                encontrada, dependencia = self.aplicar(indice, args, mascara, pool, profundidade)
                baixo = min(baixo, dependencia)
                if encontrada is not None:
                    break
        finally:
            del self.em_andamento[chave]
        if encontrada is not None or baixo >= profundidade:
            self.memo[chave] = encontrada
            return encontrada, _INFINITO
        return None, baixo

    def aplicar(self, indice: int, args: Tupla, mascara: FrozenSet, pool: FrozenSet[int],
                profundidade: int) -> Tuple[Optional[Derivation], float]:
        regra = self.sid.rules[indice]
        plana = self.planas[indice]
        if not plana.predicates and len(plana.relations) != len(mascara):
            return None, _INFINITO
        inicial = dict(zip(regra.params, args))
        proibidos = set(args)
        baixo = _INFINITO
        for ligacao, usadas in match_relations(plana.relations, inicial, mascara, self.s):
            ligados = [ligacao[y] for y in plana.existentials if y in ligacao]
            if any(v not in pool or v in proibidos for v in ligados) or len(set(ligados)) != len(ligados):
                continue
            livres = [y for y in plana.existentials if y not in ligacao]
            disponiveis = sorted(pool - proibidos - set(ligados))
            if len(disponiveis) < len(livres) or not (set(disponiveis) - self.dominio) and livres:
                self.faltou_pool = True
            for escolha in product(disponiveis, repeat=len(livres)):
                if len(set(escolha)) != len(escolha):
                    continue
                completa = {**ligacao, **dict(zip(livres, escolha))}
                if not pure_holds(plana.pure, completa, self.s):
                    continue
                restante = pool - {completa[y] for y in plana.existentials}
                filhos, dependencia = self.distribuir(plana.predicates, completa, mascara - set(usadas),
                                                      restante, profundidade)
                baixo = min(baixo, dependencia)
                if filhos is not None:
                    return Derivation(indice, regra.head, args, completa, usadas, tuple(filhos)), baixo
        return None, baixo

    def distribuir(self, atomos, ligacao: Dict[str, int], resto: FrozenSet, pool: FrozenSet[int],
                   profundidade: int) -> Tuple[Optional[List[Derivation]], float]:
        if not atomos:
            return ([] if not resto else None), _INFINITO
        argumentos = [tuple(term_value(t, ligacao, self.s) for t in a.args) for a in atomos]
        baixo = _INFINITO
        for tuplas in self._reparticoes(sorted(resto), len(atomos)):
            partes_pool = self._partes_pool(tuplas, argumentos, pool)
            for pools in partes_pool:
                filhos = []
                for atomo, args, mascara, parte in zip(atomos, argumentos, tuplas, pools):
                    filho, dependencia = self.satisfazer(atomo.pred, args, mascara, parte, profundidade + 1)
                    baixo = min(baixo, dependencia)
                    if filho is None:
                        break
                    filhos.append(filho)
                else:
                    return filhos, baixo
        return None, baixo

    @staticmethod
    def _reparticoes(tuplas: list, partes: int):
        for destino in product(range(partes), repeat=len(tuplas)):
            grupos = [set() for _ in range(partes)]
            for t, d in zip(tuplas, destino):
                grupos[d].add(t)
            yield [frozenset(g) for g in grupos]

    def _partes_pool(self, mascaras, argumentos, pool: FrozenSet[int]):
        """Reparte o pool: elementos exigidos por uma máscara vão para ela; os demais, de todas as formas."""
        exigidos: List[Set[int]] = []
        for mascara, args in zip(mascaras, argumentos):
            elementos = {e for _, t in mascara for e in t} - set(args)
            exigidos.append(elementos & pool)
        for i in range(len(exigidos)):
            for j in range(i + 1, len(exigidos)):
                if exigidos[i] & exigidos[j]:
                    return
        soltos = sorted(pool - set().union(*exigidos))
        for destino in product(range(len(mascaras)), repeat=len(soltos)):
            partes = [set(e) for e in exigidos]
            for elemento, d in zip(soltos, destino):
                partes[d].add(elemento)
            yield [frozenset(p) for p in partes]


def check_slr_injective(s: Structure, store: Store, atomo: PredAtom, sid: Sid, pool: Iterable[int]) -> bool:
    """
    Decide (σ, ν) ⊨^U_Δ A(ξ̄) com U = pool.

    Raises:
        NormalizationRequiredError: O SID tem igualdade entre variáveis
        PoolExhaustedError: Não há derivação e algum existencial ficou
            sem valor novo no pool
    """
    if not is_normalized(sid):
        raise NormalizationRequiredError("A satisfação injetiva exige SID normalizado")
    check_predicates(sid, atomo)
    args = tuple(store.value(t.name) if isinstance(t, Var) else term_value(t, {}, s) for t in atomo.args)
    verificador = _VerificadorInjetivo(s, sid)
    derivacao, _ = verificador.satisfazer(
        atomo.pred, args, frozenset(s.all_tuples()), frozenset(pool) - set(args), 0
    )
    if derivacao is None and verificador.faltou_pool:
        raise PoolExhaustedError(len(frozenset(pool)))
    return derivacao is not None


def injective_derivation(s: Structure, store: Store, atomo: PredAtom, sid: Sid) -> Optional[Derivation]:
    """
    Refaz uma derivação de (σ, ν) ⊨_Δ A(ξ̄) dando a cada existencial um
    valor novo e distinto de todos os outros. Existenciais igualados a
    uma constante mantêm o valor da constante.

    Returns:
        A derivação reconstruída (sobre a estrutura σ′ que ela consome),
        ou None se (σ, ν) não satisfaz o átomo
    """
    if not is_normalized(sid):
        raise NormalizationRequiredError("O modelo injetivo exige SID normalizado")
    original = find_derivation(s, store, atomo, sid)
    if original is None:
        return None
    usados = set(s.dom()) | set(store.values()) | set(original.args)

    def refazer(d: Derivation, args: Tupla) -> Derivation:
        regra = sid.rules[d.rule_index]
        plana = flatten_rule(regra)
        ligacao = dict(zip(regra.params, args))
        for y in plana.existentials:
            constante = next(
                (a.right if a.left == Var(y) else a.left
                 for a in plana.pure
                 if isinstance(a, Eq) and Var(y) in (a.left, a.right)
                 and isinstance(a.right if a.left == Var(y) else a.left, Const)),
                None,
            )
            if constante is not None:
                ligacao[y] = term_value(constante, ligacao, s)
            else:
                novo = fresh_ids(usados, 1)[0]
                usados.add(novo)
                ligacao[y] = novo
        tuplas = tuple(
            (a.rel, tuple(term_value(t, ligacao, s) for t in a.args)) for a in plana.relations
        )
        filhos = tuple(
            refazer(filho, tuple(term_value(t, ligacao, s) for t in atomo_filho.args))
            for atomo_filho, filho in zip(plana.predicates, d.children)
        )
        return Derivation(d.rule_index, d.predicate, args, ligacao, tuplas, filhos)

    return refazer(original, original.args)


def injective_model(s: Structure, store: Store, atomo: PredAtom, sid: Sid) -> Optional[Structure]:
    """Estrutura σ′ com (σ′, ν) ⊨^U A(ξ̄) e |Dom(σ)| ≤ |Dom(σ′)|, ou None se σ não é modelo."""
    derivacao = injective_derivation(s, store, atomo, sid)
    if derivacao is None:
        return None
    modelo = from_tuples(s.signature, derivacao.consumed(), s.constant_values)
    logger.debug(f"Modelo injetivo com {len(modelo.dom())} elementos (original: {len(s.dom())})")
    return modelo


def derivation_pool(derivacao: Derivation, sid: Sid) -> FrozenSet[int]:
    """Valores atribuídos aos existenciais ao longo da derivação."""
    valores: Set[int] = set()
    plana = flatten_rule(sid.rules[derivacao.rule_index])
    valores.update(derivacao.bindings[y] for y in plana.existentials)
    for filho in derivacao.children:
        valores |= derivation_pool(filho, sid)
    return frozenset(valores)
