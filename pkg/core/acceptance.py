"""
Suíte de aceitação: cada critério confronta duas rotas independentes
sobre amostras exaustivas ou sorteadas e conta as discordâncias.

Os critérios são funções isoladas `(parametros, semente) -> ResultadoCriterio`,
o que permite executá-los em processos separados.
"""
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, Iterable, List, Optional

from core import amostras
from core.decomposition import exact_treewidth, reduce, reduced_violations, validate
from core.generators import (
    clique_structure, gen_twk_mso_sid, gen_twk_sid, has_twk_model, twk_mso_top_name, twk_names,
)
from core.grammars import cfg_to_sid, cyk_member, goal_atom, greibach_normalize, word_to_structure, words_up_to
from core.sid_transform import check_normalized, normalize_sid
from core.slr import check_slr
from core.slr2so import check_translated, goal_for_formula
from core.so import enumerate_sentences, eval_so, quantifier_rank
from core.structures import glue, is_isomorphic, pad, relabel
from core.unfolding import oracle_check
from model.aceitacao_model import PARAMETROS, EscalaSuite, ParametrosEscala, RelatorioSuite, ResultadoCriterio
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import PredAtom, Sid
from parsers.estrutura_parser import format_structure
from parsers.so_parser import format_so, parse_so
from util.config import SUITE_SEED, SUITE_WORKERS
from util.exceptions import InvalidInputError
from util.logger_config import logger

# Falhas guardadas por critério; as demais só entram na contagem
MAX_FALHAS_RELATADAS = 5

LIMITES_SEGUNDOS = {1: 60.0, 3: 120.0, 6: 600.0, 8: 900.0}


def _falha(resultado: ResultadoCriterio, descricao: str) -> None:
    if len(resultado.falhas) < MAX_FALHAS_RELATADAS:
        resultado.falhas.append(descricao)
    else:
        resultado.falhas[-1] = f"... e outras (última: {descricao})"
    logger.warning(f"Critério {resultado.numero}: {descricao}")


def _resumo(s: Structure) -> str:
    return format_structure(s).strip().replace("\n", "; ")


# === Critérios ===

def criterio_cliques(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(1, "treewidth de cliques")
    for n in p.cliques:
        largura = exact_treewidth(clique_structure(n)).width
        resultado.casos += 1
        if largura != n - 1:
            _falha(resultado, f"tw(K_{n}) = {largura}, esperado {n - 1}")
    return resultado


def criterio_palavras(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(2, "treewidth das palavras")
    for palavra in words_up_to(p.tamanho_palavras):
        if len(palavra) < 2:
            continue
        largura = exact_treewidth(word_to_structure(palavra)).width
        resultado.casos += 1
        if largura != 1:
            _falha(resultado, f"tw(σ_{palavra}) = {largura}, esperado 1")
    return resultado


def criterio_gramatica(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(3, "gramática aⁿbⁿ contra CYK")
    gramatica = amostras.anbn_grammar()
    greibach = greibach_normalize(gramatica)
    sid = cfg_to_sid(greibach)
    objetivo = goal_atom(greibach)
    for palavra in words_up_to(p.tamanho_palavras):
        esperado = cyk_member(gramatica, palavra)
        obtido = check_slr(word_to_structure(palavra), Store(), objetivo, sid)
        resultado.casos += 1
        if esperado != obtido:
            _falha(resultado, f"'{palavra}': CYK {esperado}, SLR {obtido}")
    return resultado


def _sids_sorteados(p: ParametrosEscala, semente: int) -> List[Sid]:
    rng = random.Random(semente + 4)
    return [amostras.random_sid(rng) for _ in range(p.sids_aleatorios)]


def criterio_normalizacao(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(4, "normalização preserva modelos")
    estruturas = amostras.small_structures(amostras.ASSINATURA_PEQUENA, p.tuplas_normalizacao, 3)
    for indice, sid in enumerate(_sids_sorteados(p, semente)):
        normalizado = normalize_sid(sid)
        atomo = amostras.goal_atom_for(sid)
        for s in estruturas:
            for store in amostras.stores_for(atomo, (1, 2, 3, 4)):
                antes = check_slr(s, store, atomo, sid)
                depois = check_normalized(s, store, atomo, normalizado)
                resultado.casos += 1
                if antes != depois:
                    _falha(resultado, f"SID #{indice}, {_resumo(s)}, {dict(store.first_order)}: {antes} ≠ {depois}")
    return resultado


def _casos_oraculo(p: ParametrosEscala, semente: int):
    estruturas = amostras.small_structures(amostras.ASSINATURA_PEQUENA, p.tuplas_normalizacao, 3)
    for indice, sid in enumerate(_sids_sorteados(p, semente)[:p.sids_oraculo]):
        atomo = amostras.goal_atom_for(sid)
        for s in estruturas:
            for store in amostras.stores_for(atomo, (1, 2, 3, 4)):
                yield f"SID #{indice}", s, store, atomo, sid
    chain = amostras.chain_sid()
    ring = amostras.ring_sid()
    atomo_chain = amostras.goal_atom_for(chain, "Chain")
    fixtures = [amostras.ring3_structure()] + amostras.small_structures(amostras.chain_signature(), 2, 3)
    for s in fixtures:
        yield "Ring", s, Store(), PredAtom("Ring", ()), ring
        for store in amostras.stores_for(atomo_chain, sorted(s.dom() | {4})):
            yield "Chain", s, store, atomo_chain, chain


def criterio_oraculo(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(5, "verificador contra oráculo de desdobramentos")
    for rotulo, s, store, atomo, sid in _casos_oraculo(p, semente):
        verificador = check_slr(s, store, atomo, sid)
        oraculo = oracle_check(s, store, atomo, sid)
        resultado.casos += 1
        if verificador != oraculo:
            _falha(resultado, f"{rotulo}, {_resumo(s)}, {dict(store.first_order)}: {verificador} ≠ {oraculo}")
    return resultado


def criterio_traducao(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(6, "tradução SLR → SO")
    rng = random.Random(semente + 6)
    casos = [("Chain", amostras.chain_sid(), amostras.chain_goal(), amostras.chain_signature())]
    for indice in range(p.sids_aciclicos):
        sid = amostras.random_acyclic_sid(rng)
        casos.append((f"acíclico #{indice}", sid, amostras.closed_goal_for(sid), amostras.ASSINATURA_PEQUENA))
    for rotulo, sid, phi, assinatura in casos:
        atomo, estendido = goal_for_formula(phi, sid)
        estruturas = amostras.up_to_iso(amostras.small_structures(assinatura, p.tuplas_traducao, 4))
        for s in estruturas:
            esperado = check_slr(s, Store(), phi, sid)
            obtido = check_translated(s, Store(), atomo, estendido, assinatura)
            resultado.casos += 1
            if esperado != obtido:
                _falha(resultado, f"{rotulo}, {_resumo(s)}: SLR {esperado}, SO {obtido}")
    return resultado


def _estruturas_twk(p: ParametrosEscala) -> List[Structure]:
    estruturas = amostras.small_structures(amostras.ASSINATURA_GRAFOS, p.tuplas_twk, 4)
    return amostras.up_to_iso(s for s in estruturas if not s.is_empty())


def criterio_twk(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(7, "Δ(1) caracteriza treewidth ≤ 1")
    assinatura = amostras.ASSINATURA_GRAFOS
    sid = gen_twk_sid(1, assinatura)
    objetivo = PredAtom(twk_names(1, assinatura)[1], ())
    for s in _estruturas_twk(p):
        esperado = exact_treewidth(s).width <= 1
        obtido = has_twk_model(s, sid, objetivo)
        resultado.casos += 1
        if esperado != obtido:
            _falha(resultado, f"{_resumo(s)}: tw ≤ 1 {esperado}, D-extensão {obtido}")
    return resultado


def _estender(s: Structure, assinatura: Signature, marcar: bool) -> Structure:
    tuplas = dict(s.tuples)
    if marcar and s.dom():
        tuplas["V"] = {(min(s.dom()),)}
    return Structure(assinatura, tuplas)


def criterio_twk_mso(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(8, "Δ(1, φ) caracteriza modelos de φ com treewidth ≤ 1")
    base = _estruturas_twk(p)
    formulas = [
        (amostras.ASSINATURA_GRAFOS, parse_so("! exists x . E(x,x)")),
        (amostras.ASSINATURA_GRAFOS.with_relations([("V", 1)]), parse_so("exists x . V(x)")),
    ]
    for assinatura, phi in formulas:
        sid = gen_twk_mso_sid(1, assinatura, phi)
        objetivo = PredAtom(twk_mso_top_name(1, assinatura), ())
        # Com V na assinatura, cada estrutura aparece também com V no menor elemento
        marcacoes = (False, True) if assinatura.has_relation("V") else (False,)
        for s0 in base:
            for marcar in marcacoes:
                s = _estender(s0, assinatura, marcar)
                modelo = eval_so(s, pad(s, 2 ** quantifier_rank(phi)), Store(), phi)
                esperado = modelo and exact_treewidth(s).width <= 1
                obtido = has_twk_model(s, sid, objetivo)
                resultado.casos += 1
                if esperado != obtido:
                    _falha(resultado, f"{format_so(phi)} em {_resumo(s)}: esperado {esperado}, obtido {obtido}")
    return resultado


def criterio_padding(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(9, "estabilidade do padding")
    rng = random.Random(semente + 9)
    assinatura = Signature((("V", 1), ("E", 2)))
    sentencas = enumerate_sentences(assinatura, 1)
    for _ in range(p.estruturas_padding):
        s = amostras.random_structure(rng, assinatura)
        for phi in sentencas:
            base = 2 ** quantifier_rank(phi)
            vereditos = {eval_so(s, pad(s, base + j), Store(), phi) for j in range(4)}
            resultado.casos += 1
            if len(vereditos) != 1:
                _falha(resultado, f"{format_so(phi)} em {_resumo(s)}: veredito muda com o padding")
    return resultado


def _com_constante(rng: random.Random, assinatura: Signature) -> Structure:
    s = amostras.random_structure(rng, assinatura.without_constant("a"))
    return Structure(assinatura, s.tuples, {"a": rng.randint(1, 4)})


def criterio_propriedades(p: ParametrosEscala, semente: int) -> ResultadoCriterio:
    resultado = ResultadoCriterio(10, "propriedades randomizadas")
    rng = random.Random(semente + 10)
    chain = amostras.chain_sid()
    objetivo = amostras.chain_goal(chain)
    grafos = Signature((("V", 1), ("E", 2)))
    sentencas = enumerate_sentences(grafos, 1)
    com_constante = amostras.ASSINATURA_GRAFOS.with_constants(["a"])
    for _ in range(p.casos_propriedade):
        s = amostras.random_structure(rng, amostras.chain_signature())
        copia = amostras.random_isomorphic(rng, s)
        if check_slr(s, Store(), objetivo, chain) != check_slr(copia, Store(), objetivo, chain):
            _falha(resultado, f"check_slr muda sob isomorfismo: {_resumo(s)}")

        g = amostras.random_structure(rng, grafos)
        h = relabel(g, amostras.random_relabeling(rng, g))
        phi = sentencas[rng.randrange(len(sentencas))]
        if eval_so(g, pad(g, 2), Store(), phi) != eval_so(h, pad(h, 2), Store(), phi):
            _falha(resultado, f"eval_so muda sob isomorfismo: {format_so(phi)} em {_resumo(g)}")

        a, b = _com_constante(rng, com_constante), _com_constante(rng, com_constante)
        if not is_isomorphic(glue(a, b), glue(b, a)):
            _falha(resultado, f"glue não comuta: {_resumo(a)} e {_resumo(b)}")

        td = exact_treewidth(g).decomposition
        validacao = validate(td, g)
        if not validacao.valid:
            _falha(resultado, f"decomposição testemunha inválida ({validacao.detail}) para {_resumo(g)}")
        else:
            violacoes = reduced_violations(reduce(td, g), g)
            if violacoes:
                _falha(resultado, f"forma reduzida viola as cláusulas {violacoes} para {_resumo(g)}")
        resultado.casos += 5
    return resultado


CRITERIOS: Dict[int, Callable[[ParametrosEscala, int], ResultadoCriterio]] = {
    1: criterio_cliques,
    2: criterio_palavras,
    3: criterio_gramatica,
    4: criterio_normalizacao,
    5: criterio_oraculo,
    6: criterio_traducao,
    7: criterio_twk,
    8: criterio_twk_mso,
    9: criterio_padding,
    10: criterio_propriedades,
}


# === Execução ===

def _executar(numero: int, escala: EscalaSuite, semente: int) -> ResultadoCriterio:
    parametros = PARAMETROS[escala]
    inicio = time.perf_counter()
    resultado = CRITERIOS[numero](parametros, semente)
    resultado.segundos = time.perf_counter() - inicio
    if escala == EscalaSuite.DESK:
        resultado.limite_segundos = LIMITES_SEGUNDOS.get(numero)
    situacao = "aprovado" if resultado.aprovado else "REPROVADO"
    logger.info(
        f"Critério {numero} ({resultado.nome}): {situacao}, {resultado.casos} casos, "
        f"{len(resultado.falhas)} falhas relatadas, {resultado.segundos:.1f}s"
    )
    return resultado


def run_suite(escala: EscalaSuite = EscalaSuite.DESK, criterios: Optional[Iterable[int]] = None,
              workers: int = SUITE_WORKERS, semente: int = SUITE_SEED) -> RelatorioSuite:
    """
    Executa os critérios de aceitação pedidos (todos por padrão).

    Com `workers` > 1 os critérios rodam em processos separados; a ordem
    do relatório segue a numeração dos critérios.

    Raises:
        InvalidInputError: Número de critério inexistente
    """
    escala = EscalaSuite.converter(escala)
    numeros = sorted(set(criterios)) if criterios is not None else sorted(CRITERIOS)
    desconhecidos = [n for n in numeros if n not in CRITERIOS]
    if desconhecidos:
        raise InvalidInputError(f"Critérios inexistentes: {desconhecidos}")
    logger.info(f"Suíte de aceitação ({escala}): critérios {numeros}, semente {semente}, {workers} processos")
    if workers > 1 and len(numeros) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            resultados = list(executor.map(_executar, numeros, [escala] * len(numeros), [semente] * len(numeros)))
    else:
        resultados = [_executar(n, escala, semente) for n in numeros]
    return RelatorioSuite(escala, semente, resultados)

