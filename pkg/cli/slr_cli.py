"""Verbos sobre SIDs: check-slr, oracle-check, normalize e translate-so."""
import argparse

from cli.comum import ContextoCli, store_de_valores
from core.sid_transform import normalize_sid
from core.slr import find_derivation, summarize_derivation
from core.slr2so import goal_for_formula, translate_with_context, translation_stats
from core.unfolding import derivation_size_bound, oracle_check
from dtos.comando_dto import CheckSlrDTO, SidDTO, TranslateSoDTO
from dtos.relatorio_dto import RelatorioDTO
from model.estrutura_model import Structure
from model.slr_model import PredAtom, Sid, SlrFormula
from parsers.estrutura_parser import parse_signature
from parsers.slr_parser import format_sid, parse_slr
from parsers.so_parser import format_so


def _objetivo(texto: str, sid: Sid, s: Structure) -> SlrFormula:
    constantes = tuple(s.signature.constants) + tuple(c for c in sid.constants if c not in s.signature.constants)
    return parse_slr(texto, sid.predicates(), constantes)


def _check_slr(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = CheckSlrDTO(estrutura=args.estrutura, sid=args.sid, objetivo=args.objetivo, valores=args.valor)
    s = ctx.estrutura(dto.estrutura)
    sid = ctx.sid(dto.sid, s.signature.constants)
    objetivo = _objetivo(dto.objetivo, sid, s)
    with ctx.cronometro("check_slr"):
        derivacao = find_derivation(s, store_de_valores(dto.valores), objetivo, sid)
    testemunhas = {}
    if derivacao is not None:
        resumo = summarize_derivation(derivacao)
        testemunhas["derivacao"] = (
            f"# derivação: {resumo.regras} aplicações de regra, {resumo.tuplas} tuplas, altura {resumo.altura}"
        )
    return RelatorioDTO(verb="check-slr", verdict=derivacao is not None, witnesses=testemunhas, timings=ctx.tempos)


def _oracle_check(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = CheckSlrDTO(estrutura=args.estrutura, sid=args.sid, objetivo=args.objetivo, valores=args.valor)
    s = ctx.estrutura(dto.estrutura)
    sid = ctx.sid(dto.sid, s.signature.constants)
    objetivo = _objetivo(dto.objetivo, sid, s)
    if not isinstance(objetivo, PredAtom):
        objetivo, sid = goal_for_formula(objetivo, sid)
    with ctx.cronometro("oracle_check"):
        veredito = oracle_check(s, store_de_valores(dto.valores), objetivo, sid)
    testemunhas = {"limite": f"# N = {derivation_size_bound(s, sid)}"}
    return RelatorioDTO(verb="oracle-check", verdict=veredito, witnesses=testemunhas, timings=ctx.tempos)


def _normalize(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = SidDTO(sid=args.sid)
    sid = ctx.sid(dto.sid)
    with ctx.cronometro("normalize_sid"):
        resultado = normalize_sid(sid)
    return RelatorioDTO(verb="normalize", witnesses={"sid": format_sid(resultado.sid)}, timings=ctx.tempos)


def _translate_so(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = TranslateSoDTO(sid=args.sid, objetivo=args.objetivo, assinatura=args.assinatura,
                         estatisticas=args.emit_stats)
    assinatura = parse_signature(dto.assinatura) if dto.assinatura else None
    constantes = assinatura.constants if assinatura else ()
    sid = ctx.sid(dto.sid, constantes)
    objetivo = parse_slr(dto.objetivo, sid.predicates(), tuple(sid.constants) + tuple(constantes))
    if not isinstance(objetivo, PredAtom):
        objetivo, sid = goal_for_formula(objetivo, sid)
    with ctx.cronometro("translate"):
        contexto, formula = translate_with_context(objetivo, sid, assinatura)
    testemunhas = {"formula": format_so(formula)}
    if dto.estatisticas:
        estatisticas = translation_stats(contexto, formula)
        testemunhas["estatisticas"] = "\n".join(f"# {chave} = {valor}" for chave, valor in estatisticas.items())
    return RelatorioDTO(verb="translate-so", witnesses=testemunhas, timings=ctx.tempos)


def _argumentos_verificacao(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("estrutura", help="Arquivo da estrutura ('-' para a entrada padrão)")
    parser.add_argument("sid", help="Arquivo do SID ('-' para a entrada padrão)")
    parser.add_argument("objetivo", help="Fórmula objetivo, por exemplo 'Chain(b,e)'")
    parser.add_argument("--valor", action="append", default=[], metavar="x=N",
                        help="Valor de variável livre do objetivo (repetível)")


def registrar(subparsers) -> None:
    parser = subparsers.add_parser("check-slr", help="Decide (σ, ν) ⊨ φ sob um SID")
    _argumentos_verificacao(parser)
    parser.set_defaults(executar=_check_slr)

    parser = subparsers.add_parser("oracle-check", help="Decide por enumeração de árvores de desdobramento")
    _argumentos_verificacao(parser)
    parser.set_defaults(executar=_oracle_check)

    parser = subparsers.add_parser("normalize", help="Imprime o SID normalizado equivalente")
    parser.add_argument("sid")
    parser.set_defaults(executar=_normalize)

    parser = subparsers.add_parser("translate-so", help="Traduz um objetivo SLR para uma sentença SO")
    parser.add_argument("sid")
    parser.add_argument("objetivo")
    parser.add_argument("--assinatura", help="Assinatura compacta, por exemplo 'C/1,I/2'")
    parser.add_argument("--emit-stats", action="store_true", help="Inclui contagens da tradução")
    parser.set_defaults(executar=_translate_so)
