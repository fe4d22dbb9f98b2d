"""Verbos geradores de SIDs: gen-twk, gen-twk-mso e cfg2sid."""
import argparse

from cli.comum import ContextoCli
from core.generators import gen_twk_mso_sid, gen_twk_sid, strip_annotations
from core.grammars import cfg_to_sid, goal_atom, greibach_normalize
from dtos.comando_dto import GenTwkDTO, GramaticaDTO
from dtos.relatorio_dto import RelatorioDTO
from parsers.estrutura_parser import parse_signature
from parsers.slr_parser import format_sid, format_slr


def _gen_twk(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = GenTwkDTO(k=args.k, assinatura=args.assinatura)
    with ctx.cronometro("gen_twk_sid"):
        sid = gen_twk_sid(dto.k, parse_signature(dto.assinatura))
    return RelatorioDTO(verb="gen-twk", witnesses={"sid": format_sid(sid)}, timings=ctx.tempos)


def _gen_twk_mso(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = GenTwkDTO(k=args.k, assinatura=args.assinatura, formula=args.formula)
    assinatura = parse_signature(dto.assinatura)
    phi = ctx.formula_so(dto.formula, assinatura.constants)
    with ctx.cronometro("gen_twk_mso_sid"):
        sid = gen_twk_mso_sid(dto.k, assinatura, phi)
    if args.sem_anotacoes:
        sid = strip_annotations(sid, dto.k, assinatura)
    return RelatorioDTO(verb="gen-twk-mso", witnesses={"sid": format_sid(sid)}, timings=ctx.tempos)


def _cfg2sid(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = GramaticaDTO(gramatica=args.gramatica)
    gramatica = ctx.gramatica(dto.gramatica)
    with ctx.cronometro("cfg_to_sid"):
        greibach = greibach_normalize(gramatica)
        sid = cfg_to_sid(greibach)
    testemunhas = {"sid": format_sid(sid), "objetivo": f"# objetivo: {format_slr(goal_atom(greibach))}"}
    return RelatorioDTO(verb="cfg2sid", witnesses=testemunhas, timings=ctx.tempos)


def registrar(subparsers) -> None:
    parser = subparsers.add_parser("gen-twk", help="Gera Δ(k), o SID das estruturas de treewidth ≤ k")
    parser.add_argument("k", type=int)
    parser.add_argument("assinatura", help="Assinatura compacta, por exemplo 'E/2,V/1'")
    parser.set_defaults(executar=_gen_twk)

    parser = subparsers.add_parser("gen-twk-mso", help="Gera Δ(k, φ) para uma sentença MSO φ")
    parser.add_argument("k", type=int)
    parser.add_argument("assinatura")
    parser.add_argument("formula", help="Arquivo da sentença MSO ('-' para a entrada padrão)")
    parser.add_argument("--sem-anotacoes", action="store_true",
                        help="Remove as anotações de tipo (predicados A/A_k, sem (des)igualdades)")
    parser.set_defaults(executar=_gen_twk_mso)

    parser = subparsers.add_parser("cfg2sid", help="Codifica uma gramática livre de contexto como SID")
    parser.add_argument("gramatica")
    parser.set_defaults(executar=_cfg2sid)
