"""Verbos sobre estruturas: treewidth, iso e word2struct."""
import argparse

from cli.comum import ContextoCli
from core.decomposition import exact_treewidth, reduce
from core.grammars import word_to_structure
from core.structures import is_isomorphic
from dtos.comando_dto import EstruturaDTO, IsoDTO, PalavraDTO
from dtos.relatorio_dto import RelatorioDTO
from parsers.decomposicao_parser import format_decomposition
from parsers.estrutura_parser import format_structure


def _treewidth(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = EstruturaDTO(estrutura=args.estrutura, reduzida=args.reduzida)
    s = ctx.estrutura(dto.estrutura)
    with ctx.cronometro("exact_treewidth"):
        resultado = exact_treewidth(s)
    decomposicao = resultado.decomposition
    if dto.reduzida:
        with ctx.cronometro("reduce"):
            decomposicao = reduce(decomposicao, s)
    testemunhas = {"largura": str(resultado.width), "decomposicao": format_decomposition(decomposicao)}
    return RelatorioDTO(verb="treewidth", witnesses=testemunhas, timings=ctx.tempos)


def _iso(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = IsoDTO(primeira=args.primeira, segunda=args.segunda)
    a, b = ctx.estrutura(dto.primeira), ctx.estrutura(dto.segunda)
    with ctx.cronometro("is_isomorphic"):
        resultado = is_isomorphic(a, b)
    testemunhas = {}
    if resultado:
        testemunhas["bijecao"] = "\n".join(f"{x} -> {y}" for x, y in sorted(resultado.witness.items()))
    return RelatorioDTO(verb="iso", verdict=resultado.isomorphic, witnesses=testemunhas, timings=ctx.tempos)


def _word2struct(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = PalavraDTO(palavra=args.palavra)
    estrutura = word_to_structure(dto.palavra)
    return RelatorioDTO(verb="word2struct", witnesses={"estrutura": format_structure(estrutura)})


def registrar(subparsers) -> None:
    parser = subparsers.add_parser("treewidth", help="Treewidth exata com decomposição testemunha")
    parser.add_argument("estrutura")
    parser.add_argument("--reduzida", action="store_true", help="Imprime a forma reduzida da decomposição")
    parser.set_defaults(executar=_treewidth)

    parser = subparsers.add_parser("iso", help="Decide se duas estruturas são isomorfas")
    parser.add_argument("primeira")
    parser.add_argument("segunda")
    parser.set_defaults(executar=_iso)

    parser = subparsers.add_parser("word2struct", help="Imprime a estrutura σ_w de uma palavra sobre {a, b}")
    parser.add_argument("palavra")
    parser.set_defaults(executar=_word2struct)
