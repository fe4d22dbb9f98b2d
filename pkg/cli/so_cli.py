"""Verbos de segunda ordem: check-so e mso-type."""
import argparse

from cli.comum import ContextoCli, store_de_valores
from core.mso_types import format_type, structure_type
from core.so import eval_so, quantifier_rank
from core.structures import pad
from dtos.comando_dto import CheckSoDTO, MsoTypeDTO
from dtos.relatorio_dto import RelatorioDTO
from model.so_model import BackendSO


def _check_so(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = CheckSoDTO(estrutura=args.estrutura, formula=args.formula, pad=args.pad, backend=args.backend)
    s = ctx.estrutura(dto.estrutura)
    phi = ctx.formula_so(dto.formula, s.signature.constants)
    frescos = dto.pad if dto.pad is not None else 2 ** quantifier_rank(phi)
    dominio = pad(s, frescos)
    with ctx.cronometro("eval_so"):
        veredito = eval_so(s, dominio, store_de_valores(args.valor), phi, BackendSO(dto.backend))
    testemunhas = {"dominio": f"# domínio: {len(dominio.domain)} elementos ({frescos} frescos)"}
    return RelatorioDTO(verb="check-so", verdict=veredito, witnesses=testemunhas, timings=ctx.tempos)


def _mso_type(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = MsoTypeDTO(estrutura=args.estrutura, rank=args.rank)
    s = ctx.estrutura(dto.estrutura)
    with ctx.cronometro("structure_type"):
        tipo = structure_type(s, dto.rank)
    return RelatorioDTO(verb="mso-type", witnesses={"tipo": format_type(tipo)}, timings=ctx.tempos)


def registrar(subparsers) -> None:
    parser = subparsers.add_parser("check-so", help="Avalia uma fórmula SO numa estrutura")
    parser.add_argument("estrutura")
    parser.add_argument("formula", help="Arquivo da fórmula SO ('-' para a entrada padrão)")
    parser.add_argument("--pad", type=int, help="Elementos frescos no domínio de avaliação (padrão 2^qr)")
    parser.add_argument("--backend", default=BackendSO.AUTO.value, choices=BackendSO.valores())
    parser.add_argument("--valor", action="append", default=[], metavar="x=N")
    parser.set_defaults(executar=_check_so)

    parser = subparsers.add_parser("mso-type", help="Imprime o tipo MSO de rank r da estrutura")
    parser.add_argument("estrutura")
    parser.add_argument("rank", type=int)
    parser.set_defaults(executar=_mso_type)
