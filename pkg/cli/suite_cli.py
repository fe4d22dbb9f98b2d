"""Verbo `suite`: executa os critérios de aceitação."""
import argparse

from cli.comum import ContextoCli
from core.acceptance import run_suite
from dtos.comando_dto import SuiteDTO
from dtos.relatorio_dto import RelatorioDTO
from model.aceitacao_model import EscalaSuite
from util.config import SUITE_SEED, SUITE_WORKERS


def _suite(args: argparse.Namespace, ctx: ContextoCli) -> RelatorioDTO:
    dto = SuiteDTO(
        escala=EscalaSuite.RAPIDA.value if args.rapida else EscalaSuite.DESK.value,
        criterios=args.criterio,
        workers=args.workers,
        semente=args.semente,
    )
    semente = dto.semente if dto.semente is not None else SUITE_SEED
    relatorio = run_suite(dto.escala, dto.criterios or None, dto.workers, semente)
    testemunhas = {}
    for r in relatorio.resultados:
        situacao = "ok" if r.aprovado else "FALHOU"
        linhas = [f"{r.numero:>2} {situacao:<6} {r.nome}: {r.casos} casos"]
        if not r.dentro_do_tempo:
            linhas.append(f"   tempo {r.segundos:.1f}s acima do limite de {r.limite_segundos:.0f}s")
        linhas += [f"   {falha}" for falha in r.falhas]
        testemunhas[f"criterio_{r.numero}"] = "\n".join(linhas)
        ctx.tempos[f"criterio_{r.numero}"] = round(r.segundos, 3)
    return RelatorioDTO(verb="suite", verdict=relatorio.aprovado, witnesses=testemunhas, timings=ctx.tempos)


def registrar(subparsers) -> None:
    parser = subparsers.add_parser("suite", help="Executa a suíte de aceitação")
    parser.add_argument("--rapida", action="store_true", help="Tamanhos reduzidos")
    parser.add_argument("--criterio", type=int, action="append", default=[],
                        help="Número do critério a executar (repetível; padrão: todos)")
    parser.add_argument("--workers", type=int, default=SUITE_WORKERS, help="Processos em paralelo")
    parser.add_argument("--semente", type=int, help="Semente dos sorteios (padrão SUITE_SEED)")
    parser.set_defaults(executar=_suite)
