# ------------------------------------------------------------
# main.py – Linha de comando do kit de lógicas relacionais
# ------------------------------------------------------------

import argparse
import sys
from typing import List, Optional, TextIO

# ------------------------------------------------------------
# Configurações
# ------------------------------------------------------------
from util.config import APP_NAME, VERSION
from util.exception_handlers import CODIGO_ERRO, tratar_erro
from util.logger_config import logger

# ------------------------------------------------------------
# Verbos
# ------------------------------------------------------------
from cli import estrutura_cli, geradores_cli, slr_cli, so_cli, suite_cli
from cli.comum import ContextoCli

MODULOS_CLI = [slr_cli, so_cli, estrutura_cli, geradores_cli, suite_cli]


# ------------------------------------------------------------
# Função de criação do parser
# ------------------------------------------------------------
def create_parser() -> argparse.ArgumentParser:
    """Cria o parser com um subcomando por verbo."""
    parser = argparse.ArgumentParser(prog="relkit", description=APP_NAME)
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {VERSION}")
    parser.add_argument("--json", action="store_true", help="Emite o relatório em JSON (verb, verdict, witnesses, timings)")
    subparsers = parser.add_subparsers(dest="verbo", metavar="verbo", required=True)
    for modulo in MODULOS_CLI:
        modulo.registrar(subparsers)
    return parser


def run(argv: Optional[List[str]] = None, saida: Optional[TextIO] = None,
        entrada: Optional[TextIO] = None, erro: Optional[TextIO] = None) -> int:
    """
    Executa um verbo e escreve o relatório em `saida`.

    Returns:
        0 (satisfeito ou sem veredito), 1 (não satisfeito), 2 (erro de uso ou de entrada)
    """
    saida = saida or sys.stdout
    erro = erro or sys.stderr
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse já imprimiu a ajuda ou o erro de uso
        return 0 if e.code == 0 else CODIGO_ERRO

    contexto = ContextoCli(entrada or sys.stdin)
    logger.info(f"Executando '{args.verbo}'")
    try:
        relatorio = args.executar(args, contexto)
    except Exception as e:
        return tratar_erro(e, args.verbo, erro)

    saida.write(relatorio.model_dump_json(indent=2) + "\n" if args.json else relatorio.texto())
    logger.info(f"'{args.verbo}' concluído com código {relatorio.codigo_saida}")
    return relatorio.codigo_saida


def main() -> None:
    sys.exit(run())


# ------------------------------------------------------------
# Execução direta (para `python main.py`)
# ------------------------------------------------------------
if __name__ == "__main__":
    main()
