# -*- coding: utf-8 -*-
"""
Interface de linha de comando do stackshift.

Subcomandos:
    table      Tabela U_1..U_m da iteração (D, T)
    sequences  Tabela TSV de r_k, R_k, zeta_k, gamma_k, d_k, e_{R_k}
    verify     Suíte de verificação (JSON/TSV e dossiê PDF opcional)
    plotdata   Varreduras (parameter, lhs, rhs, margin) para gráficos externos

Códigos de saída: 0 tudo passa, 1 alguma falha, 2 erro de uso ou de
orçamento, 3 apenas inconclusivos além de passes.
"""

import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence

import numpy as np

from . import __version__
from .config import EngineConfig, SuiteConfig, load_config
from .indexcalc import StepBudgetExceeded, computable_blocks, iterate, sequences
from .measures import AccuracyError, MeasureSpec, parseval_check
from .polyexact import ConvolutionBudgetExceeded
from .report_gen import (
    generate_pdf,
    plot_tsv,
    summary_tsv,
    reports_json,
    table_text,
    table_tsv,
    write_text,
)
from .verify import (
    CHECK_IDS,
    INCONCLUSIVE,
    VerificationReport,
    check_eq21,
    check_eq21nu,
    check_p6,
    check_theorem_final,
    exit_status,
    run_suite,
)

# Configuração de logging
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3

PLOT_CHECKS = ("eq21", "eq21nu", "p6", "theorem", "kt1")


def setup_logging(verbosity: int) -> None:
    """WARNING por padrão, INFO com -v, DEBUG com -vv; sempre em stderr."""
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _emit(text: str, out: Optional[str]) -> None:
    write_text(text, out if out else sys.stdout)


# ---------------------------------------------------------------------------
# Subcomandos
# ---------------------------------------------------------------------------

def cmd_table(args: argparse.Namespace, config: EngineConfig) -> int:
    """Imprime U_1..U_m no formato "(j,c) (j,c) ..." ou em TSV longo."""
    states = list(iterate(args.steps, config.step_budget))[1:]
    text = table_tsv(states) if args.format == "tsv" else table_text(states)
    _emit(text, args.out)
    return EXIT_OK


def cmd_sequences(args: argparse.Namespace, config: EngineConfig) -> int:
    """Emite a SequenceTable em TSV."""
    if args.computable:
        table = computable_blocks(config.step_budget)
    else:
        table = sequences(args.kmax, config.step_budget)
    _emit(table.to_tsv(), args.out)
    return EXIT_OK


def suite_from_args(args: argparse.Namespace) -> SuiteConfig:
    """Traduz as opções de verify para uma SuiteConfig."""
    suite = SuiteConfig.exact_only() if args.exact_only else SuiteConfig()
    changes: Dict[str, Any] = {"constant_shift": args.constant_shift}
    if args.check:
        changes["checks"] = (args.check,)
    if args.measure:
        for text in args.measure:
            MeasureSpec.parse(text)
        changes["measures"] = tuple(args.measure)
    if args.T is not None:
        changes.update(eq21_T=(args.T,), theorem_T=(args.T,), kt1_T=(args.T,))
    if args.W is not None:
        changes["p6_W"] = (args.W,)
    if args.k is not None:
        changes.update(p6_blocks=(args.k,), theorem_blocks=(args.k,))
    if args.kappa is not None:
        changes.update(eq21nu_kappa=(args.kappa,), kt1_kappa=(args.kappa,))
    if args.epsilon is not None:
        changes["epsilon"] = args.epsilon
    if args.m is not None:
        if args.mode == "exact":
            changes.update(p5_exact_m=(args.m,), p5_sampled_m=())
        else:
            changes.update(p5_exact_m=(), p5_sampled_m=(args.m,))
    return replace(suite, **changes)


def cmd_verify(args: argparse.Namespace, config: EngineConfig) -> int:
    """Executa a suíte (ou uma família) e escreve os relatórios."""
    suite = suite_from_args(args)
    reports = run_suite(suite, config)
    if not reports:
        raise ValueError(f"Nenhuma verificação selecionada para {args.check or '--all'}")
    text = summary_tsv(reports) if args.format == "tsv" else reports_json(reports)
    _emit(text, args.out)
    if args.pdf:
        generate_pdf(reports, args.pdf)
    status = exit_status(reports)
    if status == EXIT_FAIL:
        failed = sorted({r.check_id for r in reports if r.status == "fail" and not r.diagnostic})
        logger.error(f"Verificações reprovadas: {', '.join(failed)}")
    return status


def sweep_values(lo: float, hi: float, points: int, log: bool) -> np.ndarray:
    """Grade da varredura (linear ou logarítmica)."""
    if points < 0:
        raise ValueError(f"Número de pontos deve ser não-negativo: {points}")
    if not 0 < lo <= hi:
        raise ValueError(f"Intervalo de varredura inválido: [{lo}, {hi}]")
    if log:
        return np.geomspace(lo, hi, points)
    return np.linspace(lo, hi, points)


def _plot_task(args: argparse.Namespace, measure: MeasureSpec, value: float,
               config: EngineConfig) -> Callable[[], Dict[str, Any]]:
    def run() -> Dict[str, Any]:
        if args.check == "eq21":
            lower, upper = check_eq21(measure, value, config)
            report = lower if args.side == "lower" else upper
        elif args.check == "eq21nu":
            report = check_eq21nu(measure, value, args.kappa, config)
        elif args.check == "p6":
            report = check_p6(measure, args.k, value, config=config)
        elif args.check == "theorem":
            report, _ = check_theorem_final(measure, value, args.k, args.epsilon, config)
        else:
            try:
                check = parseval_check(measure, args.S, args.gamma, value, args.kappa, config=config)
            except AccuracyError as e:
                return {"parameter": value, "status": INCONCLUSIVE, "margin": None,
                        "lhs": e.partial.value, "rhs": None}
            return {"parameter": value, "lhs": check.lhs, "rhs": check.rhs,
                    "margin": check.error_budget - check.discrepancy,
                    "status": "pass" if check.passed else "fail"}
        return _plot_row(value, report)
    return run


def _plot_row(value: float, report: VerificationReport) -> Dict[str, Any]:
    return {"parameter": value, "lhs": report.lhs, "rhs": report.rhs,
            "margin": report.margin, "status": report.status}


def cmd_plotdata(args: argparse.Namespace, config: EngineConfig) -> int:
    """Varredura de um parâmetro (T ou W) em TSV."""
    measure = MeasureSpec.parse(args.measure)
    values = sweep_values(args.sweep_min, args.sweep_max, args.points, args.log)
    logger.info(f"Varredura {args.check} em {len(values)} pontos para {measure.label}")
    tasks = [_plot_task(args, measure, float(v), config) for v in values]
    with ThreadPoolExecutor(max_workers=max(1, config.max_workers)) as executor:
        futures = [executor.submit(task) for task in tasks]
        rows = [future.result() for future in futures]
    _emit(plot_tsv(rows), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"valor deve ser não-negativo: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stackshift",
        description="Motor de verificação da construção de pilha-e-deslocamento",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v para INFO, -vv para DEBUG (em stderr)")
    parser.add_argument("--config", type=Path, default=None, help="Caminho do config.toml")
    parser.add_argument("--budget", type=_positive_int, default=None,
                        help="Orçamento de passos (sobrepõe config e ambiente)")
    parser.add_argument("--workers", type=int, default=None, help="Número de threads")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser(
        "table", help="Tabela U_1..U_m",
        description="Imprime U_1..U_m. No formato text a primeira linha é o cabeçalho "
                    "\"m<TAB>U_m\" e cada linha seguinte é \"m<TAB>(j,c) (j,c) ...\": a coluna m "
                    "antecede a linha de pares (j, c_j) do estado.")
    table.add_argument("--steps", type=_positive_int, default=6)
    table.add_argument("--format", choices=("text", "tsv"), default="text",
                       help="text: cabeçalho m<TAB>U_m e linhas m<TAB>(j,c) ...; "
                            "tsv: colunas m, k, j, c (um par por linha)")
    table.add_argument("--out", default=None)
    table.set_defaults(handler=cmd_table)

    seqs = sub.add_parser("sequences", help="Sequências r_k, R_k, zeta_k, ...")
    seqs.add_argument("--kmax", type=int, default=4)
    seqs.add_argument("--computable", action="store_true",
                      help="Todos os blocos que cabem no orçamento")
    seqs.add_argument("--out", default=None)
    seqs.set_defaults(handler=cmd_sequences)

    verify = sub.add_parser("verify", help="Suíte de verificação")
    which = verify.add_mutually_exclusive_group(required=True)
    which.add_argument("--check", choices=CHECK_IDS)
    which.add_argument("--all", action="store_true")
    verify.add_argument("--measure", action="append", default=None,
                        help="Medida do catálogo (repetível), ex.: gaussian:sigma=1.0")
    verify.add_argument("--T", type=float, default=None)
    verify.add_argument("--W", type=float, default=None)
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--kappa", type=int, default=None)
    verify.add_argument("--epsilon", type=float, default=None)
    verify.add_argument("--m", type=int, default=None)
    verify.add_argument("--mode", choices=("exact", "sampled"), default="exact")
    verify.add_argument("--constant-shift", type=int, default=0,
                        help="Desloca e_{R_k} no lado direito por blocos (teste de mutação)")
    verify.add_argument("--exact-only", action="store_true")
    verify.add_argument("--format", choices=("json", "tsv"), default="json")
    verify.add_argument("--out", default=None)
    verify.add_argument("--pdf", default=None, help="Caminho do dossiê PDF")
    verify.set_defaults(handler=cmd_verify)

    plot = sub.add_parser("plotdata", help="Dados de varredura em TSV")
    plot.add_argument("--check", choices=PLOT_CHECKS, required=True)
    plot.add_argument("--measure", default="dirac")
    plot.add_argument("--k", type=int, default=1)
    plot.add_argument("--kappa", type=int, default=1)
    plot.add_argument("--epsilon", type=float, default=0.5)
    plot.add_argument("--S", type=float, default=0.0)
    plot.add_argument("--gamma", type=float, default=0.0)
    plot.add_argument("--side", choices=("lower", "upper"), default="lower")
    plot.add_argument("--sweep-min", type=float, default=0.1)
    plot.add_argument("--sweep-max", type=float, default=10.0)
    plot.add_argument("--points", type=int, default=50)
    plot.add_argument("--log", action="store_true")
    plot.add_argument("--out", default=None)
    plot.set_defaults(handler=cmd_plotdata)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ponto de entrada.

    Args:
        argv: Argumentos (padrão: sys.argv[1:])

    Returns:
        Código de saída
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(args.verbose)
    try:
        config = load_config(args.config, step_budget=args.budget, max_workers=args.workers)
        return args.handler(args, config)
    except (StepBudgetExceeded, ConvolutionBudgetExceeded) as e:
        logger.error(f"Orçamento excedido: {e}")
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        logger.error(f"Erro de uso: {e}")
        print(f"erro: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
