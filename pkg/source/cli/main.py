"""Ponto de entrada da linha de comando: rip, recover, corsing, cover, sweep e constants."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

import pandas as pd

from source.cli.commands import (
    EXIT_NUMERICAL,
    EXIT_USAGE,
    CommandResult,
    cmd_constants,
    cmd_corsing,
    cmd_cover,
    cmd_recover,
    cmd_rip,
)
from source.cli.reports import build_report, dumps_report, ensure_writable, write_csv_table, write_json_report
from source.cli.runner import resolve_threads
from source.cli.sweeps import run_sweep
from source.constantes.models import ConstraintForm, RecoveryAlgorithm, RipMethod, SystemKind
from source.experiment_config.config_manager import ConfigurationManager, build_experiment_config, strategy_for
from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.models import ExperimentConfig
from source.numkit.errors import ArgumentError, NumericalError
from source.run_logging.experiment_logger import ExperimentLogger

logger = logging.getLogger(__name__)

COMMANDS = {
    "rip": cmd_rip,
    "recover": cmd_recover,
    "corsing": cmd_corsing,
    "cover": cmd_cover,
}


def configure_logging(level: str = "INFO") -> None:
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="Semente base (padrão 0; corsing usa a do arquivo)")
    common.add_argument("--stream-id", type=int, help="Identificador do fluxo Philox. Padrão: 0")
    common.add_argument("--replicas", type=int, help="Réplicas independentes derivadas da semente. Padrão: 1")
    common.add_argument("--threads", type=int, help="Threads de trabalho. Padrão: $CORSING_LAB_THREADS ou 1")
    common.add_argument("--env-file", help="Arquivo .env lido antes de resolver CORSING_LAB_THREADS")
    common.add_argument("--config", help="Reexecuta uma configuração (JSON/YAML) ou a embutida num relatório")
    common.add_argument("--output-json", help="Relatório JSON de saída. Padrão: stdout")
    common.add_argument("--output-csv", help="Tabela CSV de saída")
    common.add_argument("--overwrite", action="store_true", default=None, help="Sobrescreve arquivos de saída existentes.")
    common.add_argument("--omit-timings", action="store_true", default=None, help="Deixa vazia a coluna wall_ms.")
    common.add_argument("--log-file", help="Log estruturado JSON-lines da execução")
    common.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def _add_source_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--system", choices=[kind.value for kind in SystemKind], help="Sistema embutido. Padrão: fourier")
    parser.add_argument("--N", type=int, help="Número de funções (níveis para hat_hierarchical)")
    parser.add_argument("--m", type=int, help="Número de amostras")
    parser.add_argument("--matrix", help="Matriz em CSV (rows,cols e pares re,im)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corsing-lab",
        description="Recuperação esparsa em sistemas de Riesz, RIP, NSP, coberturas de Maurey e CORSING.",
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)

    rip = subparsers.add_parser("rip", parents=[common], help="Constante de isometria restrita")
    _add_source_arguments(rip)
    rip.add_argument("--s", type=int, help="Esparsidade")
    methods = rip.add_mutually_exclusive_group()
    methods.add_argument("--exact", dest="method", action="store_const", const=RipMethod.EXACT.value)
    methods.add_argument("--monte-carlo", dest="method", action="store_const", const=RipMethod.MONTE_CARLO.value)
    methods.add_argument("--weighted", dest="method", action="store_const", const=RipMethod.WEIGHTED_EXACT.value)
    methods.add_argument("--empirical", dest="method", action="store_const", const=RipMethod.EMPIRICAL_PROCESS.value)
    rip.add_argument("--trials", type=int, help="Tentativas Monte Carlo. Padrão: 10000")
    rip.add_argument("--weights", help="CSV com um peso por coluna")
    rip.add_argument("--cap", type=int, help="Limite de suportes enumerados")

    recover = subparsers.add_parser("recover", parents=[common], help="Recuperação de um sinal s-esparso")
    _add_source_arguments(recover)
    recover.add_argument("--s", type=int, help="Esparsidade do sinal sorteado")
    recover.add_argument("--algo", choices=[algo.value for algo in RecoveryAlgorithm])
    recover.add_argument("--k", type=int, help="Iterações de OMP. Padrão: s")
    recover.add_argument("--zeta", type=float, help="Tolerância do vínculo de BP")
    recover.add_argument("--noise", type=float, help="Norma ℓ² do ruído aditivo")
    recover.add_argument("--weights", help="CSV com um peso por coluna (wbp)")
    recover.add_argument("--constraint", choices=[form.value for form in ConstraintForm])

    corsing = subparsers.add_parser("corsing", parents=[common], help="Solução CORSING de um problema ADR 1D")
    corsing.add_argument("--problem", help="Arquivo de problema (JSON ou YAML)")
    corsing.add_argument("--s", type=int)
    corsing.add_argument("--m", type=int)
    corsing.add_argument("--gamma", type=float)
    corsing.add_argument("--k", type=int, help="Iterações de OMP. Padrão: 12·s")
    corsing.add_argument("--L", type=float, help="Raio do truncamento T_L")
    corsing.add_argument("--samples-csv", help="CSV com x, u_hat(x) numa malha uniforme")
    corsing.add_argument("--grid-points", type=int, help="Pontos da malha de amostras. Padrão: 201")
    corsing.add_argument("--no-reference", dest="reference", action="store_false", default=None)

    cover = subparsers.add_parser("cover", parents=[common], help="Cobertura fraca de Maurey")
    _add_source_arguments(cover)
    cover.add_argument("--s", type=int)
    cover.add_argument("--delta", type=float)
    cover.add_argument("--rho", type=float, help="Raio da cobertura. Padrão: √s/2")
    cover.add_argument("--K", type=float, help="Limitante uniforme das linhas. Padrão: max|X_ij|")
    cover.add_argument("--targets", type=int, help="Alvos aleatórios em √s·B₁. Padrão: 50")
    cover.add_argument("--max-attempts", type=int)
    cover.add_argument("--verify", help="Reverifica um relatório de cobertura gravado")

    sweep = subparsers.add_parser("sweep", parents=[common], help="Varredura em grade (m, s) com réplicas")
    sweep.add_argument("--kind", choices=["rip", "recover", "corsing"])
    sweep.add_argument("--system", choices=[kind.value for kind in SystemKind])
    sweep.add_argument("--N", type=int)
    sweep.add_argument("--m-values", type=int, nargs="+")
    sweep.add_argument("--s-values", type=int, nargs="+")
    sweep.add_argument("--samples-factor", type=float, help="m = ⌈fator·s·ln N⌉ sem --m-values")
    sweep.add_argument("--method", choices=[RipMethod.EXACT.value, RipMethod.MONTE_CARLO.value])
    sweep.add_argument("--trials", type=int)
    sweep.add_argument("--algo", choices=[RecoveryAlgorithm.OMP.value, RecoveryAlgorithm.BASIS_PURSUIT.value])
    sweep.add_argument("--zeta", type=float)
    sweep.add_argument("--problem", help="Arquivo de problema para --kind corsing")
    sweep.add_argument("--gamma", type=float)

    subparsers.add_parser("constants", parents=[common], help="Tabela das constantes teóricas")
    return parser


def read_weights(path: str | None) -> list[float] | None:
    if path is None:
        return None
    try:
        table = pd.read_csv(path, header=None)
    except FileNotFoundError:
        raise
    except (pd.errors.ParserError, pd.errors.EmptyDataError, ValueError) as exc:
        raise ConfigValidationError(f"Arquivo de pesos ilegível ({path}): {exc}") from exc
    values = pd.to_numeric(table.to_numpy().reshape(-1), errors="coerce")
    if pd.isna(values).any():
        raise ConfigValidationError(f"Arquivo de pesos {path} contém valores não numéricos.")
    return [float(value) for value in values]


def _drop_none(data: dict) -> dict:
    return {key: value for key, value in data.items() if value is not None}


def _source(args: argparse.Namespace) -> dict | None:
    source = _drop_none({"system": args.system, "N": args.N, "m": args.m, "matrix_path": args.matrix})
    return source or None


def _command_fields(args: argparse.Namespace) -> dict:
    if args.command == "rip":
        return {
            "source": _source(args),
            "s": args.s,
            "method": args.method,
            "trials": args.trials,
            "weights": read_weights(args.weights),
            "enumeration_cap": args.cap,
        }
    if args.command == "recover":
        return {
            "source": _source(args),
            "s": args.s,
            "algorithm": args.algo,
            "k": args.k,
            "zeta": args.zeta,
            "noise_level": args.noise,
            "weights": read_weights(args.weights),
            "constraint": args.constraint,
        }
    if args.command == "corsing":
        return {
            "problem_path": args.problem,
            "s": args.s,
            "m": args.m,
            "gamma": args.gamma,
            "k": args.k,
            "L": args.L,
            "samples_csv": args.samples_csv,
            "grid_points": args.grid_points,
            "reference": args.reference,
        }
    if args.command == "cover":
        return {
            "source": _source(args),
            "s": args.s,
            "delta": args.delta,
            "rho": args.rho,
            "K": args.K,
            "targets": args.targets,
            "max_attempts": args.max_attempts,
            "verify_path": args.verify,
        }
    return {
        "kind": args.kind,
        "system": args.system,
        "N": args.N,
        "m_values": args.m_values,
        "s_values": args.s_values,
        "samples_factor": args.samples_factor,
        "method": args.method,
        "trials": args.trials,
        "algorithm": args.algo,
        "zeta": args.zeta,
        "problem_path": args.problem,
        "gamma": args.gamma,
    }


def config_from_args(args: argparse.Namespace, threads: int) -> ExperimentConfig:
    """Monta a configuração do subcomando; com ``--config`` os flags de saída ainda se aplicam."""
    run_fields = _drop_none({
        "output_json": args.output_json,
        "output_csv": args.output_csv,
        "overwrite": args.overwrite,
        "omit_timings": args.omit_timings,
    })
    if args.command == "constants":
        return ExperimentConfig(command="constants", threads=threads, **run_fields)

    if args.config:
        manager = ConfigurationManager(strategy_for(args.config))
        manager.load(args.config)
        if manager.config.command != args.command:
            raise ConfigValidationError(
                f"{args.config} descreve o comando {manager.config.command!r}, não {args.command!r}."
            )
        data = manager.config.model_dump(mode="json")
        # destinos de saída vêm só da linha de comando atual
        for key in ("output_json", "output_csv", "overwrite", "samples_csv"):
            data.pop(key, None)
    else:
        data = {
            "command": args.command,
            **_drop_none({"seed": args.seed, "stream_id": args.stream_id, "replicas": args.replicas}),
            **_drop_none(_command_fields(args)),
        }
    data.update(run_fields)
    data["threads"] = threads
    return build_experiment_config(data)


def execute(config: ExperimentConfig, run_logger: ExperimentLogger | None) -> CommandResult:
    if config.command == "constants":
        return cmd_constants()
    if config.command == "sweep":
        return CommandResult(result={}, table=run_sweep(config, config.threads, run_logger))
    return COMMANDS[config.command](config, config.threads, run_logger)


def _check_outputs(config: ExperimentConfig) -> None:
    for path in (config.output_json, config.output_csv, getattr(config, "samples_csv", None)):
        if path is not None:
            ensure_writable(path, config.overwrite)


def emit(config: ExperimentConfig, outcome: CommandResult) -> None:
    if config.command == "sweep":
        outcome.result = {"rows": len(outcome.table), "columns": list(outcome.table.columns)}
    report = build_report(config, outcome.result)
    if config.output_json is not None:
        path = write_json_report(config.output_json, report, overwrite=config.overwrite)
        print(f"[INFO] Relatório salvo em: {path}")
    elif config.command == "constants":
        print(outcome.table.to_string(index=False))
    else:
        print(dumps_report(report))
    if config.output_csv is not None:
        if outcome.table is None:
            raise ConfigValidationError(f"O comando {config.command} não produz tabela CSV.")
        table = outcome.table
        if config.omit_timings and "wall_ms" in table.columns:
            table = table.assign(wall_ms="")
        path = write_csv_table(config.output_csv, table, overwrite=config.overwrite)
        print(f"[INFO] Tabela salva em: {path}")
    samples_csv = getattr(config, "samples_csv", None)
    if samples_csv is not None and outcome.samples is not None:
        path = write_csv_table(samples_csv, outcome.samples, overwrite=config.overwrite)
        print(f"[INFO] Amostras de û salvas em: {path}")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    run_logger = None
    try:
        threads = resolve_threads(args.threads, args.env_file)
        config = config_from_args(args, threads)
        _check_outputs(config)
        if args.log_file:
            run_logger = ExperimentLogger(config.command, config.seed if config.seed is not None else 0, args.log_file)
        outcome = execute(config, run_logger)
        emit(config, outcome)
    except (ConfigValidationError, ArgumentError, FileNotFoundError) as exc:
        print(f"ERRO: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        logger.error("Falha numérica: %s: %s", type(exc).__name__, exc)
        print(f"ERRO: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    finally:
        if run_logger is not None:
            run_logger.write()
            run_logger.close()

    for message in outcome.messages:
        print(f"ERRO: {message}", file=sys.stderr)
    return outcome.exit_code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
