"""Varreduras em grade (m, s) com réplicas; uma linha de CSV por (ponto, réplica)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from source.analysis.rip import rip_exact, rip_monte_carlo
from source.cli.commands import corsing_reference, corsing_replica, random_sparse_signal
from source.cli.runner import run_tasks
from source.constantes.models import RecoveryAlgorithm, RipMethod
from source.corsing.solver import prepare_corsing
from source.experiment_config.loader import carregar_problema
from source.experiment_config.models import SweepCommandConfig
from source.numkit.errors import ArgumentError
from source.numkit.random_streams import RandomStream
from source.recovery.basis_pursuit import basis_pursuit
from source.recovery.omp import omp
from source.run_logging.experiment_logger import ExperimentLogger, run_step_logger
from source.systems.ensembles import sample_riesz_matrix
from source.systems.function_systems import build_system

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = {
    # colunas fixas primeiro; metadados da réplica depois de wall_ms
    "rip": ["seed", "m", "N", "s", "method", "epsilon_s", "wall_ms", "kind", "system", "replica", "stream_id"],
    "recover": [
        "kind", "system", "N", "m", "s", "replica", "seed", "stream_id",
        "algorithm", "support_recovered", "error_l2", "residual_l2", "iterations", "wall_ms",
    ],
    "corsing": [
        "kind", "trial", "N", "m", "s", "replica", "seed", "stream_id",
        "M_used", "kappa", "h1_error", "best_s_term_h1_error", "h1_ratio", "truncated", "wall_ms",
    ],
}


@dataclass(frozen=True)
class GridPoint:
    index: int
    m: int | None
    s: int


def samples_for(factor: float, s: int, N: int) -> int:
    return max(1, math.ceil(factor * s * math.log(N)))


def grid_points(config: SweepCommandConfig, N: int) -> list[GridPoint]:
    """Pontos ordenados por (m, s); sem m_values, m = ⌈fator·s·ln N⌉ (ou o padrão do CORSING)."""
    points: list[tuple[int | None, int]] = []
    for s in sorted(set(config.s_values)):
        if config.m_values:
            points.extend((m, s) for m in sorted(set(config.m_values)))
        elif config.samples_factor is not None:
            points.append((samples_for(config.samples_factor, s, N), s))
        else:
            points.append((None, s))
    ordered = sorted(points, key=lambda point: (point[0] or 0, point[1]))
    return [GridPoint(index, m, s) for index, (m, s) in enumerate(ordered)]


def task_stream(config: SweepCommandConfig, point: GridPoint, replica: int) -> RandomStream:
    return RandomStream(config.seed, config.stream_id).child(point.index).child(replica)


def _rip_row(config: SweepCommandConfig, point: GridPoint, replica: int, stream: RandomStream) -> dict:
    system = build_system(config.system, config.N)
    A = sample_riesz_matrix(system, point.m, stream).matrix
    method = RipMethod(config.method)
    if method is RipMethod.MONTE_CARLO:
        report = rip_monte_carlo(A, point.s, config.trials, stream.child(1))
    elif method is RipMethod.EXACT:
        report = rip_exact(A, point.s)
    else:
        raise ArgumentError(f"sweep rip aceita apenas exact e monte_carlo; recebido {method.value}.")
    return {"system": config.system.value, "N": system.N, "method": report.method.value, "epsilon_s": report.epsilon_s}


def _recover_row(config: SweepCommandConfig, point: GridPoint, replica: int, stream: RandomStream) -> dict:
    system = build_system(config.system, config.N)
    A = sample_riesz_matrix(system, point.m, stream).matrix
    truth = random_sparse_signal(system.N, point.s, stream.child(1).generator())
    y = A @ truth
    if RecoveryAlgorithm(config.algorithm) is RecoveryAlgorithm.OMP:
        outcome = omp(A, y, min(point.s, point.m, system.N))
    else:
        outcome = basis_pursuit(A, y, config.zeta)
    true_support = tuple(int(j) for j in np.flatnonzero(truth))
    return {
        "system": config.system.value,
        "N": system.N,
        "algorithm": outcome.algorithm,
        "support_recovered": tuple(outcome.support) == true_support,
        "error_l2": float(np.linalg.norm(outcome.estimate - truth)),
        "residual_l2": outcome.residual_l2,
        "iterations": outcome.iterations,
    }


def _timed(run_logger, task_index, point, replica, stream, body) -> dict:
    payload = {"m": point.m, "s": point.s, "replica": replica}
    if run_logger:
        run_logger.start_replica(task_index, stream.to_json_dict())
    with run_step_logger(run_logger, task_index, "sweep_point", payload) as timing:
        row = body()
    return {
        **row,
        "m": point.m if point.m is not None else row.get("m"),
        "s": point.s,
        "replica": replica,
        "seed": stream.seed,
        "stream_id": stream.stream_id,
        "wall_ms": timing.duration_ms,
    }


def _corsing_tasks(config: SweepCommandConfig, run_logger):
    base = carregar_problema(config.problem_path, {"gamma": config.gamma, "s": min(config.s_values)})
    points = grid_points(config, base.setup.N)
    designs = {}
    tasks = []
    task_index = 0
    for point in points:
        definition = carregar_problema(
            config.problem_path, {"gamma": config.gamma, "s": point.s, "m": point.m}
        )
        if point.s not in designs:
            design = prepare_corsing(definition.setup, definition.problem, definition.config)
            designs[point.s] = (design, corsing_reference(definition))
        design, reference = designs[point.s]
        if reference is None:
            raise ArgumentError("sweep corsing exige um problema com solução de referência (difusão pura).")
        for replica in range(config.replicas):
            stream = task_stream(config, point, replica)

            def body(definition=definition, design=design, reference=reference, stream=stream):
                entry, _ = corsing_replica(definition, design, stream, reference)
                return {
                    "trial": definition.setup.trial.kind.value,
                    "N": definition.setup.N,
                    "m": entry["diagnostics"]["m"],
                    "M_used": entry["M_used"],
                    "kappa": entry["kappa"],
                    "h1_error": entry["h1_error"],
                    "best_s_term_h1_error": entry["best_s_term_h1_error"],
                    "h1_ratio": entry["h1_ratio"],
                    "truncated": entry["truncated"],
                }

            tasks.append(
                lambda i=task_index, p=point, r=replica, st=stream, b=body: _timed(run_logger, i, p, r, st, b)
            )
            task_index += 1
    return tasks


def run_sweep(config: SweepCommandConfig, threads: int, run_logger: ExperimentLogger | None = None) -> pd.DataFrame:
    """Executa a varredura; a ordem das linhas é (m, s, réplica) e não depende de ``threads``."""
    if config.kind == "corsing":
        tasks = _corsing_tasks(config, run_logger)
    else:
        N = build_system(config.system, config.N).N
        row_builder = _rip_row if config.kind == "rip" else _recover_row
        tasks = []
        task_index = 0
        for point in grid_points(config, N):
            for replica in range(config.replicas):
                stream = task_stream(config, point, replica)

                def body(point=point, replica=replica, stream=stream):
                    return row_builder(config, point, replica, stream)

                tasks.append(
                    lambda i=task_index, p=point, r=replica, st=stream, b=body: _timed(run_logger, i, p, r, st, b)
                )
                task_index += 1

    rows = run_tasks(tasks, threads)
    table = pd.DataFrame([{"kind": config.kind, **row} for row in rows], columns=SWEEP_COLUMNS[config.kind])
    table = table.sort_values(["m", "s", "replica"], kind="stable").reset_index(drop=True)
    if config.omit_timings:
        table["wall_ms"] = ""
    logger.info("Varredura %s concluída: %d linhas", config.kind, len(table))
    return table
