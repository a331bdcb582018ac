"""Subcomandos rip, recover, corsing, cover e constants."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from source.analysis.complexity import theory_constants
from source.analysis.empirical_process import empirical_process_sup
from source.analysis.maurey import WeakCover, maurey_weak_cover, verify_weak_cover
from source.analysis.rip import RipReport, rip_exact, rip_monte_carlo, weighted_rip_exact
from source.cli.reports import complex_from_pairs, complex_pairs, read_json_report
from source.cli.runner import replica_streams, run_tasks
from source.constantes.models import ConstraintForm, RecoveryAlgorithm, RipMethod
from source.corsing.diagnostics import h1_error, reference_coefficients
from source.corsing.problem import CorsingConfig
from source.corsing.solver import CorsingDesign, corsing_rip_inputs, corsing_solve, evaluate_solution, prepare_corsing
from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.loader import ProblemDefinition, carregar_problema
from source.experiment_config.models import (
    CorsingCommandConfig,
    CoverCommandConfig,
    MeasurementSource,
    RecoverCommandConfig,
    RipCommandConfig,
)
from source.numkit.errors import AdmissibleRangeError, ArgumentError
from source.numkit.matrices import as_complex_matrix
from source.numkit.matrix_csv import read_matrix_csv
from source.numkit.random_streams import RandomStream
from source.recovery.approximation import best_s_term_error
from source.recovery.basis_pursuit import basis_pursuit, rescaled_constraint_matrix, weighted_basis_pursuit
from source.recovery.omp import omp
from source.recovery.signals import SparseSignal, WeightVector
from source.run_logging.experiment_logger import ExperimentLogger, run_step_logger
from source.systems.ensembles import MeasurementEnsemble, sample_riesz_matrix
from source.systems.function_systems import FunctionSystem, build_system
from source.systems.gram import l2_gram

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


@dataclass
class CommandResult:
    result: dict
    table: pd.DataFrame | None = None
    samples: pd.DataFrame | None = None
    exit_code: int = EXIT_OK
    messages: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class Measurements:
    matrix: np.ndarray
    ensemble: MeasurementEnsemble | None = None
    system: FunctionSystem | None = None

    def describe(self) -> dict:
        if self.ensemble is not None:
            return self.ensemble.to_json_dict()
        m, N = self.matrix.shape
        return {"kind": "csv", "m": m, "N": N}


def build_measurements(source: MeasurementSource, stream: RandomStream) -> Measurements:
    """Matriz de um CSV ou de um sistema amostrado com o fluxo da réplica."""
    if source.matrix_path is not None:
        return Measurements(matrix=read_matrix_csv(source.matrix_path))
    system = build_system(source.system, source.N)
    ensemble = sample_riesz_matrix(system, source.m, stream)
    return Measurements(matrix=ensemble.matrix, ensemble=ensemble, system=system)


def random_sparse_signal(N: int, s: int, generator: np.random.Generator) -> np.ndarray:
    """Suporte uniforme de tamanho s e coeficientes gaussianos complexos."""
    if not 1 <= s <= N:
        raise ArgumentError(f"s deve estar em [1, N={N}]; recebido s={s}.")
    support = np.sort(generator.choice(N, size=s, replace=False))
    signal = np.zeros(N, dtype=np.complex128)
    signal[support] = generator.standard_normal(s) + 1j * generator.standard_normal(s)
    return signal


def _weights(values: list[float] | None, N: int) -> WeightVector:
    if values is None:
        return WeightVector.ones(N)
    if len(values) != N:
        raise ConfigValidationError(f"weights tem {len(values)} entradas; a matriz tem N = {N} colunas.")
    return WeightVector(np.asarray(values, dtype=np.float64))


# --------------------------------------------------------------------------- #
# rip                                                                         #
# --------------------------------------------------------------------------- #
def rip_for(config: RipCommandConfig, measurements: Measurements, stream: RandomStream) -> RipReport:
    A = measurements.matrix
    method = RipMethod(config.method)
    if method is RipMethod.EXACT:
        return rip_exact(A, config.s, cap=config.enumeration_cap)
    if method is RipMethod.MONTE_CARLO:
        return rip_monte_carlo(A, config.s, config.trials, stream.child(1))
    if method is RipMethod.WEIGHTED_EXACT:
        return weighted_rip_exact(A, config.s, _weights(config.weights, A.shape[1]), cap=config.enumeration_cap)
    if measurements.ensemble is None:
        raise ArgumentError("O método empirical_process exige um sistema embutido (não um CSV).")
    covariance = l2_gram(measurements.system)
    return empirical_process_sup(measurements.ensemble, covariance, config.s, cap=config.enumeration_cap)


def cmd_rip(config: RipCommandConfig, threads: int, run_logger: ExperimentLogger | None = None) -> CommandResult:
    streams = replica_streams(config.seed, config.stream_id, config.replicas)

    def task(replica: int, stream: RandomStream):
        def run() -> dict:
            if run_logger:
                run_logger.start_replica(replica, stream.to_json_dict())
            with run_step_logger(run_logger, replica, "rip", {"s": config.s, "method": config.method.value}):
                measurements = build_measurements(config.source, stream)
                report = rip_for(config, measurements, stream)
            return {"replica": replica, "measurements": measurements.describe(), "rip": report.to_json_dict()}
        return run

    replicas = run_tasks([task(r, stream) for r, stream in enumerate(streams)], threads)
    values = [entry["rip"]["epsilon_s"] for entry in replicas]
    table = pd.DataFrame(
        [
            {
                "replica": entry["replica"],
                "seed": stream.seed,
                "stream_id": stream.stream_id,
                "method": entry["rip"]["method"],
                "s": config.s,
                "epsilon_s": entry["rip"]["epsilon_s"],
            }
            for entry, stream in zip(replicas, streams)
        ],
        columns=["replica", "seed", "stream_id", "method", "s", "epsilon_s"],
    )
    return CommandResult(
        result={"replicas": replicas, "median_epsilon_s": float(np.median(values))},
        table=table,
    )


# --------------------------------------------------------------------------- #
# recover                                                                     #
# --------------------------------------------------------------------------- #
def recover_once(config: RecoverCommandConfig, measurements: Measurements, stream: RandomStream) -> dict:
    """Sorteia f s-esparso, mede y = Af + e e recupera com o algoritmo configurado."""
    A = measurements.matrix
    m, N = A.shape
    generator = stream.child(1).generator()
    truth = random_sparse_signal(N, config.s, generator)
    noise = np.zeros(m, dtype=np.complex128)
    if config.noise_level > 0:
        direction = generator.standard_normal(m) + 1j * generator.standard_normal(m)
        noise = config.noise_level * direction / np.linalg.norm(direction)
    y = A @ truth + noise

    algorithm = RecoveryAlgorithm(config.algorithm)
    if algorithm is RecoveryAlgorithm.OMP:
        outcome = omp(A, y, min(config.k or config.s, m, N))
    else:
        if ConstraintForm(config.constraint) is ConstraintForm.RESCALED:
            C_psi = measurements.system.C_psi if measurements.system is not None else 1.0
            factor = math.sqrt(C_psi * m)
            A, y = rescaled_constraint_matrix(A, m, C_psi), y * factor
        if algorithm is RecoveryAlgorithm.BASIS_PURSUIT:
            outcome = basis_pursuit(A, y, config.zeta)
        else:
            outcome = weighted_basis_pursuit(A, y, config.zeta, _weights(config.weights, N))

    true_support = tuple(int(j) for j in np.flatnonzero(truth))
    return {
        "truth": SparseSignal.from_dense(truth).to_json_dict(),
        "outcome": outcome.to_json_dict(),
        "error_l2": float(np.linalg.norm(outcome.estimate - truth)),
        "support_recovered": tuple(outcome.support) == true_support,
        "noise_l2": float(np.linalg.norm(noise)),
    }


def cmd_recover(config: RecoverCommandConfig, threads: int, run_logger: ExperimentLogger | None = None) -> CommandResult:
    streams = replica_streams(config.seed, config.stream_id, config.replicas)

    def task(replica: int, stream: RandomStream):
        def run() -> dict:
            if run_logger:
                run_logger.start_replica(replica, stream.to_json_dict())
            with run_step_logger(run_logger, replica, "recover", {"algorithm": config.algorithm.value}):
                measurements = build_measurements(config.source, stream)
                entry = recover_once(config, measurements, stream)
            return {"replica": replica, "measurements": measurements.describe(), **entry}
        return run

    replicas = run_tasks([task(r, stream) for r, stream in enumerate(streams)], threads)
    table = pd.DataFrame(
        [
            {
                "replica": entry["replica"],
                "seed": stream.seed,
                "stream_id": stream.stream_id,
                "algorithm": entry["outcome"]["algorithm"],
                "support_recovered": entry["support_recovered"],
                "error_l2": entry["error_l2"],
                "residual_l2": entry["outcome"]["residual_l2"],
                "iterations": entry["outcome"]["iterations"],
            }
            for entry, stream in zip(replicas, streams)
        ],
        columns=["replica", "seed", "stream_id", "algorithm", "support_recovered", "error_l2", "residual_l2", "iterations"],
    )
    return CommandResult(
        result={
            "replicas": replicas,
            "success_rate": float(np.mean([entry["support_recovered"] for entry in replicas])),
            "median_error_l2": float(np.median([entry["error_l2"] for entry in replicas])),
        },
        table=table,
    )


# --------------------------------------------------------------------------- #
# corsing                                                                     #
# --------------------------------------------------------------------------- #
def corsing_overrides(config: CorsingCommandConfig) -> dict:
    return {"s": config.s, "m": config.m, "gamma": config.gamma, "k": config.k, "L": config.L}


def corsing_reference(definition: ProblemDefinition) -> tuple[np.ndarray, float] | None:
    try:
        return reference_coefficients(definition.problem, definition.setup.trial)
    except ArgumentError:
        logger.info("Sem solução de referência para este problema; erro H¹ não será reportado.")
        return None


def corsing_replica(
    definition: ProblemDefinition,
    design: CorsingDesign,
    stream: RandomStream,
    reference: tuple[np.ndarray, float] | None,
) -> tuple[dict, object]:
    base = definition.config
    replica_config = CorsingConfig(
        s=base.s,
        m=base.m,
        gamma=base.gamma,
        seed=stream.seed,
        stream_id=stream.stream_id,
        omp_iterations=base.omp_iterations,
        L_bound=base.L_bound,
        epsilon=base.epsilon,
    )
    solution = corsing_solve(definition.setup, definition.problem, replica_config, design)
    entry = solution.to_json_dict()
    if reference is not None:
        coefficients, tail = reference
        error = h1_error(solution.coefficients, coefficients, definition.setup.trial, tail_energy=tail)
        best = math.sqrt(best_s_term_error(coefficients, base.s, p=2) ** 2 + tail)
        entry["h1_error"] = error
        entry["best_s_term_h1_error"] = best
        entry["h1_ratio"] = error / best if best > 0 else math.inf
    return entry, solution


def cmd_corsing(config: CorsingCommandConfig, threads: int, run_logger: ExperimentLogger | None = None) -> CommandResult:
    definition = carregar_problema(config.problem_path, corsing_overrides(config))
    design = prepare_corsing(definition.setup, definition.problem, definition.config)
    reference = corsing_reference(definition) if config.reference else None
    try:
        prediction = corsing_rip_inputs(definition.setup, definition.problem, definition.config, design).to_json_dict()
    except AdmissibleRangeError as exc:
        logger.warning("Previsão de RIP indisponível: %s", exc)
        prediction = {"admissible": False, "reason": str(exc)}

    seed = config.seed if config.seed is not None else definition.config.seed
    streams = replica_streams(seed, config.stream_id, config.replicas)

    def task(replica: int, stream: RandomStream):
        def run():
            if run_logger:
                run_logger.start_replica(replica, stream.to_json_dict())
            with run_step_logger(run_logger, replica, "corsing_solve", {"s": definition.config.s, "M": design.M}):
                return corsing_replica(definition, design, stream, reference)
        return run

    outputs = run_tasks([task(r, stream) for r, stream in enumerate(streams)], threads)
    replicas = [{"replica": r, **entry} for r, (entry, _) in enumerate(outputs)]
    result = {
        "problem": definition.problem.to_json_dict(),
        "setup": definition.setup.to_json_dict(),
        "seed": seed,
        "M_used": design.M,
        "kappa": design.kappa,
        "nu_l1": design.profile.nu_l1,
        "rip_prediction": prediction,
        "replicas": replicas,
    }
    if reference is not None:
        result["median_h1_error"] = float(np.median([entry["h1_error"] for entry in replicas]))
        result["best_s_term_h1_error"] = replicas[0]["best_s_term_h1_error"]

    columns = ["replica", "seed", "stream_id", "M_used", "kappa", "residual", "truncated"]
    if reference is not None:
        columns += ["h1_error", "best_s_term_h1_error", "h1_ratio"]
    table = pd.DataFrame(
        [
            {"seed": stream.seed, "stream_id": stream.stream_id, **entry}
            for entry, stream in zip(replicas, streams)
        ],
    ).reindex(columns=columns)

    samples = None
    if config.samples_csv is not None:
        points, values = evaluate_solution(outputs[0][1], config.grid_points)
        samples = pd.DataFrame({"x": points, "u_hat": values.real})
    return CommandResult(result=result, table=table, samples=samples)


# --------------------------------------------------------------------------- #
# cover                                                                       #
# --------------------------------------------------------------------------- #
def random_l1_targets(N: int, s: int, count: int, generator: np.random.Generator) -> np.ndarray:
    """Alvos em √s·B₁ (norma ‖Re‖₁ + ‖Im‖₁) com raio uniforme em (0, 1]."""
    raw = generator.standard_normal((count, N)) + 1j * generator.standard_normal((count, N))
    l1 = np.abs(raw.real).sum(axis=1) + np.abs(raw.imag).sum(axis=1)
    radii = 1.0 - generator.random(count)
    return raw * (math.sqrt(s) * radii / l1)[:, None]


def measurement_rows(measurements: Measurements) -> np.ndarray:
    """Linhas X_i sem o fator de escala do conjunto."""
    if measurements.ensemble is not None:
        return measurements.matrix / measurements.ensemble.scaling
    return measurements.matrix


def verify_cover_report(path: str) -> CommandResult:
    report = read_json_report(path)
    try:
        payload = report["result"]
        cover = WeakCover.from_json_dict(payload["cover"])
        targets = complex_from_pairs(payload["targets"])
        raw_rows = complex_from_pairs(payload["X_rows"])
    except (KeyError, TypeError, IndexError) as exc:
        raise ConfigValidationError(f"Relatório de cobertura incompleto: {exc}") from exc
    rows = as_complex_matrix(raw_rows, name="X_rows")
    verification = verify_weak_cover(cover, targets, rows)
    messages = [f"alvo {t}: {reason}" for t, reason in verification.failures]
    return CommandResult(
        result={"verified_path": path, "verification": verification.to_json_dict()},
        exit_code=EXIT_OK if verification.passed else EXIT_NUMERICAL,
        messages=messages,
    )


def cmd_cover(config: CoverCommandConfig, threads: int, run_logger: ExperimentLogger | None = None) -> CommandResult:
    if config.verify_path is not None:
        return verify_cover_report(config.verify_path)

    stream = RandomStream(config.seed, config.stream_id)
    if run_logger:
        run_logger.start_replica(0, stream.to_json_dict())
    measurements = build_measurements(config.source, stream.child(0))
    rows = measurement_rows(measurements)
    N = rows.shape[1]
    targets = random_l1_targets(N, config.s, config.targets, stream.child(1).generator())
    rho = config.rho if config.rho is not None else math.sqrt(config.s) / 2.0
    with run_step_logger(run_logger, 0, "maurey_weak_cover", {"s": config.s, "delta": config.delta, "rho": rho}):
        cover = maurey_weak_cover(
            targets,
            rows,
            rho,
            config.delta,
            stream.child(2),
            s=config.s,
            K=config.K,
            max_attempts=config.max_attempts,
        )
    verification = verify_weak_cover(cover, targets, rows)
    params = cover.parameters
    net_log_bound = params.L * math.log(2 * N)
    result = {
        "measurements": measurements.describe(),
        "cover": cover.to_json_dict(),
        "targets": [complex_pairs(t) for t in targets],
        "X_rows": [complex_pairs(r) for r in rows],
        "verification": verification.to_json_dict(),
        "max_exceptions": max((len(a.exceptions) for a in cover.assignments), default=0),
        "net_size": len(cover.net_points),
        "log_net_size_bound": net_log_bound,
    }
    table = pd.DataFrame(
        [{**a.to_json_dict(), "exceptions": len(a.exceptions)} for a in cover.assignments],
        columns=["target_index", "net_index", "exceptions", "width", "attempts", "success"],
    )
    messages = [f"alvo {t}: {reason}" for t, reason in verification.failures]
    return CommandResult(
        result=result,
        table=table,
        exit_code=EXIT_OK if verification.passed else EXIT_NUMERICAL,
        messages=messages,
    )


# --------------------------------------------------------------------------- #
# constants                                                                   #
# --------------------------------------------------------------------------- #
CONSTANT_DESCRIPTIONS = {
    "kappa": "(10 − 7√2)/28: limite de δ no teorema principal",
    "c0": "1600(99 + 70√2): constante do número de amostras",
    "c1": "492: constante da probabilidade de falha",
    "K_bar": "12: iterações de OMP por nível de esparsidade",
    "C_omp": "49: constante do erro de OMP",
    "eps_star_normalized": "1/6: RIP exigida da matriz normalizada",
    "eps_star": "1/13: RIP exigida de A",
    "kappa_condition_limit": "13/12: limite de κ para a garantia do CORSING",
}


def cmd_constants() -> CommandResult:
    constants = theory_constants().to_json_dict()
    table = pd.DataFrame(
        [
            {"name": name, "value": float(value), "description": CONSTANT_DESCRIPTIONS[name]}
            for name, value in constants.items()
        ],
        columns=["name", "value", "description"],
    )
    return CommandResult(result={"constants": constants}, table=table)
