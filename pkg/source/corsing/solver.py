"""Discretização reduzida de Petrov-Galerkin por sorteio de funções teste (CORSING)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from source.constantes import teoria
from source.corsing.assembly import assemble_full
from source.corsing.coherence import choose_truncation, local_a_coherence
from source.corsing.diagnostics import CorsingRipPrediction, corsing_rip_prediction, truncate
from source.corsing.problem import AdrProblem, CorsingConfig, PetrovGalerkinSetup, condition_number_kappa
from source.numkit.errors import ArgumentError, SamplingError
from source.numkit.random_streams import RandomStream
from source.recovery.omp import omp
from source.recovery.signals import RecoveryOutcome, SparseSignal
from source.systems.ensembles import CoherenceProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorsingDesign:
    """Parte determinística do método: B e c truncados em M, μ, ν e p = ν/‖ν‖₁.

    Não depende da semente; réplicas com sementes diferentes reaproveitam
    o mesmo desenho.
    """

    B: np.ndarray
    c: np.ndarray
    mu: np.ndarray
    profile: CoherenceProfile
    M: int
    probabilities: np.ndarray
    kappa: float
    truncation_sparsity: int

    @property
    def N(self) -> int:
        return self.B.shape[1]


@dataclass(frozen=True)
class CorsingSolution:
    x_hat: SparseSignal
    coefficients: np.ndarray
    drawn_tests: tuple[int, ...]
    M_used: int
    kappa: float
    outcome: RecoveryOutcome
    trial: object = field(repr=False)
    diagnostics: dict = field(default_factory=dict)

    def evaluate(self, points: npt.ArrayLike) -> np.ndarray:
        """û(x) = Σ x̂_j φ_j(x)."""
        return self.trial.matrix(points) @ self.coefficients

    def to_json_dict(self) -> dict:
        return {
            "x_hat": self.x_hat.to_json_dict(),
            "drawn_tests": list(self.drawn_tests),
            "M_used": self.M_used,
            "kappa": self.kappa,
            "residual": self.outcome.residual_l2,
            "truncated": bool(self.diagnostics.get("truncated", False)),
            "support_path": list(self.outcome.support_path),
            "diagnostics": self.diagnostics,
        }


def prepare_corsing(setup: PetrovGalerkinSetup, problem: AdrProblem, config: CorsingConfig) -> CorsingDesign:
    """Monta B até o limite da base teste, escolhe M com (K̄+1)s e fixa p.

    Raises:
        ArgumentError: Se s > N.
        TruncationError: Se o limite da base teste não atingir a condição de cauda.
    """
    N = setup.N
    if config.s > N:
        raise ArgumentError(f"s={config.s} excede N={N}.")
    kappa = condition_number_kappa(setup)
    B_cap, c_cap = assemble_full(setup, problem, N, setup.test_cap)
    mu_cap, _ = local_a_coherence(setup, problem, N, setup.test_cap, B=B_cap)
    sparsity = (teoria.K_BAR + 1) * config.s
    M = choose_truncation(
        mu_cap,
        sparsity,
        config.gamma,
        setup.alpha_infsup,
        setup.trial.c_psi,
        setup.test.c_psi,
    )
    B = np.ascontiguousarray(B_cap[:M])
    mu, profile = local_a_coherence(setup, problem, N, M, B=B)
    if profile.nu_l1 <= 0:
        raise SamplingError("Perfil de coerência nulo: nenhuma função teste pode ser sorteada.")
    probabilities = profile.nu / profile.nu_l1
    logger.info("CORSING: N=%d, M=%d, ‖ν‖₁=%.6g, κ=%.6g", N, M, profile.nu_l1, kappa)
    return CorsingDesign(
        B=B,
        c=np.ascontiguousarray(c_cap[:M]),
        mu=mu,
        profile=profile,
        M=M,
        probabilities=probabilities,
        kappa=kappa,
        truncation_sparsity=sparsity,
    )


def draw_tests(design: CorsingDesign, m: int, stream: RandomStream) -> np.ndarray:
    """τ_1..τ_m i.i.d. com P(τ = q) = p_q, índices 0-based em [M]."""
    generator = stream.generator()
    return generator.choice(design.M, size=m, replace=True, p=design.probabilities)


def preconditioner(design: CorsingDesign, tau: np.ndarray) -> np.ndarray:
    """Diagonal D_ii = 1/√(m·p_{τ_i})."""
    p_tau = design.probabilities[tau]
    if np.any(p_tau <= 0):
        raise SamplingError("Função teste com probabilidade nula sorteada.")
    return 1.0 / np.sqrt(tau.size * p_tau)


def corsing_solve(
    setup: PetrovGalerkinSetup,
    problem: AdrProblem,
    config: CorsingConfig,
    design: CorsingDesign | None = None,
) -> CorsingSolution:
    """Resolve o problema reduzido: x̂ = OMP(DA, Dy, k) seguido de T_L.

    A_ij = a(φ_j, ξ_{τ_i}) e y_i = ℱ(ξ_{τ_i}). O número de iterações é
    limitado a min(k, m, N). Sem ``L_bound`` usa L = 10·‖c‖₂/α.
    """
    if design is None:
        design = prepare_corsing(setup, problem, config)
    N = design.N
    m = config.samples(N)
    stream = RandomStream(config.seed, config.stream_id)
    tau = draw_tests(design, m, stream)
    D = preconditioner(design, tau)
    A = design.B[tau] * D[:, None]
    y = design.c[tau] * D

    requested = config.iterations()
    k = min(requested, m, N)
    if k < requested:
        logger.warning("OMP: k=%d reduzido para min(k, m, N)=%d", requested, k)
    outcome = omp(A, y, k)

    L = config.L_bound
    if L is None:
        L = 10.0 * float(np.linalg.norm(design.c)) / setup.alpha_infsup
    coefficients, truncated = truncate(outcome.estimate, L, setup.trial)
    if truncated:
        logger.warning("Truncamento T_L atuou com L=%.6g", L)

    diagnostics = {
        "m": m,
        "omp_iterations_requested": requested,
        "omp_iterations_used": outcome.iterations,
        "residual": outcome.residual_l2,
        "truncated": truncated,
        "L_bound": L,
        "nu_l1": design.profile.nu_l1,
        "truncation_sparsity": design.truncation_sparsity,
        "degenerate": outcome.degenerate,
        "gamma": config.gamma,
        "seed": config.seed,
        "stream_id": config.stream_id,
    }
    return CorsingSolution(
        x_hat=SparseSignal.from_dense(coefficients),
        coefficients=coefficients,
        drawn_tests=tuple(int(q) + 1 for q in tau),
        M_used=design.M,
        kappa=design.kappa,
        outcome=outcome,
        trial=setup.trial,
        diagnostics=diagnostics,
    )


def corsing_rip_inputs(
    setup: PetrovGalerkinSetup,
    problem: AdrProblem,
    config: CorsingConfig,
    design: CorsingDesign | None = None,
) -> CorsingRipPrediction:
    """Previsão de RIP para a matriz CORSING do problema, com ‖ν‖₁ do desenho."""
    if design is None:
        design = prepare_corsing(setup, problem, config)
    return corsing_rip_prediction(
        design.kappa,
        config.gamma,
        config.s,
        design.N,
        design.profile.nu_l1,
        epsilon=config.epsilon,
        C_phi=setup.trial.C_psi,
        C_xi=setup.test.C_psi,
        c_phi=setup.trial.c_psi,
        c_xi=setup.test.c_psi,
        alpha=setup.alpha_infsup,
        beta=setup.beta_cont,
    )


def evaluate_solution(solution: CorsingSolution, grid: npt.ArrayLike | int = 201) -> tuple[np.ndarray, np.ndarray]:
    """Amostra û numa malha; um inteiro n gera n pontos uniformes em [0, 1]."""
    points = np.linspace(0.0, 1.0, grid) if isinstance(grid, int) else np.asarray(grid, dtype=np.float64)
    if points.ndim != 1 or points.size == 0 or not np.all(np.isfinite(points)):
        raise ArgumentError("Malha de avaliação deve ser um vetor finito não vazio.")
    return points, solution.evaluate(points)


def scaling_identity_check(
    design: CorsingDesign,
    x: npt.ArrayLike,
    m: int,
    draws: int,
    stream: RandomStream,
) -> tuple[float, float]:
    """Média Monte Carlo de ‖DAx‖₂² sobre ``draws`` sorteios e o valor exato ‖B_M x‖₂².

    Com D_ii = 1/√(m p_{τ_i}) o valor esperado coincide com ‖B_M x‖₂².
    """
    vector = np.asarray(x, dtype=np.complex128).reshape(-1)
    row_energy = np.abs(design.B @ vector) ** 2
    generator = stream.generator()
    tau = generator.choice(design.M, size=(draws, m), replace=True, p=design.probabilities)
    samples = (row_energy[tau] / (m * design.probabilities[tau])).sum(axis=1)
    return float(samples.mean()), float(row_energy.sum())

