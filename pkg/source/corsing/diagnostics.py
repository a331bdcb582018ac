"""Diagnósticos do CORSING: erros em H¹₀, constantes inf-sup e previsões de RIP."""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from source.analysis.complexity import ComplexityBound, ComplexityInputs, sample_complexity
from source.constantes import teoria
from source.constantes.models import ComplexityRegime, SystemKind
from source.corsing.problem import AdrProblem
from source.numkit.errors import AdmissibleRangeError, ArgumentError, DimensionError
from source.systems.function_systems import FunctionSystem, H10System
from source.systems.gram import h10_gram
from source.systems.quadrature import gauss_legendre_rule

_ORTHONORMAL_KINDS = (SystemKind.SINE_H10, SystemKind.HAT_HIERARCHICAL)


def estimate_infsup_continuity(B: npt.ArrayLike) -> tuple[float, float]:
    """(σ_min, σ_max) de B; com bases ortonormais aproximam α e β nos espaços truncados."""
    sigma = np.linalg.svd(np.asarray(B), compute_uv=False)
    rows, cols = np.shape(B)
    alpha = float(sigma[-1]) if rows >= cols else 0.0
    return alpha, float(sigma[0])


def h1_error(
    u_hat_coeffs: npt.ArrayLike,
    reference_coeffs: npt.ArrayLike,
    trial: FunctionSystem,
    *,
    tail_energy: float = 0.0,
) -> float:
    """‖Σ(x̂_j − x_j)φ_j‖_{H¹₀}, somando ``tail_energy`` (energia fora do espaço trial).

    Bases ortonormais usam a identidade como Gram; outras bases H¹₀ usam
    o Gram calculado por quadratura.
    """
    x_hat = np.asarray(u_hat_coeffs, dtype=np.complex128).reshape(-1)
    x_ref = np.asarray(reference_coeffs, dtype=np.complex128).reshape(-1)
    if x_hat.shape != x_ref.shape or x_hat.size != trial.N:
        raise DimensionError(
            f"Coeficientes com comprimentos {x_hat.size} e {x_ref.size}; base com N={trial.N}."
        )
    energy = trial_norm(x_hat - x_ref, trial) ** 2
    return math.sqrt(energy + max(tail_energy, 0.0))


def h10_projection(
    trial: H10System,
    exact_derivative: Callable[[np.ndarray], np.ndarray],
    *,
    panels: int = 1024,
) -> tuple[np.ndarray, float]:
    """Coeficientes x_j = ∫ u'·φ_j' de uma solução conhecida e a energia residual ‖u'‖² − ‖x‖².

    Válido para bases trial ortonormais em H¹₀.
    """
    rule = gauss_legendre_rule(max(panels, 2 ** getattr(trial, "levels", 0)))
    du = np.asarray(exact_derivative(rule.nodes), dtype=np.complex128)
    dphi = trial.derivative_matrix(rule.nodes)
    coefficients = (dphi.conj() * (du * rule.weights)[:, None]).sum(axis=0)
    energy = float(np.sum(rule.weights * np.abs(du) ** 2))
    tail = max(energy - float(np.vdot(coefficients, coefficients).real), 0.0)
    return coefficients, tail


def diffusion_exact_derivative(problem: AdrProblem) -> Callable[[np.ndarray], np.ndarray]:
    """u' da solução exata de −μu'' = F com μ, F constantes: u = F·x(1−x)/(2μ)."""
    constant_data = problem.has_constant_coefficients and problem.forcing.constant is not None
    if not constant_data or problem.beta_adv.constant != 0 or problem.rho_reac.constant != 0:
        raise ArgumentError("Solução exata conhecida apenas para difusão pura com μ e F constantes.")
    scale = problem.forcing.constant / (2.0 * problem.mu.constant)
    return lambda x: scale * (1.0 - 2.0 * np.asarray(x))


def reference_coefficients(
    problem: AdrProblem,
    trial: H10System,
    exact_derivative: Callable[[np.ndarray], np.ndarray] | None = None,
) -> tuple[np.ndarray, float]:
    """Coeficientes de referência e energia de cauda para medir erros em H¹₀.

    Sem ``exact_derivative`` usa a solução fechada da difusão pura.
    """
    derivative = exact_derivative if exact_derivative is not None else diffusion_exact_derivative(problem)
    return h10_projection(trial, derivative)


def trial_norm(coefficients: npt.ArrayLike, trial: FunctionSystem | None = None) -> float:
    """‖Σ x_j φ_j‖_U; identidade como Gram para bases ortonormais."""
    v = np.asarray(coefficients, dtype=np.complex128).reshape(-1)
    if trial is None or trial.kind in _ORTHONORMAL_KINDS:
        return float(np.linalg.norm(v))
    if not isinstance(trial, H10System):
        raise ArgumentError(f"Base {trial.kind.value} não pertence a H¹₀.")
    return math.sqrt(max(float(np.vdot(v, h10_gram(trial).T @ v).real), 0.0))


def truncate(coefficients: npt.ArrayLike, L: float, trial: FunctionSystem | None = None) -> tuple[np.ndarray, bool]:
    """T_L v = min{1, L/‖v‖_U}·v; devolve também se o corte atuou."""
    if L <= 0:
        raise ArgumentError(f"L deve ser positivo; recebido {L}.")
    v = np.asarray(coefficients, dtype=np.complex128)
    norm = trial_norm(v, trial)
    if norm <= L:
        return v, False
    return v * (L / norm), True


@dataclass(frozen=True)
class CorsingRipPrediction:
    bound: ComplexityBound
    admissible_epsilon: tuple[float, float]
    necessary_epsilon: float
    c_B: float
    C_B: float

    def to_json_dict(self) -> dict:
        return {
            **self.bound.to_json_dict(),
            "admissible_epsilon": list(self.admissible_epsilon),
            "necessary_epsilon_lower": self.necessary_epsilon,
            "c_B": self.c_B,
            "C_B": self.C_B,
        }


def corsing_admissible_interval(kappa: float, gamma: float) -> tuple[float, float]:
    """Intervalo (1 − (1−γ)/κ, 1) de ε para a RIP da matriz CORSING.

    Raises:
        AdmissibleRangeError: Se o intervalo for vazio.
    """
    if not 0 < gamma < 1:
        raise ArgumentError(f"gamma deve estar em (0, 1); recebido {gamma}.")
    if kappa <= 0:
        raise ArgumentError(f"κ deve ser positivo; recebido {kappa}.")
    low = 1.0 - (1.0 - gamma) / kappa
    if low >= 1.0:
        raise AdmissibleRangeError(f"Intervalo de ε vazio para κ={kappa:.6g}, γ={gamma:.6g}.")
    return max(low, 0.0), 1.0


def corsing_rip_prediction(
    kappa: float,
    gamma: float,
    s: int,
    N: int,
    nu_l1: float,
    *,
    epsilon: float | None = None,
    C_phi: float = 1.0,
    C_xi: float = 1.0,
    c_phi: float = 1.0,
    c_xi: float = 1.0,
    alpha: float = 1.0,
    beta: float = 1.0,
) -> CorsingRipPrediction:
    """Previsão da RIP do CORSING: η = ε − 1 + (1−γ)/κ, m exigido e falha.

    Sem ``epsilon`` usa o ponto médio do intervalo admissível. A condição
    necessária ε > 1 − 1/κ acompanha o relatório.
    """
    low, high = corsing_admissible_interval(kappa, gamma)
    eps = 0.5 * (low + high) if epsilon is None else float(epsilon)
    inputs = ComplexityInputs(
        s=s, N=N, epsilon=eps, gamma=gamma, kappa=kappa, nu_l1=nu_l1, C_phi=C_phi, C_xi=C_xi, beta=beta
    )
    bound = sample_complexity(ComplexityRegime.CORSING_RIP, inputs)
    return CorsingRipPrediction(
        bound=bound,
        admissible_epsilon=(low, high),
        necessary_epsilon=max(1.0 - 1.0 / kappa, 0.0),
        c_B=(1.0 - gamma) * c_phi * c_xi * alpha**2,
        C_B=C_phi * C_xi * beta**2,
    )


def corsing_failure_probability(
    m: int,
    s: int,
    nu_l1: float,
    eta: float,
    *,
    C_phi: float = 1.0,
    C_xi: float = 1.0,
    beta: float = 1.0,
) -> float:
    """ζ = 2exp(−min{1, C_φ²C_ξ²β⁴}·η²m/(5¹²·s·‖ν‖₁²))."""
    damping = min(1.0, C_phi**2 * C_xi**2 * beta**4)
    exponent = damping * eta**2 * m / (teoria.CORSING_FAILURE_DENOMINATOR * s * nu_l1**2)
    return min(1.0, 2.0 * math.exp(-exponent))


def corsing_error_bound(epsilon: float, best_error: float, L: float, zeta: float) -> float:
    """(1 + (1+C)/√(1−ε))·inf_w ‖u − w‖ + 2Lζ com C = 49."""
    if not 0 <= epsilon < 1:
        raise ArgumentError(f"epsilon deve estar em [0, 1); recebido {epsilon}.")
    factor = 1.0 + (1.0 + teoria.C_OMP) / math.sqrt(1.0 - epsilon)
    return factor * best_error + 2.0 * L * zeta
