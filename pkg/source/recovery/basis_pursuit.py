"""Basis pursuit com ruído (BP_ζ) e sua versão ponderada.

O problema min ‖z‖_{w,1} s.a. ‖Az − y‖₂ ≤ ζ é resolvido por ADMM com a
projeção exata no conjunto viável (equação secular resolvida por Newton
na SVD de A). Os iterados retornados são sempre viáveis e a otimalidade é
certificada por um limite inferior dual: qualquer λ com |(Aᴴλ)_j| ≤ w_j
fornece Re⟨λ, y⟩ − ζ‖λ‖₂ ≤ ótimo.
"""

from __future__ import annotations

import logging
import math

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import (
    BP_FEASIBILITY_ABSOLUTE_SLACK,
    BP_FEASIBILITY_RELATIVE_SLACK,
    BP_GAP_CHECK_EVERY,
    BP_MAX_ITERATIONS,
    BP_RANGE_RELATIVE_SLACK,
    BP_TOLERANCE,
    RANK_RELATIVE_TOLERANCE,
)
from source.numkit.errors import ArgumentError, ConvergenceError, DimensionError, InfeasibleProblemError
from source.numkit.matrices import as_complex_matrix, as_complex_vector
from source.recovery.signals import RecoveryOutcome, WeightVector

logger = logging.getLogger(__name__)

_NEWTON_MAX_STEPS = 100
_SUPPORT_RELATIVE_THRESHOLD = 1e-9


class ConstraintProjector:
    """Projeção euclidiana em {z : ‖Az − y‖₂ ≤ ζ}."""

    def __init__(self, A: np.ndarray, y: np.ndarray, zeta: float):
        self.A = A
        self.y = y
        self.zeta = float(zeta)
        try:
            U, sigma, Vh = np.linalg.svd(A, full_matrices=False)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(f"SVD de A não convergiu: {exc}") from exc
        rank = int(np.sum(sigma > sigma[0] * RANK_RELATIVE_TOLERANCE)) if sigma.size and sigma[0] > 0 else 0
        self.U = U[:, :rank]
        self.sigma = sigma[:rank]
        self.Vh = Vh[:rank]
        self.b = self.U.conj().T @ y
        # dist(y, Im A) pelo resíduo explícito, não por ‖y‖² − ‖Uᴴy‖²
        y_perp = float(np.linalg.norm(y - self.U @ self.b))
        self.y_perp_sq = y_perp**2

        limit = (
            self.zeta * (1.0 + BP_FEASIBILITY_RELATIVE_SLACK)
            + BP_RANGE_RELATIVE_SLACK * float(np.linalg.norm(y))
            + BP_FEASIBILITY_ABSOLUTE_SLACK
        )
        if y_perp > limit:
            raise InfeasibleProblemError(
                f"Conjunto viável vazio: dist(y, Im A) = {y_perp:.6g} > ζ = {self.zeta:.6g}."
            )
        self.zeta_range_sq = self.zeta**2 - self.y_perp_sq

    def project(self, v: np.ndarray) -> np.ndarray:
        a = self.Vh @ v
        c = self.sigma * a - self.b
        if float(np.vdot(c, c).real) + self.y_perp_sq <= self.zeta**2:
            return v
        if self.zeta_range_sq <= (BP_FEASIBILITY_ABSOLUTE_SLACK * (1.0 + self.zeta)) ** 2:
            target = self.b / self.sigma
        else:
            mu = self._secular_root(c)
            target = (a + mu * self.sigma * self.b) / (1.0 + mu * self.sigma**2)
        return v + self.Vh.conj().T @ (target - a)

    def _secular_root(self, c: np.ndarray) -> float:
        # p_i(μ) = g_i/(h_i + μ); 1/‖p(μ)‖ é côncava e crescente, Newton pela esquerda é monótono.
        g_sq = np.abs(c / self.sigma**2) ** 2
        h = 1.0 / self.sigma**2
        zc = math.sqrt(self.zeta_range_sq)
        mu = 0.0
        for _ in range(_NEWTON_MAX_STEPS):
            denom = h + mu
            norm_p = math.sqrt(float(np.sum(g_sq / denom**2)))
            if norm_p <= zc * (1.0 + 1e-15):
                break
            slope = float(np.sum(g_sq / denom**3)) / norm_p**3
            step = (1.0 / zc - 1.0 / norm_p) / slope
            mu += step
            if step <= mu * 1e-16:
                break
        return mu

    def pseudo_inverse_adjoint(self, v: np.ndarray) -> np.ndarray:
        """(Aᴴ)⁺ v."""
        return self.U @ ((self.Vh @ v) / self.sigma)


def _soft_threshold(v: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
    magnitude = np.abs(v)
    shrink = np.maximum(magnitude - thresholds, 0.0)
    return np.where(magnitude > 0, v * (shrink / np.where(magnitude > 0, magnitude, 1.0)), 0.0)


def _dual_lower_bound(A: np.ndarray, y: np.ndarray, zeta: float, w: np.ndarray, lam: np.ndarray) -> float:
    ratio = float(np.max(np.abs(A.conj().T @ lam) / w))
    if ratio <= 0 or not math.isfinite(ratio):
        return 0.0
    coefficient = float(np.vdot(lam, y).real) - zeta * float(np.linalg.norm(lam))
    return max(coefficient, 0.0) / ratio


def weighted_basis_pursuit(
    A: npt.ArrayLike,
    y: npt.ArrayLike,
    zeta: float,
    w: WeightVector | npt.ArrayLike,
    *,
    tol: float = BP_TOLERANCE,
    max_iter: int = BP_MAX_ITERATIONS,
) -> RecoveryOutcome:
    """Resolve min Σ w_j|z_j| s.a. ‖Az − y‖₂ ≤ ζ.

    Args:
        A: Matriz m×N.
        y: Medições.
        zeta: Raio do ruído, ζ ≥ 0.
        w: Pesos w_j ≥ 1.
        tol: Tolerância do gap de dualidade (relativa a max(1, objetivo)).
        max_iter: Limite de iterações do ADMM.

    Returns:
        RecoveryOutcome com ``converged=True`` quando o gap foi certificado.

    Raises:
        InfeasibleProblemError: Se nenhum z satisfaz a restrição.
        ArgumentError: Para ζ negativo ou tolerâncias inválidas.
    """
    matrix = as_complex_matrix(A, name="A")
    m, N = matrix.shape
    b = as_complex_vector(y, m, name="y")
    weights = w if isinstance(w, WeightVector) else WeightVector(np.asarray(w))
    if weights.N != N:
        raise DimensionError(f"w tem {weights.N} entradas; A tem {N} colunas.")
    if zeta < 0 or not math.isfinite(zeta):
        raise ArgumentError(f"zeta deve ser ≥ 0 e finito; recebido {zeta}.")
    if tol <= 0 or max_iter < 1:
        raise ArgumentError(f"tol e max_iter devem ser positivos; recebido tol={tol}, max_iter={max_iter}.")
    wv = weights.w
    algorithm = "wbp" if np.any(wv != 1.0) else "bp"

    if float(np.linalg.norm(b)) <= zeta:
        return RecoveryOutcome(
            algorithm=algorithm,
            estimate=np.zeros(N, dtype=np.complex128),
            support=(),
            residual_l2=float(np.linalg.norm(b)),
            iterations=0,
            converged=True,
            objective=0.0,
            duality_gap=0.0,
        )

    projector = ConstraintProjector(matrix, b, zeta)
    z = projector.project(np.zeros(N, dtype=np.complex128))
    u = np.zeros(N, dtype=np.complex128)
    rho = 10.0 * float(np.mean(wv)) / max(float(np.max(np.abs(z))), 1e-12)

    converged = False
    gap = math.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        x = _soft_threshold(z - u, wv / rho)
        z_previous = z
        z = projector.project(x + u)
        u = u + x - z

        if iterations % BP_GAP_CHECK_EVERY == 0 or iterations == max_iter:
            primal = float(np.sum(wv * np.abs(z)))
            dual_candidate = projector.pseudo_inverse_adjoint(rho * u)
            dual = max(
                _dual_lower_bound(matrix, b, zeta, wv, b - matrix @ z),
                _dual_lower_bound(matrix, b, zeta, wv, dual_candidate),
                _dual_lower_bound(matrix, b, zeta, wv, -dual_candidate),
            )
            gap = max(primal - dual, 0.0)
            if gap <= tol * max(1.0, primal):
                converged = True
                break

            primal_residual = float(np.linalg.norm(x - z))
            dual_residual = rho * float(np.linalg.norm(z - z_previous))
            if primal_residual > 10.0 * dual_residual:
                rho *= 2.0
                u = u / 2.0
            elif dual_residual > 10.0 * primal_residual:
                rho /= 2.0
                u = u * 2.0

    if not converged:
        logger.warning("Basis pursuit atingiu %d iterações sem certificar o gap (gap=%.3e)", iterations, gap)

    magnitude = np.abs(z)
    support = np.flatnonzero(magnitude > _SUPPORT_RELATIVE_THRESHOLD * max(1.0, float(magnitude.max())))
    return RecoveryOutcome(
        algorithm=algorithm,
        estimate=z,
        support=tuple(int(j) for j in support),
        residual_l2=float(np.linalg.norm(matrix @ z - b)),
        iterations=iterations,
        converged=converged,
        objective=float(np.sum(wv * magnitude)),
        duality_gap=gap,
        diagnostics={"rho": rho, "zeta": float(zeta), "tol": tol},
    )


def basis_pursuit(
    A: npt.ArrayLike,
    y: npt.ArrayLike,
    zeta: float,
    *,
    tol: float = BP_TOLERANCE,
    max_iter: int = BP_MAX_ITERATIONS,
) -> RecoveryOutcome:
    """BP_ζ: min ‖z‖₁ s.a. ‖Az − y‖₂ ≤ ζ."""
    matrix = as_complex_matrix(A, name="A")
    return weighted_basis_pursuit(matrix, y, zeta, WeightVector.ones(matrix.shape[1]), tol=tol, max_iter=max_iter)


def rescaled_constraint_matrix(A: npt.ArrayLike, m: int, C_psi: float = 1.0) -> np.ndarray:
    """√(C·m)·A: restrição sobre as amostras brutas F(ω_i)."""
    return as_complex_matrix(A) * math.sqrt(C_psi * m)
