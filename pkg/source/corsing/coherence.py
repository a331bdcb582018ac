"""Coerência local em a(·,·) e escolha do nível de truncamento M."""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from source.corsing.assembly import assemble_full
from source.corsing.problem import AdrProblem, PetrovGalerkinSetup
from source.numkit.errors import ArgumentError, SamplingError, TruncationError
from source.systems.ensembles import CoherenceProfile

logger = logging.getLogger(__name__)


def local_a_coherence(
    setup: PetrovGalerkinSetup,
    problem: AdrProblem,
    N: int,
    M: int,
    *,
    B: np.ndarray | None = None,
    upper_bound: npt.ArrayLike | None = None,
) -> tuple[np.ndarray, CoherenceProfile]:
    """μ_q^N = max_j |a(φ_j, ξ_q)|² e o perfil ν^{N,M} ≥ μ (padrão: ν = μ).

    Args:
        B: Matriz já montada (M×N ou maior); montada aqui se ausente.
        upper_bound: Limite superior analítico para ν; precisa dominar μ.
    """
    if B is None:
        B, _ = assemble_full(setup, problem, N, M)
    block = np.asarray(B)[:M, :N]
    mu = np.max(np.abs(block) ** 2, axis=1)
    if upper_bound is None:
        nu = mu.copy()
    else:
        nu = np.asarray(upper_bound, dtype=np.float64).reshape(-1)[:M]
        if nu.shape != mu.shape or np.any(nu < mu * (1.0 - 1e-12)):
            raise SamplingError("Limite superior informado não domina a coerência local μ.")
    return mu, CoherenceProfile(nu=nu, nu_l1=float(nu.sum()))


def truncation_threshold(s: float, gamma: float, alpha_infsup: float, c_phi: float, c_xi: float) -> float:
    return alpha_infsup**2 * gamma * c_phi * c_xi / s


def choose_truncation(
    mu_tail: npt.ArrayLike,
    s: float,
    gamma: float,
    alpha_infsup: float,
    c_phi: float = 1.0,
    c_xi: float = 1.0,
    *,
    tail_known_zero: bool = False,
) -> int:
    """Menor M ≥ 1 com Σ_{q>M} μ_q ≤ α²·γ·c_φ·c_ξ/s.

    ``mu_tail`` cobre q = 1..cap. Se só M = cap satisfaz a condição, o
    limite da base de teste é insuficiente (nada se sabe além dele), a menos
    que ``tail_known_zero`` garanta μ_q = 0 para todo q > cap; nesse caso
    M = cap é aceito.

    Raises:
        ArgumentError: Para γ ∉ (0, 1) ou s, α não positivos.
        TruncationError: Se a condição não for atingida antes do limite.
    """
    mu = np.asarray(mu_tail, dtype=np.float64).reshape(-1)
    if not 0 < gamma < 1:
        raise ArgumentError(f"gamma deve estar em (0, 1); recebido {gamma}.")
    if s <= 0 or alpha_infsup <= 0 or mu.size == 0:
        raise ArgumentError("s, α e o vetor μ devem ser não vazios e positivos.")
    threshold = truncation_threshold(s, gamma, alpha_infsup, c_phi, c_xi)
    tails = np.concatenate([np.cumsum(mu[::-1])[::-1], [0.0]])
    admissible = np.flatnonzero(tails[1:] <= threshold) + 1
    M = int(admissible[0])
    if M >= mu.size and not tail_known_zero:
        raise TruncationError(
            f"Limite de teste {mu.size} insuficiente: cauda Σ_{{q>{mu.size - 1}}} μ_q = "
            f"{tails[mu.size - 1]:.6g} > {threshold:.6g}."
        )
    logger.debug("Truncamento: M=%d com cauda %.3e (limiar %.3e)", M, tails[M], threshold)
    return M
