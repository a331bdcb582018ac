"""Montagem da matriz de Petrov-Galerkin B_qj = a(φ_j, ξ_q) e do vetor c_q = ℱ(ξ_q)."""

from __future__ import annotations

import logging
import math

import numpy as np

from source.constantes.hiper_parametros import (
    CORSING_QUADRATURE_PANELS,
    QUADRATURE_AGREEMENT_TOLERANCE,
)
from source.constantes.models import SystemKind
from source.corsing.problem import AdrProblem, PetrovGalerkinSetup
from source.numkit.errors import ArgumentError, QuadratureError
from source.systems.function_systems import H10System
from source.systems.quadrature import gauss_legendre_rule

logger = logging.getLogger(__name__)

_ROW_CHUNK = 64


def _test_frequencies(M: int) -> np.ndarray:
    return np.arange(1, M + 1, dtype=np.float64) * np.pi


def _sine_trial_closed_form(N: int, M: int, mu: float, adv: float, reac: float) -> np.ndarray:
    r = np.arange(1, M + 1)[:, None]
    p = np.arange(1, N + 1)[None, :]
    same = r == p
    parity = 1.0 - (-1.0) ** (r + p)
    with np.errstate(divide="ignore", invalid="ignore"):
        advection = np.where(same, 0.0, 2.0 * parity / (np.pi**2 * (r**2 - p**2)))
    reaction = np.where(same, 1.0 / (p * np.pi) ** 2, 0.0)
    return mu * same.astype(np.float64) + adv * advection + reac * reaction


def _hat_trial_closed_form(trial: H10System, M: int, mu: float, adv: float, reac: float) -> np.ndarray:
    omega = _test_frequencies(M)[:, None]
    c = trial.centers[None, :]
    h = trial.half_widths[None, :]
    scale = trial.normalization[None, :] / h
    sin_part = 2.0 * np.sin(omega * c) - np.sin(omega * (c - h)) - np.sin(omega * (c + h))
    cos_part = np.cos(omega * (c - h)) + np.cos(omega * (c + h)) - 2.0 * np.cos(omega * c)
    diffusion = scale * math.sqrt(2.0) / omega * sin_part
    advection = scale * math.sqrt(2.0) / omega**2 * cos_part
    reaction = diffusion / omega**2
    return mu * diffusion + adv * advection + reac * reaction


def _quadrature_matrix(trial: H10System, problem: AdrProblem, N: int, M: int, panels: int) -> np.ndarray:
    rule = gauss_legendre_rule(panels)
    x, w = rule.nodes, rule.weights
    phi = trial.matrix(x, np.arange(N)).real
    dphi = trial.derivative_matrix(x, np.arange(N)).real
    mu_w = problem.mu(x) * w
    adv_w = problem.beta_adv(x) * w
    reac_w = problem.rho_reac(x) * w
    B = np.empty((M, N))
    for start in range(0, M, _ROW_CHUNK):
        omega = _test_frequencies(M)[start:start + _ROW_CHUNK]
        arg = np.outer(x, omega)
        xi = math.sqrt(2.0) * np.sin(arg) / omega
        dxi = math.sqrt(2.0) * np.cos(arg)
        B[start:start + omega.size] = (
            (dxi * mu_w[:, None]).T @ dphi
            + (xi * adv_w[:, None]).T @ dphi
            + (xi * reac_w[:, None]).T @ phi
        )
    return B


def _quadrature_forcing(problem: AdrProblem, M: int, panels: int) -> np.ndarray:
    rule = gauss_legendre_rule(panels)
    weighted = problem.forcing(rule.nodes) * rule.weights
    c = np.empty(M)
    for start in range(0, M, _ROW_CHUNK):
        omega = _test_frequencies(M)[start:start + _ROW_CHUNK]
        xi = math.sqrt(2.0) * np.sin(np.outer(rule.nodes, omega)) / omega
        c[start:start + omega.size] = weighted @ xi
    return c


def _panels_for(M: int, trial: H10System | None = None) -> int:
    # potência de 2: quebras dos chapéus diádicos caem nas bordas dos painéis;
    # pelo menos um painel por período de sin(Mπx)
    levels = getattr(trial, "levels", 0)
    needed = max(CORSING_QUADRATURE_PANELS, math.ceil(M / 2), 2**levels)
    return 2 ** math.ceil(math.log2(needed))


def _check_agreement(coarse: np.ndarray, fine: np.ndarray, what: str) -> None:
    gap = np.abs(fine - coarse) - QUADRATURE_AGREEMENT_TOLERANCE * (1.0 + np.abs(fine))
    if np.any(gap > 0):
        position = np.unravel_index(int(np.argmax(gap)), gap.shape)
        q = int(position[0]) + 1
        detail = f"(q={q}, j={int(position[1])})" if len(position) > 1 else f"(q={q})"
        raise QuadratureError(f"Quadratura de {what} não convergiu em {detail}.")


def assemble_forcing(problem: AdrProblem, M: int) -> np.ndarray:
    """c_q = ∫ F ξ_q; forma fechada para F constante."""
    value = problem.forcing.constant
    if value is not None:
        omega = _test_frequencies(M)
        return value * math.sqrt(2.0) * (1.0 - np.cos(omega)) / omega**2
    panels = _panels_for(M)
    coarse = _quadrature_forcing(problem, M, panels)
    fine = _quadrature_forcing(problem, M, 2 * panels)
    _check_agreement(coarse, fine, "ℱ(ξ_q)")
    return fine


def assemble_full(setup: PetrovGalerkinSetup, problem: AdrProblem, N: int, M: int) -> tuple[np.ndarray, np.ndarray]:
    """B (M×N) e c (M) para as primeiras N funções trial e M funções teste.

    Coeficientes constantes com trial seno ou chapéu usam integrais em
    forma fechada; os demais casos usam Gauss-Legendre composta,
    conferida contra o dobro de painéis.

    Raises:
        ArgumentError: Se N ou M excederem as bases do setup.
        QuadratureError: Se os dois refinamentos discordarem; cita (q, j).
    """
    if not 1 <= N <= setup.trial.N:
        raise ArgumentError(f"N={N} fora de [1, {setup.trial.N}].")
    if not 1 <= M <= setup.test.N:
        raise ArgumentError(f"M={M} fora de [1, {setup.test.N}].")

    trial = setup.trial
    if problem.has_constant_coefficients and trial.kind in (SystemKind.SINE_H10, SystemKind.HAT_HIERARCHICAL):
        mu, adv, reac = problem.mu.constant, problem.beta_adv.constant, problem.rho_reac.constant
        if trial.kind is SystemKind.SINE_H10:
            B = _sine_trial_closed_form(N, M, mu, adv, reac)
        else:
            B = _hat_trial_closed_form(trial, M, mu, adv, reac)[:, :N]
    else:
        panels = _panels_for(M, trial)
        logger.info("Montagem por quadratura: M=%d, N=%d, %d painéis", M, N, panels)
        coarse = _quadrature_matrix(trial, problem, N, M, panels)
        B = _quadrature_matrix(trial, problem, N, M, 2 * panels)
        _check_agreement(coarse, B, "a(φ_j, ξ_q)")

    c = assemble_forcing(problem, M)
    if not (np.all(np.isfinite(B)) and np.all(np.isfinite(c))):
        raise QuadratureError("Montagem produziu entradas não finitas.")
    return B.astype(np.complex128), c.astype(np.complex128)
