"""Melhor aproximação s-termos, normas ponderadas e constantes de erro da NSP."""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from source.numkit.errors import ArgumentError
from source.recovery.signals import SparseSignal, WeightVector


def best_s_term(x: npt.ArrayLike, s: int) -> SparseSignal:
    """Mantém as ``s`` entradas de maior módulo; empates ficam com o menor índice."""
    dense = np.asarray(x, dtype=np.complex128).reshape(-1)
    if s < 0:
        raise ArgumentError(f"s deve ser ≥ 0; recebido {s}.")
    order = np.lexsort((np.arange(dense.size), -np.abs(dense)))
    keep = np.sort(order[: min(s, dense.size)])
    return SparseSignal(N=dense.size, indices=keep, values=dense[keep])


def best_s_term_error(x: npt.ArrayLike, s: int, p: float = 1.0) -> float:
    """σ_s(x)_p = ‖x − H_s(x)‖_p."""
    dense = np.asarray(x, dtype=np.complex128).reshape(-1)
    residual = dense - best_s_term(dense, s).to_dense()
    return float(np.linalg.norm(residual, ord=p))


def weighted_norms(x: npt.ArrayLike, w: WeightVector) -> tuple[float, float]:
    """Retorna (‖x‖_{w,1}, ‖x‖_{w,0}) = (Σ w_j|x_j|, Σ_{x_j≠0} w_j²)."""
    dense = np.asarray(x, dtype=np.complex128).reshape(-1)
    if dense.size != w.N:
        raise ArgumentError(f"x tem {dense.size} entradas e w tem {w.N}.")
    weighted_l1 = float(np.sum(w.w * np.abs(dense)))
    weighted_l0 = float(np.sum(w.w[dense != 0] ** 2))
    return weighted_l1, weighted_l0


def nsp_recovery_constants(alpha: float, tau: float) -> tuple[float, float]:
    """Constantes (c₀, c₁) do erro sob a NSP robusta em ℓ2 com parâmetros (α, τ).

    ‖f − f#‖₂ ≤ c₀·σ_s(f)₁/√s + c₁·ζ para α ∈ (0, 1).
    """
    if not 0 < alpha < 1:
        raise ArgumentError(f"alpha deve estar em (0, 1); recebido {alpha}.")
    if tau <= 0 or not math.isfinite(tau):
        raise ArgumentError(f"tau deve ser positivo e finito; recebido {tau}.")
    c0 = (1.0 + alpha) ** 2 / (1.0 - alpha)
    c1 = (3.0 + alpha) * tau / (1.0 - alpha)
    return c0, c1
