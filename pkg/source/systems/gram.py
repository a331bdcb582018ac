"""Matrizes de Gram em L² e H¹₀ calculadas por quadratura."""

from __future__ import annotations

import numpy as np

from source.systems.function_systems import FunctionSystem, H10System
from source.systems.quadrature import QuadratureRule, gauss_legendre_rule


def h10_gram(system: H10System, rule: QuadratureRule | None = None) -> np.ndarray:
    """G_jk = ∫ ψ_j'·conj(ψ_k') dx sobre (0, 1)."""
    rule = rule or gauss_legendre_rule()
    derivatives = system.derivative_matrix(rule.nodes)
    weighted = derivatives * rule.weights[:, None]
    return weighted.T @ derivatives.conj()


def l2_gram(system: FunctionSystem, rule: QuadratureRule | None = None) -> np.ndarray:
    """C_jk = E[conj(ψ_j(ω))·ψ_k(ω)] com ω uniforme em (0, 1); covariância das linhas amostradas."""
    rule = rule or gauss_legendre_rule()
    values = system.matrix(rule.nodes)
    return values.conj().T @ (values * rule.weights[:, None])
