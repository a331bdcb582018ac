"""Quadratura de Gauss-Legendre composta em (0, 1)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from source.constantes.hiper_parametros import QUADRATURE_ORDER, SYSTEM_QUADRATURE_PANELS
from source.numkit.errors import ArgumentError


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    panels: int
    order: int

    def integrate(self, values: np.ndarray) -> np.ndarray:
        """Integra ao longo do primeiro eixo de ``values`` (um valor por nó)."""
        return np.tensordot(self.weights, values, axes=(0, 0))


@lru_cache(maxsize=16)
def gauss_legendre_rule(panels: int = SYSTEM_QUADRATURE_PANELS, order: int = QUADRATURE_ORDER) -> QuadratureRule:
    """Regra composta com ``panels`` painéis uniformes de ``order`` pontos."""
    if panels < 1 or order < 1:
        raise ArgumentError(f"Quadratura inválida: panels={panels}, order={order}.")
    reference_nodes, reference_weights = np.polynomial.legendre.leggauss(order)
    left = np.arange(panels) / panels
    half = 0.5 / panels
    nodes = (left[:, None] + half * (reference_nodes[None, :] + 1.0)).reshape(-1)
    weights = np.tile(half * reference_weights, panels)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, panels=panels, order=order)
