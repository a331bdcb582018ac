"""Estimativas da propriedade de espaço nulo robusta em ℓ2 (NSP)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import ENUMERATION_CAP, NSP_GRID_RESOLUTION, SUPPORT_BATCH_SIZE
from source.numkit.errors import ArgumentError
from source.numkit.matrices import as_complex_matrix
from source.numkit.random_streams import RandomStream
from source.numkit.supports import check_enumeration_cap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NspEstimate:
    """inf ‖Az‖₂ observado no cone e τ = 1/inf correspondente.

    ``certified`` só é verdadeiro para o valor exato de ``cone_infimum_exact``;
    a versão Monte Carlo é heurística.
    """

    s: int
    alpha: float
    inf_norm: float
    tau: float
    certified: bool
    trials: int = 0

    @property
    def tau_is_infinite(self) -> bool:
        return math.isinf(self.tau)

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "alpha": self.alpha,
            "inf_norm": self.inf_norm,
            "tau": None if self.tau_is_infinite else self.tau,
            "tau_is_infinite": self.tau_is_infinite,
            "certified": self.certified,
            "trials": self.trials,
        }


def cone_radius(s: int, alpha: float) -> float:
    """Raio (2 + 1/α)·√s da bola ℓ1 que define o cone."""
    if not 0 < alpha < 1:
        raise ArgumentError(f"alpha deve estar em (0, 1); recebido {alpha}.")
    if s < 1:
        raise ArgumentError(f"s deve ser ≥ 1; recebido {s}.")
    return (2.0 + 1.0 / alpha) * math.sqrt(s)


def _estimate(s: int, alpha: float, inf_norm: float, certified: bool, trials: int = 0) -> NspEstimate:
    tau = math.inf if inf_norm <= 0 else 1.0 / inf_norm
    return NspEstimate(s=s, alpha=alpha, inf_norm=inf_norm, tau=tau, certified=certified, trials=trials)


def nsp_lower_bound(
    A: npt.ArrayLike,
    s: int,
    alpha: float,
    trials: int,
    stream: RandomStream,
) -> NspEstimate:
    """Estimativa Monte Carlo de inf{‖Az‖₂ : z ∈ (2+1/α)√s·B₁ ∩ S^{N−1}}.

    Sorteia vetores unitários com suporte de tamanho k ≤ ⌊(2+1/α)²s⌋,
    que pertencem ao cone pois ‖z‖₁ ≤ √k. O mínimo observado é um limite
    superior do ínfimo, portanto 1/mínimo subestima τ.
    """
    matrix = as_complex_matrix(A, name="A")
    N = matrix.shape[1]
    radius = cone_radius(s, alpha)
    if trials < 1:
        raise ArgumentError(f"trials deve ser ≥ 1; recebido {trials}.")

    max_support = max(1, min(N, int(math.floor(radius**2))))
    generator = stream.generator()
    best = math.inf
    for _ in range(trials):
        k = int(generator.integers(1, max_support + 1))
        support = generator.choice(N, size=k, replace=False)
        coefficients = generator.standard_normal(k) + 1j * generator.standard_normal(k)
        coefficients /= np.linalg.norm(coefficients)
        best = min(best, float(np.linalg.norm(matrix[:, support] @ coefficients)))
    logger.debug("NSP Monte Carlo: inf estimado %.6g em %d tentativas", best, trials)
    return _estimate(s, alpha, best, certified=False, trials=trials)


def cone_infimum_exact(A: npt.ArrayLike, s: int, alpha: float) -> NspEstimate:
    """Ínfimo exato quando (2+1/α)²s ≥ N, caso em que o cone cobre toda a esfera.

    O valor é σ_min(A) para m ≥ N e 0 caso contrário.

    Raises:
        ArgumentError: Se o cone não cobrir a esfera (ínfimo não tratável).
    """
    matrix = as_complex_matrix(A, name="A")
    m, N = matrix.shape
    radius = cone_radius(s, alpha)
    if radius**2 < N:
        raise ArgumentError(
            f"Ínfimo exato indisponível: (2+1/α)²s = {radius**2:.4g} < N = {N}."
        )
    if m < N:
        return _estimate(s, alpha, 0.0, certified=True)
    sigma = np.linalg.svd(matrix, compute_uv=False)
    return _estimate(s, alpha, float(sigma[-1]), certified=True)


def _l1_lattice_size(dim: int, budget: int) -> int:
    return sum(2**k * math.comb(dim, k) * math.comb(budget, k) for k in range(min(dim, budget) + 1))


@lru_cache(maxsize=None)
def _l1_lattice(dim: int, budget: int) -> np.ndarray:
    """Pontos inteiros n ∈ ℤ^dim com Σ|n_k| ≤ budget."""
    if dim == 0:
        return np.zeros((1, 0))
    blocks = []
    for value in range(-budget, budget + 1):
        tail = _l1_lattice(dim - 1, budget - abs(value))
        blocks.append(np.column_stack([np.full(tail.shape[0], float(value)), tail]))
    return np.vstack(blocks)


def nsp_grid_s1(
    A: npt.ArrayLike,
    alpha: float,
    *,
    resolution: int = NSP_GRID_RESOLUTION,
    cap: int = ENUMERATION_CAP,
) -> NspEstimate:
    """Busca em grade de inf ‖Az‖₂ no cone de ordem 1 ∩ S^{N−1}.

    O cone de ordem 1 é a união, sobre o pivô j, de {z : |z_j| ≥ α‖z_{−j}‖₁}.
    Para cada pivô fixa-se z_j = 1 e percorre-se a bola ‖r‖₁ ≤ 1/α das demais
    coordenadas (fronteira incluída) no reticulado de passo 1/(α·resolution).
    Os pontos da grade são reais e pertencem ao cone, então o mínimo é um
    limite superior do ínfimo, exato quando o minimizador está na grade.

    Raises:
        ArgumentError: Para alpha fora de (0, 1) ou resolution < 1.
        EnumerationCapError: Se a grade exceder ``cap`` pontos.
    """
    matrix = as_complex_matrix(A, name="A")
    N = matrix.shape[1]
    cone_radius(1, alpha)
    if resolution < 1:
        raise ArgumentError(f"resolution deve ser ≥ 1; recebido {resolution}.")
    points_per_pivot = _l1_lattice_size(N - 1, resolution)
    check_enumeration_cap(N * points_per_pivot, cap)

    offsets = _l1_lattice(N - 1, resolution) / (alpha * resolution)
    lengths = np.sqrt(1.0 + np.sum(offsets**2, axis=1))
    best = math.inf
    for j in range(N):
        others = np.delete(np.arange(N), j)
        for start in range(0, offsets.shape[0], SUPPORT_BATCH_SIZE):
            chunk = slice(start, start + SUPPORT_BATCH_SIZE)
            images = matrix[:, j][None, :] + offsets[chunk] @ matrix[:, others].T
            ratios = np.linalg.norm(images, axis=1) / lengths[chunk]
            best = min(best, float(ratios.min()))
    logger.debug("NSP em grade (s=1): inf %.6g sobre %d pontos", best, N * points_per_pivot)
    return _estimate(1, alpha, best, certified=False, trials=N * points_per_pivot)
