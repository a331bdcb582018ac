"""Conjuntos de medições aleatórias: amostragem de Riesz e por coerência local."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from source.numkit.errors import ArgumentError, SamplingError
from source.numkit.matrices import as_complex_matrix
from source.numkit.random_streams import RandomStream
from source.numkit.supports import batched, iter_supports
from source.constantes.hiper_parametros import SUPPORT_BATCH_SIZE
from source.systems.function_systems import FunctionSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeasurementEnsemble:
    """Matriz m×N de medições com a procedência do sorteio.

    ``draws`` guarda os pontos ω_i (Riesz) ou os índices de linha sorteados
    (coerência); ``probabilities`` só existe no segundo caso.
    """

    matrix: np.ndarray
    scaling: float
    draws: np.ndarray
    stream: RandomStream
    kind: str
    probabilities: np.ndarray | None = None
    system: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return int(self.matrix.shape[0])

    @property
    def N(self) -> int:
        return int(self.matrix.shape[1])

    def to_json_dict(self, matrix_ref: str | None = None) -> dict:
        payload = {
            "kind": self.kind,
            "m": self.m,
            "N": self.N,
            "scaling": self.scaling,
            "draws": np.asarray(self.draws).tolist(),
            "stream": self.stream.to_json_dict(),
            "system": self.system,
            "matrix_ref": matrix_ref,
        }
        if self.probabilities is not None:
            payload["probabilities"] = np.asarray(self.probabilities).tolist()
        return payload


def sample_riesz_matrix(system: FunctionSystem, m: int, stream: RandomStream) -> MeasurementEnsemble:
    """A_ij = ψ_j(ω_i)/√(m·C_psi) com ω_1..ω_m i.i.d. da medida do sistema.

    Raises:
        ArgumentError: Se m < 1.
    """
    if m < 1:
        raise ArgumentError(f"m deve ser ≥ 1; recebido {m}.")
    points = system.sample(stream.generator(), m)
    scaling = 1.0 / math.sqrt(m * system.C_psi)
    matrix = as_complex_matrix(system.matrix(points) * scaling)
    return MeasurementEnsemble(
        matrix=matrix,
        scaling=scaling,
        draws=points,
        stream=stream,
        kind="riesz",
        system=system.describe(),
    )


@dataclass(frozen=True)
class CoherenceProfile:
    nu: np.ndarray
    nu_l1: float

    def to_json_dict(self) -> dict:
        return {"nu": self.nu.tolist(), "nu_l1": self.nu_l1}


def local_coherence(B: npt.ArrayLike) -> CoherenceProfile:
    """ν_j = max_n |b_jn|² por linha de B."""
    matrix = as_complex_matrix(B, name="B")
    nu = np.max(np.abs(matrix) ** 2, axis=1)
    return CoherenceProfile(nu=nu, nu_l1=float(nu.sum()))


def coherence_sampler(
    B: npt.ArrayLike,
    profile: CoherenceProfile,
    C_B: float,
    m: int,
    stream: RandomStream,
) -> MeasurementEnsemble:
    """Sorteia linhas de B com probabilidade ν_j/‖ν‖₁ e reescala por √(‖ν‖₁/ν_j).

    A matriz resultante é (X_i)/√(m·C_B) com X_i = √(‖ν‖₁/ν_τ_i)·b_τ_i.

    Raises:
        SamplingError: Se ν for negativo, não finito, nulo, ou não dominar |b_jn|².
    """
    matrix = as_complex_matrix(B, name="B")
    nu = np.asarray(profile.nu, dtype=np.float64)
    if m < 1:
        raise ArgumentError(f"m deve ser ≥ 1; recebido {m}.")
    if C_B <= 0:
        raise ArgumentError(f"C_B deve ser positivo; recebido {C_B}.")
    if nu.shape != (matrix.shape[0],):
        raise SamplingError(f"Perfil com {nu.shape[0]} entradas para B com {matrix.shape[0]} linhas.")
    if not np.all(np.isfinite(nu)) or np.any(nu < 0):
        raise SamplingError("Perfil de coerência com entradas negativas ou não finitas.")
    total = float(nu.sum())
    if total <= 0:
        raise SamplingError("Perfil de coerência com soma zero.")
    row_max = np.max(np.abs(matrix) ** 2, axis=1)
    violations = np.flatnonzero(row_max > nu * (1.0 + 1e-12) + 1e-300)
    if violations.size:
        raise SamplingError(
            f"Perfil não domina a coerência local na linha {int(violations[0])}."
        )

    probabilities = nu / total
    draws = stream.generator().choice(matrix.shape[0], size=m, p=probabilities)
    rescale = np.sqrt(total / nu[draws])
    scaling = 1.0 / math.sqrt(m * C_B)
    rows = matrix[draws] * rescale[:, None] * scaling
    logger.debug("Amostragem por coerência: %d linhas de %d, ‖ν‖₁=%.6g", m, matrix.shape[0], total)
    return MeasurementEnsemble(
        matrix=as_complex_matrix(rows),
        scaling=scaling,
        draws=draws,
        stream=stream,
        kind="coherence",
        probabilities=probabilities,
        system={"rows_of_B": int(matrix.shape[0]), "C_B": float(C_B), "nu_l1": total},
    )


@dataclass(frozen=True)
class SparseEigenBounds:
    c_B: float
    C_B: float
    supports_enumerated: int


def sparse_eigen_bounds(B: npt.ArrayLike, s: int) -> SparseEigenBounds:
    """Extremos de λ(B_Sᴴ B_S) sobre todos os |S| = s por enumeração exata."""
    matrix = as_complex_matrix(B, name="B")
    gram = matrix.conj().T @ matrix
    lam_min, lam_max, count = math.inf, 0.0, 0
    for batch in batched(iter_supports(matrix.shape[1], s), SUPPORT_BATCH_SIZE):
        idx = np.asarray(batch)
        blocks = gram[idx[:, :, None], idx[:, None, :]]
        eigenvalues = np.linalg.eigvalsh(blocks)
        lam_min = min(lam_min, float(eigenvalues[:, 0].min()))
        lam_max = max(lam_max, float(eigenvalues[:, -1].max()))
        count += len(batch)
    return SparseEigenBounds(c_B=max(lam_min, 0.0), C_B=lam_max, supports_enumerated=count)
