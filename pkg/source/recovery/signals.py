"""Sinais esparsos, pesos e o registro de saída das rotinas de recuperação."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from source.numkit.errors import ArgumentError, DimensionError


def _complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=np.complex128)]


@dataclass(frozen=True)
class SparseSignal:
    """Vetor de ℂ^N guardado por (índices, valores), sem zeros armazenados."""

    N: int
    indices: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        indices = np.asarray(self.indices, dtype=np.int64).reshape(-1)
        values = np.asarray(self.values, dtype=np.complex128).reshape(-1)
        if indices.shape != values.shape:
            raise DimensionError("Índices e valores com comprimentos diferentes.")
        if indices.size and (indices.min() < 0 or indices.max() >= self.N):
            raise DimensionError(f"Índice fora de [0, {self.N}).")
        if np.unique(indices).size != indices.size:
            raise DimensionError("Índices repetidos no sinal esparso.")
        order = np.argsort(indices, kind="stable")
        keep = values[order] != 0
        object.__setattr__(self, "indices", indices[order][keep])
        object.__setattr__(self, "values", values[order][keep])

    @classmethod
    def from_dense(cls, x: npt.ArrayLike) -> "SparseSignal":
        dense = np.asarray(x, dtype=np.complex128).reshape(-1)
        support = np.flatnonzero(dense)
        return cls(N=dense.shape[0], indices=support, values=dense[support])

    @property
    def sparsity(self) -> int:
        return int(self.indices.size)

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.N, dtype=np.complex128)
        dense[self.indices] = self.values
        return dense

    def to_json_dict(self) -> dict:
        return {
            "N": self.N,
            "indices": self.indices.tolist(),
            "values": _complex_pairs(self.values),
        }


@dataclass(frozen=True)
class WeightVector:
    """Pesos w_j ≥ 1 para normas ponderadas."""

    w: np.ndarray

    def __post_init__(self) -> None:
        w = np.asarray(self.w, dtype=np.float64).reshape(-1)
        if w.size == 0 or not np.all(np.isfinite(w)):
            raise ArgumentError("Vetor de pesos vazio ou não finito.")
        if np.any(w < 1.0):
            raise ArgumentError(f"Pesos devem ser ≥ 1; mínimo recebido {float(w.min())}.")
        object.__setattr__(self, "w", w)

    @classmethod
    def ones(cls, N: int) -> "WeightVector":
        return cls(np.ones(N))

    @property
    def N(self) -> int:
        return int(self.w.size)


@dataclass(frozen=True)
class RecoveryOutcome:
    """Resultado de OMP ou basis pursuit.

    ``objective`` é a norma ℓ1 (ponderada) para BP e ``None`` para OMP;
    ``support_path`` é a ordem de seleção de OMP.
    """

    algorithm: str
    estimate: np.ndarray
    support: tuple[int, ...]
    residual_l2: float
    iterations: int
    converged: bool
    objective: float | None = None
    degenerate: bool = False
    support_path: tuple[int, ...] = ()
    residual_history: tuple[float, ...] = ()
    duality_gap: float | None = None
    diagnostics: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        estimate = np.asarray(self.estimate, dtype=np.complex128)
        return {
            "estimate_re": estimate.real.tolist(),
            "estimate_im": estimate.imag.tolist(),
            "support": list(self.support),
            "residual_l2": self.residual_l2,
            "iterations": self.iterations,
            "objective": self.objective,
            "converged": self.converged,
            "algorithm": self.algorithm,
            "degenerate": self.degenerate,
            "support_path": list(self.support_path),
            "residual_history": list(self.residual_history),
            "duality_gap": self.duality_gap,
            "diagnostics": self.diagnostics,
        }
