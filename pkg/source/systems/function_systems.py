"""Sistemas de funções limitados (Fourier, senos H¹₀ e chapéus hierárquicos)."""

from __future__ import annotations

import math
from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt

from source.constantes.models import SystemKind
from source.numkit.errors import ArgumentError


def _as_points(points: npt.ArrayLike) -> np.ndarray:
    arr = np.asarray(points, dtype=np.float64).reshape(-1)
    if not np.all(np.isfinite(arr)):
        raise ArgumentError("Pontos de avaliação não finitos.")
    return arr


class FunctionSystem(ABC):
    """Sistema ψ_0..ψ_{N−1} com ‖ψ_j‖_∞ ≤ K_psi e constantes de Riesz (c, C).

    Subclasses implementam ``_columns`` (avaliação vetorizada) e ``sample``
    (amostragem da medida de probabilidade associada).
    """

    kind: SystemKind

    def __init__(self, N: int, K_psi: float, c_psi: float = 1.0, C_psi: float = 1.0):
        if N < 1:
            raise ArgumentError(f"N deve ser positivo; recebido {N}.")
        if not 0 < c_psi <= C_psi:
            raise ArgumentError(f"Constantes de Riesz inválidas: c={c_psi}, C={C_psi}.")
        self.N = int(N)
        self.K_psi = float(K_psi)
        self.c_psi = float(c_psi)
        self.C_psi = float(C_psi)

    @abstractmethod
    def _columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        """Matriz len(points) × len(indices) com ψ_j(ω)."""

    @abstractmethod
    def sample(self, generator: np.random.Generator, size: int) -> np.ndarray:
        """Sorteia ``size`` pontos i.i.d. da medida do sistema."""

    def _indices(self, indices: npt.ArrayLike | None) -> np.ndarray:
        if indices is None:
            return np.arange(self.N)
        idx = np.asarray(indices, dtype=np.int64).reshape(-1)
        if idx.size and (idx.min() < 0 or idx.max() >= self.N):
            raise ArgumentError(f"Índice fora de [0, {self.N}).")
        return idx

    def evaluate(self, j: int, points: npt.ArrayLike) -> np.ndarray:
        return self._columns(_as_points(points), self._indices([j]))[:, 0]

    def matrix(self, points: npt.ArrayLike, indices: npt.ArrayLike | None = None) -> np.ndarray:
        return self._columns(_as_points(points), self._indices(indices))

    def describe(self) -> dict:
        return {
            "kind": self.kind.value,
            "N": self.N,
            "K_psi": self.K_psi,
            "c_psi": self.c_psi,
            "C_psi": self.C_psi,
        }


class H10System(FunctionSystem):
    """Sistema em H¹₀(0,1) com derivadas conhecidas em forma fechada."""

    @abstractmethod
    def _derivative_columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        """Matriz len(points) × len(indices) com ψ_j'(x)."""

    def derivative(self, j: int, points: npt.ArrayLike) -> np.ndarray:
        return self._derivative_columns(_as_points(points), self._indices([j]))[:, 0]

    def derivative_matrix(self, points: npt.ArrayLike, indices: npt.ArrayLike | None = None) -> np.ndarray:
        return self._derivative_columns(_as_points(points), self._indices(indices))

    def sample(self, generator: np.random.Generator, size: int) -> np.ndarray:
        return generator.random(size)


class FourierSystem(FunctionSystem):
    """ψ_j(ω) = exp(2πi·j·ω), j ∈ [N], ω uniforme em [0, 1)."""

    kind = SystemKind.FOURIER

    def __init__(self, N: int):
        super().__init__(N, K_psi=1.0)

    def _columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        return np.exp(2j * np.pi * np.outer(points, indices))

    def sample(self, generator: np.random.Generator, size: int) -> np.ndarray:
        return generator.random(size)


class SineH10System(H10System):
    """ξ_q(x) = √2·sin(qπx)/(qπ), q = j + 1; ortonormal em H¹₀(0,1)."""

    kind = SystemKind.SINE_H10

    def __init__(self, N: int):
        super().__init__(N, K_psi=math.sqrt(2.0) / math.pi)

    @staticmethod
    def frequencies(indices: np.ndarray) -> np.ndarray:
        return (np.asarray(indices, dtype=np.float64) + 1.0) * np.pi

    def _columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        w = self.frequencies(indices)
        return (math.sqrt(2.0) * np.sin(np.outer(points, w)) / w).astype(np.complex128)

    def _derivative_columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        w = self.frequencies(indices)
        return (math.sqrt(2.0) * np.cos(np.outer(points, w))).astype(np.complex128)


class HatHierarchicalSystem(H10System):
    """Chapéus hierárquicos normalizados em H¹₀(0,1).

    Nível ℓ = 1..L tem nós ímpares k/2^ℓ e meia-largura h = 2^{-ℓ}; a
    normalização √(h/2) torna a base ortonormal em H¹₀. A ordem é por
    nível e, dentro do nível, da esquerda para a direita, com
    N = 2^L − 1 funções.
    """

    kind = SystemKind.HAT_HIERARCHICAL

    def __init__(self, levels: int):
        if levels < 1:
            raise ArgumentError(f"Número de níveis deve ser ≥ 1; recebido {levels}.")
        self.levels = int(levels)
        super().__init__(2**levels - 1, K_psi=0.5)
        centers, half_widths, level_of = [], [], []
        for level in range(1, levels + 1):
            h = 2.0**-level
            for k in range(1, 2**level, 2):
                centers.append(k * h)
                half_widths.append(h)
                level_of.append(level)
        self.centers = np.array(centers)
        self.half_widths = np.array(half_widths)
        self.level_of = np.array(level_of, dtype=np.int64)

    @property
    def normalization(self) -> np.ndarray:
        return np.sqrt(self.half_widths / 2.0)

    def _columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        c = self.centers[indices]
        h = self.half_widths[indices]
        hat = np.maximum(0.0, 1.0 - np.abs(points[:, None] - c[None, :]) / h[None, :])
        return (hat * self.normalization[indices][None, :]).astype(np.complex128)

    def _derivative_columns(self, points: np.ndarray, indices: np.ndarray) -> np.ndarray:
        c = self.centers[indices]
        h = self.half_widths[indices]
        offset = points[:, None] - c[None, :]
        inside = np.abs(offset) < h[None, :]
        slope = -np.sign(offset) / np.sqrt(2.0 * h[None, :])
        return np.where(inside, slope, 0.0).astype(np.complex128)

    def describe(self) -> dict:
        info = super().describe()
        info["levels"] = self.levels
        return info


def fourier_system(N: int) -> FourierSystem:
    return FourierSystem(N)


def sine_h10_system(N: int) -> SineH10System:
    return SineH10System(N)


def hat_hierarchical_system(levels: int) -> HatHierarchicalSystem:
    return HatHierarchicalSystem(levels)


def build_system(kind: SystemKind | str, size: int) -> FunctionSystem:
    """Constrói um sistema pelo nome; ``size`` é N (ou L para chapéus)."""
    kind = SystemKind(kind)
    if kind is SystemKind.FOURIER:
        return fourier_system(size)
    if kind is SystemKind.SINE_H10:
        return sine_h10_system(size)
    return hat_hierarchical_system(size)
