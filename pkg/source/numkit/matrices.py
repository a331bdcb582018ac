"""Álgebra linear densa complexa: normas, autovalores extremos e mínimos quadrados."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import RANK_RELATIVE_TOLERANCE
from source.numkit.errors import ConvergenceError, DimensionError

logger = logging.getLogger(__name__)

ComplexMatrix = npt.NDArray[np.complex128]
ComplexVector = npt.NDArray[np.complex128]


def as_complex_matrix(M: npt.ArrayLike, *, name: str = "matriz") -> ComplexMatrix:
    """Converte ``M`` em matriz complexa 2-D somente-leitura.

    Args:
        M: Qualquer objeto convertível em array 2-D.
        name: Nome usado nas mensagens de erro.

    Returns:
        Cópia ``complex128`` com ``writeable=False``.

    Raises:
        DimensionError: Se ``M`` não for 2-D, for vazia ou tiver entradas não finitas.
    """
    arr = np.array(M, dtype=np.complex128, copy=True)
    if arr.ndim != 2:
        raise DimensionError(f"{name} deve ser 2-D; recebido ndim={arr.ndim}.")
    if arr.size == 0:
        raise DimensionError(f"{name} vazia: shape={arr.shape}.")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} contém entradas não finitas.")
    arr.setflags(write=False)
    return arr


def as_complex_vector(v: npt.ArrayLike, length: int | None = None, *, name: str = "vetor") -> ComplexVector:
    arr = np.array(v, dtype=np.complex128, copy=True).reshape(-1)
    if length is not None and arr.shape[0] != length:
        raise DimensionError(f"{name} com comprimento {arr.shape[0]}; esperado {length}.")
    if not np.all(np.isfinite(arr)):
        raise DimensionError(f"{name} contém entradas não finitas.")
    return arr


def _singular_values(M: ComplexMatrix) -> np.ndarray:
    try:
        return np.linalg.svd(M, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"SVD não convergiu para matriz {M.shape}: {exc}") from exc


def spectral_norm(M: npt.ArrayLike) -> float:
    """Maior valor singular de ``M`` (norma 2 induzida)."""
    A = as_complex_matrix(M)
    return float(_singular_values(A)[0])


def extremal_gram_eigs(M: npt.ArrayLike) -> tuple[float, float]:
    """Autovalores mínimo e máximo de MᴴM.

    Calculados pelos valores singulares, o que garante
    0 ≤ λ_min ≤ λ_max ≤ ‖M‖₂². Quando há menos linhas que colunas o
    Gram é singular e λ_min = 0.

    Args:
        M: Matriz complexa m×n.

    Returns:
        Tupla ``(lambda_min, lambda_max)``.
    """
    A = as_complex_matrix(M)
    sigma = _singular_values(A)
    lam_max = float(sigma[0] ** 2)
    rows, cols = A.shape
    lam_min = float(sigma[-1] ** 2) if rows >= cols else 0.0
    return lam_min, lam_max


@dataclass(frozen=True)
class LeastSquaresResult:
    solution: ComplexVector
    residual_norm: float
    rank: int
    degenerate: bool


def least_squares(M: npt.ArrayLike, y: npt.ArrayLike) -> LeastSquaresResult:
    """Solução de norma mínima de min ‖Mz − y‖₂.

    Args:
        M: Matriz m×n.
        y: Vetor de comprimento m.

    Returns:
        LeastSquaresResult com ``degenerate=True`` quando rank(M) < n.

    Raises:
        DimensionError: Se ``y`` não tiver m entradas.
        ConvergenceError: Se a decomposição do LAPACK falhar.
    """
    A = as_complex_matrix(M)
    b = as_complex_vector(y, A.shape[0], name="y")
    try:
        solution, _, rank, sigma = np.linalg.lstsq(A, b, rcond=RANK_RELATIVE_TOLERANCE)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Mínimos quadrados não convergiram: {exc}") from exc

    rank = int(rank)
    degenerate = rank < A.shape[1]
    if degenerate:
        logger.warning("Mínimos quadrados com rank deficiente: rank=%d < n=%d", rank, A.shape[1])
    residual = float(np.linalg.norm(A @ solution - b))
    return LeastSquaresResult(
        solution=np.asarray(solution, dtype=np.complex128),
        residual_norm=residual,
        rank=rank,
        degenerate=degenerate,
    )
