"""Orthogonal Matching Pursuit com normalização de colunas."""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from source.numkit.errors import ArgumentError
from source.numkit.matrices import as_complex_matrix, as_complex_vector, least_squares
from source.recovery.signals import RecoveryOutcome

logger = logging.getLogger(__name__)

_ZERO_COLUMN = 1e-300


def omp(A: npt.ArrayLike, y: npt.ArrayLike, k: int) -> RecoveryOutcome:
    """Executa ``k`` iterações gulosas de OMP sobre AR⁻¹ (colunas normalizadas).

    A cada passo escolhe a coluna de maior |correlação| com o resíduo
    (empate: menor índice), refaz mínimos quadrados no suporte e atualiza
    o resíduo. A estimativa final é desnormalizada por R⁻¹. Colunas nulas
    nunca são escolhidas; se não restar coluna elegível o laço termina.

    Args:
        A: Matriz m×N.
        y: Medições (comprimento m).
        k: Número de iterações, 1 ≤ k ≤ min(m, N).

    Returns:
        RecoveryOutcome com ``support_path`` e ``residual_history``.

    Raises:
        ArgumentError: Se k estiver fora de [1, min(m, N)].
    """
    matrix = as_complex_matrix(A, name="A")
    m, N = matrix.shape
    b = as_complex_vector(y, m, name="y")
    if not 1 <= k <= min(m, N):
        raise ArgumentError(f"k deve estar em [1, min(m, N)={min(m, N)}]; recebido k={k}.")

    norms = np.linalg.norm(matrix, axis=0)
    zero_columns = norms <= _ZERO_COLUMN
    degenerate = bool(zero_columns.any())
    if degenerate:
        logger.warning("OMP: %d colunas nulas excluídas da seleção", int(zero_columns.sum()))
    safe_norms = np.where(zero_columns, 1.0, norms)
    normalized = matrix / safe_norms[None, :]

    eligible = ~zero_columns
    path: list[int] = []
    history: list[float] = []
    residual = b.copy()
    coefficients = np.zeros(0, dtype=np.complex128)

    for _ in range(k):
        if not eligible.any():
            logger.info("OMP: sem colunas elegíveis após %d iterações", len(path))
            break
        correlations = np.abs(normalized.conj().T @ residual)
        correlations[~eligible] = -1.0
        chosen = int(np.argmax(correlations))
        path.append(chosen)
        eligible[chosen] = False

        fit = least_squares(normalized[:, path], b)
        degenerate = degenerate or fit.degenerate
        coefficients = fit.solution
        residual = b - normalized[:, path] @ coefficients
        history.append(float(np.linalg.norm(residual)))

    estimate = np.zeros(N, dtype=np.complex128)
    if path:
        estimate[path] = coefficients / safe_norms[path]
    residual_l2 = float(np.linalg.norm(matrix @ estimate - b))
    return RecoveryOutcome(
        algorithm="omp",
        estimate=estimate,
        support=tuple(sorted(path)),
        residual_l2=residual_l2,
        iterations=len(path),
        converged=True,
        degenerate=degenerate,
        support_path=tuple(path),
        residual_history=tuple(history),
        diagnostics={"requested_iterations": k},
    )
