"""Supremo do processo empírico sobre vetores s-esparsos unitários."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import ENUMERATION_CAP
from source.constantes.models import RipMethod
from source.numkit.errors import ArgumentError, DimensionError
from source.analysis.rip import RipReport, max_restricted_deviation
from source.numkit.supports import iter_supports
from source.systems.ensembles import MeasurementEnsemble

CovarianceForm = Callable[[np.ndarray], float]


def covariance_gram(covariance: npt.ArrayLike | CovarianceForm, N: int) -> np.ndarray:
    """Gram Σ com fᴴΣf = E|⟨f, X⟩|².

    Aceita a matriz diretamente ou a forma quadrática f ↦ E|⟨f, X⟩|²,
    caso em que Σ é reconstruída por polarização nos vetores canônicos.

    Raises:
        ArgumentError: Se a covariância não puder ser obtida.
    """
    if callable(covariance):
        basis = np.eye(N, dtype=np.complex128)
        diagonal = np.array([float(covariance(basis[j])) for j in range(N)])
        gram = np.diag(diagonal).astype(np.complex128)
        for j in range(N):
            for k in range(j + 1, N):
                real_part = (float(covariance(basis[j] + basis[k])) - diagonal[j] - diagonal[k]) / 2.0
                imag_part = (float(covariance(basis[j] + 1j * basis[k])) - diagonal[j] - diagonal[k]) / 2.0
                gram[j, k] = complex(real_part, -imag_part)
                gram[k, j] = np.conj(gram[j, k])
    else:
        gram = np.asarray(covariance, dtype=np.complex128)
    if gram.shape != (N, N) or not np.all(np.isfinite(gram)):
        raise ArgumentError(f"Gram de covariância indisponível ou com shape {gram.shape} (esperado {N}x{N}).")
    return gram


def empirical_process_sup(
    ensemble: MeasurementEnsemble,
    covariance: npt.ArrayLike | CovarianceForm,
    s: int,
    *,
    cap: int = ENUMERATION_CAP,
) -> RipReport:
    """sup_{f ∈ D_s} |(1/m)Σ|⟨f, X_i⟩|² − E|⟨f, X⟩|²| por enumeração de suportes.

    As linhas X_i são recuperadas da matriz do conjunto dividindo pelo
    fator de escala, de modo que o Gram empírico é AᴴA/(m·escala²).
    """
    matrix = ensemble.matrix
    m, N = matrix.shape
    if ensemble.scaling <= 0:
        raise DimensionError("Fator de escala do conjunto deve ser positivo.")
    gram = covariance_gram(covariance, N)
    empirical = (matrix.conj().T @ matrix) / (m * ensemble.scaling**2)
    value, support, examined = max_restricted_deviation(empirical - gram, iter_supports(N, s, cap))
    return RipReport(
        s=s,
        epsilon_s=value,
        extremal_support=support,
        method=RipMethod.EMPIRICAL_PROCESS,
        supports_examined=examined,
    )
