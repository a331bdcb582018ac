from source.recovery.approximation import (
    best_s_term,
    best_s_term_error,
    nsp_recovery_constants,
    weighted_norms,
)
from source.recovery.basis_pursuit import (
    ConstraintProjector,
    basis_pursuit,
    rescaled_constraint_matrix,
    weighted_basis_pursuit,
)
from source.recovery.omp import omp
from source.recovery.signals import RecoveryOutcome, SparseSignal, WeightVector

__all__ = [
    "ConstraintProjector",
    "RecoveryOutcome",
    "SparseSignal",
    "WeightVector",
    "basis_pursuit",
    "best_s_term",
    "best_s_term_error",
    "nsp_recovery_constants",
    "omp",
    "rescaled_constraint_matrix",
    "weighted_basis_pursuit",
    "weighted_norms",
]
