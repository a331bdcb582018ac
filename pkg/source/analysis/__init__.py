from source.analysis.complexity import (
    ComplexityBound,
    ComplexityInputs,
    TheoryConstants,
    omp_normalized_rip,
    sample_complexity,
    theory_constants,
)
from source.analysis.empirical_process import covariance_gram, empirical_process_sup
from source.analysis.maurey import (
    CoverParameters,
    CoverVerification,
    TargetCover,
    WeakCover,
    cover_parameters,
    covering_log_bound,
    maurey_weak_cover,
    verify_weak_cover,
)
from source.analysis.nsp import NspEstimate, cone_infimum_exact, nsp_grid_s1, nsp_lower_bound
from source.analysis.rip import RipReport, rip_exact, rip_monte_carlo, weighted_rip_exact

__all__ = [
    "ComplexityBound",
    "ComplexityInputs",
    "CoverParameters",
    "CoverVerification",
    "NspEstimate",
    "RipReport",
    "TargetCover",
    "TheoryConstants",
    "WeakCover",
    "cone_infimum_exact",
    "covariance_gram",
    "cover_parameters",
    "covering_log_bound",
    "empirical_process_sup",
    "maurey_weak_cover",
    "nsp_grid_s1",
    "nsp_lower_bound",
    "omp_normalized_rip",
    "rip_exact",
    "rip_monte_carlo",
    "sample_complexity",
    "theory_constants",
    "verify_weak_cover",
    "weighted_rip_exact",
]
