from source.corsing.assembly import assemble_forcing, assemble_full
from source.corsing.coherence import choose_truncation, local_a_coherence, truncation_threshold
from source.corsing.diagnostics import (
    CorsingRipPrediction,
    corsing_admissible_interval,
    corsing_error_bound,
    corsing_failure_probability,
    corsing_rip_prediction,
    diffusion_exact_derivative,
    estimate_infsup_continuity,
    h1_error,
    h10_projection,
    reference_coefficients,
    trial_norm,
    truncate,
)
from source.corsing.problem import (
    AdrProblem,
    CorsingConfig,
    PetrovGalerkinSetup,
    Profile,
    build_setup,
    condition_number_kappa,
    constant_coefficient_bounds,
    make_profile,
)
from source.corsing.solver import (
    CorsingDesign,
    CorsingSolution,
    corsing_rip_inputs,
    corsing_solve,
    draw_tests,
    evaluate_solution,
    preconditioner,
    prepare_corsing,
    scaling_identity_check,
)

__all__ = [
    "AdrProblem",
    "CorsingConfig",
    "CorsingDesign",
    "CorsingRipPrediction",
    "CorsingSolution",
    "PetrovGalerkinSetup",
    "Profile",
    "assemble_forcing",
    "assemble_full",
    "build_setup",
    "choose_truncation",
    "condition_number_kappa",
    "constant_coefficient_bounds",
    "corsing_admissible_interval",
    "corsing_error_bound",
    "corsing_failure_probability",
    "corsing_rip_inputs",
    "corsing_rip_prediction",
    "corsing_solve",
    "diffusion_exact_derivative",
    "draw_tests",
    "estimate_infsup_continuity",
    "evaluate_solution",
    "h10_projection",
    "h1_error",
    "local_a_coherence",
    "make_profile",
    "preconditioner",
    "prepare_corsing",
    "reference_coefficients",
    "scaling_identity_check",
    "trial_norm",
    "truncate",
    "truncation_threshold",
]
