from source.systems.ensembles import (
    CoherenceProfile,
    MeasurementEnsemble,
    SparseEigenBounds,
    coherence_sampler,
    local_coherence,
    sample_riesz_matrix,
    sparse_eigen_bounds,
)
from source.systems.function_systems import (
    FourierSystem,
    FunctionSystem,
    H10System,
    HatHierarchicalSystem,
    SineH10System,
    build_system,
    fourier_system,
    hat_hierarchical_system,
    sine_h10_system,
)
from source.systems.gram import h10_gram, l2_gram
from source.systems.quadrature import QuadratureRule, gauss_legendre_rule

__all__ = [
    "CoherenceProfile",
    "FourierSystem",
    "FunctionSystem",
    "H10System",
    "HatHierarchicalSystem",
    "MeasurementEnsemble",
    "QuadratureRule",
    "SineH10System",
    "SparseEigenBounds",
    "build_system",
    "coherence_sampler",
    "fourier_system",
    "gauss_legendre_rule",
    "h10_gram",
    "hat_hierarchical_system",
    "l2_gram",
    "local_coherence",
    "sample_riesz_matrix",
    "sine_h10_system",
    "sparse_eigen_bounds",
]
