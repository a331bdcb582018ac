from enum import Enum


class SystemKind(str, Enum):
    FOURIER = "fourier"
    SINE_H10 = "sine_h10"
    HAT_HIERARCHICAL = "hat_hierarchical"


class RecoveryAlgorithm(str, Enum):
    OMP = "omp"
    BASIS_PURSUIT = "bp"
    WEIGHTED_BASIS_PURSUIT = "wbp"


class ComplexityRegime(str, Enum):
    MAIN = "main"
    RIESZ_RIP = "riesz_rip"
    RIESZ_NSP = "riesz_nsp"
    COHERENCE_RIP = "coherence_rip"
    CORSING_RIP = "corsing_rip"
    WEIGHTED = "weighted"


class RipMethod(str, Enum):
    EXACT = "exact"
    MONTE_CARLO = "monte_carlo"
    WEIGHTED_EXACT = "weighted_exact"
    EMPIRICAL_PROCESS = "empirical_process"


class ConstraintForm(str, Enum):
    RAW = "raw"
    RESCALED = "rescaled"
