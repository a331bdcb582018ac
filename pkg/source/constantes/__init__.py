from source.constantes.hiper_parametros import (
    BP_MAX_ITERATIONS,
    BP_TOLERANCE,
    CORSING_QUADRATURE_PANELS,
    ENUMERATION_CAP,
    MAUREY_MAX_ATTEMPTS,
    QUADRATURE_ORDER,
    SYSTEM_QUADRATURE_PANELS,
)
from source.constantes.models import (
    ComplexityRegime,
    ConstraintForm,
    RecoveryAlgorithm,
    RipMethod,
    SystemKind,
)
from source.constantes import teoria

__all__ = [
    "BP_MAX_ITERATIONS",
    "BP_TOLERANCE",
    "CORSING_QUADRATURE_PANELS",
    "ENUMERATION_CAP",
    "MAUREY_MAX_ATTEMPTS",
    "QUADRATURE_ORDER",
    "SYSTEM_QUADRATURE_PANELS",
    "ComplexityRegime",
    "ConstraintForm",
    "RecoveryAlgorithm",
    "RipMethod",
    "SystemKind",
    "teoria",
]
