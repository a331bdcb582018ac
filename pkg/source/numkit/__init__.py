from source.numkit.errors import (
    AdmissibleRangeError,
    ArgumentError,
    ConvergenceError,
    DimensionError,
    EnumerationCapError,
    InfeasibleProblemError,
    MatrixFormatError,
    NumericalError,
    QuadratureError,
    SamplingError,
    TruncationError,
)
from source.numkit.matrices import (
    ComplexMatrix,
    ComplexVector,
    LeastSquaresResult,
    as_complex_matrix,
    as_complex_vector,
    extremal_gram_eigs,
    least_squares,
    spectral_norm,
)
from source.numkit.matrix_csv import read_matrix_csv, write_matrix_csv
from source.numkit.random_streams import RandomStream
from source.numkit.supports import check_enumeration_cap, count_supports, iter_supports

__all__ = [
    "AdmissibleRangeError",
    "ArgumentError",
    "ComplexMatrix",
    "ComplexVector",
    "ConvergenceError",
    "DimensionError",
    "EnumerationCapError",
    "InfeasibleProblemError",
    "LeastSquaresResult",
    "MatrixFormatError",
    "NumericalError",
    "QuadratureError",
    "RandomStream",
    "SamplingError",
    "TruncationError",
    "as_complex_matrix",
    "as_complex_vector",
    "check_enumeration_cap",
    "count_supports",
    "extremal_gram_eigs",
    "iter_supports",
    "least_squares",
    "read_matrix_csv",
    "spectral_norm",
    "write_matrix_csv",
]
