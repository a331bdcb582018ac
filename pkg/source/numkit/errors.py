"""Tipos de erro compartilhados pelas rotinas numéricas."""


class NumericalError(Exception):
    """Raiz dos erros numéricos da biblioteca."""


class DimensionError(NumericalError, ValueError):
    """Matriz vazia, não finita ou com dimensões incompatíveis."""


class ArgumentError(NumericalError, ValueError):
    """Argumento fora do domínio aceito pela operação."""


class AdmissibleRangeError(ArgumentError):
    """Parâmetro teórico fora do intervalo admissível do teorema."""


class EnumerationCapError(ArgumentError):
    """Enumeração exata excederia o limite configurado de suportes."""


class ConvergenceError(NumericalError):
    """Rotina iterativa ou decomposição que não convergiu."""


class SamplingError(NumericalError):
    """Distribuição de amostragem inválida."""


class InfeasibleProblemError(NumericalError):
    """Conjunto viável vazio (por exemplo ‖Az − y‖ ≤ ζ sem solução)."""


class QuadratureError(NumericalError):
    """Quadratura composta sem concordância entre refinamentos."""


class TruncationError(NumericalError):
    """Limite do espaço de teste insuficiente para o truncamento pedido."""


class MatrixFormatError(ArgumentError):
    """Arquivo CSV de matriz malformado; a mensagem indica a linha."""
