"""Calculadora de complexidade amostral e constantes explícitas dos teoremas."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from pydantic import BaseModel, ConfigDict, Field

from source.constantes import teoria
from source.constantes.models import ComplexityRegime
from source.numkit.errors import AdmissibleRangeError, ArgumentError


@dataclass(frozen=True)
class TheoryConstants:
    kappa: float = teoria.KAPPA
    c0: float = teoria.C0
    c1: float = teoria.C1
    K_bar: int = teoria.K_BAR
    C_omp: float = teoria.C_OMP
    eps_star_normalized: float = teoria.EPS_STAR_NORMALIZED
    eps_star: float = teoria.EPS_STAR
    kappa_condition_limit: float = teoria.KAPPA_CONDITION_LIMIT

    def to_json_dict(self) -> dict:
        return asdict(self)


def theory_constants() -> TheoryConstants:
    return TheoryConstants()


class ComplexityInputs(BaseModel):
    """Inputs for the sample-complexity calculator; each regime reads a subset."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    s: int = Field(ge=1, description="Sparsity level")
    N: int = Field(ge=1, description="Number of basis functions")
    K: float = Field(1.0, gt=0, description="Uniform bound of the system")
    delta: float | None = Field(None, description="RIP level for the main and weighted regimes")
    epsilon: float | None = Field(None, description="Target level for Riesz/coherence/CORSING regimes")
    c_psi: float = Field(1.0, gt=0, description="Lower Riesz constant")
    C_psi: float = Field(1.0, gt=0, description="Upper Riesz constant")
    nu_l1: float | None = Field(None, gt=0, description="ℓ1 norm of the local coherence profile")
    gamma: float | None = Field(None, description="Truncation parameter in (0, 1)")
    kappa: float | None = Field(None, gt=0, description="Condition number β/α of the Petrov-Galerkin pair")
    C_phi: float = Field(1.0, gt=0)
    C_xi: float = Field(1.0, gt=0)
    beta: float = Field(1.0, gt=0, description="Continuity constant")


@dataclass(frozen=True)
class ComplexityBound:
    regime: ComplexityRegime
    m_required: float
    failure_probability: float
    level: float

    @property
    def m_ceil(self) -> int:
        return int(math.ceil(self.m_required))

    def to_json_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "m_required": self.m_required,
            "m_ceil": self.m_ceil,
            "failure_probability": self.failure_probability,
            "level": self.level,
        }


def _require(value: float | None, name: str, regime: ComplexityRegime) -> float:
    if value is None:
        raise ArgumentError(f"Regime {regime.value} exige o parâmetro {name}.")
    return float(value)


def _check_open_interval(value: float, low: float, high: float, name: str) -> None:
    if not low < value < high:
        raise AdmissibleRangeError(f"{name} = {value} fora do intervalo admissível ({low:.6g}, {high:.6g}).")


def _failure(exponent: float) -> float:
    return min(1.0, 2.0 * math.exp(-exponent))


def sample_complexity(regime: ComplexityRegime | str, inputs: ComplexityInputs) -> ComplexityBound:
    """Avalia o limite inferior de m e a probabilidade de falha do regime.

    A probabilidade de falha é avaliada em m = m_required. Apenas as
    constantes explicitadas (c₀, c₁) são usadas.

    Raises:
        AdmissibleRangeError: Se δ, ε ou γ estiverem fora do intervalo do teorema.
        ArgumentError: Se faltar um parâmetro exigido pelo regime.
    """
    regime = ComplexityRegime(regime)
    c0, c1 = teoria.C0, teoria.C1
    s, log_en = inputs.s, math.log(math.e * inputs.N)
    K2 = inputs.K**2

    if regime in (ComplexityRegime.MAIN, ComplexityRegime.WEIGHTED):
        delta = _require(inputs.delta, "delta", regime)
        _check_open_interval(delta, 0.0, teoria.KAPPA, "delta")
        scale = K2 if regime is ComplexityRegime.MAIN else 1.0
        m = c0 * scale * s * log_en * math.log(s * scale / delta) ** 2 / delta**2
        return ComplexityBound(regime, m, _failure(delta**2 * m / (s * scale)), delta)

    if regime is ComplexityRegime.RIESZ_NSP:
        ratio = max(1.0, inputs.C_psi) / inputs.c_psi
        m = c0 * ratio**2 * K2 * s * math.log(s * K2 * ratio) ** 2 * log_en
        return ComplexityBound(regime, m, _failure(c1 * m / (ratio**2 * s * K2)), ratio)

    epsilon = _require(inputs.epsilon, "epsilon", regime)
    if regime is ComplexityRegime.CORSING_RIP:
        gamma = _require(inputs.gamma, "gamma", regime)
        kappa = _require(inputs.kappa, "kappa", regime)
        nu_l1 = _require(inputs.nu_l1, "nu_l1", regime)
        _check_open_interval(gamma, 0.0, 1.0, "gamma")
        lower = 1.0 - (1.0 - gamma) / kappa
        _check_open_interval(epsilon, lower, 1.0, "epsilon")
        eta = epsilon - lower
        damping = min(1.0, inputs.C_phi**2 * inputs.C_xi**2 * inputs.beta**4)
        load = nu_l1**2 / (damping * eta**2)
        m = c0 * load * s * log_en * math.log(s * load) ** 2
        return ComplexityBound(regime, m, _failure(c1 * m / (s * load)), eta)

    if regime is ComplexityRegime.COHERENCE_RIP:
        nu_l1 = _require(inputs.nu_l1, "nu_l1", regime)
        load_base = nu_l1
    else:
        load_base = K2
    lower = 1.0 - inputs.c_psi / inputs.C_psi
    _check_open_interval(epsilon, lower, 1.0, "epsilon")
    eta = epsilon - lower
    spread = max(inputs.C_psi**-2, 1.0)
    load = spread * load_base / eta**2
    m = c0 * load * s * math.log(s * load) ** 2 * log_en
    return ComplexityBound(regime, m, _failure(c1 * m / (s * load)), eta)


def omp_normalized_rip(epsilon: float) -> float:
    """RIP 2ε/(1−ε) da matriz de colunas normalizadas para A com RIP ε < 1."""
    _check_open_interval(epsilon, 0.0, 1.0, "epsilon")
    return 2.0 * epsilon / (1.0 - epsilon)
