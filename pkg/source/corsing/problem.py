"""Problemas de advecção-difusão-reação 1D e o par de Petrov-Galerkin."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from source.constantes import teoria
from source.constantes.hiper_parametros import CORSING_DEFAULT_GAMMA, CORSING_SAMPLES_FACTOR
from source.numkit.errors import ArgumentError
from source.systems.function_systems import H10System, SineH10System

logger = logging.getLogger(__name__)

_ELLIPTICITY_GRID = np.linspace(0.0, 1.0, 1001)


@dataclass(frozen=True)
class Profile:
    """Coeficiente ou forçante em (0, 1); ``constant`` é preenchido quando o perfil é constante."""

    name: str
    function: Callable[[np.ndarray], np.ndarray]
    params: dict = field(default_factory=dict)
    constant: float | None = None

    def __call__(self, x: np.ndarray) -> np.ndarray:
        values = np.asarray(self.function(np.asarray(x, dtype=np.float64)), dtype=np.float64)
        return np.broadcast_to(values, np.shape(x))

    def to_json_dict(self) -> dict:
        return {"profile": self.name, **self.params}


def _constant(value: float = 0.0) -> Profile:
    value = float(value)
    return Profile("constant", lambda x: np.full_like(x, value), {"value": value}, constant=value)


def _sine(amplitude: float = 1.0, frequency: float = 1.0) -> Profile:
    return Profile(
        "sine",
        lambda x: amplitude * np.sin(frequency * np.pi * x),
        {"amplitude": amplitude, "frequency": frequency},
    )


def _polynomial(coefficients: list[float]) -> Profile:
    coefficients = [float(c) for c in coefficients]
    return Profile(
        "polynomial",
        lambda x: np.polynomial.polynomial.polyval(x, coefficients),
        {"coefficients": coefficients},
    )


def _exponential(amplitude: float = 1.0, rate: float = 1.0) -> Profile:
    return Profile(
        "exponential",
        lambda x: amplitude * np.exp(rate * x),
        {"amplitude": amplitude, "rate": rate},
    )


PROFILE_FACTORIES: dict[str, Callable[..., Profile]] = {
    "constant": _constant,
    "sine": _sine,
    "polynomial": _polynomial,
    "exponential": _exponential,
}


def make_profile(value: float | int | dict | Profile | Callable) -> Profile:
    """Constrói um perfil a partir de número, dicionário ``{"profile": nome, ...}`` ou função."""
    if isinstance(value, Profile):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return _constant(value)
    if isinstance(value, dict):
        params = dict(value)
        name = params.pop("profile", None)
        if name not in PROFILE_FACTORIES:
            raise ArgumentError(f"Perfil desconhecido: {name!r}. Opções: {sorted(PROFILE_FACTORIES)}.")
        try:
            return PROFILE_FACTORIES[name](**params)
        except TypeError as exc:
            raise ArgumentError(f"Parâmetros inválidos para o perfil {name!r}: {exc}") from exc
    if callable(value):
        return Profile(getattr(value, "__name__", "callable"), value)
    raise ArgumentError(f"Perfil não reconhecido: {value!r}.")


@dataclass(frozen=True)
class AdrProblem:
    """a(u, v) = ∫ μ u'v' + β u'v + ρ uv e ℱ(v) = ∫ F v em H¹₀(0, 1)."""

    mu: Profile
    beta_adv: Profile
    rho_reac: Profile
    forcing: Profile

    def __post_init__(self) -> None:
        for name in ("mu", "beta_adv", "rho_reac", "forcing"):
            values = getattr(self, name)(_ELLIPTICITY_GRID)
            if not np.all(np.isfinite(values)):
                raise ArgumentError(f"Perfil {name} com valores não finitos em (0, 1).")
        mu_min = float(np.min(self.mu(_ELLIPTICITY_GRID)))
        if mu_min <= 0:
            raise ArgumentError(f"Difusão não elíptica: min μ = {mu_min:.6g} ≤ 0.")

    @classmethod
    def from_values(cls, mu=1.0, beta_adv=0.0, rho_reac=0.0, forcing=1.0) -> "AdrProblem":
        return cls(make_profile(mu), make_profile(beta_adv), make_profile(rho_reac), make_profile(forcing))

    @property
    def has_constant_coefficients(self) -> bool:
        return all(p.constant is not None for p in (self.mu, self.beta_adv, self.rho_reac))

    def to_json_dict(self) -> dict:
        return {
            "mu": self.mu.to_json_dict(),
            "beta": self.beta_adv.to_json_dict(),
            "rho": self.rho_reac.to_json_dict(),
            "forcing": self.forcing.to_json_dict(),
        }


@dataclass(frozen=True)
class PetrovGalerkinSetup:
    trial: H10System
    test: SineH10System
    alpha_infsup: float
    beta_cont: float
    estimated: bool = False

    def __post_init__(self) -> None:
        if not 0 < self.alpha_infsup <= self.beta_cont * (1.0 + 1e-12):
            raise ArgumentError(
                f"Constantes inválidas: exige-se 0 < α ≤ β; recebido α={self.alpha_infsup}, β={self.beta_cont}."
            )

    @property
    def N(self) -> int:
        return self.trial.N

    @property
    def test_cap(self) -> int:
        return self.test.N

    def to_json_dict(self) -> dict:
        return {
            "trial": self.trial.describe(),
            "test": self.test.describe(),
            "alpha_infsup": self.alpha_infsup,
            "beta_cont": self.beta_cont,
            "estimated": self.estimated,
        }


def constant_coefficient_bounds(problem: AdrProblem) -> tuple[float, float]:
    """(α, β) para coeficientes constantes, com constante de Poincaré 1/π em (0, 1).

    α = μ + min(ρ, 0)/π² e β = μ + |β_adv|/π + |ρ|/π².
    """
    mu = problem.mu.constant
    adv = problem.beta_adv.constant
    reac = problem.rho_reac.constant
    alpha = mu + min(reac, 0.0) / math.pi**2
    beta = mu + abs(adv) / math.pi + abs(reac) / math.pi**2
    return alpha, beta


def build_setup(problem: AdrProblem, trial: H10System, test: SineH10System) -> PetrovGalerkinSetup:
    """Monta o par trial/test com (α, β) em forma fechada ou estimados numericamente.

    Coeficientes variáveis (ou α ≤ 0 pela fórmula) usam σ_min e σ_max da
    matriz de Galerkin truncada, válidos para bases ortonormais.
    """
    if problem.has_constant_coefficients:
        alpha, beta = constant_coefficient_bounds(problem)
        if alpha > 0:
            return PetrovGalerkinSetup(trial, test, alpha, beta)

    from source.corsing.assembly import assemble_full
    from source.corsing.diagnostics import estimate_infsup_continuity

    rows = min(test.N, max(4 * trial.N, 256))
    provisional = PetrovGalerkinSetup(trial, test, 1.0, 1.0, estimated=True)
    B, _ = assemble_full(provisional, problem, trial.N, rows)
    alpha, beta = estimate_infsup_continuity(B)
    if alpha <= 0:
        raise ArgumentError("Par trial/test sem inf-sup positivo nos espaços truncados.")
    logger.info("Constantes estimadas numericamente: α=%.6g, β=%.6g", alpha, beta)
    return PetrovGalerkinSetup(trial, test, alpha, beta, estimated=True)


def condition_number_kappa(setup: PetrovGalerkinSetup) -> float:
    """κ = (C_φ C_ξ β²)/(c_φ c_ξ α²); avisa quando κ ≥ 13/12."""
    constants = (
        setup.trial.C_psi,
        setup.test.C_psi,
        setup.trial.c_psi,
        setup.test.c_psi,
        setup.alpha_infsup,
        setup.beta_cont,
    )
    if any(value <= 0 for value in constants):
        raise ArgumentError(f"Constantes devem ser positivas: {constants}.")
    C_phi, C_xi, c_phi, c_xi, alpha, beta = constants
    kappa = (C_phi * C_xi * beta**2) / (c_phi * c_xi * alpha**2)
    if kappa >= teoria.KAPPA_CONDITION_LIMIT:
        logger.warning(
            "κ = %.6g ≥ 13/12: fora da garantia de recuperação por OMP", kappa
        )
    return kappa


@dataclass(frozen=True)
class CorsingConfig:
    """s, m e γ da discretização reduzida; ``omp_iterations`` padrão é K̄·s."""

    s: int
    m: int | None = None
    gamma: float = CORSING_DEFAULT_GAMMA
    seed: int = 0
    stream_id: int = 0
    omp_iterations: int | None = None
    L_bound: float | None = None
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ArgumentError(f"s deve ser ≥ 1; recebido {self.s}.")
        if not 0 < self.gamma < 1:
            raise ArgumentError(f"gamma deve estar em (0, 1); recebido {self.gamma}.")
        if self.m is not None and self.m < 1:
            raise ArgumentError(f"m deve ser ≥ 1; recebido {self.m}.")
        if self.L_bound is not None and self.L_bound <= 0:
            raise ArgumentError(f"L deve ser positivo; recebido {self.L_bound}.")

    def samples(self, N: int) -> int:
        """m informado ou ⌈4·s·ln N⌉."""
        if self.m is not None:
            return self.m
        return max(1, math.ceil(CORSING_SAMPLES_FACTOR * self.s * math.log(max(N, 2))))

    def iterations(self) -> int:
        return self.omp_iterations if self.omp_iterations is not None else teoria.K_BAR * self.s
