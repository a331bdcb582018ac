from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from source.constantes.hiper_parametros import (
    CORSING_DEFAULT_GAMMA,
    ENUMERATION_CAP,
    MAUREY_MAX_ATTEMPTS,
)
from source.constantes.models import (
    ConstraintForm,
    RecoveryAlgorithm,
    RipMethod,
    SystemKind,
)


class ExperimentConfig(BaseModel):
    """Parameters shared by every command; reports embed the dumped model."""

    model_config = ConfigDict(extra="forbid", use_enum_values=False)

    command: str
    seed: int = Field(0, ge=0, lt=2**64, description="Base seed of the Philox stream")
    stream_id: int = Field(0, ge=0, lt=2**64, description="Stream id; replicas derive child streams from it")
    replicas: int = Field(1, ge=1, description="Independent seed-derived repetitions")
    threads: int = Field(1, ge=1, description="Worker count; results do not depend on it")
    output_json: str | None = None
    output_csv: str | None = None
    overwrite: bool = False
    omit_timings: bool = False


class MeasurementSource(BaseModel):
    """Builtin system sampled at random points, or an explicit matrix CSV."""

    model_config = ConfigDict(extra="forbid")

    system: SystemKind | None = SystemKind.FOURIER
    N: int | None = Field(None, ge=1, description="Number of functions (levels for hat systems)")
    m: int | None = Field(None, ge=1, description="Number of samples")
    matrix_path: str | None = None

    @model_validator(mode="after")
    def _source_is_complete(self) -> "MeasurementSource":
        if self.matrix_path is None and (self.N is None or self.m is None):
            raise ValueError("informe matrix_path ou o par N, m de um sistema")
        return self


class RipCommandConfig(ExperimentConfig):
    """Restricted isometry constant of a sampled or loaded matrix."""

    command: Literal["rip"] = "rip"
    source: MeasurementSource
    s: int = Field(ge=1)
    method: RipMethod = RipMethod.EXACT
    trials: int = Field(10_000, ge=1, description="Monte Carlo trials")
    weights: list[float] | None = None
    enumeration_cap: int = Field(ENUMERATION_CAP, ge=1)


class RecoverCommandConfig(ExperimentConfig):
    """Sparse recovery of a random s-sparse signal from its measurements."""

    command: Literal["recover"] = "recover"
    source: MeasurementSource
    s: int = Field(ge=1)
    algorithm: RecoveryAlgorithm = RecoveryAlgorithm.OMP
    k: int | None = Field(None, ge=1, description="OMP iterations (default s)")
    zeta: float = Field(0.0, ge=0)
    noise_level: float = Field(0.0, ge=0, description="ℓ² norm of the additive noise")
    weights: list[float] | None = None
    constraint: ConstraintForm = ConstraintForm.RAW


class CorsingCommandConfig(ExperimentConfig):
    """CORSING solve of a problem file; explicit fields override the file's config block."""

    command: Literal["corsing"] = "corsing"
    seed: int | None = Field(None, ge=0, lt=2**64, description="Overrides the seed of the problem file")
    problem_path: str
    s: int | None = Field(None, ge=1)
    m: int | None = Field(None, ge=1)
    gamma: float | None = Field(None, gt=0, lt=1)
    k: int | None = Field(None, ge=1)
    L: float | None = Field(None, gt=0)
    samples_csv: str | None = None
    grid_points: int = Field(201, ge=2)
    reference: bool = True


class CoverCommandConfig(ExperimentConfig):
    """Maurey weak cover of random targets in √s·B₁."""

    command: Literal["cover"] = "cover"
    source: MeasurementSource | None = None
    s: int | None = Field(None, ge=1)
    delta: float | None = Field(None, gt=0)
    rho: float | None = Field(None, gt=0, description="Cover radius (default √s/2)")
    K: float | None = Field(None, gt=0)
    targets: int = Field(50, ge=1)
    max_attempts: int = Field(MAUREY_MAX_ATTEMPTS, ge=1)
    verify_path: str | None = None

    @model_validator(mode="after")
    def _build_or_verify(self) -> "CoverCommandConfig":
        if self.verify_path is None and (self.source is None or self.s is None or self.delta is None):
            raise ValueError("construir uma cobertura exige source, s e delta")
        return self


class SweepCommandConfig(ExperimentConfig):
    """Grid of (m, s) pairs with replicas; one CSV row per (grid point, replica)."""

    command: Literal["sweep"] = "sweep"
    kind: Literal["rip", "recover", "corsing"]
    system: SystemKind = SystemKind.FOURIER
    N: int | None = Field(None, ge=1)
    m_values: list[int] = Field(default_factory=list)
    s_values: list[int] = Field(min_length=1)
    method: RipMethod = RipMethod.EXACT
    trials: int = Field(10_000, ge=1)
    algorithm: RecoveryAlgorithm = RecoveryAlgorithm.OMP
    zeta: float = Field(0.0, ge=0)
    samples_factor: float | None = Field(None, gt=0, description="m = ⌈factor·s·ln N⌉ when m_values is empty")
    problem_path: str | None = None
    gamma: float = Field(CORSING_DEFAULT_GAMMA, gt=0, lt=1)

    @model_validator(mode="after")
    def _grid_is_defined(self) -> "SweepCommandConfig":
        if self.kind == "corsing":
            if self.problem_path is None:
                raise ValueError("sweep corsing exige problem_path")
        else:
            if self.N is None:
                raise ValueError(f"sweep {self.kind} exige N")
            if not self.m_values and self.samples_factor is None:
                raise ValueError("informe m_values ou samples_factor")
        return self


COMMAND_MODELS: dict[str, type[ExperimentConfig]] = {
    "rip": RipCommandConfig,
    "recover": RecoverCommandConfig,
    "corsing": CorsingCommandConfig,
    "cover": CoverCommandConfig,
    "sweep": SweepCommandConfig,
}
