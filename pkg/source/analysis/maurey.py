"""Coberturas fracas construtivas pelo argumento empírico de Maurey.

Cada alvo f ∈ √s·B₁ (ℂ^N) é escrito como combinação convexa dos vértices
±√s·e_j e ±i√s·e_j; sorteando L vértices dessa distribuição, a média
aproxima f na seminorma max_{i∉I} |⟨f − g, X_i⟩| fora de um conjunto
excepcional I de tamanho limitado.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import MAUREY_MAX_ATTEMPTS
from source.numkit.errors import ArgumentError
from source.numkit.matrices import as_complex_matrix
from source.numkit.random_streams import RandomStream

logger = logging.getLogger(__name__)

_L1_SLACK = 1e-12


@dataclass(frozen=True)
class CoverParameters:
    s: int
    K: float
    delta: float
    rho: float
    m: int
    L: int
    exception_cap: float

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "K": self.K,
            "delta": self.delta,
            "rho": self.rho,
            "m": self.m,
            "L": self.L,
            "exception_cap": self.exception_cap,
        }


@dataclass(frozen=True)
class TargetCover:
    target_index: int
    net_index: int | None
    exceptions: tuple[int, ...]
    width: float
    attempts: int

    @property
    def success(self) -> bool:
        return self.net_index is not None

    def to_json_dict(self) -> dict:
        return {
            "target_index": self.target_index,
            "net_index": self.net_index,
            "exceptions": list(self.exceptions),
            "width": self.width,
            "attempts": self.attempts,
            "success": self.success,
        }


@dataclass(frozen=True)
class WeakCover:
    parameters: CoverParameters
    net_points: np.ndarray
    assignments: tuple[TargetCover, ...]
    stream: RandomStream
    notes: dict = field(default_factory=dict)

    @property
    def failures(self) -> tuple[TargetCover, ...]:
        return tuple(a for a in self.assignments if not a.success)

    def to_json_dict(self) -> dict:
        return {
            "parameters": self.parameters.to_json_dict(),
            "net_points": [[[float(v.real), float(v.imag)] for v in point] for point in self.net_points],
            "assignments": [a.to_json_dict() for a in self.assignments],
            "stream": self.stream.to_json_dict(),
            "notes": self.notes,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "WeakCover":
        parameters = CoverParameters(**payload["parameters"])
        raw_points = np.asarray(payload["net_points"], dtype=np.float64)
        net_points = raw_points[..., 0] + 1j * raw_points[..., 1] if raw_points.size else np.zeros((0, 0), complex)
        assignments = tuple(
            TargetCover(
                target_index=int(a["target_index"]),
                net_index=None if a["net_index"] is None else int(a["net_index"]),
                exceptions=tuple(int(i) for i in a["exceptions"]),
                width=float(a["width"]),
                attempts=int(a["attempts"]),
            )
            for a in payload["assignments"]
        )
        stream = RandomStream(**payload["stream"])
        return cls(parameters, net_points, assignments, stream, payload.get("notes", {}))


def cover_parameters(s: int, K: float, delta: float, rho: float, m: int) -> CoverParameters:
    """L = ⌊ρ⁻² s K² log₂(sK² log₂(sK²/δ)/δ)⌋ e limite 4δm/(sK² log₂(sK²/δ)).

    Raises:
        ArgumentError: Se os logaritmos não forem positivos ou os parâmetros inválidos.
    """
    if s < 1 or m < 1 or K <= 0 or rho <= 0 or delta <= 0:
        raise ArgumentError(f"Parâmetros de cobertura inválidos: s={s}, K={K}, δ={delta}, ρ={rho}, m={m}.")
    sK2 = s * K**2
    inner_log = math.log2(sK2 / delta)
    if inner_log <= 0:
        raise ArgumentError(f"log₂(sK²/δ) = {inner_log:.4g} deve ser positivo.")
    L = math.floor(sK2 * math.log2(sK2 * inner_log / delta) / rho**2)
    cap = 4.0 * delta * m / (sK2 * inner_log)
    return CoverParameters(s=s, K=K, delta=delta, rho=rho, m=m, L=max(L, 1), exception_cap=cap)


def covering_log_bound(s: int, K: float, delta: float, rho: float, N: int) -> float:
    """log do número de cobertura: 2·log₂(sK²/δ)·log₂(2N)·sK²/ρ²."""
    sK2 = s * K**2
    return 2.0 * math.log2(sK2 / delta) * math.log2(2.0 * N) * sK2 / rho**2


def vertex_distribution(target: np.ndarray, s: int) -> np.ndarray:
    """Pesos λ sobre os 4N vértices (+√s e_j, −√s e_j, +i√s e_j, −i√s e_j).

    A massa residual 1 − t é dividida igualmente entre ±√s e_0, que se
    cancelam na média.

    Raises:
        ArgumentError: Se ‖Re f‖₁ + ‖Im f‖₁ > √s (alvo fora de conv V).
    """
    root = math.sqrt(s)
    re, im = target.real, target.imag
    weights = np.concatenate([
        np.maximum(re, 0.0),
        np.maximum(-re, 0.0),
        np.maximum(im, 0.0),
        np.maximum(-im, 0.0),
    ]) / root
    total = float(weights.sum())
    if total > 1.0 + _L1_SLACK:
        raise ArgumentError(
            f"Alvo fora de conv V: (‖Re f‖₁ + ‖Im f‖₁)/√s = {total:.6g} > 1."
        )
    slack = max(1.0 - total, 0.0)
    N = target.size
    weights[0] += slack / 2.0
    weights[N] += slack / 2.0
    return weights / weights.sum()


def _vertices(N: int, s: int) -> np.ndarray:
    root = math.sqrt(s)
    identity = np.eye(N, dtype=np.complex128) * root
    return np.concatenate([identity, -identity, 1j * identity, -1j * identity])


def seminorm_profile(X_rows: np.ndarray, difference: np.ndarray) -> np.ndarray:
    """|⟨f − g, X_i⟩| para cada linha."""
    return np.abs(X_rows @ difference)


def maurey_weak_cover(
    targets: npt.ArrayLike,
    X_rows: npt.ArrayLike,
    rho: float,
    delta: float,
    stream: RandomStream,
    *,
    s: int,
    K: float | None = None,
    max_attempts: int = MAUREY_MAX_ATTEMPTS,
) -> WeakCover:
    """Constrói uma ρ-cobertura fraca de ``targets`` ⊂ √s·B₁.

    O alvo t usa o fluxo ``stream.child(t).child(tentativa)``; uma
    tentativa é aceita quando |{i : |⟨f − g, X_i⟩| > ρ}| ≤ 4δm/(sK² log₂(sK²/δ)).
    Alvos que falham em ``max_attempts`` tentativas ficam registrados sem
    ponto da rede.
    """
    T = np.atleast_2d(np.asarray(targets, dtype=np.complex128))
    X = as_complex_matrix(X_rows, name="X_rows")
    m, N = X.shape
    if T.shape[1] != N:
        raise ArgumentError(f"Alvos em ℂ^{T.shape[1]} e linhas X em ℂ^{N}.")
    K = float(np.max(np.abs(X))) if K is None else float(K)
    params = cover_parameters(s, K, delta, rho, m)
    vertices = _vertices(N, s)

    net_points: list[np.ndarray] = []
    net_lookup: dict[bytes, int] = {}
    assignments: list[TargetCover] = []
    for t, target in enumerate(T):
        probabilities = vertex_distribution(target, s)
        target_stream = stream.child(t)
        outcome = TargetCover(t, None, (), math.inf, max_attempts)
        for attempt in range(max_attempts):
            generator = target_stream.child(attempt).generator()
            draws = generator.choice(vertices.shape[0], size=params.L, p=probabilities)
            candidate = vertices[draws].mean(axis=0)
            profile = seminorm_profile(X, target - candidate)
            exceptions = np.flatnonzero(profile > rho)
            if exceptions.size <= params.exception_cap:
                key = candidate.tobytes()
                if key not in net_lookup:
                    net_lookup[key] = len(net_points)
                    net_points.append(candidate)
                inside = np.delete(profile, exceptions)
                width = float(inside.max()) if inside.size else 0.0
                outcome = TargetCover(t, net_lookup[key], tuple(int(i) for i in exceptions), width, attempt + 1)
                break
        if not outcome.success:
            logger.warning("Cobertura fraca: alvo %d sem ponto aceito após %d tentativas", t, max_attempts)
        assignments.append(outcome)

    net = np.asarray(net_points) if net_points else np.zeros((0, N), dtype=np.complex128)
    return WeakCover(
        parameters=params,
        net_points=net,
        assignments=tuple(assignments),
        stream=stream,
        notes={"covering_log_bound": covering_log_bound(s, K, delta, rho, N), "net_size": len(net_points)},
    )


@dataclass(frozen=True)
class CoverVerification:
    passed: bool
    failures: tuple[tuple[int, str], ...]

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failures": [{"target_index": t, "reason": reason} for t, reason in self.failures],
        }


def verify_weak_cover(cover: WeakCover, targets: npt.ArrayLike, X_rows: npt.ArrayLike) -> CoverVerification:
    """Reconfere, de forma independente, cada atribuição alvo → ponto da rede.

    Para cada alvo exige ponto atribuído, |I| ≤ limite e
    max_{i∉I} |⟨f − g, X_i⟩| ≤ ρ com o conjunto excepcional armazenado.
    """
    T = np.atleast_2d(np.asarray(targets, dtype=np.complex128))
    X = as_complex_matrix(X_rows, name="X_rows")
    params = cover.parameters
    failures: list[tuple[int, str]] = []
    by_target = {a.target_index: a for a in cover.assignments}

    for t, target in enumerate(T):
        assignment = by_target.get(t)
        if assignment is None or not assignment.success:
            failures.append((t, "sem ponto da rede atribuído"))
            continue
        if not 0 <= assignment.net_index < len(cover.net_points):
            failures.append((t, f"índice de rede inválido {assignment.net_index}"))
            continue
        if len(assignment.exceptions) > params.exception_cap:
            failures.append((t, f"|I| = {len(assignment.exceptions)} excede {params.exception_cap:.4g}"))
            continue
        profile = seminorm_profile(X, target - cover.net_points[assignment.net_index])
        inside = np.delete(profile, list(assignment.exceptions))
        worst = float(inside.max()) if inside.size else 0.0
        if worst > params.rho * (1.0 + 1e-12):
            failures.append((t, f"seminorma {worst:.6g} > ρ = {params.rho:.6g}"))
    return CoverVerification(passed=not failures, failures=tuple(failures))
