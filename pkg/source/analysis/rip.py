"""Constantes de isometria restrita: enumeração exata, Monte Carlo e versão ponderada."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from source.constantes.hiper_parametros import ENUMERATION_CAP, SUPPORT_BATCH_SIZE
from source.constantes.models import RipMethod
from source.numkit.errors import ArgumentError, EnumerationCapError
from source.numkit.matrices import as_complex_matrix
from source.numkit.random_streams import RandomStream
from source.numkit.supports import batched, iter_supports
from source.recovery.signals import WeightVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RipReport:
    """Valor de ε_s, o suporte que o atinge e como foi obtido.

    ``epsilon_s`` é exato para os métodos de enumeração e um limite
    inferior para Monte Carlo.
    """

    s: float
    epsilon_s: float
    extremal_support: tuple[int, ...]
    method: RipMethod
    supports_examined: int = 0
    trials: int = 0
    degenerate: bool = False
    stream: RandomStream | None = None
    extra: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "epsilon_s": self.epsilon_s,
            "extremal_support": list(self.extremal_support),
            "method": self.method.value,
            "supports_examined": self.supports_examined,
            "trials": self.trials,
            "degenerate": self.degenerate,
            "stream": self.stream.to_json_dict() if self.stream else None,
            **self.extra,
        }


def max_restricted_deviation(
    D: np.ndarray,
    supports: Iterable[Sequence[int]],
) -> tuple[float, tuple[int, ...], int]:
    """max_S ‖D_{S,S}‖₂ para D hermitiana, percorrendo ``supports`` em ordem.

    Retorna (valor, primeiro suporte que atinge o máximo, suportes examinados).
    Suportes de mesmo tamanho são processados em lotes.
    """
    best_value = 0.0
    best_support: tuple[int, ...] = ()
    examined = 0
    for batch in batched(supports, SUPPORT_BATCH_SIZE):
        by_size: dict[int, list[int]] = {}
        for position, support in enumerate(batch):
            by_size.setdefault(len(support), []).append(position)
        values = np.zeros(len(batch))
        for size, positions in by_size.items():
            if size == 0:
                continue
            idx = np.asarray([batch[p] for p in positions], dtype=np.int64)
            blocks = D[idx[:, :, None], idx[:, None, :]]
            eigenvalues = np.linalg.eigvalsh(blocks)
            values[positions] = np.maximum(np.abs(eigenvalues[:, 0]), np.abs(eigenvalues[:, -1]))
        local = int(np.argmax(values))
        if values[local] > best_value:
            best_value = float(values[local])
            best_support = tuple(int(j) for j in batch[local])
        examined += len(batch)
    return best_value, best_support, examined


def rip_exact(A: npt.ArrayLike, s: int, *, cap: int = ENUMERATION_CAP) -> RipReport:
    """ε_s = max_{|S|=s} ‖A_Sᴴ A_S − I‖₂ por enumeração exata.

    Raises:
        ArgumentError: Se s ∉ [1, N].
        EnumerationCapError: Se C(N, s) exceder ``cap``.
    """
    matrix = as_complex_matrix(A, name="A")
    N = matrix.shape[1]
    deviation = matrix.conj().T @ matrix - np.eye(N)
    value, support, examined = max_restricted_deviation(deviation, iter_supports(N, s, cap))
    return RipReport(
        s=s,
        epsilon_s=value,
        extremal_support=support,
        method=RipMethod.EXACT,
        supports_examined=examined,
    )


def rip_monte_carlo(
    A: npt.ArrayLike,
    s: int,
    trials: int,
    stream: RandomStream,
    *,
    batch_size: int = 2048,
) -> RipReport:
    """Limite inferior de ε_s por vetores s-esparsos unitários aleatórios.

    Cada tentativa sorteia um suporte uniforme de tamanho ``s`` e
    coeficientes gaussianos complexos normalizados; o valor é
    |‖Af‖² − 1|.
    """
    matrix = as_complex_matrix(A, name="A")
    N = matrix.shape[1]
    if not 1 <= s <= N:
        raise ArgumentError(f"s deve estar em [1, N={N}]; recebido s={s}.")
    if trials < 1:
        raise ArgumentError(f"trials deve ser ≥ 1; recebido {trials}.")

    generator = stream.generator()
    columns = matrix.T
    best_value, best_support = 0.0, ()
    done = 0
    while done < trials:
        size = min(batch_size, trials - done)
        supports = np.argsort(generator.random((size, N)), axis=1)[:, :s]
        coefficients = generator.standard_normal((size, s)) + 1j * generator.standard_normal((size, s))
        coefficients /= np.linalg.norm(coefficients, axis=1, keepdims=True)
        images = np.einsum("bk,bkm->bm", coefficients, columns[supports])
        values = np.abs(np.sum(np.abs(images) ** 2, axis=1) - 1.0)
        local = int(np.argmax(values))
        if values[local] > best_value:
            best_value = float(values[local])
            best_support = tuple(sorted(int(j) for j in supports[local]))
        done += size
    return RipReport(
        s=s,
        epsilon_s=best_value,
        extremal_support=best_support,
        method=RipMethod.MONTE_CARLO,
        trials=trials,
        stream=stream,
    )


def maximal_weighted_supports(w: np.ndarray, s: float, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """Suportes maximais com Σ_{j∈S} w_j² ≤ s, em ordem lexicográfica.

    ``cap`` limita os subconjuntos admissíveis visitados pela busca, maximais
    ou não; cada um é visitado uma única vez.
    """
    squares = np.asarray(w, dtype=np.float64) ** 2
    N = squares.size
    budget = float(s) * (1.0 + 1e-12)
    suffix_min = np.minimum.accumulate(squares[::-1])[::-1]
    result: list[tuple[int, ...]] = []
    visited = 0

    def extend(start: int, chosen: list[int], used: float) -> None:
        nonlocal visited
        visited += 1
        if visited > cap:
            raise EnumerationCapError(
                f"Enumeração ponderada visitou mais de {cap} subconjuntos com Σ w_j² ≤ s "
                f"(maximais ou não); {len(result)} suportes maximais encontrados até então."
            )
        grew = False
        for j in range(start, N):
            if used + suffix_min[j] > budget:
                break
            if used + squares[j] <= budget:
                grew = True
                chosen.append(j)
                extend(j + 1, chosen, used + squares[j])
                chosen.pop()
        if not grew and _is_maximal(chosen, used):
            result.append(tuple(chosen))

    def _is_maximal(chosen: list[int], used: float) -> bool:
        members = set(chosen)
        return not any(
            j not in members and used + squares[j] <= budget for j in range(N)
        )

    extend(0, [], 0.0)
    return result


def weighted_rip_exact(
    A: npt.ArrayLike,
    s: float,
    w: WeightVector | npt.ArrayLike,
    *,
    cap: int = ENUMERATION_CAP,
) -> RipReport:
    """ε_{w,s} = max sobre suportes maximais com Σ w_j² ≤ s de ‖A_Sᴴ A_S − I‖₂.

    Com w ≡ 1 e s inteiro os suportes maximais são exatamente os de
    tamanho s e o resultado coincide com ``rip_exact``.
    """
    matrix = as_complex_matrix(A, name="A")
    N = matrix.shape[1]
    weights = w if isinstance(w, WeightVector) else WeightVector(np.asarray(w))
    if weights.N != N:
        raise ArgumentError(f"w tem {weights.N} entradas; A tem {N} colunas.")
    if s < 0 or not math.isfinite(s):
        raise ArgumentError(f"s deve ser ≥ 0 e finito; recebido {s}.")

    if s < float(np.min(weights.w ** 2)):
        logger.info("Nenhum suporte não vazio admissível para s=%s", s)
        return RipReport(s=s, epsilon_s=0.0, extremal_support=(), method=RipMethod.WEIGHTED_EXACT, degenerate=True)

    supports = maximal_weighted_supports(weights.w, s, cap)
    deviation = matrix.conj().T @ matrix - np.eye(N)
    value, support, examined = max_restricted_deviation(deviation, supports)
    return RipReport(
        s=s,
        epsilon_s=value,
        extremal_support=support,
        method=RipMethod.WEIGHTED_EXACT,
        supports_examined=examined,
    )
