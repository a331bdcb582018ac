"""Enumeração determinística de suportes com limite de cardinalidade."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator

from source.constantes.hiper_parametros import ENUMERATION_CAP
from source.numkit.errors import ArgumentError, EnumerationCapError


def count_supports(N: int, s: int) -> int:
    return math.comb(N, s)


def check_enumeration_cap(count: int, cap: int = ENUMERATION_CAP) -> None:
    if count > cap:
        raise EnumerationCapError(
            f"Enumeração exata exigiria {count} suportes; limite configurado é {cap}."
        )


def iter_supports(N: int, s: int, cap: int = ENUMERATION_CAP) -> Iterator[tuple[int, ...]]:
    """Todos os suportes de tamanho ``s`` em [N], em ordem lexicográfica.

    Raises:
        ArgumentError: Se s < 1 ou s > N.
        EnumerationCapError: Se C(N, s) exceder ``cap``.
    """
    if not 1 <= s <= N:
        raise ArgumentError(f"s deve estar em [1, N={N}]; recebido s={s}.")
    check_enumeration_cap(count_supports(N, s), cap)
    return itertools.combinations(range(N), s)


def batched(iterable, size: int):
    iterator = iter(iterable)
    while batch := list(itertools.islice(iterator, size)):
        yield batch
