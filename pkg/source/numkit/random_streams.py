"""Fluxos aleatórios reprodutíveis baseados em contador (Philox)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from source.numkit.errors import ArgumentError

_UINT64_MAX = 2**64 - 1


@dataclass(frozen=True)
class RandomStream:
    """Par (seed, stream_id) que determina uma sequência de números aleatórios.

    O mesmo par gera a mesma sequência em qualquer plataforma e em qualquer
    ordem de execução; fluxos filhos são derivados por ``child`` e não
    compartilham estado com o pai.
    """

    seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        for field_name in ("seed", "stream_id"):
            value = getattr(self, field_name)
            if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
                raise ArgumentError(f"{field_name} deve ser inteiro; recebido {value!r}.")
            if not 0 <= int(value) <= _UINT64_MAX:
                raise ArgumentError(f"{field_name} fora de [0, 2^64): {value}.")

    def generator(self) -> np.random.Generator:
        sequence = np.random.SeedSequence(int(self.seed), spawn_key=(int(self.stream_id),))
        return np.random.Generator(np.random.Philox(sequence))

    def child(self, index: int) -> "RandomStream":
        """Deriva o fluxo filho ``index`` (réplica, tentativa, alvo...)."""
        if index < 0:
            raise ArgumentError(f"índice de fluxo filho negativo: {index}.")
        mixed = np.random.SeedSequence([int(self.stream_id), int(index)]).generate_state(1, dtype=np.uint64)[0]
        return RandomStream(seed=int(self.seed), stream_id=int(mixed))

    def to_json_dict(self) -> dict:
        return {"seed": int(self.seed), "stream_id": int(self.stream_id)}
