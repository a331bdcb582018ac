"""Execução de réplicas independentes, em série ou num pool de threads."""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import TypeVar

from dotenv import load_dotenv

from source.experiment_config.errors import ConfigValidationError
from source.numkit.random_streams import RandomStream

logger = logging.getLogger(__name__)

THREADS_ENV = "CORSING_LAB_THREADS"

T = TypeVar("T")


def resolve_threads(cli_value: int | None, env_file: str | None = None) -> int:
    """--threads, senão CORSING_LAB_THREADS (lido de ``env_file`` se informado), senão 1."""
    if cli_value is not None:
        if cli_value < 1:
            raise ConfigValidationError(f"--threads deve ser ≥ 1; recebido {cli_value}.")
        return cli_value
    if env_file is not None:
        if not Path(env_file).is_file():
            raise FileNotFoundError(f"Arquivo de ambiente não encontrado: {env_file}")
        load_dotenv(env_file, override=False)
    raw = os.getenv(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigValidationError(f"{THREADS_ENV} deve ser inteiro; recebido {raw!r}.") from exc
    if value < 1:
        raise ConfigValidationError(f"{THREADS_ENV} deve ser ≥ 1; recebido {value}.")
    return value


def replica_streams(seed: int, stream_id: int, replicas: int) -> list[RandomStream]:
    base = RandomStream(seed, stream_id)
    return [base.child(replica) for replica in range(replicas)]


def run_tasks(tasks: Sequence[Callable[[], T]], threads: int) -> list[T]:
    """Executa as tarefas e devolve os resultados na ordem de ``tasks``.

    Cada tarefa carrega o próprio fluxo aleatório, então o resultado não
    depende de ``threads``.
    """
    if threads <= 1 or len(tasks) <= 1:
        return [task() for task in tasks]
    workers = min(threads, len(tasks))
    logger.debug("Executando %d tarefas com %d threads", len(tasks), workers)
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="corsing-lab-") as executor:
        return list(executor.map(lambda task: task(), tasks))
