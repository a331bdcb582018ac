import json
import threading
import time
from contextlib import contextmanager
from datetime import datetime
from io import StringIO
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np

from source import __version__


class ExperimentLogger:
    """
    Logger estruturado de uma execução: um buffer JSON-lines por réplica e
    metadados da sessão, gravados num único arquivo ao final.
    """

    def __init__(self, command: str, seed: int, log_path: Optional[str] = None):
        """
        Args:
            command: Subcomando executado
            seed: Semente base da execução
            log_path: Arquivo JSON-lines de saída (None desativa a gravação)
        """
        self.command = command
        self.log_path = Path(log_path) if log_path else None
        self.replica_buffers: Dict[int, StringIO] = {}
        self.lock = threading.Lock()
        self.session_metadata = {
            "command": command,
            "seed": seed,
            "version": __version__,
            "start_time": datetime.now().isoformat(),
            "replicas": [],
        }

    def start_replica(self, replica: int, stream: Dict[str, int]) -> None:
        with self.lock:
            self.replica_buffers[replica] = StringIO()
            self.session_metadata["replicas"].append({"index": replica, "stream": stream})
        self.log(replica, "INFO", f"Starting replica {replica}", {"stream": stream})

    def log(self, replica: int, level: str, message: str, data: Optional[Dict[str, Any]] = None) -> None:
        """
        Registra uma entrada no buffer da réplica; réplicas não iniciadas são ignoradas.
        """
        entry = {"timestamp": datetime.now().isoformat(), "level": level, "message": message}
        if data:
            entry["data"] = _sanitize(data)
        with self.lock:
            buffer = self.replica_buffers.get(replica)
            if buffer is not None:
                buffer.write(json.dumps(entry, ensure_ascii=False) + "\n")

    def log_error(self, replica: int, error: BaseException) -> None:
        self.log(replica, "ERROR", f"Error occurred: {type(error).__name__}", {
            "error_type": type(error).__name__,
            "error_message": str(error),
        })

    def entries(self, replica: int) -> list[dict]:
        with self.lock:
            buffer = self.replica_buffers.get(replica)
            text = buffer.getvalue() if buffer is not None else ""
        return [json.loads(line) for line in text.splitlines() if line]

    def write(self) -> Optional[str]:
        """
        Grava os metadados da sessão seguidos das entradas, réplica a réplica em ordem.

        Returns:
            Caminho do arquivo gravado, ou None sem ``log_path``
        """
        if self.log_path is None:
            return None
        with self.lock:
            self.session_metadata["end_time"] = datetime.now().isoformat()
            self.log_path.parent.mkdir(parents=True, exist_ok=True)
            with self.log_path.open("w", encoding="utf-8") as handle:
                handle.write(json.dumps({"session": self.session_metadata}, ensure_ascii=False) + "\n")
                for replica in sorted(self.replica_buffers):
                    handle.write(self.replica_buffers[replica].getvalue())
        return str(self.log_path)

    def close(self) -> None:
        with self.lock:
            for buffer in self.replica_buffers.values():
                buffer.close()
            self.replica_buffers.clear()


def _sanitize(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(key): _sanitize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_sanitize(item) for item in value]
    if isinstance(value, np.ndarray):
        return {"shape": list(value.shape), "dtype": str(value.dtype)}
    if isinstance(value, (np.integer, np.floating)):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    try:
        json.dumps(value)
        return value
    except (TypeError, ValueError):
        return f"<Non-serializable {type(value).__name__}>"


class StepTiming:
    """Duração medida por ``run_step_logger``; ``duration_ms`` é preenchido na saída."""

    def __init__(self) -> None:
        self.duration_ms = 0.0


@contextmanager
def run_step_logger(logger: Optional[ExperimentLogger], replica: int, step: str, payload: Dict[str, Any]):
    """
    Context manager que registra início e fim de uma etapa com ``duration_ms``.

    Args:
        logger: ExperimentLogger (pode ser None; a duração é medida mesmo assim)
        replica: Índice da réplica
        step: Nome da etapa
        payload: Parâmetros da etapa
    """
    timing = StepTiming()
    if logger:
        logger.log(replica, "INFO", f"Starting {step}", {"step": step, "params": payload})
    start = time.perf_counter()
    try:
        yield timing
    finally:
        timing.duration_ms = (time.perf_counter() - start) * 1000
        if logger:
            logger.log(replica, "DEBUG", f"Step {step} completed in {timing.duration_ms:.2f}ms", {
                "step": step,
                "duration_ms": timing.duration_ms,
            })
