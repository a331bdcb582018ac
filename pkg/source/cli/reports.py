"""Relatórios JSON e tabelas CSV; todo relatório carrega a configuração usada."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pandas as pd

from source import __version__
from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.models import ExperimentConfig


def ensure_writable(path: str | Path, overwrite: bool) -> Path:
    output_path = Path(path)
    if output_path.exists() and not overwrite:
        raise ConfigValidationError(
            f"arquivo de saída já existe: {output_path}. Use --overwrite para sobrescrever."
        )
    return output_path


def build_report(config: ExperimentConfig, result: dict) -> dict:
    return {
        "version": __version__,
        "command": config.command,
        "seed": config.seed,
        "stream_id": config.stream_id,
        "config": config.model_dump(mode="json"),
        "result": result,
    }


def _json_default(value: object) -> object:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.integer, np.floating, np.bool_)):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    raise TypeError(f"Objeto não serializável: {type(value).__name__}")


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False, default=_json_default)


def write_json_report(path: str | Path, report: dict, *, overwrite: bool = False) -> Path:
    output_path = ensure_writable(path, overwrite)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(dumps_report(report) + "\n", encoding="utf-8")
    return output_path


def read_json_report(path: str | Path) -> dict:
    report_path = Path(path)
    if not report_path.is_file():
        raise FileNotFoundError(f"Relatório não encontrado: {report_path}")
    try:
        return json.loads(report_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigValidationError(f"Relatório {report_path.name} ilegível na linha {exc.lineno}: {exc.msg}") from exc


def write_csv_table(path: str | Path, table: pd.DataFrame, *, overwrite: bool = False) -> Path:
    """Grava a tabela com a ordem de colunas dada; floats em repr para comparação byte a byte."""
    output_path = ensure_writable(path, overwrite)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(output_path, index=False, lineterminator="\n")
    return output_path


def complex_pairs(values: np.ndarray) -> list[list[float]]:
    return [[float(v.real), float(v.imag)] for v in np.asarray(values, dtype=np.complex128).reshape(-1)]


def complex_from_pairs(pairs: list) -> np.ndarray:
    raw = np.asarray(pairs, dtype=np.float64)
    return raw[..., 0] + 1j * raw[..., 1]
