"""Validação estrutural e semântica dos arquivos de problema CORSING."""

from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

from jsonschema import Draft202012Validator

from source.experiment_config.errors import ConfigValidationError


@lru_cache(maxsize=1)
def _load_schema() -> dict:
    schema_path = Path(__file__).with_name("problem_schema.json")
    with schema_path.open("r", encoding="utf-8") as arquivo:
        return json.load(arquivo)


def _validar_trial(trial: dict) -> None:
    if trial["kind"] == "hat_hierarchical":
        levels = trial.get("levels")
        N = trial.get("N")
        if levels is None and N is None:
            raise ConfigValidationError("trial: chapéus hierárquicos exigem 'levels' ou 'N'.")
        if N is not None and (N + 1) & N != 0:
            raise ConfigValidationError(f"trial.N = {N} inválido para chapéus: deve ser 2^L − 1.")
        if levels is not None and N is not None and N != 2**levels - 1:
            raise ConfigValidationError(f"trial.N = {N} não corresponde a levels = {levels}.")
    elif "N" not in trial:
        raise ConfigValidationError("trial.N é obrigatório para a base de senos.")
    elif "levels" in trial:
        raise ConfigValidationError("trial.levels só se aplica a chapéus hierárquicos.")


def trial_dimension(trial: dict) -> int:
    if trial["kind"] == "hat_hierarchical" and "levels" in trial:
        return 2 ** trial["levels"] - 1
    return int(trial["N"])


def validar_problema(problema: dict) -> None:
    """Confere o arquivo contra ``problem_schema.json`` e as regras que o schema não expressa.

    Raises:
        ConfigValidationError: Com o caminho do primeiro campo inválido.
    """
    if not isinstance(problema, dict):
        raise ConfigValidationError("O arquivo de problema deve ser um objeto JSON.")

    validator = Draft202012Validator(_load_schema())
    erros = sorted(validator.iter_errors(problema), key=lambda erro: list(erro.path))
    if erros:
        erro = erros[0]
        caminho = ".".join(str(parte) for parte in erro.path) or "$"
        raise ConfigValidationError(f"Problema inválido em {caminho}: {erro.message}")

    _validar_trial(problema["trial"])
    N = trial_dimension(problema["trial"])
    cap = problema["test"].get("cap")
    if cap is not None and cap <= N:
        raise ConfigValidationError(f"test.cap = {cap} deve exceder a dimensão trial N = {N}.")

    config = problema.get("config", {})
    if config.get("s", 1) > N:
        raise ConfigValidationError(f"config.s = {config['s']} excede N = {N}.")
