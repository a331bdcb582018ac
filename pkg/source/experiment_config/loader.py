"""Loader dos arquivos de problema CORSING (JSON ou YAML)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import yaml

from source.constantes.hiper_parametros import CORSING_DEFAULT_GAMMA, CORSING_DEFAULT_TEST_CAP
from source.constantes.models import SystemKind
from source.corsing.problem import AdrProblem, CorsingConfig, PetrovGalerkinSetup, build_setup
from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.validation import trial_dimension, validar_problema
from source.numkit.errors import ArgumentError
from source.systems.function_systems import hat_hierarchical_system, sine_h10_system


@dataclass(frozen=True)
class ProblemDefinition:
    problem: AdrProblem
    setup: PetrovGalerkinSetup
    config: CorsingConfig
    raw: dict


def _ler_arquivo(arquivo: Path) -> dict:
    with arquivo.open("r", encoding="utf-8") as fp:
        texto = fp.read()
    try:
        if arquivo.suffix.lower() in (".yaml", ".yml"):
            return yaml.safe_load(texto)
        return json.loads(texto)
    except (json.JSONDecodeError, yaml.YAMLError) as exc:
        raise ConfigValidationError(f"Arquivo de problema ilegível ({arquivo.name}): {exc}") from exc


def montar_problema(problema: dict, overrides: dict | None = None) -> ProblemDefinition:
    """Constrói problema, par trial/test e configuração a partir de um dicionário já lido.

    ``overrides`` (s, m, gamma, seed, k, L, epsilon, stream_id) substitui o bloco ``config``.
    """
    validar_problema(problema)
    trial_block = problema["trial"]
    N = trial_dimension(trial_block)
    if trial_block["kind"] == SystemKind.HAT_HIERARCHICAL.value:
        trial = hat_hierarchical_system(N.bit_length())
    else:
        trial = sine_h10_system(N)
    test = sine_h10_system(problema["test"].get("cap", max(CORSING_DEFAULT_TEST_CAP, 2 * N)))

    bloco = dict(problema.get("config", {}))
    bloco.update({chave: valor for chave, valor in (overrides or {}).items() if valor is not None})
    if "s" not in bloco:
        raise ConfigValidationError("config.s é obrigatório (no arquivo ou na linha de comando).")
    if bloco["s"] > N:
        raise ConfigValidationError(f"config.s = {bloco['s']} excede N = {N}.")

    try:
        adr = AdrProblem.from_values(
            mu=problema["mu"],
            beta_adv=problema.get("beta", 0.0),
            rho_reac=problema.get("rho", 0.0),
            forcing=problema["forcing"],
        )
        config = CorsingConfig(
            s=bloco["s"],
            m=bloco.get("m"),
            gamma=bloco.get("gamma", CORSING_DEFAULT_GAMMA),
            seed=bloco.get("seed", 0),
            stream_id=bloco.get("stream_id", 0),
            omp_iterations=bloco.get("k"),
            L_bound=bloco.get("L"),
            epsilon=bloco.get("epsilon"),
        )
        setup = build_setup(adr, trial, test)
    except ArgumentError as exc:
        raise ConfigValidationError(f"Problema inválido: {exc}") from exc
    return ProblemDefinition(problem=adr, setup=setup, config=config, raw=problema)


def carregar_problema(path: str | Path, overrides: dict | None = None) -> ProblemDefinition:
    arquivo = Path(path)
    if not arquivo.is_file():
        raise FileNotFoundError(f"Arquivo de problema não encontrado: {arquivo}")
    return montar_problema(_ler_arquivo(arquivo), overrides)
