import json
import logging
import os
from abc import ABC, abstractmethod
from typing import Any

import yaml
from pydantic import ValidationError

from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.models import COMMAND_MODELS, ExperimentConfig

logger = logging.getLogger(__name__)


def build_experiment_config(data: Any) -> ExperimentConfig:
    """
    Converts a raw mapping into the command model named by its ``command`` key.
    A report payload is accepted too: its embedded ``config`` block is used.

    Raises:
        ConfigValidationError: If the mapping does not describe a known command
    """
    if isinstance(data, dict) and isinstance(data.get("config"), dict):
        data = data["config"]
    if not isinstance(data, dict):
        raise ConfigValidationError("A configuração deve ser um objeto (mapeamento chave → valor).")
    command = data.get("command")
    if command not in COMMAND_MODELS:
        raise ConfigValidationError(
            f"Comando ausente ou desconhecido: {command!r}. Opções: {sorted(COMMAND_MODELS)}."
        )
    try:
        return COMMAND_MODELS[command].model_validate(data)
    except ValidationError as exc:
        erro = exc.errors()[0]
        caminho = ".".join(str(parte) for parte in erro["loc"]) or "$"
        raise ConfigValidationError(f"Configuração inválida em {caminho}: {erro['msg']}") from exc


class ConfigurationStrategy(ABC):
    """
    Strategy interface for loading experiment configurations.
    """

    @abstractmethod
    def parse(self, text: str) -> Any:
        """Parses the file contents into plain Python data."""

    def load_configuration(self, config_path: str) -> ExperimentConfig:
        """
        Loads configuration from the specified path.

        Args:
            config_path: Path to the configuration file (or to a report embedding one)

        Returns:
            The command-specific ExperimentConfig

        Raises:
            FileNotFoundError: If the configuration file is not found
            ConfigValidationError: If the contents do not describe a valid config
        """
        if not os.path.exists(config_path):
            raise FileNotFoundError(f"Configuration file not found at {config_path}")
        with open(config_path, "r", encoding="utf-8") as f:
            data = self.parse(f.read())
        config = build_experiment_config(data)
        logger.info("Configuração %s carregada de %s", config.command, config_path)
        return config


class JSONConfigurationStrategy(ConfigurationStrategy):
    """Loads configurations (or report files) written as JSON."""

    def parse(self, text: str) -> Any:
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigValidationError(f"JSON inválido na linha {exc.lineno}: {exc.msg}") from exc


class YAMLConfigurationStrategy(ConfigurationStrategy):
    """Loads configurations written as YAML."""

    def parse(self, text: str) -> Any:
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise ConfigValidationError(f"Error parsing YAML file: {exc}") from exc


def strategy_for(config_path: str) -> ConfigurationStrategy:
    extension = os.path.splitext(config_path)[1].lower()
    if extension in (".yaml", ".yml"):
        return YAMLConfigurationStrategy()
    return JSONConfigurationStrategy()


class ConfigurationManager:
    """
    Manages experiment configuration loading and access.
    Uses the Strategy pattern to support different configuration sources.
    """

    def __init__(self, strategy: ConfigurationStrategy):
        if not isinstance(strategy, ConfigurationStrategy):
            raise TypeError("Strategy must be an instance of ConfigurationStrategy")

        self._strategy = strategy
        self._config: ExperimentConfig | None = None

    def load(self, config_path: str) -> None:
        self._config = self._strategy.load_configuration(config_path)

    @property
    def config(self) -> ExperimentConfig:
        """
        Gets the loaded configuration.

        Raises:
            ValueError: If the configuration has not been loaded
        """
        if self._config is None:
            raise ValueError("Configuration not loaded. Call load() first.")
        return self._config
