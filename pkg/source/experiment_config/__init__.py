from source.experiment_config.config_manager import (
    ConfigurationManager,
    ConfigurationStrategy,
    JSONConfigurationStrategy,
    YAMLConfigurationStrategy,
    build_experiment_config,
    strategy_for,
)
from source.experiment_config.errors import ConfigValidationError
from source.experiment_config.loader import ProblemDefinition, carregar_problema, montar_problema
from source.experiment_config.models import (
    COMMAND_MODELS,
    CorsingCommandConfig,
    CoverCommandConfig,
    ExperimentConfig,
    MeasurementSource,
    RecoverCommandConfig,
    RipCommandConfig,
    SweepCommandConfig,
)
from source.experiment_config.validation import trial_dimension, validar_problema

__all__ = [
    "COMMAND_MODELS",
    "ConfigValidationError",
    "ConfigurationManager",
    "ConfigurationStrategy",
    "CorsingCommandConfig",
    "CoverCommandConfig",
    "ExperimentConfig",
    "JSONConfigurationStrategy",
    "MeasurementSource",
    "ProblemDefinition",
    "RecoverCommandConfig",
    "RipCommandConfig",
    "SweepCommandConfig",
    "YAMLConfigurationStrategy",
    "build_experiment_config",
    "carregar_problema",
    "montar_problema",
    "strategy_for",
    "trial_dimension",
    "validar_problema",
]
