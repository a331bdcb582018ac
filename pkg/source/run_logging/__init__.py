"""
Structured run logging.
Keeps one JSON-lines buffer per replica and the session metadata of a CLI run.
"""

from source.run_logging.experiment_logger import ExperimentLogger, StepTiming, run_step_logger

__all__ = ["ExperimentLogger", "StepTiming", "run_step_logger"]
