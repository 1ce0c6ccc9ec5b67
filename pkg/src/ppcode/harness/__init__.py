"""Channel simulation, brute-force oracle, parameter schedule and CLI."""

from .channel import corrupt_columns
from .experiment import ExperimentConfig, TrialRecord, run_experiment, summarize
from .oracle import brute_force_list
from .params import ParamSuggestion, suggest_params

__all__ = [
    "ExperimentConfig",
    "ParamSuggestion",
    "TrialRecord",
    "brute_force_list",
    "corrupt_columns",
    "run_experiment",
    "suggest_params",
    "summarize",
]
