"""bellpaths: a numerical laboratory for sum-over-paths models and Bell statistics."""

from .amplitude import ClockPointer, ComplexAmplitude, abs_square, circular_distance, unit
from .toy import Branch, ToySettings, ToyTrial, branch, run_toy_trial, toy_p_same_exact, toy_p_same_mc

__all__ = [
    "ClockPointer",
    "ComplexAmplitude",
    "abs_square",
    "circular_distance",
    "unit",
    "Branch",
    "ToySettings",
    "ToyTrial",
    "branch",
    "run_toy_trial",
    "toy_p_same_exact",
    "toy_p_same_mc",
]

__version__ = "0.1.0"
