"""Classical clock-pointer toy experiment: twin objects, fork phase shifts, bivalent branching.

Two classical objects leave a common source with clock-pointers set to the same
random angle. A measurement setting lengthens one side's path, rotating its
pointer by alpha (left) or beta (right); a bivalent fork function then sends
each object to the Upper or Lower branch depending on which half-circle its
pointer lies in.

Exact same-branch probability is 1 - d/pi with d the circular separation of
the settings: 1 at equal settings, 1/3 at separation 2*pi/3. The formula is
used for all angle pairs, derivable by integrating the branch rule over a
uniform hidden angle. (The 4*pi/3 separation is the same circular distance as
2*pi/3 and also gives 1/3; a claim that it gives 0 does not survive direct
integration and is not adopted here.)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .amplitude import TWO_PI, circular_distance, normalize_angle
from .rng import spawn_streams


class Branch(enum.Enum):
    UPPER = "Upper"
    LOWER = "Lower"


@dataclass(frozen=True)
class ToySettings:
    """Measurement phase shifts applied just before the forks."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", normalize_angle(self.alpha))
        object.__setattr__(self, "beta", normalize_angle(self.beta))


@dataclass(frozen=True)
class ToyTrial:
    gamma: float
    left_outcome: Branch
    right_outcome: Branch


# The standard three-setting menu, equally spaced on the circle.
CANONICAL_SETTINGS = (0.0, TWO_PI / 3.0, 2.0 * TWO_PI / 3.0)


def branch(theta: float) -> Branch:
    """Bivalent fork rule: Upper on [0, pi), Lower on [pi, 2*pi)."""
    return Branch.UPPER if normalize_angle(theta) < math.pi else Branch.LOWER


def run_toy_trial(settings: ToySettings, gamma: float) -> ToyTrial:
    """Deterministic outcome pair for a given hidden pointer angle gamma."""
    return ToyTrial(
        gamma=gamma,
        left_outcome=branch(gamma + settings.alpha),
        right_outcome=branch(gamma + settings.beta),
    )


def toy_p_same_exact(settings: ToySettings) -> float:
    """Exact probability of equal outcomes over uniform gamma: 1 - d/pi."""
    return 1.0 - circular_distance(settings.alpha, settings.beta) / math.pi


def _same_outcomes(gamma: np.ndarray, alpha: float, beta: float) -> np.ndarray:
    left = (gamma + alpha) % TWO_PI < math.pi
    right = (gamma + beta) % TWO_PI < math.pi
    return left == right


def toy_p_same_mc(
    settings: ToySettings, n: int, seed: int, workers: int = 1
) -> tuple[float, float]:
    """Monte Carlo same-branch fraction with a 3-sigma half-width.

    gamma is drawn uniform on [0, 2*pi) per trial. Deterministic for a given
    seed and worker count; worker substreams are spawned from the seed.
    """
    if n < 1:
        raise ValueError(f"trial count must be >= 1, got {n}")
    same = 0
    for stream, chunk in spawn_streams(seed, n, workers):
        gamma = stream.uniform(0.0, TWO_PI, size=chunk)
        same += int(np.count_nonzero(_same_outcomes(gamma, settings.alpha, settings.beta)))
    p_hat = same / n
    ci = 3.0 * math.sqrt(p_hat * (1.0 - p_hat) / n)
    return p_hat, ci
