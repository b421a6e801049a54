"""Stern-Gerlach cascades for spin-1/2: class-label state machine vs spinor oracle.

The simulator carries (last orientation, class sign). A standard device at
angle delta to the last orientation keeps the sign with probability
cos^2(delta/2) and flips it otherwise; a repeat orientation is deterministic
and a modified (recombining) device records nothing and leaves the state
unchanged. The oracle computes the exact sequential-measurement distribution
from two-component state vectors with projection at each standard device, and
is the arbiter for the branching law.

run_sequence uses a counts-based simulation (binomial splits of trial counts
per state bucket), which has exactly the same distribution as per-trial
sampling of the same Markov dynamics but runs in time independent of n.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

UNIT_TOL = 1e-12

Vec3 = tuple[float, float, float]


def _as_unit(v: Sequence[float]) -> np.ndarray:
    arr = np.asarray(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"orientation must be a 3-vector, got shape {arr.shape}")
    norm = float(np.linalg.norm(arr))
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"orientation must be a unit vector, |v| = {norm}")
    return arr / norm


def planar_axis(angle: float) -> Vec3:
    """Unit vector in the x-z plane at polar angle `angle` from +z."""
    return (math.sin(angle), 0.0, math.cos(angle))


class DeviceKind(enum.Enum):
    STANDARD = "standard"
    MODIFIED = "modified"  # beams recombined; no measurement occurs


@dataclass(frozen=True)
class SGDevice:
    orientation: Vec3
    kind: DeviceKind = DeviceKind.STANDARD

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", tuple(_as_unit(self.orientation)))

    @staticmethod
    def planar(angle: float, modified: bool = False) -> "SGDevice":
        return SGDevice(
            planar_axis(angle),
            DeviceKind.MODIFIED if modified else DeviceKind.STANDARD,
        )


@dataclass(frozen=True)
class SGState:
    """Last measured orientation and the class sign (+1 <-> +hbar/2 along it)."""

    orientation: Vec3
    sign: int  # +1 or -1

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", tuple(_as_unit(self.orientation)))
        if self.sign not in (+1, -1):
            raise ValueError(f"class sign must be +1 or -1, got {self.sign}")


def angle_between(u: Sequence[float], v: Sequence[float]) -> float:
    cosang = float(np.clip(np.dot(_as_unit(u), _as_unit(v)), -1.0, 1.0))
    return math.acos(cosang)


def keep_probability(delta: float) -> float:
    """Probability the class sign survives a reorientation by angle delta."""
    return math.cos(delta / 2.0) ** 2


def sg_step(
    state: SGState, dev: SGDevice, rng: np.random.Generator
) -> tuple[int | None, SGState]:
    """One device passage: (recorded outcome or None for modified, new state)."""
    if dev.kind is DeviceKind.MODIFIED:
        return None, state
    # exact-equality fast path keeps repeat orientations strictly deterministic
    delta = (
        0.0
        if state.orientation == dev.orientation
        else angle_between(state.orientation, dev.orientation)
    )
    p_keep = keep_probability(delta)
    if p_keep >= 1.0:
        outcome = state.sign
    elif p_keep <= 0.0:
        outcome = -state.sign
    else:
        outcome = state.sign if rng.random() < p_keep else -state.sign
    return outcome, SGState(dev.orientation, outcome)


@dataclass(frozen=True)
class SequenceDistribution:
    """Distribution over tuples of recorded outcomes (+1/-1 per standard device)."""

    probabilities: dict[tuple[int, ...], float]
    n: int | None = None  # trial count for empirical distributions


def run_sequence(
    devices: Sequence[SGDevice],
    n: int,
    seed: int,
    initial: SGState | None = None,
) -> SequenceDistribution:
    """Empirical joint distribution of recorded outcomes over n trials.

    initial=None means unpolarized: the class sign is drawn uniformly with the
    last orientation set to the first device's orientation.
    """
    if not devices:
        raise ValueError("device sequence must be non-empty")
    if n < 1:
        raise ValueError(f"trial count must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    # Buckets: (outcome history, class sign) -> trial count.
    buckets: dict[tuple[tuple[int, ...], int], int]
    if initial is None:
        orientation = devices[0].orientation
        k = int(rng.binomial(n, 0.5))
        buckets = {((), +1): k, ((), -1): n - k}
    else:
        orientation = initial.orientation
        buckets = {((), initial.sign): n}

    for dev in devices:
        if dev.kind is DeviceKind.MODIFIED:
            continue
        delta = (
            0.0
            if orientation == dev.orientation
            else angle_between(orientation, dev.orientation)
        )
        p_keep = keep_probability(delta)
        new_buckets: dict[tuple[tuple[int, ...], int], int] = {}
        for (history, sign), count in sorted(buckets.items()):
            if count == 0:
                continue
            if p_keep >= 1.0:
                kept = count
            elif p_keep <= 0.0:
                kept = 0
            else:
                kept = int(rng.binomial(count, p_keep))
            for outcome, c in ((sign, kept), (-sign, count - kept)):
                if c:
                    key = (history + (outcome,), outcome)
                    new_buckets[key] = new_buckets.get(key, 0) + c
        buckets = new_buckets
        orientation = dev.orientation

    probs: dict[tuple[int, ...], float] = {}
    for (history, _sign), count in buckets.items():
        probs[history] = probs.get(history, 0.0) + count / n
    return SequenceDistribution(probabilities=probs, n=n)


# Spinor oracle ---------------------------------------------------------------

_SIGMA = (
    np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
)
_ID2 = np.eye(2, dtype=complex)


def _projector(orientation: Sequence[float], sign: int) -> np.ndarray:
    axis = _as_unit(orientation)
    sigma_n = sum(a * s for a, s in zip(axis, _SIGMA))
    return (_ID2 + sign * sigma_n) / 2.0


def spinor_oracle(
    devices: Sequence[SGDevice], initial: SGState | None = None
) -> SequenceDistribution:
    """Exact sequential-measurement distribution from two-component spinors.

    Standard devices project; modified devices act as the identity. The
    unpolarized initial state is the maximally mixed density matrix.
    """
    if not devices:
        raise ValueError("device sequence must be non-empty")
    if initial is None:
        rho0 = _ID2 / 2.0
    else:
        rho0 = _projector(initial.orientation, initial.sign)

    branches: list[tuple[tuple[int, ...], np.ndarray, float]] = [((), rho0, 1.0)]
    for dev in devices:
        if dev.kind is DeviceKind.MODIFIED:
            continue
        new_branches = []
        for history, rho, prob in branches:
            for sign in (+1, -1):
                proj = _projector(dev.orientation, sign)
                p = float(np.real(np.trace(proj @ rho)))
                if p <= 1e-15:
                    continue
                new_branches.append(
                    (history + (sign,), proj @ rho @ proj / p, prob * p)
                )
        branches = new_branches

    probs: dict[tuple[int, ...], float] = {}
    for history, _rho, prob in branches:
        probs[history] = probs.get(history, 0.0) + prob
    return SequenceDistribution(probabilities=probs, n=None)
