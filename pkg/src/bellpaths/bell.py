"""Bell-test statistics over any correlation source: CHSH and the three-setting test.

A correlation source is a callable (alpha, beta) -> p_same, returning either a
bare probability (exact source) or an (estimate, half_width) pair (sampled
source). Correlators are E = 2*p_same - 1, valid for binary outcomes where
"different" is the complement.

CHSH here is S = |E(a,b) - E(a,b') + E(a',b) + E(a',b')|. (The sign falls on
the (a, b') pair; at the canonical settings (0, pi/2, pi/4, 3*pi/4) this form
yields 2*sqrt(2) for the cosine law and exactly 2 for the triangle law.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .amplitude import TWO_PI, circular_distance
from .interferometer import p_same as quantum_p_same
from .sampler import sampler_p_same
from .toy import ToySettings, toy_p_same_exact

SourceValue = Union[float, tuple[float, float]]
CorrelationSource = Callable[[float, float], SourceValue]

CANONICAL_CHSH_SETTINGS = (0.0, math.pi / 2.0, math.pi / 4.0, 3.0 * math.pi / 4.0)
MERMIN3_SETTINGS = (0.0, TWO_PI / 3.0, 2.0 * TWO_PI / 3.0)


def _eval(src: CorrelationSource, a: float, b: float) -> tuple[float, float]:
    out = src(a, b)
    p, ci = (float(out[0]), float(out[1])) if isinstance(out, tuple) else (float(out), 0.0)
    if not (0.0 <= p <= 1.0):
        raise ValueError(
            f"source returned p_same={p!r} outside [0, 1] at settings ({a}, {b})"
        )
    return p, ci


@dataclass(frozen=True)
class CHSHReport:
    settings: tuple[float, float, float, float]  # (a, a', b, b')
    correlators: dict[str, float]
    s_value: float
    ci: float  # half-width on S, combined in quadrature from the correlators


def chsh(
    src: CorrelationSource,
    settings: tuple[float, float, float, float] = CANONICAL_CHSH_SETTINGS,
) -> CHSHReport:
    a, ap, b, bp = settings
    pairs = {"ab": (a, b), "abp": (a, bp), "apb": (ap, b), "apbp": (ap, bp)}
    e: dict[str, float] = {}
    cis: dict[str, float] = {}
    for key, (x, y) in pairs.items():
        p, ci = _eval(src, x, y)
        e[key] = 2.0 * p - 1.0
        cis[key] = 2.0 * ci
    s = abs(e["ab"] - e["abp"] + e["apb"] + e["apbp"])
    s_ci = math.sqrt(sum(c * c for c in cis.values()))
    return CHSHReport(settings=settings, correlators=e, s_value=s, ci=s_ci)


@dataclass(frozen=True)
class Mermin3Report:
    settings: tuple[float, float, float]
    equal_mean: float
    unequal_mean: float
    ci: float
    violates_local_bound: bool


def mermin3(
    src: CorrelationSource,
    settings: tuple[float, float, float] = MERMIN3_SETTINGS,
) -> Mermin3Report:
    """Three-setting test: local models with perfect equal-setting correlation
    have unequal-setting same-fraction >= 1/3; the cosine law gives 1/4."""
    equal, unequal, cis = [], [], []
    for x in settings:
        for y in settings:
            p, ci = _eval(src, x, y)
            (equal if x == y else unequal).append(p)
            if x != y:
                cis.append(ci)
    equal_mean = float(np.mean(equal))
    unequal_mean = float(np.mean(unequal))
    # half-width on the unequal mean, combined in quadrature
    ci = math.sqrt(sum(c * c for c in cis)) / max(1, len(unequal))
    eps = 1e-9
    violates = equal_mean >= 1.0 - eps and unequal_mean < 1.0 / 3.0 - ci
    return Mermin3Report(
        settings=settings,
        equal_mean=equal_mean,
        unequal_mean=unequal_mean,
        ci=ci,
        violates_local_bound=violates,
    )


@dataclass(frozen=True)
class SweepRow:
    alpha: float
    beta: float
    p_same: float
    ci: float
    p_same_classical: float
    p_same_quantum: float


def settings_sweep(src: CorrelationSource, grid_step: float) -> list[SweepRow]:
    """Tabulate p_same on an (alpha, beta) grid with both reference curves."""
    if not (grid_step > 0.0):
        raise ValueError(f"grid_step must be > 0, got {grid_step}")
    grid = np.arange(0.0, TWO_PI - 1e-12, grid_step)
    rows = []
    for a in grid:
        for b in grid:
            p, ci = _eval(src, float(a), float(b))
            rows.append(
                SweepRow(
                    alpha=float(a),
                    beta=float(b),
                    p_same=p,
                    ci=ci,
                    p_same_classical=toy_p_same_exact(ToySettings(float(a), float(b))),
                    p_same_quantum=quantum_p_same(float(a), float(b)),
                )
            )
    return rows


def chsh_grid_max(
    e_of_distance: Callable[[np.ndarray], np.ndarray], grid_step: float
) -> float:
    """Max CHSH S over all settings quadruples on a grid, for exact sources
    whose correlator depends only on the circular separation of the settings."""
    grid = np.arange(0.0, TWO_PI - 1e-12, grid_step)
    diff = np.abs(grid[:, None] - grid[None, :])
    d = np.minimum(diff, TWO_PI - diff)
    e = e_of_distance(d)  # E[x, y] over the grid
    # S over (a, a', b, b') via broadcasting
    s = np.abs(
        e[:, None, :, None]      # E(a, b)
        - e[:, None, None, :]    # E(a, b')
        + e[None, :, :, None]    # E(a', b)
        + e[None, :, None, :]    # E(a', b')
    )
    return float(s.max())


def triangle_correlator(d: np.ndarray) -> np.ndarray:
    """E for the toy/sampler law p_same = 1 - d/pi."""
    return 1.0 - 2.0 * d / math.pi


def cosine_correlator(d: np.ndarray) -> np.ndarray:
    """E for the quantum law p_same = cos^2(d/2)."""
    return np.cos(d)


# Ready-made sources ---------------------------------------------------------

def quantum_source(alpha: float, beta: float) -> float:
    return quantum_p_same(alpha, beta)


def toy_source(alpha: float, beta: float) -> float:
    return toy_p_same_exact(ToySettings(alpha, beta))


def make_sampler_source(n: int, seed: int) -> CorrelationSource:
    """Sampled source over the side-local per-trial dynamics.

    Each settings pair gets its own deterministic substream derived from the
    seed and the pair, so lookups are order-independent.
    """

    def src(alpha: float, beta: float) -> tuple[float, float]:
        pair_seed = np.random.SeedSequence(
            [seed, hash((round(alpha, 12), round(beta, 12))) & 0xFFFFFFFF]
        )
        rng_seed = int(pair_seed.generate_state(1)[0])
        return sampler_p_same(alpha, beta, n, rng_seed)

    return src
