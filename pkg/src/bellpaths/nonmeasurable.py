"""Numerical walk-through of the disjoint-ball packing in path space.

Builds the ramp functions x_n on [0, 1] (zero up to 2^-n, linear ramp up to
2^-n+1, then flat at r#/2), verifies the sup-norm equalities ||x_n|| = r#/2
and ||x_n - x_m|| = r#/2 for n != m, and confirms that the open balls of
radius r#/4 around the x_n are pairwise disjoint and all contained in the
r#-ball around zero. Sup-norms are evaluated analytically on merged
breakpoints (a piecewise-linear difference attains its max at a breakpoint),
so the key equalities carry no discretization error.

Note: the x_n run from 0 to r#/2 and so do not meet the ambient space's own
fixed-endpoint condition for generic endpoints; the formulas are implemented
as given and the mismatch is flagged in the report header.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

ENDPOINT_NOTE = (
    "x_n(0) = 0 and x_n(1) = r#/2: the construction ignores the ambient "
    "space's fixed-endpoint condition for generic endpoints; formulas "
    "implemented as given."
)


@dataclass(frozen=True)
class SampledFunction:
    """Piecewise-linear function on [0, 1] given by exact breakpoints."""

    breakpoints: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        ts = [t for t, _ in self.breakpoints]
        if ts != sorted(set(ts)):
            raise ValueError("breakpoint abscissae must be strictly increasing")
        if ts[0] != 0.0 or ts[-1] != 1.0:
            raise ValueError("breakpoints must start at t=0 and end at t=1")

    def value(self, t: float) -> float:
        if not (0.0 <= t <= 1.0):
            raise ValueError(f"t must be in [0, 1], got {t}")
        ts = [bt for bt, _ in self.breakpoints]
        i = bisect.bisect_right(ts, t) - 1
        if i == len(ts) - 1:
            return self.breakpoints[-1][1]
        (t0, v0), (t1, v1) = self.breakpoints[i], self.breakpoints[i + 1]
        if t == t0:
            return v0
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


ZERO_FUNCTION = SampledFunction(((0.0, 0.0), (1.0, 0.0)))


def build_xn(n: int, r_sharp: float) -> SampledFunction:
    """The ramp function x_n: 0 on [0, 2^-n], linear to r#/2 at 2^-n+1, flat after."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > 52:
        raise ValueError(f"2^-n not exactly representable for n = {n}")
    if not (r_sharp > 0.0):
        raise ValueError(f"r_sharp must be > 0, got {r_sharp}")
    t_lo = 2.0 ** (-n)
    t_hi = 2.0 ** (-n + 1)
    half = r_sharp / 2.0
    if n == 1:
        # ramp ends exactly at t = 1
        return SampledFunction(((0.0, 0.0), (t_lo, 0.0), (1.0, half)))
    return SampledFunction(((0.0, 0.0), (t_lo, 0.0), (t_hi, half), (1.0, half)))


def sup_distance(f: SampledFunction, g: SampledFunction) -> float:
    """Exact sup of |f - g| over [0, 1], evaluated on merged breakpoints."""
    ts = sorted({t for t, _ in f.breakpoints} | {t for t, _ in g.breakpoints})
    return max(abs(f.value(t) - g.value(t)) for t in ts)


@dataclass(frozen=True)
class PairCheck:
    n: int
    m: int
    distance: float
    disjoint_ok: bool       # distance >= 2 * (r#/4)
    containment_ok: bool    # ||x_n|| + r#/4 <= r#
    residual: float         # |distance - r#/2|


@dataclass(frozen=True)
class PackingReport:
    n_max: int
    r_sharp: float
    note: str
    norms: dict[int, float]
    pairs: tuple[PairCheck, ...]
    all_pass: bool


def verify_packing(n_max: int, r_sharp: float, tol: float = 1e-12) -> PackingReport:
    """Check the disjoint-ball packing skeleton for all 1 <= n < m <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    fns = {n: build_xn(n, r_sharp) for n in range(1, n_max + 1)}
    norms = {n: sup_distance(f, ZERO_FUNCTION) for n, f in fns.items()}
    half = r_sharp / 2.0
    quarter = r_sharp / 4.0
    pairs = []
    ok = all(abs(v - half) <= tol for v in norms.values())
    for n in range(1, n_max + 1):
        for m in range(n + 1, n_max + 1):
            d = sup_distance(fns[n], fns[m])
            check = PairCheck(
                n=n,
                m=m,
                distance=d,
                disjoint_ok=d >= 2.0 * quarter - tol,
                containment_ok=norms[n] + quarter <= r_sharp + tol
                and norms[m] + quarter <= r_sharp + tol,
                residual=abs(d - half),
            )
            pairs.append(check)
            ok = ok and check.disjoint_ok and check.containment_ok and check.residual <= tol
    return PackingReport(
        n_max=n_max,
        r_sharp=r_sharp,
        note=ENDPOINT_NOTE,
        norms=norms,
        pairs=tuple(pairs),
        all_pass=ok,
    )
