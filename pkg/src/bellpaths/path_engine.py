"""Discretized sum-over-paths engine: path families, clock-pointer sums, Cornu spirals.

The phase of a path is the fixed-speed photon model 2*pi*L/lambda (one full
pointer rotation per wavelength of path length). A family of paths sharing
endpoints is summed head-to-tail as unit vectors, producing a Cornu-spiral
trace whose chord is the raw amplitude; normalization is the caller's job.
The continuum of possible paths is replaced by a uniform quadrature over
mirror reflection points, with convergence checks standing in for rigor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .amplitude import TWO_PI, ComplexAmplitude

ENDPOINT_TOL = 1e-9


@dataclass(frozen=True)
class PolyPath:
    """An ordered polyline in the plane together with the light's wavelength."""

    vertices: tuple[tuple[float, float], ...]
    wavelength: float

    def __post_init__(self) -> None:
        if len(self.vertices) < 2:
            raise ValueError("a path needs at least 2 vertices")
        if not (self.wavelength > 0.0):
            raise ValueError(f"wavelength must be > 0, got {self.wavelength}")
        if self.length() <= 0.0:
            raise ValueError("path has zero total length")

    def length(self) -> float:
        pts = np.asarray(self.vertices, dtype=float)
        return float(np.sum(np.hypot(*np.diff(pts, axis=0).T)))


def path_phase(p: PolyPath) -> float:
    """Accumulated clock-pointer rotation over the path: 2*pi*L/lambda (not reduced)."""
    return TWO_PI * p.length() / p.wavelength


@dataclass(frozen=True)
class PathFamily:
    """Paths sharing first and last vertex; one interference class."""

    paths: tuple[PolyPath, ...]
    label: str = ""
    # Optional extra pointer rotation applied to every path (a measurement
    # phase shift along this class), in radians.
    phase_shift: float = 0.0

    def __post_init__(self) -> None:
        if not self.paths:
            raise ValueError("path family must be non-empty")
        first = np.asarray(self.paths[0].vertices[0])
        last = np.asarray(self.paths[0].vertices[-1])
        for p in self.paths:
            if (
                np.max(np.abs(np.asarray(p.vertices[0]) - first)) > ENDPOINT_TOL
                or np.max(np.abs(np.asarray(p.vertices[-1]) - last)) > ENDPOINT_TOL
            ):
                raise ValueError(f"family {self.label!r}: paths do not share endpoints")

    def phases(self) -> np.ndarray:
        return np.array([path_phase(p) for p in self.paths]) + self.phase_shift

    def lengths(self) -> np.ndarray:
        return np.array([p.length() for p in self.paths])


@dataclass(frozen=True)
class SpiralTrace:
    """Cumulative head-to-tail sums of the family's unit vectors."""

    partial_sums: np.ndarray  # complex128, shape (n_paths,)
    phases: np.ndarray = field(repr=False, default=None)  # type: ignore[assignment]

    @property
    def resultant(self) -> ComplexAmplitude:
        return ComplexAmplitude.from_complex(complex(self.partial_sums[-1]))

    @property
    def n_paths(self) -> int:
        return len(self.partial_sums)

    def arc_length(self) -> float:
        steps = np.diff(np.concatenate(([0.0 + 0.0j], self.partial_sums)))
        return float(np.sum(np.abs(steps)))


def mirror_family(
    source: tuple[float, float],
    detector: tuple[float, float],
    mirror: tuple[tuple[float, float], tuple[float, float]],
    n: int,
    wavelength: float,
    label: str = "mirror",
    phase_shift: float = 0.0,
) -> PathFamily:
    """n two-leg paths source -> mirror point -> detector, mirror points uniform."""
    if n < 1:
        raise ValueError(f"path count must be >= 1, got {n}")
    (mx0, my0), (mx1, my1) = mirror
    # Degenerate geometry: endpoint on the mirror line makes a zero-length leg possible.
    for name, (px, py) in (("source", source), ("detector", detector)):
        # signed area test against the mirror segment's supporting line
        cross = (mx1 - mx0) * (py - my0) - (my1 - my0) * (px - mx0)
        if abs(cross) < 1e-15:
            raise ValueError(f"{name} lies on the mirror line: degenerate geometry")
    # midpoint sampling: n uniformly spaced points, quadrature error O(1/n^2)
    t = (np.arange(n) + 0.5) / n
    xs = mx0 + t * (mx1 - mx0)
    ys = my0 + t * (my1 - my0)
    paths = tuple(
        PolyPath((source, (float(x), float(y)), detector), wavelength)
        for x, y in zip(xs, ys)
    )
    return PathFamily(paths, label=label, phase_shift=phase_shift)


def sum_over_paths(family: PathFamily) -> SpiralTrace:
    """Head-to-tail sum of unit clock-pointers over the family."""
    phases = family.phases()
    units = np.exp(1j * phases)
    return SpiralTrace(partial_sums=np.cumsum(units), phases=phases)


def family_resultant(family: PathFamily) -> complex:
    """Raw (unnormalized) amplitude sum for the family."""
    return complex(np.sum(np.exp(1j * family.phases())))


def stationary_fraction(family: PathFamily, central_fraction: float) -> float:
    """|sum over the central window of paths| / |sum over all paths|.

    The window is centered (by index) on the shortest path, which carries the
    stationary phase. Returns NaN when the full resultant is below 1e-12 and
    the ratio is undefined.
    """
    if not (0.0 < central_fraction <= 1.0):
        raise ValueError(f"central_fraction must be in (0, 1], got {central_fraction}")
    phases = family.phases()
    units = np.exp(1j * phases)
    total = np.sum(units)
    if abs(total) < 1e-12:
        return math.nan
    n = len(units)
    count = max(1, round(central_fraction * n))
    center = int(np.argmin(family.lengths()))
    start = min(max(0, center - count // 2), n - count)
    window = np.sum(units[start : start + count])
    return float(abs(window) / abs(total))


@dataclass(frozen=True)
class MirrorGeometry:
    """Default single-mirror layout: light from source to detector via a flat mirror."""

    source: tuple[float, float] = (-1.0, 1.0)
    detector: tuple[float, float] = (1.0, 1.0)
    mirror: tuple[tuple[float, float], tuple[float, float]] = ((-2.0, 0.0), (2.0, 0.0))
    wavelength: float = 0.02

    def family(self, n: int) -> PathFamily:
        return mirror_family(
            self.source, self.detector, self.mirror, n, self.wavelength, label="mirror"
        )

    def specular_x(self) -> float:
        """Mirror-line x of the specular (least length) reflection point."""
        (sx, sy), (dx, dy) = self.source, self.detector
        my = self.mirror[0][1]
        h1, h2 = abs(sy - my), abs(dy - my)
        return (sx * h2 + dx * h1) / (h1 + h2)
