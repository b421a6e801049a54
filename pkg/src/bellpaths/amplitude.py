"""Complex amplitudes as plane vectors, plus angle utilities shared by every module."""

from __future__ import annotations

import math
from dataclasses import dataclass

TWO_PI = 2.0 * math.pi


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"{name} must be finite, got {v!r}")


def normalize_angle(theta: float) -> float:
    """Reduce an angle to [0, 2*pi). Exact for inputs where theta % 2*pi is exact."""
    _require_finite("angle", theta)
    r = theta % TWO_PI
    # Python's float % can return TWO_PI when theta is a tiny negative number.
    return 0.0 if r == TWO_PI else r


def circular_distance(a: float, b: float) -> float:
    """Shorter arc between two angles on the circle, in [0, pi]."""
    _require_finite("angle", a, b)
    d = abs(normalize_angle(a) - normalize_angle(b))
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class ComplexAmplitude:
    """A vector (re, im) in the plane; the carrier for exponentiated-action terms."""

    re: float
    im: float

    def __add__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "ComplexAmplitude") -> "ComplexAmplitude":
        return ComplexAmplitude(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, k: float) -> "ComplexAmplitude":
        return ComplexAmplitude(k * self.re, k * self.im)

    def conj(self) -> "ComplexAmplitude":
        return ComplexAmplitude(self.re, -self.im)

    def magnitude(self) -> float:
        return math.hypot(self.re, self.im)

    def angle(self) -> float:
        """Direction of the vector, normalized to [0, 2*pi)."""
        return normalize_angle(math.atan2(self.im, self.re))

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    @staticmethod
    def from_complex(z: complex) -> "ComplexAmplitude":
        return ComplexAmplitude(z.real, z.imag)


# The reflection factor i = unit(pi/2), fixed once for beamsplitter reflections.
I_FACTOR = ComplexAmplitude(0.0, 1.0)

ZERO = ComplexAmplitude(0.0, 0.0)


def unit(theta: float) -> ComplexAmplitude:
    """Unit vector at angle theta: the clock-pointer exp(i*theta)."""
    _require_finite("angle", theta)
    return ComplexAmplitude(math.cos(theta), math.sin(theta))


def abs_square(z: ComplexAmplitude) -> float:
    """Squared length of the vector; proportional to a detection probability."""
    _require_finite("amplitude", z.re, z.im)
    return z.re * z.re + z.im * z.im


@dataclass(frozen=True)
class ClockPointer:
    """An angle on the unit circle, stored normalized to [0, 2*pi)."""

    angle: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", normalize_angle(self.angle))

    def advance(self, delta: float) -> "ClockPointer":
        return ClockPointer(self.angle + delta)

    def as_amplitude(self) -> ComplexAmplitude:
        return unit(self.angle)
