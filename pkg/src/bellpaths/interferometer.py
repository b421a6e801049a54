"""Two-particle interferometer amplitudes: closed form and a path-sum cross-check.

Layout (the floor/ceiling-mirror device): a source at the origin sends pairs
to beamsplitters at (-D, 0) and (+D, 0). Four path classes connect them:

    X  = left  upper (via ceiling mirror),  phase-shifted by alpha
    Y  = left  lower (via floor mirror)
    Xp = right upper (via ceiling mirror),  phase-shifted by beta
    Yp = right lower (via floor mirror)

Left and right layouts are mirror images, so paths come in congruent pairs
with equal clock-pointer rotations apart from the shifts; this is what makes
<A|Y> = <B|Y'> and drives the closed form. The same-flash amplitude picks up
a factor i per beamsplitter reflection (reflection on the X leg at A and the
X' leg at B), giving i*r^2*e^{2i*theta}*(e^{i*alpha} + e^{i*beta}) and the
probability cos^2((alpha-beta)/2) under the normalization |amp|^2 / (4 r^4).
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass

from .amplitude import ComplexAmplitude, I_FACTOR, unit
from .path_engine import PathFamily, family_resultant, mirror_family

CONGRUENCE_TOL = 1e-9


class CongruenceError(ValueError):
    """Raised when the left/right layouts are not mirror images."""

    def __init__(self, pair: str, residual: float):
        self.pair = pair
        self.residual = residual
        super().__init__(
            f"path classes {pair} are not congruent: amplitude residual {residual:.3e}"
        )


@dataclass(frozen=True)
class ClassAmplitudes:
    """The four class amplitudes <A|X>, <A|Y>, <B|X'>, <B|Y'> plus their parameters."""

    ax: ComplexAmplitude
    ay: ComplexAmplitude
    bxp: ComplexAmplitude
    byp: ComplexAmplitude
    r: float
    theta: float
    alpha: float
    beta: float


def class_amplitudes_closed(
    r: float, theta: float, alpha: float, beta: float
) -> ClassAmplitudes:
    """Congruent-geometry closed form: ay = byp = r*e^{i theta}, shifts on ax, bxp."""
    if not (r > 0.0):
        raise ValueError(f"amplitude magnitude r must be > 0, got {r}")
    base = unit(theta).scale(r)
    return ClassAmplitudes(
        ax=base * unit(alpha),
        ay=base,
        bxp=base * unit(beta),
        byp=base,
        r=r,
        theta=theta,
        alpha=alpha,
        beta=beta,
    )


def amp_same(c: ClassAmplitudes) -> ComplexAmplitude:
    """Amplitude that both detectors flash the same: i*ax*byp + bxp*i*ay."""
    return I_FACTOR * c.ax * c.byp + c.bxp * (I_FACTOR * c.ay)


def side_composite(first: ComplexAmplitude, second: ComplexAmplitude) -> ComplexAmplitude:
    """Composite amplitude of one side's two streams; sees no cross-side data."""
    return first * second


def amp_same_side_local(c: ClassAmplitudes) -> ComplexAmplitude:
    """i*(ax*ay + bxp*byp): each term built from one side's amplitudes only.

    Equals amp_same whenever ay == byp (substitution of equals); the sum of
    the two side-local composites is the locality analogue this device makes
    explicit.
    """
    left = side_composite(c.ax, c.ay)
    right = side_composite(c.bxp, c.byp)
    return I_FACTOR * (left + right)


def p_same(alpha: float, beta: float) -> float:
    """Probability both detectors flash the same: cos^2((alpha-beta)/2)."""
    return math.cos((alpha - beta) / 2.0) ** 2


def p_diff(alpha: float, beta: float) -> float:
    """Complement of p_same; equals sin^2((alpha-beta)/2)."""
    return 1.0 - p_same(alpha, beta)


@dataclass(frozen=True)
class RTGeometry:
    """Mirror-image floor/ceiling layout. Arms span >= 100 wavelengths by default."""

    bs_distance: float = 1.0        # beamsplitters at (+-bs_distance, 0)
    mirror_height: float = 0.6      # ceiling at +h, floor at -h
    mirror_inner: float = 0.3       # mirror segment x-range (absolute values)
    mirror_outer: float = 0.7
    wavelength: float = 0.005

    def families(
        self, n: int, alpha: float = 0.0, beta: float = 0.0
    ) -> dict[str, PathFamily]:
        """Build the four path classes; alpha shifts X, beta shifts X'."""
        src = (0.0, 0.0)
        a_bs = (-self.bs_distance, 0.0)
        b_bs = (+self.bs_distance, 0.0)
        h, lam = self.mirror_height, self.wavelength
        left_ceiling = ((-self.mirror_outer, h), (-self.mirror_inner, h))
        left_floor = ((-self.mirror_outer, -h), (-self.mirror_inner, -h))
        right_ceiling = ((self.mirror_inner, h), (self.mirror_outer, h))
        right_floor = ((self.mirror_inner, -h), (self.mirror_outer, -h))
        return {
            "X": mirror_family(src, a_bs, left_ceiling, n, lam, "X", phase_shift=alpha),
            "Y": mirror_family(src, a_bs, left_floor, n, lam, "Y"),
            "Xp": mirror_family(src, b_bs, right_ceiling, n, lam, "Xp", phase_shift=beta),
            "Yp": mirror_family(src, b_bs, right_floor, n, lam, "Yp"),
        }


@dataclass(frozen=True)
class NumericResult:
    p_same: float
    congruence_residual: float
    amplitudes: ClassAmplitudes


@functools.lru_cache(maxsize=8)
def _base_amplitudes(geom: RTGeometry, n: int) -> dict[str, complex]:
    """Normalized quadrature sums of the four classes with no phase shifts.

    A class-wide shift multiplies its sum by a unit factor, so shifted
    amplitudes are recovered analytically; this lets settings grids reuse one
    set of path sums.
    """
    fams = geom.families(n)
    return {k: family_resultant(f) / len(f.paths) for k, f in fams.items()}


def p_same_numeric(
    geom: RTGeometry, n: int, alpha: float, beta: float
) -> NumericResult:
    """Path-sum estimate of the same-flash probability for the given geometry.

    The four class amplitudes are quadrature sums normalized by 1/n; the
    probability uses |amp_same|^2 / (4 r^4) with r^4 the product of the four
    magnitudes. Raises CongruenceError naming the offending class pair when
    the left/right layouts are not mirror images.
    """
    base = _base_amplitudes(geom, n)
    amps = dict(base)
    amps["X"] = base["X"] * cmath.exp(1j * alpha)
    amps["Xp"] = base["Xp"] * cmath.exp(1j * beta)
    # Congruence: with the shifts stripped, left and right sums must agree.
    residual_y = abs(amps["Y"] - amps["Yp"])
    residual_x = abs(base["X"] - base["Xp"])
    if residual_y > CONGRUENCE_TOL:
        raise CongruenceError("Y vs Y'", residual_y)
    if residual_x > CONGRUENCE_TOL:
        raise CongruenceError("X vs X'", residual_x)
    r4 = abs(amps["X"]) * abs(amps["Y"]) * abs(amps["Xp"]) * abs(amps["Yp"])
    c = ClassAmplitudes(
        ax=ComplexAmplitude.from_complex(amps["X"]),
        ay=ComplexAmplitude.from_complex(amps["Y"]),
        bxp=ComplexAmplitude.from_complex(amps["Xp"]),
        byp=ComplexAmplitude.from_complex(amps["Yp"]),
        r=abs(amps["Y"]),
        theta=cmath.phase(amps["Y"]),
        alpha=alpha,
        beta=beta,
    )
    prob = abs(amp_same(c).as_complex()) ** 2 / (4.0 * r4)
    return NumericResult(p_same=prob, congruence_residual=residual_y, amplitudes=c)
