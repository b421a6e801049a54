import cmath
import math

import pytest
from hypothesis import given, strategies as st

from bellpaths.amplitude import ComplexAmplitude
from bellpaths.interferometer import (
    ClassAmplitudes,
    CongruenceError,
    RTGeometry,
    amp_same,
    amp_same_side_local,
    class_amplitudes_closed,
    p_diff,
    p_same,
    p_same_numeric,
    side_composite,
)

angles = st.floats(min_value=-10.0, max_value=10.0)


class TestClosedForm:
    def test_all_equal_at_zero_settings(self):
        c = class_amplitudes_closed(1.0, 0.0, 0.0, 0.0)
        for z in (c.ax, c.ay, c.bxp, c.byp):
            assert z.re == pytest.approx(1.0, abs=1e-12)
            assert abs(z.im) < 1e-12

    def test_alpha_pi_flips_ax_only(self):
        c = class_amplitudes_closed(1.0, 0.0, math.pi, 0.0)
        assert c.ax.re == pytest.approx(-1.0, abs=1e-12)
        for z in (c.ay, c.bxp, c.byp):
            assert z.re == pytest.approx(1.0, abs=1e-12)

    def test_global_phase_and_scale(self):
        c = class_amplitudes_closed(2.0, math.pi / 2.0, 0.0, 0.0)
        for z in (c.ax, c.ay, c.bxp, c.byp):
            assert abs(z.re) < 1e-12
            assert z.im == pytest.approx(2.0, abs=1e-12)

    def test_rejects_nonpositive_r(self):
        with pytest.raises(ValueError):
            class_amplitudes_closed(0.0, 0.0, 0.0, 0.0)

    @given(angles, angles, st.floats(min_value=0.1, max_value=5.0))
    def test_magnitudes_all_r(self, theta, alpha, r):
        c = class_amplitudes_closed(r, theta, alpha, 0.3)
        for z in (c.ax, c.ay, c.bxp, c.byp):
            assert z.magnitude() == pytest.approx(r, abs=1e-12)


class TestAmpSame:
    def test_zero_settings(self):
        z = amp_same(class_amplitudes_closed(1.0, 0.0, 0.0, 0.0))
        assert abs(z.re) < 1e-12
        assert z.im == pytest.approx(2.0, abs=1e-12)

    def test_opposite_settings_cancel(self):
        z = amp_same(class_amplitudes_closed(1.0, 0.0, math.pi, 0.0))
        assert z.magnitude() < 1e-12

    def test_two_thirds_separation_magnitude_one(self):
        z = amp_same(class_amplitudes_closed(1.0, 0.0, 2.0 * math.pi / 3.0, 0.0))
        assert z.magnitude() == pytest.approx(1.0, abs=1e-12)

    @given(angles, angles, angles)
    def test_matches_product_form(self, theta, alpha, beta):
        # independent evaluation: i r^2 e^{2 i theta} (e^{i alpha} + e^{i beta})
        c = class_amplitudes_closed(1.3, theta, alpha, beta)
        expect = (
            1j * 1.3**2 * cmath.exp(2j * theta) * (cmath.exp(1j * alpha) + cmath.exp(1j * beta))
        )
        got = amp_same(c).as_complex()
        assert abs(got - expect) < 1e-9


class TestPSame:
    def test_equal_settings(self):
        assert p_same(0.8, 0.8) == pytest.approx(1.0)

    def test_opposite_settings(self):
        assert p_same(math.pi, 0.0) == pytest.approx(0.0, abs=1e-12)

    def test_two_thirds(self):
        assert p_same(2.0 * math.pi / 3.0, 0.0) == pytest.approx(0.25)

    @given(angles, angles)
    def test_symmetry_difference_only_and_completeness(self, a, b):
        assert p_same(a, b) == pytest.approx(p_same(b, a), abs=1e-12)
        assert p_same(a + 0.91, b + 0.91) == pytest.approx(p_same(a, b), abs=1e-9)
        assert p_same(a, b) + p_diff(a, b) == pytest.approx(1.0, abs=1e-12)
        assert p_diff(a, b) == pytest.approx(math.sin((a - b) / 2.0) ** 2, abs=1e-12)

    @given(angles, angles, angles)
    def test_normalized_amp_same_reproduces_cos2(self, theta, alpha, beta):
        c = class_amplitudes_closed(1.7, theta, alpha, beta)
        prob = abs(amp_same(c).as_complex()) ** 2 / (4.0 * c.r**4)
        assert prob == pytest.approx(p_same(alpha, beta), abs=1e-9)


class TestSideLocalForm:
    @given(angles, angles, angles)
    def test_substitution_identity(self, theta, alpha, beta):
        # when ay == byp the cross-side and side-local pairings agree
        c = class_amplitudes_closed(1.0, theta, alpha, beta)
        a = amp_same(c).as_complex()
        b = amp_same_side_local(c).as_complex()
        assert abs(a - b) < 1e-12

    def test_side_composites_use_one_side_only(self):
        left = side_composite(ComplexAmplitude(1, 2), ComplexAmplitude(0.5, -1))
        assert left == ComplexAmplitude(1, 2) * ComplexAmplitude(0.5, -1)


class TestNumeric:
    def test_matches_closed_form_on_settings(self):
        geom = RTGeometry()
        for alpha, beta in [(0.0, 0.0), (math.pi, 0.0), (1.0, 2.5), (2.0 * math.pi / 3.0, 0.0)]:
            res = p_same_numeric(geom, 2000, alpha, beta)
            assert res.p_same == pytest.approx(p_same(alpha, beta), abs=0.02)

    def test_congruence_residual_tiny(self):
        res = p_same_numeric(RTGeometry(), 2000, 0.3, 0.9)
        assert res.congruence_residual < 1e-9

    def test_non_congruent_geometry_reports_pair(self):
        # shift the right floor mirror out of mirror-image position
        class Broken(RTGeometry):
            def families(self, n, alpha=0.0, beta=0.0):
                f = RTGeometry.families(self, n, alpha=alpha, beta=beta)
                from bellpaths.path_engine import mirror_family

                f["Yp"] = mirror_family(
                    (0.0, 0.0),
                    (self.bs_distance, 0.0),
                    ((self.mirror_inner, -self.mirror_height - 0.01),
                     (self.mirror_outer, -self.mirror_height - 0.01)),
                    n,
                    self.wavelength,
                    "Yp",
                )
                return f

        with pytest.raises(CongruenceError) as exc:
            p_same_numeric(Broken(), 100, 0.0, 0.0)
        assert "Y vs Y'" in str(exc.value)
