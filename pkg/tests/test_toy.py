import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings, strategies as st

from bellpaths.toy import (
    CANONICAL_SETTINGS,
    Branch,
    ToySettings,
    branch,
    run_toy_trial,
    toy_p_same_exact,
    toy_p_same_mc,
)

angles = st.floats(min_value=0.0, max_value=2.0 * math.pi - 1e-9)


def test_branch_boundaries():
    assert branch(0.0) is Branch.UPPER
    assert branch(math.pi) is Branch.LOWER
    assert branch(3.0 * math.pi / 2.0) is Branch.LOWER


def test_equal_settings_always_identical():
    s = ToySettings(1.1, 1.1)
    for gamma in np.linspace(0.0, 2.0 * math.pi, 37):
        t = run_toy_trial(s, float(gamma))
        assert t.left_outcome == t.right_outcome


def test_trial_direct_evaluations():
    s = ToySettings(2.0 * math.pi / 3.0, 0.0)
    t = run_toy_trial(s, 0.0)
    assert (t.left_outcome, t.right_outcome) == (Branch.UPPER, Branch.UPPER)
    # pi/2 + 2pi/3 = 7pi/6 lands in the lower half-circle
    t = run_toy_trial(s, math.pi / 2.0)
    assert (t.left_outcome, t.right_outcome) == (Branch.LOWER, Branch.UPPER)


def test_exact_values():
    assert toy_p_same_exact(ToySettings(0.7, 0.7)) == 1.0
    third = 2.0 * math.pi / 3.0
    assert toy_p_same_exact(ToySettings(third, 0.0)) == pytest.approx(1.0 / 3.0)
    assert toy_p_same_exact(ToySettings(0.0, math.pi)) == pytest.approx(0.0)


def test_exact_one_third_for_all_unequal_canonical_pairs():
    for a in CANONICAL_SETTINGS:
        for b in CANONICAL_SETTINGS:
            if a != b:
                assert toy_p_same_exact(ToySettings(a, b)) == pytest.approx(1.0 / 3.0)


def test_mc_equal_settings_exactly_one():
    est, ci = toy_p_same_mc(ToySettings(0.4, 0.4), 10_000, seed=7)
    assert est == 1.0


def test_mc_matches_exact_at_two_thirds_separation():
    est, _ = toy_p_same_mc(ToySettings(2.0 * math.pi / 3.0, 0.0), 10**6, seed=11)
    assert abs(est - 1.0 / 3.0) < 0.005
    est, _ = toy_p_same_mc(ToySettings(4.0 * math.pi / 3.0, 0.0), 10**6, seed=12)
    assert abs(est - 1.0 / 3.0) < 0.005


def test_one_third_for_large_separation_by_grid_enumeration():
    # independent oracle: average the branch rule over a dense gamma grid
    delta = 4.0 * math.pi / 3.0
    gamma = (np.arange(100_000) + 0.5) * (2.0 * math.pi / 100_000)
    left = (gamma + delta) % (2.0 * math.pi) < math.pi
    right = gamma % (2.0 * math.pi) < math.pi
    assert np.mean(left == right) == pytest.approx(1.0 / 3.0, abs=1e-4)


def test_mc_rejects_zero_trials():
    with pytest.raises(ValueError):
        toy_p_same_mc(ToySettings(0.0, 0.0), 0, seed=1)


def test_mc_deterministic_per_seed_and_worker_split():
    s = ToySettings(1.0, 2.0)
    a = toy_p_same_mc(s, 50_000, seed=3)
    b = toy_p_same_mc(s, 50_000, seed=3)
    assert a == b
    est4, _ = toy_p_same_mc(s, 200_000, seed=3, workers=4)
    assert abs(est4 - toy_p_same_exact(s)) < 0.01


@given(angles, angles)
def test_exact_symmetry_and_distance_dependence(a, b):
    p_ab = toy_p_same_exact(ToySettings(a, b))
    p_ba = toy_p_same_exact(ToySettings(b, a))
    assert p_ab == pytest.approx(p_ba, abs=1e-12)
    # shifting both angles leaves the probability unchanged
    shifted = toy_p_same_exact(ToySettings(a + 0.37, b + 0.37))
    assert p_ab == pytest.approx(shifted, abs=1e-9)
    assert 0.0 <= p_ab <= 1.0


@hsettings(max_examples=20, deadline=None)
@given(angles, angles, st.integers(min_value=0, max_value=2**31))
def test_mc_within_interval(a, b, seed):
    s = ToySettings(a, b)
    est, ci = toy_p_same_mc(s, 20_000, seed=seed)
    # ci is a 3-sigma half-width; allow a small slack for the rare tail
    assert abs(est - toy_p_same_exact(s)) <= ci + 0.01
