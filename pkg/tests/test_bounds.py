import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mcolour import PreconditionFailed, nearest, small_rainbow, spectrum
from mcolour.bounds import (
    Decomposition,
    binom_prefix,
    c_r,
    claimC_bound,
    decompose_m,
    interval_I,
    interval_J,
    lemma_bounds,
    lemma_window_lo,
    psi_lower,
    theorem1_bound,
    tightness_instance,
    within_r2_bound,
)


def test_c_r_values():
    assert c_r(2) == pytest.approx(2 ** -0.5, abs=1e-12)
    assert c_r(2) == pytest.approx(0.70711, abs=5e-6)
    assert c_r(3) == pytest.approx(0.82548, abs=5e-6)


def test_theorem1_bound_examples():
    assert theorem1_bound(2, 8) == pytest.approx(2.5)
    assert theorem1_bound(2, 2) == pytest.approx(1.5)
    assert theorem1_bound(3, 1000, slack=0) == pytest.approx(82.55, abs=0.005)


@given(st.integers(1, 10**6), st.integers(0, 2000))
def test_exact_r2_bound_agrees_with_float(m, d):
    exact = within_r2_bound(m, d)
    f = theorem1_bound(2, m)
    if abs(d - f) > 1e-6:
        assert exact == (d <= f)


def test_exact_r2_bound_boundary():
    # m = 8: bound exactly 2.5, so distance 2 allowed and 3 not
    assert within_r2_bound(8, 2) and not within_r2_bound(8, 3)
    # m = 2: bound exactly 1.5
    assert within_r2_bound(2, 1) and not within_r2_bound(2, 2)


def test_lemma_bounds_examples():
    assert lemma_bounds(2, 4, 7) == 3
    assert lemma_bounds(2, 1, 2) == 1
    assert lemma_bounds(3, 4, 5) == 3
    assert lemma_window_lo(2, 4, 7) == 4
    assert lemma_window_lo(2, 3, 8) == Fraction(5)


@given(st.integers(2, 4), st.integers(1, 20), st.integers(2, 500))
def test_integer_window_matches_rational(r, a, m):
    w = lemma_bounds(r, a, m)
    lo = lemma_window_lo(r, a, m)
    for mp in range(max(0, m - w - 3), m):
        assert (mp >= lo) == (mp >= m - w)


def test_lemma_bounds_preconditions():
    with pytest.raises(PreconditionFailed):
        lemma_bounds(2, 0, 3)
    with pytest.raises(PreconditionFailed):
        lemma_window_lo(2, 3, 1)


def test_decompose_examples():
    assert decompose_m(2, 4, 7) == Decomposition(2, 4, 1, 0)
    assert decompose_m(2, 2, 1) == Decomposition(2, 2, 2, 0)
    m = math.comb(8, 3) + math.comb(8, 2) + 8 + 1
    dec = decompose_m(3, 8, m, t=1)
    assert (dec.t, dec.s, dec.m) == (1, 8, m)


def test_decompose_smallest_t():
    # 93 = C(8,3)+C(8,2)+C(8,1)+0+1: the longer tail (t=0) leaves s=0
    dec = decompose_m(3, 8, 93)
    assert (dec.t, dec.s) == (0, 0)
    assert claimC_bound(3, 8, dec) == claimC_bound(3, 8, decompose_m(3, 8, 93, t=1)) == 64


@given(st.integers(2, 4), st.integers(0, 12), st.data())
def test_decompose_identity(r, a, data):
    m = data.draw(st.integers(1, binom_prefix(a, r)))
    dec = decompose_m(r, a, m)
    assert dec.m == m and dec.s >= 0 and -1 <= dec.t <= r
    if dec.t > -1:  # a longer tail would overshoot
        assert decompose_m(r, a, m, t=dec.t).s == dec.s
        with pytest.raises(PreconditionFailed):
            decompose_m(r, a, m, t=dec.t - 1)


def test_decompose_errors():
    with pytest.raises(PreconditionFailed):
        decompose_m(2, 3, 8)
    with pytest.raises(PreconditionFailed):
        decompose_m(2, 3, 0)


def test_claimC_examples():
    assert claimC_bound(2, 4, Decomposition(2, 4, 1, 0)) == 4
    assert claimC_bound(3, 8, Decomposition(3, 8, 1, 8)) == 64
    assert claimC_bound(3, 5, Decomposition(3, 5, 3, 0)) == 1
    assert isinstance(claimC_bound(3, 7, Decomposition(3, 7, 1, 3)), Fraction)


def test_intervals():
    assert tuple(interval_I(2, 3)) == (4, 7)
    assert tuple(interval_J(3, 7)) == (42, 64)
    assert 5 in interval_I(2, 3) and 4 not in interval_I(2, 3) and 7 in interval_I(2, 3)
    assert str(interval_I(2, 3)) == "(4, 7]"
    for n in range(1, 11):
        assert interval_I(2, n) == interval_J(2, n)
    with pytest.raises(PreconditionFailed):
        interval_I(2, 0)


def test_tightness_examples():
    assert tightness_instance(2, 4) == (9, 2)
    assert tightness_instance(2, 2) == (3, 1)
    assert tightness_instance(2, 3) is None


@pytest.mark.parametrize("r,a", [(2, 10), (3, 8), (2, 7)])
def test_tightness_equality_on_rainbow(r, a):
    sp = spectrum(small_rainbow(r, a))
    seen = 0
    for l in range(1, a):
        inst = tightness_instance(r, l)
        if inst is None:
            continue
        m, gap = inst
        assert nearest(sp, m)[1] == math.ceil(gap)
        seen += 1
    assert seen


def test_psi_lower_examples():
    assert psi_lower(2, 7) == 4
    assert psi_lower(2, 2) == 2
    assert psi_lower(2, 46) == 10
    assert psi_lower(2, 1) == 1
    assert psi_lower(2, 3) == 3
    assert psi_lower(3, 1) == 1
    assert psi_lower(3, 5) == 2


def test_psi_lower_r3_counts_floor():
    # n_floor = 8: C(9,3)+1 = 85 < k needed for the first extra value
    assert psi_lower(3, 85) == 2
    assert psi_lower(3, 86) == 3
    assert psi_lower(3, 86, n_floor=20) == 2


@given(st.integers(1, 300))
def test_psi_lower_monotone(k):
    assert psi_lower(2, k) <= psi_lower(2, k + 1)
    assert psi_lower(2, k) <= k
