import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeded_templates
from oracles import brute_gamma, brute_spectrum, naive_gamma_table
from mcolour import (
    InvalidVertex,
    NoWitness,
    OutOfRange,
    colour_loss,
    gamma,
    make_template,
    minimal_witness,
    nearest,
    small_rainbow,
    small_set,
    spectrum,
)
from mcolour.spectrum import Spectrum, gamma_table, losses, spectrum_csv
from mcolour.template import mask_of, monochromatic, pattern_count


def test_gamma_empty_set_is_one():
    for t in seeded_templates(20):
        assert gamma(t, 0) == 1


def test_gamma_small_rainbow():
    assert gamma(small_rainbow(2, 4), mask_of([1, 2, 3])) == math.comb(3, 2) + 1


def test_gamma_small_set():
    assert gamma(small_set(3, 3), mask_of([1, 2])) == 4


def test_gamma_rejects_outside():
    with pytest.raises(InvalidVertex):
        gamma(small_set(2, 2), mask_of([3]))


def test_gamma_matches_brute():
    for t in seeded_templates(30, seed=1, a_max=7):
        for S in range(1 << t.a):
            verts = [v for v in range(1, t.a + 1) if S >> (v - 1) & 1]
            assert gamma(t, S) == brute_gamma(t, verts) == gamma_table(t)[S]


@pytest.mark.parametrize(
    "t,values",
    [
        (small_rainbow(2, 4), (1, 2, 4, 7)),
        (small_rainbow(3, 4), (1, 2, 5)),
        (monochromatic(2, 5), (1,)),
        (monochromatic(3, 0), (1,)),
    ],
)
def test_spectrum_values(t, values):
    sp = spectrum(t)
    assert sp.values == values
    assert set(values) == brute_spectrum(t)


def test_spectrum_witnesses_realise_values():
    for t in seeded_templates(40, seed=2):
        sp = spectrum(t)
        assert sp.values[0] == 1 and sp.values[-1] == t.k
        for v, w in zip(sp.values, sp.witnesses):
            assert gamma(t, w) == v
            # least mask attaining the value
            assert int(np.argmax(naive_gamma_table(t) == v)) == w


def test_nearest():
    sp = Spectrum((1, 2, 4, 7), (0, 3, 7, 15))
    assert nearest(sp, 5) == (4, 1)
    assert nearest(sp, 4) == (4, 0)
    with pytest.raises(OutOfRange):
        nearest(sp, 8)
    with pytest.raises(OutOfRange):
        nearest(sp, 0)


def test_nearest_tightness_tie_goes_low():
    assert nearest(spectrum(small_rainbow(2, 10)), 9) == (7, 2)


def test_colour_loss_small_rainbow():
    t = small_rainbow(2, 3)
    full = mask_of([1, 2, 3])
    loss = colour_loss(t, full, 1)
    assert loss.lost == {t.colour((1, 2)), t.colour((1, 3))}
    assert (gamma(t, full), gamma(t, mask_of([2, 3]))) == (4, 2)


def test_colour_loss_monochromatic():
    t = monochromatic(2, 4)
    for v in range(1, 5):
        assert colour_loss(t, 0b1111, v).lost == frozenset()


def test_colour_loss_small_set():
    t = small_set(2, 2)
    loss = colour_loss(t, 0b11, 2)
    assert loss.lost == {t.colour((2,)), t.colour((1, 2))}


def test_colour_loss_size_is_gamma_drop():
    for t in seeded_templates(30, seed=4):
        S = (1 << t.a) - 1
        for v in range(1, t.a + 1):
            lost = colour_loss(t, S, v).lost
            assert len(lost) == gamma(t, S) - gamma(t, S & ~(1 << (v - 1)))
            assert losses(t, S)[v] == len(lost)


def test_colour_loss_rejects_vertex_outside():
    with pytest.raises(InvalidVertex):
        colour_loss(small_set(2, 3), 0b011, 3)


def test_minimal_witness_examples():
    assert minimal_witness(small_rainbow(2, 4), 4) == mask_of([1, 2, 3])
    assert minimal_witness(small_set(2, 2), 4) == mask_of([1, 2])
    assert minimal_witness(small_rainbow(2, 2), 2) == mask_of([1, 2])


def test_minimal_witness_is_minimal():
    for t in seeded_templates(40, seed=6):
        for m in spectrum(t).values:
            if m < 2:
                continue
            S = minimal_witness(t, m)
            assert gamma(t, S) == m
            for v in range(t.a):
                if S >> v & 1:
                    assert gamma(t, S & ~(1 << v)) < m


def test_minimal_witness_errors():
    t = small_rainbow(2, 4)
    with pytest.raises(NoWitness):
        minimal_witness(t, 3)
    with pytest.raises(NoWitness):
        minimal_witness(t, 1)


def test_deletion_bounds_on_minimal_witnesses():
    for t in seeded_templates(60, seed=8, a_max=9):
        for m in spectrum(t).values:
            if m < 2:
                continue
            S = minimal_witness(t, m)
            a0 = bin(S).count("1")
            drops = losses(t, S)
            cap = sum(math.comb(a0 - 1, i) for i in range(t.r))
            assert max(drops.values()) <= cap
            assert min(drops.values()) * a0 <= t.r * (m - 1)


@st.composite
def template_and_chain(draw):
    r = draw(st.integers(2, 3))
    a = draw(st.integers(0, 7))
    n = pattern_count(r, a)
    colours = draw(st.lists(st.integers(1, 8), min_size=n, max_size=n))
    S = draw(st.integers(0, (1 << a) - 1))
    extra = draw(st.integers(0, (1 << a) - 1))
    return make_template(r, a, colours), S, S | extra


@given(template_and_chain())
@settings(max_examples=300, deadline=None)
def test_gamma_monotone(args):
    t, S, T = args
    assert gamma(t, S) <= gamma(t, T)
    assert gamma(t, (1 << t.a) - 1) == t.k


def test_spectrum_csv_format():
    text = spectrum_csv(spectrum(small_rainbow(2, 4)))
    assert text == 'value,witness\n1,""\n2,"1 2"\n4,"1 2 3"\n7,"1 2 3 4"\n'
