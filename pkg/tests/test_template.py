import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeded_templates
from oracles import brute_spectrum
from mcolour import (
    CapExceeded,
    InvalidAssignment,
    InvalidPartition,
    ParseError,
    canonical_form,
    make_template,
    merge_colours,
    parse_template,
    serialize_template,
    small_rainbow,
    small_set,
)
from mcolour.constructions import random_template
from mcolour.rng import SplitMix64
from mcolour.template import (
    pattern_count,
    pattern_index,
    pattern_masks,
    pattern_vertices,
    permute_template,
)


def test_pattern_order_size_then_lex():
    assert pattern_vertices(2, 3) == ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3))
    assert list(pattern_masks(2, 3)) == [0, 1, 2, 4, 3, 5, 6]


@pytest.mark.parametrize("r,a", [(2, 0), (2, 5), (3, 6), (4, 7)])
def test_pattern_index_is_bijection(r, a):
    masks = pattern_masks(r, a)
    assert len(masks) == pattern_count(r, a)
    idx = pattern_index(r, a)
    assert [idx[m] for m in masks] == list(range(len(masks)))
    assert masks[0] == 0
    assert all(bin(int(m)).count("1") <= r for m in masks)


def test_make_template_smallest():
    t = make_template(2, 0, [1])
    assert (t.k, t.assignment) == (1, (1,))


def test_make_template_small_set_a2():
    t = make_template(2, 2, [1, 2, 3, 4])
    assert t.k == 4
    assert brute_spectrum(t) == {1, 2, 4}


def test_make_template_equals_small_rainbow():
    assert make_template(2, 2, [1, 1, 1, 2]) == small_rainbow(2, 2)


def test_compaction_first_occurrence():
    t = make_template(2, 2, [7, 3, 7, 9])
    assert t.assignment == (1, 2, 1, 3) and t.k == 3


@pytest.mark.parametrize(
    "r,a,colours",
    [(2, 2, [1, 2, 3]), (2, 1, [1, 0, 1]), (2, 1, [1, -2, 1])],
)
def test_make_template_rejects(r, a, colours):
    with pytest.raises(InvalidAssignment):
        make_template(r, a, colours)


def test_cap_enforced():
    with pytest.raises(CapExceeded):
        make_template(2, 25, [1] * pattern_count(2, 25))


def test_serialize_exact_bytes():
    assert serialize_template(make_template(2, 1, [1, 2])) == (
        b"mcolour-template v1\nr=2 a=1 k=2\nassignment=1,2\n"
    )


def test_roundtrip_small_set():
    t = small_set(3, 3)
    back = parse_template(serialize_template(t))
    assert (back.r, back.a, back.k, back.assignment) == (t.r, t.a, t.k, t.assignment)


@pytest.mark.parametrize(
    "text",
    [
        b"mcolour-template v1\nr=2 a=1 k=2\nassignment=1\n",  # missing entry
        b"mcolour-template v2\nr=2 a=1 k=2\nassignment=1,2\n",
        b"mcolour-template v1\nr=2 a=1 k=2 \nassignment=1,2\n",
        b"mcolour-template v1\r\nr=2 a=1 k=2\r\nassignment=1,2\r\n",
        b"mcolour-template v1\nr=2 a=x k=2\nassignment=1,2\n",
        b"mcolour-template v1\nr=2 a=1 k=2\nassignment=1,,2\n",
        b"mcolour-template v1\nr=2 a=1\nassignment=1,2\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_template(text)


def test_parse_error_has_position():
    with pytest.raises(ParseError) as exc:
        parse_template(b"mcolour-template v1\nr=2 a=1 k=2\nassignment=1,z\n")
    assert exc.value.line == 3 and exc.value.position == 14


@pytest.mark.parametrize(
    "text",
    [
        b"mcolour-template v1\nr=2 a=1 k=3\nassignment=1,2\n",  # wrong k
        b"mcolour-template v1\nr=2 a=1 k=2\nassignment=2,1\n",  # not compacted
        b"mcolour-template v1\nr=2 a=1 k=2\nassignment=1,0\n",
    ],
)
def test_parse_invariant_violations(text):
    with pytest.raises(InvalidAssignment):
        parse_template(text)


@st.composite
def templates(draw, a_max=6):
    r = draw(st.integers(2, 4))
    a = draw(st.integers(0, a_max))
    n = pattern_count(r, a)
    colours = draw(st.lists(st.integers(1, 6), min_size=n, max_size=n))
    return make_template(r, a, colours)


@given(templates())
@settings(max_examples=200, deadline=None)
def test_roundtrip_property(t):
    assert parse_template(serialize_template(t)) == t


def test_canonical_form_small_rainbow_fixed():
    t = small_rainbow(2, 3)
    assert canonical_form(t) == t


def test_canonical_form_swap_orbit():
    t = make_template(2, 3, [1, 2, 3, 3, 4, 4, 5])
    swapped = permute_template(t, [2, 1, 3])
    assert swapped != t
    assert canonical_form(swapped) == canonical_form(t)


def test_canonical_form_idempotent():
    for t in seeded_templates(30, seed=5, a_max=6):
        c = canonical_form(t)
        assert canonical_form(c) == c


def test_canonical_form_matches_brute_force():
    for t in seeded_templates(20, seed=9, a_max=5):
        images = [permute_template(t, p) for p in itertools.permutations(range(1, t.a + 1))]
        assert canonical_form(t).assignment == min(i.assignment for i in images)


def test_canonical_form_invariance_100x10():
    rng = SplitMix64(2024)
    for i in range(100):
        r = 2 + i % 2
        a = 1 + rng.below(6)
        k = 1 + rng.below(pattern_count(r, a))
        t = random_template(r, a, k, rng.next())
        base = canonical_form(t)
        for _ in range(10):
            perm = list(range(1, a + 1))
            for j in range(a - 1, 0, -1):
                q = rng.below(j + 1)
                perm[j], perm[q] = perm[q], perm[j]
            assert canonical_form(permute_template(t, perm)) == base


def test_canonical_form_cap():
    with pytest.raises(CapExceeded):
        canonical_form(small_rainbow(2, 9))


def test_merge_all_is_monochromatic():
    t = small_set(2, 3)
    m = merge_colours(t, [list(range(1, t.k + 1))])
    assert m.k == 1 and brute_spectrum(m) == {1}


def test_merge_identity():
    t = small_rainbow(2, 4)
    assert merge_colours(t, [[c] for c in range(1, t.k + 1)]) == t


def test_merge_empty_colour_with_singleton():
    t = small_set(2, 2)
    c_empty, c_1 = t.colour(()), t.colour((1,))
    others = [[c] for c in range(1, t.k + 1) if c not in (c_empty, c_1)]
    m = merge_colours(t, [[c_empty, c_1]] + others)
    assert m.k == 3
    assert brute_spectrum(m) == {1, 2, 3}


@pytest.mark.parametrize("classes", [[[1, 2], [2, 3, 4]], [[1, 2], [3]], [[1, 2, 3, 4], []], [[1, 2, 3, 4, 5]]])
def test_merge_rejects_non_partitions(classes):
    with pytest.raises(InvalidPartition):
        merge_colours(small_set(2, 2), classes)
