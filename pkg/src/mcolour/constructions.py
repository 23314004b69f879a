"""Named colouring families and seeded random templates."""

from __future__ import annotations

import math

from .baranyai import factorize
from .errors import PreconditionFailed
from .rng import SplitMix64
from .template import (
    MAX_A,
    ColourTemplate,
    make_template,
    mask_of,
    pattern_count,
    pattern_index,
    pattern_vertices,
)


def small_rainbow(r: int, a: int) -> ColourTemplate:
    """Every r-subset of [a] gets its own colour; all smaller patterns share one."""
    colours = []
    nxt = 2
    for pat in pattern_vertices(r, a):
        if len(pat) == r:
            colours.append(nxt)
            nxt += 1
        else:
            colours.append(1)
    return make_template(r, a, colours)


def small_set(r: int, a: int) -> ColourTemplate:
    """Colour each edge by its intersection with [a]: one colour per pattern."""
    return make_template(r, a, range(1, pattern_count(r, a) + 1))


def theorem4_s(r: int, n: int) -> int:
    """Number of (r-1)-subsets that receive their own colour in ``theorem4``."""
    return sum(math.comb(n, i) for i in range(r + 1)) - math.comb(n + 1, r)


def theorem4(r: int, n: int) -> ColourTemplate:
    """Colouring of N^(r) whose spectrum skips (sum_{i<=r} C(n-1,i), sum_{i<=r} C(n,i)].

    A = [n+1].  All r-subsets of A get distinct colours, as do the first s
    (r-1)-subsets in matching-block order of a Baranyai factorization of
    K_{n+1}^{(r-1)}; every other pattern shares the colour of the empty pattern.
    """
    if r < 3:
        raise PreconditionFailed(f"theorem4 needs r >= 3, got r={r}")
    if n < 1 or (n + 1) % (r - 1):
        raise PreconditionFailed(f"(r-1)={r - 1} must divide n+1={n + 1}")
    if n + 1 > MAX_A:
        raise PreconditionFailed(f"n+1={n + 1} exceeds the template cap {MAX_A}")
    s = theorem4_s(r, n)
    if not 0 <= s <= math.comb(n + 1, r - 1):
        raise PreconditionFailed(f"s={s} outside [0, C({n + 1},{r - 1})]")

    a = n + 1
    index = pattern_index(r, a)
    colours = [1] * pattern_count(r, a)
    designated = factorize(a, r - 1).ordered_edges()[:s] if s else []
    nxt = 2
    for edge in designated:
        colours[index[mask_of(edge)]] = nxt
        nxt += 1
    for j, pat in enumerate(pattern_vertices(r, a)):
        if len(pat) == r:
            colours[j] = nxt
            nxt += 1
    t = make_template(r, a, colours)
    k_expected = sum(math.comb(n, i) for i in range(r + 1)) + 1
    assert t.k == math.comb(n + 1, r) + s + 1 == k_expected
    return t


def random_template(r: int, a: int, k: int, seed: int) -> ColourTemplate:
    """Seeded random template with exactly k colours.

    The first k patterns in canonical order get colours 1..k (so every colour
    is used); each remaining pattern gets an independent uniform colour.
    """
    n = pattern_count(r, a)
    if not 1 <= k <= n:
        raise PreconditionFailed(f"k={k} outside [1, {n}] for r={r}, a={a}")
    rng = SplitMix64(seed)
    colours = list(range(1, k + 1)) + [1 + rng.below(k) for _ in range(n - k)]
    return make_template(r, a, colours)
