"""Closed-form bounds, windows and intervals.

Everything that feeds a hard check is exact (int or Fraction); floats only
appear in ``c_r`` and ``theorem1_bound``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import PreconditionFailed


def binom_prefix(a: int, upto: int) -> int:
    """sum_{i=0}^{upto} C(a, i); zero when upto < 0."""
    return sum(math.comb(a, i) for i in range(upto + 1)) if a >= 0 else 0


def c_r(r: int) -> float:
    return r / (2 * math.factorial(r) ** (1 / r))


def c_r_exact(r: int) -> tuple[int, int]:
    """(r, r!) so that c_r = r / (2 (r!)^(1/r)) can be evaluated exactly by callers."""
    return r, math.factorial(r)


def theorem1_bound(r: int, m: int, slack: float | None = None) -> float:
    """Guaranteed distance from m to the spectrum.

    For r = 2 with no slack this is sqrt(m/2) + 1/2.  For r >= 3 the
    lower-order constant is unknown and must be supplied as ``slack``
    (default 0): c_r m^(1-1/r) + slack m^(1-2/r).
    """
    if m < 1:
        raise PreconditionFailed(f"m={m} must be >= 1")
    if slack is None:
        slack = 0.5 if r == 2 else 0.0
    return c_r(r) * m ** (1 - 1 / r) + slack * m ** (1 - 2 / r)


def within_r2_bound(m: int, dist: int) -> bool:
    """Exact test of dist <= sqrt(m/2) + 1/2."""
    return dist == 0 or (2 * dist - 1) ** 2 <= 2 * m


# -- lemma windows -------------------------------------------------------------


def lemma_bounds(r: int, a: int, m: int) -> int:
    """Integer width w of the back-window [m - w, m) guaranteed to meet the spectrum.

    w = min(sum_{i<r} C(a-1, i), floor(r (m-1) / a)); an integer m' lies in
    the rational window [m - min(..., r(m-1)/a), m) exactly when m' >= m - w.
    """
    if a < 1 or m < 2:
        raise PreconditionFailed(f"need a >= 1 and m >= 2, got a={a}, m={m}")
    return min(binom_prefix(a - 1, r - 1), (r * (m - 1)) // a)


def lemma_window_lo(r: int, a: int, m: int) -> Fraction:
    """Exact left end m - min(sum_{i<r} C(a-1,i), r(m-1)/a) of the back-window."""
    if a < 1 or m < 2:
        raise PreconditionFailed(f"need a >= 1 and m >= 2, got a={a}, m={m}")
    return m - min(Fraction(binom_prefix(a - 1, r - 1)), Fraction(r * (m - 1), a))


@dataclass(frozen=True)
class Decomposition:
    """m = sum_{i=t+1}^{r} C(a, i) + s + 1 with s >= 0."""

    r: int
    a: int
    t: int
    s: int

    @property
    def m(self) -> int:
        return sum(math.comb(self.a, i) for i in range(self.t + 1, self.r + 1)) + self.s + 1


def decompose_m(r: int, a: int, m: int, t: int | None = None) -> Decomposition:
    """Write m as a binomial tail plus s + 1.

    Without ``t``, takes the smallest t (longest tail) leaving s >= 0.
    t = r means the empty tail.
    """
    if m < 1:
        raise PreconditionFailed(f"m={m} must be >= 1")
    if binom_prefix(a, r) < m:
        raise PreconditionFailed(f"sum_(i<={r}) C({a},i) = {binom_prefix(a, r)} < m={m}")
    candidates = [t] if t is not None else range(-1, r + 1)
    for tt in candidates:
        if not -1 <= tt <= r:
            raise PreconditionFailed(f"t={tt} outside [-1, {r}]")
        s = m - 1 - sum(math.comb(a, i) for i in range(tt + 1, r + 1))
        if s >= 0:
            dec = Decomposition(r, a, tt, s)
            assert dec.m == m
            return dec
    raise PreconditionFailed(f"no decomposition of m={m} with t={t}")


def claimC_bound(r: int, a: int, dec: Decomposition) -> Fraction:
    """sum_{i=t+1}^{r} C(a-1, i) + (1 - t/a) s + 1."""
    if a < 1:
        raise PreconditionFailed(f"a={a} must be >= 1")
    tail = sum(math.comb(a - 1, i) for i in range(dec.t + 1, r + 1))
    return tail + (1 - Fraction(dec.t, a)) * dec.s + 1


# -- intervals -----------------------------------------------------------------


class Interval(NamedTuple):
    """Integer interval (lo, hi]."""

    lo: int
    hi: int

    def __contains__(self, x) -> bool:
        return self.lo < x <= self.hi

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi}]"


def interval_I(r: int, n: int) -> Interval:
    if n < 1:
        raise PreconditionFailed(f"n={n} must be >= 1")
    return Interval(math.comb(n, r) + 1, math.comb(n + 1, r) + 1)


def interval_J(r: int, n: int) -> Interval:
    if n < 1:
        raise PreconditionFailed(f"n={n} must be >= 1")
    return Interval(binom_prefix(n - 1, r), binom_prefix(n, r))


def tightness_instance(r: int, l: int) -> tuple[int, Fraction] | None:
    """Midpoint m between C(l,r)+1 and C(l+1,r)+1 and its distance C(l,r-1)/2.

    None when the midpoint is not an integer.
    """
    total = math.comb(l, r) + math.comb(l + 1, r) + 2
    if total % 2:
        return None
    return total // 2, Fraction(math.comb(l, r - 1), 2)


# -- psi -------------------------------------------------------------------------


def psi_lower(r: int, k: int, n_floor: int | None = None) -> int:
    """Lower bound on the least spectrum size over surjective k-colourings.

    r = 2: the largest n with C(n,2)+1 <= k, and never below |{1, 2, k}|.
    r >= 3 (heuristic, depends on ``n_floor``): 1, k and one value in each
    I_{r,n} with n >= n_floor and C(n+1,r)+1 < k.
    """
    if k < 1:
        raise PreconditionFailed(f"k={k} must be >= 1")
    trivial = len({1, min(2, k), k})
    if r == 2:
        n = 1
        while math.comb(n + 1, 2) + 1 <= k:
            n += 1
        return max(n, trivial)
    if n_floor is None:
        n_floor = math.ceil(5 * r / 2)
    if k == 1:
        return 1
    count = 0
    n = n_floor
    while math.comb(n + 1, r) + 1 < k:
        count += 1
        n += 1
    return 2 + count
