"""Seeded searches over templates: missing spectrum values and small spectra."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .bounds import psi_lower
from .errors import PreconditionFailed
from .rng import SplitMix64
from .spectrum import gamma_table
from .template import (
    ColourTemplate,
    canonical_form,
    make_template,
    pattern_count,
    pattern_masks,
)

EXHAUSTIVE_MAX_PATTERNS = 12
SEARCH_MAX_A = 12


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _min_a(r: int, k: int) -> int:
    a = 0
    while pattern_count(r, a) < k:
        a += 1
    return a


class _Walker:
    """Hill-climbing state over surjective k-colourings of a fixed pattern set."""

    def __init__(self, r: int, a: int, k: int, rng: SplitMix64):
        self.r, self.a, self.k, self.rng = r, a, k, rng
        n = pattern_count(r, a)
        self.colours = list(range(1, k + 1)) + [1 + rng.below(k) for _ in range(n - k)]
        self.counts = [0] * (k + 1)
        for c in self.colours:
            self.counts[c] += 1

    def template(self) -> ColourTemplate:
        return make_template(self.r, self.a, self.colours)

    def propose(self):
        """Recolour one random pattern; None when the move would drop a colour."""
        j = self.rng.below(len(self.colours))
        c = 1 + self.rng.below(self.k)
        old = self.colours[j]
        if c == old or self.counts[old] == 1:
            return None
        return j, c

    def apply(self, move):
        j, c = move
        old = self.colours[j]
        self.counts[old] -= 1
        self.counts[c] += 1
        self.colours[j] = c
        return j, old


def _hill_climb(r, k, budget, seed, objective, a_max, stop_at=None):
    """Minimize ``objective(template)``; restarts every budget/10 proposals.

    Restart i works with a = a_min + i, wrapping at ``a_max``.  Returns
    (best_value, best_template, evaluations).
    """
    rng = SplitMix64(seed)
    a_min = _min_a(r, k)
    a_max = max(a_min, a_max)
    restart_every = max(1, budget // 10)
    best = (None, None)
    evals = 0
    restart = 0
    while evals < budget:
        a = a_min + restart % (a_max - a_min + 1)
        restart += 1
        w = _Walker(r, a, k, rng)
        t = w.template()
        cur = objective(t)
        evals += 1
        if best[0] is None or cur < best[0]:
            best = (cur, t)
            if stop_at is not None and cur <= stop_at:
                return best[0], best[1], evals
        steps = 0
        while steps < restart_every and evals < budget:
            steps += 1
            move = w.propose()
            if move is None:
                continue
            undo = w.apply(move)
            t = w.template()
            val = objective(t)
            evals += 1
            if val <= cur:
                cur = val
                if val < best[0]:
                    best = (val, t)
                    if stop_at is not None and val <= stop_at:
                        return best[0], best[1], evals
            else:
                w.apply(undo)
    return best[0], best[1], evals


def search_missing_m(
    r: int, k: int, m: int, budget: int, seed: int, a_max: int = SEARCH_MAX_A
) -> ColourTemplate | None:
    """First template found with k colours whose spectrum omits m, or None."""
    if not k > m > 2:
        raise PreconditionFailed(f"need k > m > 2, got k={k}, m={m}")

    def hits(t):
        return int(np.count_nonzero(gamma_table(t) == m))

    val, t, _ = _hill_climb(r, k, budget, seed, hits, a_max, stop_at=0)
    return t if val == 0 else None


@dataclass(frozen=True)
class PsiResult:
    r: int
    k: int
    best: int
    template: ColourTemplate
    lower: int
    evaluated: int
    truncated: bool

    @property
    def exact(self) -> bool:
        """Upper bound meets the lower bound (only proven for r = 2)."""
        return self.r == 2 and self.best == self.lower


def _containment(r: int, a: int):
    masks = pattern_masks(r, a)
    n_sub = 1 << a
    contain = np.zeros((n_sub, len(masks)), dtype=np.int64)
    lengths = np.zeros(n_sub, dtype=np.int64)
    for S in range(n_sub):
        inside = np.nonzero((masks & ~S) == 0)[0]
        contain[S, : len(inside)] = inside
        lengths[S] = len(inside)
    return contain, lengths


def psi_upper_search(
    r: int,
    k: int,
    mode: str = "exhaustive",
    budget: int = 10**7,
    seed: int = 0,
    a_values=None,
    n_floor: int | None = None,
) -> PsiResult:
    """Smallest spectrum over searched templates with exactly k colours.

    ``exhaustive`` enumerates every surjective colouring (colour relabellings
    collapsed) for each a whose pattern count is between k and 12;
    ``randomized`` hill-climbs like ``search_missing_m``.  The result is an
    upper bound on psi_r(k).
    """
    lower = psi_lower(r, k, n_floor)
    if mode == "exhaustive":
        if a_values is None:
            a_values = [a for a in range(0, 13) if k <= pattern_count(r, a) <= EXHAUSTIVE_MAX_PATTERNS]
        a_values = list(a_values)
        for a in a_values:
            if pattern_count(r, a) > EXHAUSTIVE_MAX_PATTERNS:
                raise PreconditionFailed(
                    f"exhaustive mode needs pattern count <= {EXHAUSTIVE_MAX_PATTERNS}; "
                    f"a={a} has {pattern_count(r, a)}"
                )
        if not a_values or all(pattern_count(r, a) < k for a in a_values):
            raise PreconditionFailed(f"no scanned a admits {k} colours")
        best = None
        evaluated = 0
        truncated = False
        for a in a_values:
            P = pattern_count(r, a)
            if P < k:
                continue
            left = budget - evaluated
            if left <= 0:
                truncated = True
                break
            contain, lengths = _containment(r, a)
            size, rgs, count = kernels.rgs_min_spectrum(contain, lengths, P, k, left)
            evaluated += int(count)
            if count < stirling2(P, k):
                truncated = True
            if count and (best is None or size < best[0]):
                best = (int(size), make_template(r, a, [int(c) + 1 for c in rgs]))
            if truncated:
                break
        if best is None:
            raise PreconditionFailed("budget exhausted before any colouring was evaluated")
        t = best[1]
        if t.a <= 8:
            t = canonical_form(t)
        return PsiResult(r, k, best[0], t, lower, evaluated, truncated)
    if mode == "randomized":

        def size(t):
            return int(np.unique(gamma_table(t)).size)

        a_max = min(SEARCH_MAX_A, max(_min_a(r, k), 6))
        val, t, evals = _hill_climb(r, k, budget, seed, size, a_max, stop_at=lower)
        return PsiResult(r, k, val, t, lower, evals, evals >= budget and val > lower)
    raise PreconditionFailed(f"unknown mode {mode!r}")
