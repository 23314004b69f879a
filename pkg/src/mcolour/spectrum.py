"""Colour counts of vertex subsets and the spectrum of achievable counts.

For a template on A = [a], an infinite set X = S ∪ T with S ⊆ A and T an
infinite tail outside A sees exactly the patterns B ⊆ S with |B| <= r, so
``gamma(t, S)`` is the number of colours of an infinite set, and the
spectrum is the set of these counts over all S ⊆ A.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import CapExceeded, InvalidVertex, NoWitness, OutOfRange
from .template import MAX_A, ColourTemplate, pattern_masks, vertices_of


@dataclass(frozen=True)
class Spectrum:
    """Achievable colour counts, ascending, with the least subset mask attaining each."""

    values: tuple[int, ...]
    witnesses: tuple[int, ...]

    def __contains__(self, m: int) -> bool:
        return m in self._members

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def _members(self) -> frozenset[int]:
        return frozenset(self.values)

    def witness(self, m: int) -> int:
        try:
            return self.witnesses[self.values.index(m)]
        except ValueError:
            raise NoWitness(f"{m} is not in the spectrum") from None

    def second_largest(self) -> int | None:
        return self.values[-2] if len(self.values) > 1 else None


@dataclass(frozen=True)
class ColourLoss:
    vertex: int
    lost: frozenset[int]


def _gamma_table(t: ColourTemplate) -> np.ndarray:
    if t.a > MAX_A:
        raise CapExceeded(f"a={t.a} exceeds the cap a <= {MAX_A}")
    table = kernels.gamma_table(t.colour_of_mask, t.a, t.r, t.k)
    table.setflags(write=False)
    return table


# Templates are hashable value objects; memoizing keeps repeated checker
# calls on the same template from re-running the lattice sweep.
@lru_cache(maxsize=16)
def gamma_table(t: ColourTemplate) -> np.ndarray:
    """gamma(t, S) for every mask S in [0, 2^a), as a read-only array."""
    return _gamma_table(t)


def gamma(t: ColourTemplate, S: int) -> int:
    """Number of colours on patterns B ⊆ S (mask), the empty pattern included."""
    if S < 0 or S >> t.a:
        raise InvalidVertex(f"mask {S:#x} is not a subset of [1..{t.a}]")
    masks = pattern_masks(t.r, t.a)
    inside = (masks & ~S) == 0
    return int(np.unique(t.colours[inside]).size)


def spectrum(t: ColourTemplate) -> Spectrum:
    table = gamma_table(t)
    values, first = np.unique(table, return_index=True)
    return Spectrum(tuple(int(v) for v in values), tuple(int(w) for w in first))


def nearest(sp: Spectrum, m: int) -> tuple[int, int]:
    """Closest spectrum value to m and its distance; ties go to the smaller value."""
    k = sp.values[-1]
    if not 1 <= m <= k:
        raise OutOfRange(f"m={m} outside [1, {k}]")
    best = min(sp.values, key=lambda v: (abs(v - m), v))
    return best, abs(best - m)


def _colours_inside(t: ColourTemplate, S: int) -> set[int]:
    masks = pattern_masks(t.r, t.a)
    return set(t.colours[(masks & ~S) == 0].tolist())


def colour_loss(t: ColourTemplate, S: int, v: int) -> ColourLoss:
    """Colours present on S that disappear when vertex v (1-based) is removed."""
    vbit = 1 << (v - 1) if v >= 1 else 0
    if not vbit or not S & vbit:
        raise InvalidVertex(f"vertex {v} is not in {list(vertices_of(S))}")
    lost = _colours_inside(t, S) - _colours_inside(t, S & ~vbit)
    return ColourLoss(v, frozenset(lost))


def minimal_witness(t: ColourTemplate, m: int, sp: Spectrum | None = None) -> int:
    """A subset with m colours from which no single vertex can be dropped.

    Starts from the spectrum witness and deletes vertices in increasing label
    order while the count stays m, repeating until nothing more can go.
    """
    if m < 2:
        raise NoWitness(f"minimal witnesses need m >= 2, got {m}")
    sp = sp or spectrum(t)
    S = sp.witness(m)
    table = gamma_table(t)
    changed = True
    while changed:
        changed = False
        for i in range(t.a):
            bit = 1 << i
            if S & bit and table[S & ~bit] == m:
                S &= ~bit
                changed = True
    return S


def losses(t: ColourTemplate, S: int) -> dict[int, int]:
    """Map each vertex v of S to gamma(S) - gamma(S minus v)."""
    table = gamma_table(t)
    g = int(table[S])
    return {v: g - int(table[S & ~(1 << (v - 1))]) for v in vertices_of(S)}


def spectrum_csv(sp: Spectrum) -> str:
    buf = io.StringIO()
    buf.write("value,witness\n")
    for v, S in zip(sp.values, sp.witnesses):
        buf.write(f'{v},"{" ".join(str(x) for x in vertices_of(S))}"\n')
    return buf.getvalue()
