"""Finitely-determined colourings of the complete r-uniform hypergraph on N.

A template fixes a finite vertex set A = [a] and gives every pattern B ⊆ A
with |B| <= r a colour.  An edge e of N^(r) is coloured by its pattern e ∩ A,
so the template is the whole colouring.

Vertex ``i`` (1-based) is bit ``i - 1`` of a pattern mask.  Patterns are
enumerated by size, then lexicographically on their sorted vertex lists;
that enumeration is the file-format order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import CapExceeded, InvalidAssignment, InvalidPartition, ParseError

MAX_A = 24
CANONICAL_MAX_A = 8
HEADER = "mcolour-template v1"


def pattern_count(r: int, a: int) -> int:
    return sum(math.comb(a, i) for i in range(r + 1))


@lru_cache(maxsize=None)
def _pattern_order(r: int, a: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for size in range(min(r, a) + 1):
        for combo in combinations(range(1, a + 1), size):
            out.append(combo)
    return tuple(out)


def pattern_vertices(r: int, a: int) -> tuple[tuple[int, ...], ...]:
    """Patterns in canonical order as sorted 1-based vertex tuples."""
    return _pattern_order(r, a)


@lru_cache(maxsize=None)
def _pattern_masks(r: int, a: int) -> np.ndarray:
    masks = np.array(
        [sum(1 << (v - 1) for v in p) for p in _pattern_order(r, a)], dtype=np.int64
    )
    masks.setflags(write=False)
    return masks


def pattern_masks(r: int, a: int) -> np.ndarray:
    """Bitmask of each pattern, in canonical order (read-only array)."""
    return _pattern_masks(r, a)


@lru_cache(maxsize=None)
def _pattern_index(r: int, a: int) -> np.ndarray:
    index = np.full(1 << a, -1, dtype=np.int64)
    masks = _pattern_masks(r, a)
    index[masks] = np.arange(len(masks))
    index.setflags(write=False)
    return index


def pattern_index(r: int, a: int) -> np.ndarray:
    """Dense mask -> canonical index lookup; -1 for masks of size > r."""
    return _pattern_index(r, a)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _compact(colours: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c in colours:
        if c not in relabel:
            relabel[c] = len(relabel) + 1
        out.append(relabel[c])
    return tuple(out)


@dataclass(frozen=True)
class ColourTemplate:
    """A surjective colouring of the patterns of [a] onto colours 1..k.

    ``assignment[j]`` is the colour of the j-th pattern in canonical order.
    Instances are always compacted: colours appear in first-occurrence order.
    """

    r: int
    a: int
    k: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if self.r < 2:
            raise InvalidAssignment(f"uniformity r={self.r} must be >= 2")
        if self.a < 0:
            raise InvalidAssignment(f"template size a={self.a} must be >= 0")
        if self.a > MAX_A:
            raise CapExceeded(f"a={self.a} exceeds the cap a <= {MAX_A}")
        n = pattern_count(self.r, self.a)
        if len(self.assignment) != n:
            raise InvalidAssignment(
                f"expected {n} pattern colours for r={self.r}, a={self.a}, "
                f"got {len(self.assignment)}"
            )
        if set(self.assignment) != set(range(1, self.k + 1)):
            raise InvalidAssignment(f"assignment is not surjective onto [1..{self.k}]")

    @property
    def n_patterns(self) -> int:
        return len(self.assignment)

    @cached_property
    def colours(self) -> np.ndarray:
        arr = np.asarray(self.assignment, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def colour_of_mask(self) -> np.ndarray:
        """Dense lookup: mask -> colour, 0 for masks with more than r vertices."""
        table = np.zeros(1 << self.a, dtype=np.int64)
        table[pattern_masks(self.r, self.a)] = self.colours
        table.setflags(write=False)
        return table

    def colour(self, vertices: Iterable[int]) -> int:
        """Colour of the pattern with the given 1-based vertices."""
        m = mask_of(vertices)
        idx = int(pattern_index(self.r, self.a)[m]) if m < (1 << self.a) else -1
        if idx < 0:
            raise InvalidAssignment(f"{sorted(vertices)} is not a pattern")
        return self.assignment[idx]

    @property
    def empty_colour(self) -> int:
        """Colour shared by edges that miss A entirely; always 1 after compaction."""
        return self.assignment[0]


def make_template(r: int, a: int, colours: Sequence[int]) -> ColourTemplate:
    """Build a template from colour ids listed in canonical pattern order.

    Colour ids may be any positive integers; they are compacted to 1..k in
    first-occurrence order.
    """
    colours = [int(c) for c in colours]
    if r < 2:
        raise InvalidAssignment(f"uniformity r={r} must be >= 2")
    if a < 0:
        raise InvalidAssignment(f"template size a={a} must be >= 0")
    if a > MAX_A:
        raise CapExceeded(f"a={a} exceeds the cap a <= {MAX_A}")
    n = pattern_count(r, a)
    if len(colours) != n:
        raise InvalidAssignment(
            f"expected {n} pattern colours for r={r}, a={a}, got {len(colours)}"
        )
    bad = [c for c in colours if c < 1]
    if bad:
        raise InvalidAssignment(f"colour ids must be positive, got {bad[0]}")
    compact = _compact(colours)
    return ColourTemplate(r, a, max(compact), compact)


def monochromatic(r: int, a: int) -> ColourTemplate:
    return make_template(r, a, [1] * pattern_count(r, a))


# -- serialization -----------------------------------------------------------


def serialize_template(t: ColourTemplate) -> bytes:
    lines = [
        HEADER,
        f"r={t.r} a={t.a} k={t.k}",
        "assignment=" + ",".join(str(c) for c in t.assignment),
    ]
    return ("\n".join(lines) + "\n").encode("utf-8")


def _parse_int(text: str, line: int, col: int) -> int:
    if not text or not (text.isdigit() or (text[0] == "-" and text[1:].isdigit())):
        raise ParseError(f"expected an integer, got {text!r}", line, col)
    return int(text)


def parse_template(data: bytes | str) -> ColourTemplate:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    if "\r" in data:
        raise ParseError("CR line endings are not allowed")
    lines = data.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) != 3:
        raise ParseError(f"expected 3 lines, found {len(lines)}")
    for i, ln in enumerate(lines, 1):
        if ln != ln.rstrip():
            raise ParseError("trailing whitespace", i, len(ln.rstrip()) + 1)
    if lines[0] != HEADER:
        raise ParseError(f"bad header {lines[0]!r}", 1, 1)

    fields = lines[1].split(" ")
    keys = ("r", "a", "k")
    if len(fields) != 3:
        raise ParseError("expected 'r=<int> a=<int> k=<int>'", 2, 1)
    values = {}
    col = 1
    for key, field in zip(keys, fields):
        name, sep, val = field.partition("=")
        if name != key or not sep:
            raise ParseError(f"expected field {key}=", 2, col)
        values[key] = _parse_int(val, 2, col + len(key) + 1)
        col += len(field) + 1

    prefix = "assignment="
    if not lines[2].startswith(prefix):
        raise ParseError("expected 'assignment='", 3, 1)
    body = lines[2][len(prefix):]
    items = body.split(",") if body else []
    colours = []
    col = len(prefix) + 1
    for item in items:
        colours.append(_parse_int(item, 3, col))
        col += len(item) + 1

    r, a, k = values["r"], values["a"], values["k"]
    if r < 2 or a < 0:
        raise InvalidAssignment(f"invalid header r={r} a={a}")
    if a > MAX_A:
        raise CapExceeded(f"a={a} exceeds the cap a <= {MAX_A}")
    expected = pattern_count(r, a)
    if len(colours) != expected:
        raise ParseError(
            f"assignment lists {len(colours)} colours, pattern count is {expected}", 3, 1
        )
    t = make_template(r, a, colours)
    if tuple(colours) != t.assignment or t.k != k:
        raise InvalidAssignment(
            "assignment must use colours 1..k in first-occurrence order with the declared k"
        )
    return t


# -- symmetry ----------------------------------------------------------------


def permute_template(t: ColourTemplate, perm: Sequence[int]) -> ColourTemplate:
    """Relabel vertex ``v`` as ``perm[v - 1]`` (perm is a permutation of 1..a)."""
    if sorted(perm) != list(range(1, t.a + 1)):
        raise InvalidAssignment(f"{list(perm)} is not a permutation of 1..{t.a}")
    index = pattern_index(t.r, t.a)
    out = [0] * t.n_patterns
    for j, pat in enumerate(pattern_vertices(t.r, t.a)):
        out[index[mask_of(perm[v - 1] for v in pat)]] = t.assignment[j]
    return make_template(t.r, t.a, out)


def canonical_form(t: ColourTemplate) -> ColourTemplate:
    """Least relabelled assignment over all a! vertex permutations."""
    if t.a > CANONICAL_MAX_A:
        raise CapExceeded(f"canonical_form needs a <= {CANONICAL_MAX_A}, got a={t.a}")
    if t.a <= 1:
        return t
    masks = pattern_masks(t.r, t.a)
    index = pattern_index(t.r, t.a)
    bits = ((masks[:, None] >> np.arange(t.a)) & 1).astype(np.int64)  # (P, a)
    perms = np.array(list(permutations(range(t.a))), dtype=np.int64)  # (n!, a)
    images = bits @ (np.int64(1) << perms).T  # (P, n!) image masks
    targets = index[images.T]  # (n!, P)
    rows = np.empty_like(targets)
    np.put_along_axis(rows, targets, np.broadcast_to(t.colours, targets.shape), axis=1)
    rows = kernels.relabel_rows(rows)
    best = rows[np.lexsort(rows.T[::-1])[0]]
    return ColourTemplate(t.r, t.a, t.k, tuple(int(c) for c in best))


def merge_colours(t: ColourTemplate, classes: Iterable[Iterable[int]]) -> ColourTemplate:
    """Identify colours: pattern colour c becomes the index of the class holding c."""
    classes = [list(c) for c in classes]
    seen: dict[int, int] = {}
    for i, cls in enumerate(classes, 1):
        if not cls:
            raise InvalidPartition(f"class {i} is empty")
        for c in cls:
            if c in seen:
                raise InvalidPartition(f"colour {c} appears in more than one class")
            if not 1 <= c <= t.k:
                raise InvalidPartition(f"colour {c} is outside 1..{t.k}")
            seen[c] = i
    if len(seen) != t.k:
        missing = sorted(set(range(1, t.k + 1)) - set(seen))
        raise InvalidPartition(f"colours {missing} are not covered")
    return make_template(t.r, t.a, [seen[c] for c in t.assignment])
