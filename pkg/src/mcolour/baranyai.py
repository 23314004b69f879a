"""Constructive 1-factorization of the complete h-uniform hypergraph on [l].

Vertices are added one at a time.  Between stages every factor holds l/h
disjoint "parts" (the traces of its final edges on the vertices seen so
far), and each part S occurs C(l-n, h-|S|) times over all factors.  Adding
vertex n+1 means picking one part per factor to grow; an integral max-flow
makes that choice while keeping the occurrence counts right.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InternalInvariantViolation, PreconditionFailed
from .report import CheckReport
from .template import mask_of, vertices_of


class FlowNetwork:
    """Directed graph with integer capacities for max-flow.

    Arcs are stored in insertion order; each arc has a paired reverse arc
    at index ``i ^ 1``.
    """

    def __init__(self, n_nodes: int):
        self.n = n_nodes
        self.head: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n_nodes)]
        self.original: list[int] = []

    def add_arc(self, u: int, v: int, capacity: int) -> int:
        if capacity < 0:
            raise ValueError("capacities must be non-negative")
        i = len(self.head)
        self.head += [v, u]
        self.cap += [capacity, 0]
        self.original += [capacity, 0]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    def flow_on(self, arc: int) -> int:
        return self.original[arc] - self.cap[arc]


def max_flow(net: FlowNetwork, source: int, sink: int) -> int:
    """Edmonds-Karp: repeatedly augment along a BFS-shortest path.

    Arcs are scanned in insertion order, so the resulting flow is
    deterministic.  Mutates ``net`` residual capacities; read per-arc flow
    back with ``net.flow_on``.
    """
    total = 0
    if source == sink:
        return 0
    while True:
        parent_arc = [-1] * net.n
        parent_arc[source] = -2
        queue = deque([source])
        while queue and parent_arc[sink] == -1:
            u = queue.popleft()
            for i in net.adj[u]:
                v = net.head[i]
                if net.cap[i] > 0 and parent_arc[v] == -1:
                    parent_arc[v] = i
                    queue.append(v)
        if parent_arc[sink] == -1:
            return total
        push = None
        v = sink
        while v != source:
            i = parent_arc[v]
            push = net.cap[i] if push is None else min(push, net.cap[i])
            v = net.head[i ^ 1]
        v = sink
        while v != source:
            i = parent_arc[v]
            net.cap[i] -= push
            net.cap[i ^ 1] += push
            v = net.head[i ^ 1]
        total += push


@dataclass
class PartialFactorization:
    """Stage-n state: for each factor a multiset of parts (masks over [n])."""

    l: int
    h: int
    n: int
    factors: list[Counter] = field(default_factory=list)

    @classmethod
    def initial(cls, l: int, h: int) -> "PartialFactorization":
        _check_divisible(l, h)
        n_factors = math.comb(l - 1, h - 1)
        return cls(l, h, 0, [Counter({0: l // h}) for _ in range(n_factors)])


@dataclass(frozen=True)
class Factorization:
    l: int
    h: int
    factors: tuple[tuple[tuple[int, ...], ...], ...]

    def ordered_edges(self) -> list[tuple[int, ...]]:
        """All edges, factor by factor (the matching-block ordering)."""
        return [e for f in self.factors for e in f]

    def to_text(self) -> str:
        lines = [" ".join("{" + ",".join(map(str, e)) + "}" for e in f) for f in self.factors]
        return "\n".join(lines) + "\n"


def _check_divisible(l: int, h: int) -> None:
    if not (1 <= h <= l):
        raise PreconditionFailed(f"need 1 <= h <= l, got h={h}, l={l}")
    if l % h:
        raise PreconditionFailed(f"h={h} does not divide l={l}")


def check_partial(p: PartialFactorization) -> list[str]:
    """Violations of the stage invariants (empty list when valid)."""
    problems = []
    full = (1 << p.n) - 1
    per = p.l // p.h
    totals: Counter = Counter()
    for fi, parts in enumerate(p.factors):
        if sum(parts.values()) != per:
            problems.append(f"factor {fi} holds {sum(parts.values())} parts, expected {per}")
        union = 0
        for S, mult in parts.items():
            if S and mult > 1 or union & S:
                problems.append(f"factor {fi}: parts overlap at {vertices_of(S)}")
            if bin(S).count("1") > p.h:
                problems.append(f"factor {fi}: part {vertices_of(S)} larger than h")
            union |= S
            totals[S] += mult
        if union != full:
            problems.append(f"factor {fi}: parts do not cover [1..{p.n}]")
    for S in range(1, full + 1):
        size = bin(S).count("1")
        want = math.comb(p.l - p.n, p.h - size) if size <= p.h else 0
        if totals[S] != want:
            problems.append(
                f"part {vertices_of(S)} occurs {totals[S]} times, expected {want}"
            )
    return problems


def extend_stage(p: PartialFactorization) -> PartialFactorization:
    """Add vertex n+1 to one part of every factor."""
    if p.n >= p.l:
        raise PreconditionFailed("factorization is already complete")
    l, h, n = p.l, p.h, p.n
    n_factors = len(p.factors)

    set_nodes: dict[int, int] = {}
    order: list[int] = []
    for parts in p.factors:
        for S in sorted(parts):
            if bin(S).count("1") < h and S not in set_nodes:
                set_nodes[S] = len(order)
                order.append(S)
    source = 0
    sink = 1 + n_factors + len(order)
    net = FlowNetwork(sink + 1)
    for fi in range(n_factors):
        net.add_arc(source, 1 + fi, 1)
    choice_arcs: list[list[tuple[int, int]]] = []
    for fi, parts in enumerate(p.factors):
        arcs = []
        for S in sorted(parts):
            if S in set_nodes:
                node = 1 + n_factors + set_nodes[S]
                arcs.append((S, net.add_arc(1 + fi, node, parts[S])))
        choice_arcs.append(arcs)
    for S in order:
        size = bin(S).count("1")
        net.add_arc(1 + n_factors + set_nodes[S], sink, math.comb(l - n - 1, h - size - 1))

    value = max_flow(net, source, sink)
    if value != n_factors:
        raise InternalInvariantViolation(
            f"stage {n}->{n + 1}: flow value {value}, expected {n_factors}"
        )

    vbit = 1 << n
    new_factors = []
    for fi, parts in enumerate(p.factors):
        chosen = [S for S, arc in choice_arcs[fi] if net.flow_on(arc) > 0]
        if len(chosen) != 1 or net.flow_on(dict(choice_arcs[fi])[chosen[0]]) != 1:
            raise InternalInvariantViolation(f"factor {fi} did not receive exactly one unit")
        S = chosen[0]
        grown = Counter(parts)
        grown[S] -= 1
        if not grown[S]:
            del grown[S]
        grown[S | vbit] += 1
        new_factors.append(grown)
    return PartialFactorization(l, h, n + 1, new_factors)


def factorize(l: int, h: int, check_stages: bool = False) -> Factorization:
    """Partition all h-subsets of [l] into C(l-1, h-1) perfect matchings."""
    p = PartialFactorization.initial(l, h)
    while p.n < l:
        p = extend_stage(p)
        if check_stages:
            problems = check_partial(p)
            if problems:
                raise InternalInvariantViolation(f"stage {p.n}: {problems[0]}")
    factors = []
    for parts in p.factors:
        edges = sorted(vertices_of(S) for S, mult in parts.items() for _ in range(mult))
        factors.append(tuple(edges))
    return Factorization(l, h, tuple(factors))


def verify_factorization(f: Factorization) -> CheckReport:
    """Certify that ``f`` partitions the h-subsets of [l] into perfect matchings."""
    params = {"l": f.l, "h": f.h}
    name = "factorization"

    def fail(msg, edge=None):
        witnesses = [{"m": None, "m_prime": None, "subset": list(edge)}] if edge else []
        return CheckReport(name, params, "fail", witnesses, msg)

    l, h = f.l, f.h
    if h < 1 or h > l or l % h:
        return fail(f"h={h} does not divide l={l}")
    everything = (1 << l) - 1
    for i, factor in enumerate(f.factors):
        union = 0
        for e in factor:
            if len(e) != h or len(set(e)) != h or not all(1 <= v <= l for v in e):
                return fail(f"factor {i}: {list(e)} is not an {h}-subset of [1..{l}]", e)
            m = mask_of(e)
            if union & m:
                return fail(f"factor {i} not a perfect matching: {list(e)} overlaps", e)
            union |= m
        if union != everything or len(factor) != l // h:
            return fail(f"factor {i} not a perfect matching: does not cover [1..{l}]")
    seen: Counter = Counter(tuple(sorted(e)) for factor in f.factors for e in factor)
    for e, c in sorted(seen.items()):
        if c > 1:
            return fail(f"edge {list(e)} appears in {c} factors", e)
    want = math.comb(l, h)
    if len(seen) != want:
        missing = None
        for e in combinations(range(1, l + 1), h):
            if e not in seen:
                missing = e
                break
        return fail(f"edge {list(missing)} is missing", missing)
    n_factors = math.comb(l - 1, h - 1)
    if len(f.factors) != n_factors:
        return fail(f"{len(f.factors)} factors, expected {n_factors}")
    return CheckReport(
        name,
        params,
        "pass",
        [],
        f"{n_factors} perfect matchings of {l // h} edges cover all C({l},{h}) = {want} edges once",
    )
