"""Seeded template corpora and parallel checker runs.

Every template is rebuilt from (seed, index) inside the worker, so results
do not depend on the number of workers or on chunking.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import checks
from .constructions import random_template, small_rainbow, small_set
from .rng import SplitMix64, derive_seed
from .template import ColourTemplate, pattern_count

CHECKS = {
    "theorem1": checks.check_theorem1,
    "conjecture-r2": checks.check_conjecture_r2,
    "interval-i": checks.check_interval_I,
    "lemma": checks.check_lemma,
}


@dataclass(frozen=True)
class Entry:
    """Recipe for one corpus template: ("random", index) or (family, a)."""

    kind: str
    param: int
    seed: int = 0
    r: int = 2
    a_max: int = 12

    @property
    def id(self) -> str:
        if self.kind == "random":
            return f"random-r{self.r}-{self.param:05d}"
        return f"{self.kind}-r{self.r}-a{self.param:02d}"

    def build(self) -> ColourTemplate:
        if self.kind == "small-rainbow":
            return small_rainbow(self.r, self.param)
        if self.kind == "small-set":
            return small_set(self.r, self.param)
        rng = SplitMix64(derive_seed(self.seed, self.param))
        a = rng.below(self.a_max + 1)
        P = pattern_count(self.r, a)
        # Half the corpus uses few colours so that colour classes repeat a lot.
        k = 1 + rng.below(P) if rng.below(2) else 1 + rng.below(min(P, 12))
        return random_template(self.r, a, k, rng.next())


def build_corpus(count: int, seed: int, r: int = 2, a_max: int = 12, named: bool = True):
    entries = [Entry("random", i, seed, r, a_max) for i in range(count)]
    if named:
        for a in range(a_max + 1):
            entries.append(Entry("small-rainbow", a, r=r))
            entries.append(Entry("small-set", a, r=r))
    return entries


def _run_chunk(args):
    chunk, names = args
    out = []
    for pos, entry in chunk:
        t = entry.build()
        for name in names:
            out.append((pos, name, entry.id, CHECKS[name](t)))
    return out


def run_corpus(entries, names=("theorem1", "conjecture-r2", "lemma"), threads: int = 1):
    """Run the named checks over every entry; results ordered by (entry, check)."""
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
    indexed = list(enumerate(entries))
    if threads <= 1:
        rows = _run_chunk((indexed, names))
    else:
        size = max(1, len(indexed) // (threads * 8))
        chunks = [(indexed[i : i + size], names) for i in range(0, len(indexed), size)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = [row for part in pool.map(_run_chunk, chunks) for row in part]
    order = {name: i for i, name in enumerate(names)}
    rows.sort(key=lambda row: (row[0], order[row[1]]))
    return [(entry_id, name, report) for _, name, entry_id, report in rows]


def corpus_csv(results) -> str:
    lines = ["template_id,check,verdict"]
    lines += [f"{tid},{name},{rep.verdict}" for tid, name, rep in results]
    return "\n".join(lines) + "\n"


def corpus_summary(results) -> dict:
    counts: dict[str, dict[str, int]] = {}
    failures = []
    for tid, name, rep in results:
        c = counts.setdefault(name, {"pass": 0, "fail": 0, "report": 0})
        c[rep.verdict] += 1
        if rep.failed:
            failures.append(dict(template_id=tid, **rep.to_dict()))
    return {"templates": len({tid for tid, _, _ in results}), "verdicts": counts, "failures": failures}


def corpus_json(results) -> str:
    return json.dumps(corpus_summary(results), indent=2) + "\n"
