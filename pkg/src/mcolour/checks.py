"""Checkers binding the bounds to exact spectra.

Each checker returns a ``CheckReport``.  ``fail`` is only ever produced by a
hard assertion the underlying result actually guarantees; statements with
unspecified constants ("sufficiently large n", O-terms) yield ``report``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import bounds
from .constructions import theorem4, theorem4_s
from .errors import PreconditionFailed
from .report import CheckReport, witness
from .spectrum import colour_loss, losses, minimal_witness, nearest, spectrum
from .template import ColourTemplate, vertices_of


def _tparams(t: ColourTemplate) -> dict:
    return {"r": t.r, "a": t.a, "k": t.k}


def _first_hit(sp, interval):
    for v, w in zip(sp.values, sp.witnesses):
        if v in interval:
            return v, w
    return None, None


def check_theorem1(t: ColourTemplate) -> CheckReport:
    """Distance from every m in [1, k] to the spectrum."""
    sp = spectrum(t)
    worst = None  # (dist, m, m')
    violations = []
    ratio_best = (Fraction(0), 1, 1, 0)
    for m in range(1, t.k + 1):
        mp, d = nearest(sp, m)
        if worst is None or d > worst[0]:
            worst = (d, m, mp)
        if t.r == 2:
            if not bounds.within_r2_bound(m, d):
                violations.append((m, mp, d))
        elif d:
            ratio = d / m ** (1 - 1 / t.r)
            if ratio > ratio_best[0]:
                ratio_best = (ratio, m, mp, d)

    d, m, mp = worst
    if t.r == 2:
        if violations:
            m, mp, d = violations[0]
            return CheckReport(
                "theorem1",
                _tparams(t),
                "fail",
                [witness(m, mp, vertices_of(sp.witness(mp))) for m, mp, _ in violations],
                f"{len(violations)} values of m violate dist <= sqrt(m/2)+1/2; "
                f"first: m={m}, nearest {mp}, dist {d} > {bounds.theorem1_bound(2, m):.4f}",
            )
        return CheckReport(
            "theorem1",
            _tparams(t),
            "pass",
            [witness(m, mp, vertices_of(sp.witness(mp)))],
            f"all m in [1,{t.k}] within sqrt(m/2)+1/2; worst m={m}: nearest {mp}, "
            f"dist {d} <= {bounds.theorem1_bound(2, m):.4f}",
        )
    ratio, m, mp, d = ratio_best
    return CheckReport(
        "theorem1",
        _tparams(t),
        "report",
        [witness(m, mp, vertices_of(sp.witness(mp)))],
        f"max dist/m^(1-1/{t.r}) = {float(ratio):.6f} at m={m} (nearest {mp}, dist {d}); "
        f"c_{t.r} = {bounds.c_r(t.r):.6f}",
    )


def _interval_scan(t: ColourTemplate, n_min: int):
    sp = spectrum(t)
    hits, misses = [], []
    n = max(n_min, 1)
    while t.k > math.comb(n, t.r) + 1:
        iv = bounds.interval_I(t.r, n)
        v, w = _first_hit(sp, iv)
        (hits if v is not None else misses).append((n, iv, v, w))
        n += 1
    return hits, misses


def _interval_witnesses(hits, misses):
    out = []
    for n, iv, v, w in sorted(hits + misses):
        out.append(witness(iv.hi, v, vertices_of(w) if v is not None else ()))
    return out


def check_conjecture_r2(t: ColourTemplate) -> CheckReport:
    """Every (C(n,2)+1, C(n+1,2)+1] with k > C(n,2)+1 meets the spectrum."""
    if t.r != 2:
        raise PreconditionFailed(f"conjecture-r2 needs r=2, got r={t.r}")
    hits, misses = _interval_scan(t, 1)
    verdict = "fail" if misses else "pass"
    if misses:
        text = "missed intervals: " + ", ".join(f"n={n} {iv}" for n, iv, _, _ in misses)
    else:
        text = f"{len(hits)} intervals hit: " + ", ".join(
            f"n={n} {iv} by {v}" for n, iv, v, _ in hits
        )
    return CheckReport(
        "conjecture-r2", _tparams(t), verdict, _interval_witnesses(hits, misses), text
    )


def check_interval_I(t: ColourTemplate, n_min: int = 1) -> CheckReport:
    """Hit/miss of I_{r,n} for n >= n_min; a hard check only for r=2, n_min=1."""
    hits, misses = _interval_scan(t, n_min)
    hard = t.r == 2 and n_min == 1
    if hard:
        verdict = "fail" if misses else "pass"
    else:
        verdict = "report"
    parts = [
        f"n={n} {iv} " + (f"hit by {v}" if v is not None else "MISS")
        for n, iv, v, _ in sorted(hits + misses)
    ]
    text = f"n >= {n_min}: {len(hits)} hit, {len(misses)} missed" + (
        "; " + ", ".join(parts) if parts else ""
    )
    params = dict(_tparams(t), n_min=n_min)
    return CheckReport("interval-i", params, verdict, _interval_witnesses(hits, misses), text)


def check_theorem4(r: int, n: int) -> CheckReport:
    """Build the Baranyai-ordered colouring and test that it skips J_{r,n}.

    Asserted for r = 3, n >= 7; other instances are reported, since the
    result is only claimed for sufficiently large n.
    """
    t = theorem4(r, n)
    sp = spectrum(t)
    s = theorem4_s(r, n)
    k_want = bounds.binom_prefix(n, r) + 1
    second_cap = bounds.binom_prefix(n - 1, r)
    J = bounds.interval_J(r, n)
    second = sp.second_largest()
    inside_J = [v for v in sp.values if v in J]
    full = (1 << t.a) - 1
    loss_sizes = [len(colour_loss(t, full, v).lost) for v in range(1, t.a + 1)]
    loss_sum_want = r * math.comb(n + 1, r) + (r - 1) * s

    ok_max = sp.values[-1] == t.k == k_want
    ok_second = second is not None and second <= second_cap
    ok_J = not inside_J
    ok_sum = sum(loss_sizes) == loss_sum_want
    ok = ok_max and ok_second and ok_J and ok_sum
    hard = r == 3 and n >= 7
    verdict = ("pass" if ok else "fail") if hard else "report"

    wit = [witness(sp.values[-1], None, vertices_of(sp.witnesses[-1]))]
    if second is not None:
        wit.append(witness(second, None, vertices_of(sp.witness(second))))
    for v in inside_J:
        wit.append(witness(v, None, vertices_of(sp.witness(v))))
    text = (
        f"a={t.a}, s={s}, k={t.k} (want {k_want}): {'ok' if ok_max else 'FAIL'}; "
        f"second largest {second} <= {second_cap}: {'ok' if ok_second else 'FAIL'}; "
        f"spectrum ∩ J={J}: {inside_J or 'empty'}; "
        f"sum |C_i| = {sum(loss_sizes)} (want {loss_sum_want}): {'ok' if ok_sum else 'FAIL'}; "
        f"|C_i| range [{min(loss_sizes)}, {max(loss_sizes)}]"
    )
    params = {"r": r, "n": n, "a": t.a, "k": t.k, "s": s}
    return CheckReport("theorem4", params, verdict, wit, text)


def check_lemma(t: ColourTemplate) -> CheckReport:
    """Deletion and decomposition back-windows below every m >= 2 in the spectrum.

    a0 is the size of the minimal witness S for m.  Besides window
    non-emptiness against the whole spectrum, the per-vertex colour losses
    of S are checked against both deletion-window bounds.
    """
    sp = spectrum(t)
    values = sp.values
    wit = []
    failures = []
    for m in values:
        if m < 2:
            continue
        S = minimal_witness(t, m, sp)
        a0 = bin(S).count("1")
        drop = losses(t, S)
        best_v = min(drop, key=lambda v: (drop[v], v))
        m_prime = m - drop[best_v]

        if bounds.binom_prefix(a0, t.r) < m:
            failures.append(f"m={m}: sum_(i<={t.r}) C({a0},i) < m")
        if max(drop.values()) > bounds.binom_prefix(a0 - 1, t.r - 1):
            failures.append(f"m={m}: a vertex loses more than sum_(i<{t.r}) C({a0 - 1},i)")
        if Fraction(drop[best_v]) > Fraction(t.r * (m - 1), a0):
            failures.append(f"m={m}: least loss {drop[best_v]} > {t.r}({m}-1)/{a0}")

        lo_B = bounds.lemma_window_lo(t.r, a0, m)
        in_B = [v for v in values if lo_B <= v < m]
        if not in_B:
            failures.append(f"m={m}: deletion window [{lo_B}, {m}) empty")
        dec = bounds.decompose_m(t.r, a0, m)
        lo_C = bounds.claimC_bound(t.r, a0, dec)
        in_C = [v for v in values if lo_C <= v < m]
        if not in_C:
            failures.append(f"m={m}: decomposition window [{lo_C}, {m}) empty")

        # Prefer the vertex-deletion witness; otherwise any value in both windows.
        lo = max(lo_B, lo_C)
        if lo <= m_prime < m:
            wit.append(witness(m, m_prime, vertices_of(S & ~(1 << (best_v - 1)))))
        else:
            both = [v for v in in_B if v >= lo]
            mp = both[-1] if both else None
            wit.append(witness(m, mp, vertices_of(sp.witness(mp)) if mp else ()))
    verdict = "fail" if failures else "pass"
    n_checked = sum(1 for m in values if m >= 2)
    text = (
        "; ".join(failures)
        if failures
        else f"{n_checked} values m >= 2: deletion and decomposition windows meet the spectrum"
    )
    return CheckReport("lemma", _tparams(t), verdict, wit, text)
