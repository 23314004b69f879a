"""numba kernels; see ``_numpy_kernels`` for the fallback with the same contracts."""

import numpy as np
from numba import njit


@njit(cache=True)
def _bump(counts, c, delta, g):
    counts[c] += delta
    if delta > 0 and counts[c] == 1:
        return g + 1
    if delta < 0 and counts[c] == 0:
        return g - 1
    return g


@njit(cache=True)
def gamma_table(colour_of_mask, a, r, k):
    """Number of colours inside every subset S of [a], indexed by mask.

    Walks the subset lattice along a binary reflected Gray code.  Each step
    toggles one vertex v and updates per-colour pattern counts for the
    patterns B ⊆ S with v ∈ B, so the colour set of S is the colour set of
    its neighbour plus (or minus) those patterns.
    """
    n = 1 << a
    table = np.empty(n, np.int64)
    counts = np.zeros(k + 1, np.int64)
    bits = np.empty(a + 1, np.int64)
    idx = np.empty(r + 1, np.int64)
    counts[colour_of_mask[0]] = 1
    g = 1
    table[0] = 1
    S = 0
    for i in range(1, n):
        v = 0
        while not (i >> v) & 1:
            v += 1
        vbit = 1 << v
        delta = 1 if (S & vbit) == 0 else -1
        rest = S & ~vbit
        t = 0
        x = rest
        while x:
            low = x & -x
            bits[t] = low
            t += 1
            x ^= low
        g = _bump(counts, colour_of_mask[vbit], delta, g)
        top = min(r - 1, t)
        for size in range(1, top + 1):
            for j in range(size):
                idx[j] = j
            while True:
                m = vbit
                for j in range(size):
                    m |= bits[idx[j]]
                g = _bump(counts, colour_of_mask[m], delta, g)
                j = size - 1
                while j >= 0 and idx[j] == t - size + j:
                    j -= 1
                if j < 0:
                    break
                idx[j] += 1
                for q in range(j + 1, size):
                    idx[q] = idx[q - 1] + 1
        S ^= vbit
        table[S] = g
    return table


@njit(cache=True)
def relabel_rows(rows):
    """Relabel each row's values 1, 2, ... in first-occurrence order."""
    out = np.empty_like(rows)
    lab = np.zeros(rows.max() + 1, np.int64)
    for p in range(rows.shape[0]):
        lab[:] = 0
        nxt = 1
        for j in range(rows.shape[1]):
            c = rows[p, j]
            if lab[c] == 0:
                lab[c] = nxt
                nxt += 1
            out[p, j] = lab[c]
    return out


@njit(cache=True)
def rgs_min_spectrum(contain, contain_len, n_patterns, k, max_count):
    """Minimum spectrum size over all surjective k-colourings of the patterns.

    Colourings are enumerated as restricted growth strings (colour ids in
    first-occurrence order) in lexicographic order.  ``contain[S, :contain_len[S]]``
    lists the pattern indices inside subset S.  Returns the minimum, the first
    string attaining it (0-based colours) and the number of strings evaluated;
    stops after ``max_count`` evaluations.
    """
    P = n_patterns
    n_sub = contain.shape[0]
    x = np.zeros(P, np.int64)
    pref = np.zeros(P, np.int64)
    best_x = x.copy()
    best = n_sub + 2
    count = 0
    seen = np.zeros(k, np.int64)
    stamp = 0
    gseen = np.zeros(k + 2, np.int64)
    gstamp = 0
    while True:
        if pref[P - 1] + 1 == k:
            if count == max_count:
                break
            count += 1
            gstamp += 1
            nvals = 0
            for S in range(n_sub):
                stamp += 1
                g = 0
                for q in range(contain_len[S]):
                    c = x[contain[S, q]]
                    if seen[c] != stamp:
                        seen[c] = stamp
                        g += 1
                if gseen[g] != gstamp:
                    gseen[g] = gstamp
                    nvals += 1
            if nvals < best:
                best = nvals
                best_x[:] = x
        i = P - 1
        while i >= 1:
            if x[i] < min(pref[i - 1] + 1, k - 1):
                break
            i -= 1
        if i < 1:
            break
        x[i] += 1
        pref[i] = max(pref[i - 1], x[i])
        for q in range(i + 1, P):
            x[q] = 0
            pref[q] = pref[i]
    return best, best_x, count
