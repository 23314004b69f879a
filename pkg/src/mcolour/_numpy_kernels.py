"""Pure numpy implementations of the hot loops (fallback backend)."""

import numpy as np

_BATCH = 1 << 15


def _popcount(arr):
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    return np.unpackbits(arr.view(np.uint8), axis=-1).reshape(*arr.shape, -1).sum(-1)


def gamma_table(colour_of_mask, a, r, k):
    """Number of colours inside every subset S of [a], indexed by mask.

    Doubling over the top vertex j: the colour bitset of S ∪ {j} (S ⊆ [0, j))
    is that of S plus the colours of the patterns B ∪ {j} with B ⊆ S.
    """
    colour_of_mask = np.asarray(colour_of_mask)
    words = (k + 64) // 64
    n = 1 << a
    sets = np.zeros((n, words), dtype=np.uint64)
    c0 = int(colour_of_mask[0])
    sets[0, c0 >> 6] |= np.uint64(1 << (c0 & 63))
    for j in range(a):
        half = 1 << j
        lows = np.arange(half, dtype=np.int64)
        block = sets[:half].copy()
        small = lows[_popcount(lows) <= r - 1]
        for B in small.tolist():
            c = int(colour_of_mask[B | half])
            rows = (lows & B) == B
            block[rows, c >> 6] |= np.uint64(1 << (c & 63))
        sets[half : 2 * half] = block
    return _popcount(sets).sum(axis=1).astype(np.int64)


def relabel_rows(rows):
    """Relabel each row's values 1, 2, ... in first-occurrence order."""
    rows = np.asarray(rows, dtype=np.int64)
    n, p = rows.shape
    first = np.full((n, int(rows.max()) + 1), p, dtype=np.int64)
    row_idx = np.repeat(np.arange(n), p)
    np.minimum.at(first, (row_idx, rows.ravel()), np.tile(np.arange(p), n))
    labels = np.argsort(np.argsort(first, axis=1, kind="stable"), axis=1, kind="stable") + 1
    return np.take_along_axis(labels, rows, axis=1)


def _rgs_exactly(P, k):
    x = [0] * P
    pref = [0] * P
    while True:
        if pref[P - 1] + 1 == k:
            yield x
        i = P - 1
        while i >= 1:
            if x[i] < min(pref[i - 1] + 1, k - 1):
                break
            i -= 1
        if i < 1:
            return
        x[i] += 1
        pref[i] = max(pref[i - 1], x[i])
        for q in range(i + 1, P):
            x[q] = 0
            pref[q] = pref[i]


def _spectrum_sizes(batch, contain_mat, k):
    onehot = (batch[:, :, None] == np.arange(k)).astype(np.int32)  # (N, P, k)
    present = np.einsum("sp,npk->nsk", contain_mat, onehot) > 0
    gammas = np.sort(present.sum(axis=2), axis=1)  # (N, subsets)
    return 1 + (np.diff(gammas, axis=1) != 0).sum(axis=1)


def rgs_min_spectrum(contain, contain_len, n_patterns, k, max_count):
    """Same contract as the numba kernel; evaluates strings in batches."""
    contain = np.asarray(contain)
    n_sub = contain.shape[0]
    contain_mat = np.zeros((n_sub, n_patterns), dtype=np.int32)
    for S in range(n_sub):
        contain_mat[S, contain[S, : contain_len[S]]] = 1
    best = n_sub + 2
    best_x = np.zeros(n_patterns, dtype=np.int64)
    count = 0
    buf = []

    def flush():
        nonlocal best, best_x
        batch = np.array(buf, dtype=np.int64)
        sizes = _spectrum_sizes(batch, contain_mat, k)
        i = int(np.argmin(sizes))
        if sizes[i] < best:
            best = int(sizes[i])
            best_x = batch[i].copy()
        buf.clear()

    for x in _rgs_exactly(n_patterns, k):
        if count == max_count:
            break
        buf.append(list(x))
        count += 1
        if len(buf) == _BATCH:
            flush()
    if buf:
        flush()
    return best, best_x, count
