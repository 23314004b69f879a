"""SplitMix64 generator; the only randomness source in the package.

A fixed, tiny algorithm keeps seeded outputs identical across platforms and
Python versions, which ``random.Random`` does not promise.
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Value in [0, n) by multiply-shift range reduction (no rejection)."""
        return (self.next() * n) >> 64


def derive_seed(seed: int, *keys: int) -> int:
    """Independent child seed for (seed, keys...), e.g. one per worker or instance."""
    g = SplitMix64(seed)
    out = g.next()
    for key in keys:
        out = SplitMix64(out ^ ((key * 0xD1B54A32D192ED03) & _MASK)).next()
    return out
