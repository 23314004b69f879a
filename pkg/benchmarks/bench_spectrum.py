"""Compare the numba and pure-numpy kernels.

    python3 benchmarks/bench_spectrum.py [--repeat N]

Both backends are imported directly, so MCOLOUR_DISABLE_NUMBA has no effect here.
"""

import argparse
import time

import numpy as np

from mcolour import _numba_kernels, _numpy_kernels, random_template, small_rainbow
from mcolour.search import _containment
from mcolour.template import pattern_count


def best_of(fn, repeat):
    fn()  # warm-up (JIT compile on first call)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = [
        ("small-rainbow r=2 a=16", small_rainbow(2, 16)),
        ("random r=2 a=20 k=60", random_template(2, 20, 60, 1)),
        ("random r=3 a=20 k=400", random_template(3, 20, 400, 2)),
        ("random r=2 a=22 k=200", random_template(2, 22, 200, 3)),
    ]
    print(f"{'spectrum table':<28}{'numba s':>10}{'numpy s':>10}{'ratio':>8}")
    for name, t in cases:
        run = lambda mod: mod.gamma_table(t.colour_of_mask, t.a, t.r, t.k)  # noqa: E731
        assert np.array_equal(run(_numba_kernels), run(_numpy_kernels))
        a = best_of(lambda: run(_numba_kernels), args.repeat)
        b = best_of(lambda: run(_numpy_kernels), args.repeat)
        print(f"{name:<28}{a:>10.4f}{b:>10.4f}{b / a:>8.1f}")

    print(f"\n{'exhaustive psi scan':<28}{'numba s':>10}{'numpy s':>10}{'ratio':>8}")
    for r, a, k in [(2, 4, 4), (2, 4, 7)]:
        contain, lengths = _containment(r, a)
        P = pattern_count(r, a)
        run = lambda mod: mod.rgs_min_spectrum(contain, lengths, P, k, 10**7)  # noqa: E731
        assert run(_numba_kernels)[0] == run(_numpy_kernels)[0]
        x = best_of(lambda: run(_numba_kernels), 1)
        y = best_of(lambda: run(_numpy_kernels), 1)
        print(f"{f'r={r} a={a} k={k}':<28}{x:>10.4f}{y:>10.4f}{y / x:>8.1f}")


if __name__ == "__main__":
    main()
