"""Compare the compiled ratio kernel, its pure-Python fallback and the solver path.

    python benchmarks/bench_kernel.py [--triangles 200] [--steps 400] [--repeat 5]
"""

import argparse
import timeit
from fractions import Fraction

from cevian import _kernel_py, kernel
from cevian.corpus import random_corpus
from cevian.ratio import area_ratio, sweep_grid
from cevian.triangle import SKEW

try:
    from cevian import _kernel as _compiled
except ImportError:
    _compiled = None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--triangles", type=int, default=200)
    parser.add_argument("--steps", type=int, default=400)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    corpus = random_corpus(args.triangles)
    grid = sweep_grid(0, 1, args.steps)
    third = Fraction(1, 3)

    cases = {
        "solver (GaussianRational)": (
            lambda: [area_ratio(t, third) for t in corpus],
            lambda: [area_ratio(SKEW, t) for t in grid],
        ),
        "kernel, pure Python": (
            lambda: kernel.ratio_batch(corpus, third, _kernel_py),
            lambda: kernel.sweep(SKEW, grid, _kernel_py),
        ),
    }
    if _compiled is not None:
        cases["kernel, compiled"] = (
            lambda: kernel.ratio_batch(corpus, third, _compiled),
            lambda: kernel.sweep(SKEW, grid, _compiled),
        )

    expected = cases["solver (GaussianRational)"][0]()
    for batch, sweep in cases.values():
        assert batch() == expected

    print(f"backend selected at import: {kernel.BACKEND}")
    print(f"{'implementation':28s} {'corpus (ms)':>12s} {'sweep (ms)':>12s}")
    base = None
    for name, (batch, sweep) in cases.items():
        tb = min(timeit.repeat(batch, number=1, repeat=args.repeat)) * 1e3
        ts = min(timeit.repeat(sweep, number=1, repeat=args.repeat)) * 1e3
        base = base or (tb, ts)
        print(f"{name:28s} {tb:12.2f} {ts:12.2f}   x{base[0] / tb:.1f} / x{base[1] / ts:.1f}")


if __name__ == "__main__":
    main()
