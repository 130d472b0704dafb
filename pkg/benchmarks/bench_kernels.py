"""Compare the compiled and pure mod-p kernels on the shapes that dominate
search workloads: repeated small rrefs (independence checks) and mid-size
products.  Run with `python3 benchmarks/bench_kernels.py`."""

import random
import statistics
import time

from xlie._kernels import pure

try:
    from xlie._kernels import _fast as fast
except ImportError:
    fast = None

REPEATS = 7


def random_rows(rng, nrows, ncols, p):
    return [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]


def timed(fn, *args, inner=1):
    best = []
    for _ in range(REPEATS):
        start = time.perf_counter()
        for _ in range(inner):
            fn(*args)
        best.append((time.perf_counter() - start) / inner)
    return statistics.median(best)


def bench_case(label, fn_name, args, inner):
    pure_t = timed(getattr(pure, fn_name), *args, inner=inner)
    if fast is None:
        print(f"{label:34} pure {pure_t * 1e6:9.1f} us   compiled unavailable")
        return
    fast_t = timed(getattr(fast, fn_name), *args, inner=inner)
    assert getattr(fast, fn_name)(*args) == getattr(pure, fn_name)(*args)
    print(f"{label:34} pure {pure_t * 1e6:9.1f} us   "
          f"compiled {fast_t * 1e6:9.1f} us   x{pure_t / fast_t:5.1f}")


def main():
    rng = random.Random(20240601)
    for p in (2, 10007):
        small = random_rows(rng, 6, 6, p)
        mid = random_rows(rng, 40, 40, p)
        big = random_rows(rng, 120, 120, p)
        bench_case(f"rref 6x6 mod {p}", "rref_mod", (small, p), inner=200)
        bench_case(f"rref 40x40 mod {p}", "rref_mod", (mid, p), inner=20)
        bench_case(f"rref 120x120 mod {p}", "rref_mod", (big, p), inner=2)
        a = random_rows(rng, 60, 60, p)
        b = random_rows(rng, 60, 60, p)
        bench_case(f"matmul 60x60 mod {p}", "matmul_mod", (a, b, p), inner=10)


if __name__ == "__main__":
    main()
