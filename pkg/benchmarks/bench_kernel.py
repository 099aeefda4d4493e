"""Compare the compiled product kernel with the pure-Python fallback.

    python benchmarks/bench_kernel.py [--N 2000] [--repeat 3]
"""
import argparse
import time

from partkit import _kernel_py
from partkit.partition import FamilyParams
from partkit.qseries import b_factors, e_factors

try:
    from partkit import _kernel
except ImportError:
    _kernel = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def cases(N):
    one = [1] + [0] * N
    yield f"partition numbers N={N}", one, [(k, -1) for k in range(1, N + 1)]
    for p, r, a, m, v in ((5, 2, 3, 3, 2), (11, 0, 1, 2, 4), (3, 1, 2, 3, 3)):
        fam = FamilyParams(p, r, a, m, v=min(v, p))
        yield f"gf_b p={p} r={r} a={a} m={m} v={v} N={N}", one, b_factors(fam, N, v)
    fam = FamilyParams(3, 2, 1, 2)
    yield f"gf_e p=3 r=2 a=1 m=2 N={N}", one, e_factors(fam, N)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--N", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if _kernel is None:
        print("compiled kernel not built; only the fallback is timed")
    print(f"{'case':45} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, coeffs, factors in cases(args.N):
        t_py, ref = best_of(lambda: _kernel_py.apply_factors(coeffs, factors), args.repeat)
        if _kernel is None:
            print(f"{name:45} {t_py:10.4f}")
            continue
        t_c, out = best_of(lambda: _kernel.apply_factors(coeffs, factors), args.repeat)
        assert out == ref, name
        print(f"{name:45} {t_py:10.4f} {t_c:11.4f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
