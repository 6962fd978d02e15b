"""Time the exact recurrence with gmpy2 integers against plain Python ints,
and the big-float path for comparison.

    python benchmarks/bench_backends.py --terms 500 1000 2000
"""

import argparse
import time

import egfasym.series as series
from egfasym.families import lookup
from egfasym.series import Float, egf_coefficients


def timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--oeis", default="A143405")
    ap.add_argument("--terms", type=int, nargs="+", default=[250, 500, 1000])
    ap.add_argument("--digits", type=int, default=64)
    args = ap.parse_args()
    params = lookup(args.oeis)
    fast_mpz = series.mpz
    print(f"{args.oeis}  backend={series.mpz.__module__ if series.mpz is not int else 'python'}")
    print(f"{'N':>6} {'gmpy2 s':>9} {'python s':>9} {'speedup':>8} {'float s':>9}")
    for n in args.terms:
        series.mpz = fast_mpz
        t_fast = timed(lambda: egf_coefficients(params, n))
        series.mpz = int
        t_py = timed(lambda: egf_coefficients(params, n))
        series.mpz = fast_mpz
        t_float = timed(lambda: egf_coefficients(params, n, Float(args.digits)))
        print(f"{n:>6} {t_fast:>9.3f} {t_py:>9.3f} {t_py / t_fast:>8.2f} {t_float:>9.3f}")


if __name__ == "__main__":
    main()
