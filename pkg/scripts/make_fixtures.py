"""Regenerate the bundled b-file fixtures in src/egfasym/fixtures/.

The sandbox these were built in could not reach oeis.org, so the fixtures are
computed here from a closed form that shares nothing with the package's
recurrence:

    exp(m(e^(bx) - 1)) has e.g.f. coefficients b^n T_n(m),
    T_n(m) = sum_k S(n, k) m^k   (Touchard polynomials, S = Stirling 2nd kind)

and a(n) is the binomial convolution of the b- and d-parts.  Running this
script does not import egfasym.  Replace the files with real downloads
(``egfasym verify --oeis ...`` caches them) whenever network access exists.
"""

import argparse
from fractions import Fraction
from math import comb
from pathlib import Path

FAMILIES = {
    "A143405": (1, 2, 1, -1, 0),
    "A355291": (1, 2, 1, 1, -2),
    "A002872": (Fraction(1, 2), 2, 1, 1, Fraction(-3, 2)),
    "A002874": (Fraction(1, 3), 3, 1, 1, Fraction(-4, 3)),
}


def stirling2_rows(N):
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + k * (prev[k] if k < len(prev) else 0)
        rows.append(row)
    return rows


def touchard(rows, x):
    return [sum(Fraction(s) * Fraction(x) ** k for k, s in enumerate(row)) for row in rows]


def terms(m, b, d, r, s, N):
    assert m + r + s == 0, "fixtures assume e^(m+r+s) = 1"
    rows = stirling2_rows(N)
    tm, tr = touchard(rows, m), touchard(rows, r)
    out = []
    for n in range(N + 1):
        v = sum(comb(n, j) * Fraction(b) ** j * tm[j] * Fraction(d) ** (n - j) * tr[n - j] for j in range(n + 1))
        assert v.denominator == 1
        out.append(v.numerator)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=500)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src" / "egfasym" / "fixtures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for anum, params in FAMILIES.items():
        values = terms(*params, args.terms)
        path = args.out / f"b{anum[1:]}.txt"
        with open(path, "w") as fh:
            fh.write(f"# {anum}: a(0..{args.terms}), offset 0\n")
            fh.write("# Computed offline by scripts/make_fixtures.py (Touchard-polynomial convolution),\n")
            fh.write("# not downloaded from oeis.org.\n")
            for n, v in enumerate(values):
                fh.write(f"{n} {v}\n")
        print(path)


if __name__ == "__main__":
    main()
