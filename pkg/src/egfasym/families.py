"""Named OEIS sequences with known (m, b, d, r, s)."""

from fractions import Fraction

from egfasym.params import EgfParams, validate

KNOWN = {
    "A143405": ("exp(exp(x)*(exp(x)-1))", (1, 2, 1, -1, 0)),
    "A355291": ("exp(exp(x)*(exp(x)+1)-2)", (1, 2, 1, 1, -2)),
    "A002872": ("exp((exp(2x)-3)/2+exp(x))", (Fraction(1, 2), 2, 1, 1, Fraction(-3, 2))),
    "A002874": ("exp((exp(3x)-4)/3+exp(x))", (Fraction(1, 3), 3, 1, 1, Fraction(-4, 3))),
}

# Related sequences whose e.g.f. parameters have not been transcribed yet;
# verify them by passing --m/--b/--d/--r/--s explicitly.
UNMAPPED = tuple(f"A0360{k}" for k in range(74, 83))


def lookup(anum: str) -> EgfParams:
    anum = anum.strip().upper()
    if anum not in KNOWN:
        hint = " (parameters not tabulated; pass them explicitly)" if anum in UNMAPPED else ""
        raise KeyError(f"no built-in parameters for {anum}{hint}")
    return validate(*KNOWN[anum][1])
