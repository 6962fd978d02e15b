"""Exact and big-float EGF coefficients a(n) = n! [x^n] exp(m e^(bx) + r e^(dx) + s).

Tables are normalized to a(0) = 1; the dropped constant e^(m+r+s) is carried
as the exact exponent ``params.prefactor_exponent``.

Differentiating F = exp(g) gives F' = g' F and hence

    a(n+1) = sum_{k=0}^{n} C(n,k) w_k a(n-k),   w_k = m b^(k+1) + r d^(k+1).

Exact mode clears denominators once so the inner loop is pure integer
arithmetic.  Float mode runs the same recurrence on c(n) = a(n)/n!, which
turns it into a plain convolution with u_k = w_k / k!.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import mpmath
from mpmath import mpf

from egfasym._bigint import mpz
from egfasym.errors import CapacityExceeded, ValidationError
from egfasym.numerics import PrecisionContext, mpf_rational
from egfasym.params import EgfParams

DEFAULT_MAX_TERMS = 100_000
TAYLOR_ORACLE_MAX = 24

EXACT = "exact"


@dataclass(frozen=True)
class Float:
    digits: int = 64


Mode = Union[str, Float]


@dataclass(frozen=True)
class CoeffTable:
    params: EgfParams
    mode: Mode
    values: tuple
    normalized: bool = True

    @property
    def exact(self) -> bool:
        return self.mode == EXACT

    @property
    def N(self) -> int:
        return len(self.values) - 1

    @property
    def prefactor_exponent(self) -> Fraction:
        return self.params.prefactor_exponent

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def format_value(self, v) -> str:
        if self.exact:
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return mpmath.nstr(v, self.mode.digits, strip_zeros=False)

    def rows(self) -> Iterator[tuple]:
        for n, v in enumerate(self.values):
            yield n, self.format_value(v)

    def iter_csv(self, header: bool = True) -> Iterator[str]:
        if header:
            yield "n,value"
        for n, v in self.rows():
            yield f"{n},{v}"

    def iter_jsonl(self) -> Iterator[str]:
        for n, v in self.rows():
            yield json.dumps({"n": n, "value": v})


def _weight(params: EgfParams, k: int) -> Fraction:
    return params.m * params.b ** (k + 1) + params.r * params.d ** (k + 1)


def _check_n(N, max_terms):
    if N < 0:
        raise ValidationError(f"N must be nonnegative, got {N}")
    if N > max_terms:
        raise CapacityExceeded(f"N={N} exceeds the configured limit {max_terms}")


def _exact_values(params: EgfParams, N: int) -> tuple:
    m, b, d, r = params.m, params.b, params.d, params.r
    L = math.lcm(m.denominator, r.denominator)
    E = math.lcm(b.denominator, d.denominator)
    D = L * E
    # With a(n) = A(n) / D^n and W_k = w_k * L * E^(k+1) integral, the
    # recurrence becomes A(n+1) = sum_k C(n,k) W_k L^k A(n-k).
    bn = mpz(b.numerator * (E // b.denominator))
    dn = mpz(d.numerator * (E // d.denominator))
    mn = mpz(m.numerator * (L // m.denominator))
    rn = mpz(r.numerator * (L // r.denominator))
    V = []
    bpow, dpow, lpow = bn, dn, mpz(1)
    for _ in range(N):
        V.append((mn * bpow + rn * dpow) * lpow)
        bpow *= bn
        dpow *= dn
        lpow *= L
    one = mpz(1)
    A = [one]
    row = [one]  # C(n, k) for the current n
    for n in range(N):
        if n:
            row = [one] + [row[k - 1] + row[k] for k in range(1, n)] + [one]
        A.append(sum(row[k] * V[k] * A[n - k] for k in range(n + 1)))
    if D == 1:
        return tuple(Fraction(int(v)) for v in A)
    return tuple(Fraction(int(v), D**n) for n, v in enumerate(A))


def _float_values(params: EgfParams, N: int, digits: int) -> tuple:
    ctx = PrecisionContext(digits)
    with ctx.working():
        u = []
        kfact = 1
        for k in range(N):
            if k:
                kfact *= k
            u.append(mpf_rational(_weight(params, k)) / kfact)
        c = [mpf(1)]
        for n in range(N):
            c.append(mpmath.fdot(u[: n + 1], c[n::-1]) / (n + 1))
        out = []
        nfact = mpf(1)
        for n, cn in enumerate(c):
            if n:
                nfact *= n
            out.append(cn * nfact)
    return tuple(ctx.round(v) for v in out)


def egf_coefficients(
    params: EgfParams, N: int, mode: Mode = EXACT, max_terms: int = DEFAULT_MAX_TERMS
) -> CoeffTable:
    """Normalized coefficient table a(0..N)."""
    _check_n(N, max_terms)
    if mode == EXACT:
        values = _exact_values(params, N)
    elif isinstance(mode, Float):
        values = _float_values(params, N, mode.digits)
    else:
        raise ValidationError(f"unknown mode {mode!r}")
    return CoeffTable(params, mode, values)


def taylor_oracle(params: EgfParams, N: int) -> CoeffTable:
    """a(0..N) by summing exp(h) = sum_j h^j / j! over the truncated inner
    series h(x) = sum_{k>=1} (m b^k + r d^k) x^k / k!.

    Shares no code with the recurrence; meant for N <= 24.
    """
    if not 0 <= N <= TAYLOR_ORACLE_MAX:
        raise ValidationError(f"taylor_oracle supports 0 <= N <= {TAYLOR_ORACLE_MAX}")
    m, b, d, r = params.m, params.b, params.d, params.r
    h = [Fraction(0)] + [
        (m * b**k + r * d**k) / math.factorial(k) for k in range(1, N + 1)
    ]
    result = [Fraction(0)] * (N + 1)
    result[0] = Fraction(1)
    power = [Fraction(1)] + [Fraction(0)] * N  # h^j, truncated
    for j in range(1, N + 1):
        power = [
            sum((power[i] * h[k - i] for i in range(k)), Fraction(0)) for k in range(N + 1)
        ]
        jfact = math.factorial(j)
        for k in range(N + 1):
            result[k] += power[k] / jfact
    values = tuple(result[k] * math.factorial(k) for k in range(N + 1))
    return CoeffTable(params, EXACT, values)
