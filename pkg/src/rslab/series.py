"""
Truncated formal power series in u, exact coefficients, and the closed-form
exponential generating functions for the descent/peak statistics.

Coefficient rings in use:

- ``Fraction`` for plain numeric series (e^u, tan u, ...);
- ``Poly`` (polynomials in t over the rationals);
- ``SqrtExt`` = Poly[s]/(s^2 - base(t)), a rank-2 module over Poly used to
  expand expressions in sqrt(t-1) or sqrt(t).  Division is only performed
  after splitting numerator and denominator into their s-even/s-odd parts;
  a quotient whose parity does not line up is rejected rather than
  approximated.

Everything is truncated at a fixed order (default 12) and all arithmetic
is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .polynomials import Poly, run_count_triangle, peak_poly

DEFAULT_ORDER = 12


class Series:
    """Power series in u truncated at a fixed order; coeffs[i] is [u^i]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def _check(self, other: "Series") -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("series truncated at different orders")

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "Series") -> "Series":
        self._check(other)
        n = len(self.coeffs)
        out = []
        for m in range(n):
            acc = self.coeffs[0] * other.coeffs[m]
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * other.coeffs[m - i]
            out.append(acc)
        return Series(out)

    def scale(self, c) -> "Series":
        return Series([a * c for a in self.coeffs])

    def map(self, fn: Callable) -> "Series":
        return Series([fn(a) for a in self.coeffs])

    def __repr__(self) -> str:
        return f"Series({self.coeffs!r})"


def series_exp(a: Series, one) -> Series:
    """exp of a series with zero constant term (b' = a'b coefficient-wise)."""
    zero = a.coeffs[0] - a.coeffs[0]
    if a.coeffs[0] != zero:
        raise ValueError("series_exp needs a zero constant term")
    out = [one]
    for n in range(1, len(a.coeffs)):
        acc = zero
        for k in range(1, n + 1):
            acc = acc + (a.coeffs[k] * out[n - k]) * k
        out.append(acc / n)
    return Series(out)


def series_div(f: Series, g: Series, one) -> Series:
    """f/g for a denominator with unit constant term equal to ``one``."""
    f._check(g)
    if g.coeffs[0] != one:
        raise ValueError("series_div expects a denominator with constant term one")
    out = []
    for n in range(len(f.coeffs)):
        acc = f.coeffs[n]
        for i in range(n):
            acc = acc - out[i] * g.coeffs[n - i]
        out.append(acc)
    return Series(out)


def exp_u(order: int) -> Series:
    return Series([Fraction(1, factorial(i)) for i in range(order + 1)])


def tan_u(order: int) -> Series:
    """tan u = sin u / cos u, exact."""
    sin = [Fraction(0)] * (order + 1)
    cos = [Fraction(0)] * (order + 1)
    for m in range(0, order + 1):
        if m % 2 == 1:
            sin[m] = Fraction((-1) ** ((m - 1) // 2), factorial(m))
        else:
            cos[m] = Fraction((-1) ** (m // 2), factorial(m))
    return series_div(Series(sin), Series(cos), Fraction(1))


@dataclass(frozen=True)
class SqrtExt:
    """even(t) + s*odd(t) with s^2 = base(t)."""

    even: Poly
    odd: Poly
    base: Poly

    def _same(self, other: "SqrtExt") -> None:
        if self.base != other.base:
            raise ValueError("mixed square-root extensions")

    def __add__(self, other: "SqrtExt") -> "SqrtExt":
        self._same(other)
        return SqrtExt(self.even + other.even, self.odd + other.odd, self.base)

    def __sub__(self, other: "SqrtExt") -> "SqrtExt":
        self._same(other)
        return SqrtExt(self.even - other.even, self.odd - other.odd, self.base)

    def __mul__(self, other: "SqrtExt") -> "SqrtExt":
        self._same(other)
        even = self.even * other.even + self.base * self.odd * other.odd
        odd = self.even * other.odd + self.odd * other.even
        return SqrtExt(even, odd, self.base)

    def __truediv__(self, scalar) -> "SqrtExt":
        return SqrtExt(self.even / scalar, self.odd / scalar, self.base)

    def is_odd_pure(self) -> bool:
        return self.even.is_zero()

    def is_even_pure(self) -> bool:
        return self.odd.is_zero()


def _odd_parts(s: Series) -> Series:
    """Project a SqrtExt-coefficient series onto its s-odd components,
    rejecting any non-zero even component."""
    for c in s.coeffs:
        if not c.is_odd_pure():
            raise ValueError("series has a non-cancelling s-even component")
    return Series([c.odd for c in s.coeffs])


def _poly_series(s: Series) -> Series:
    """Promote a Fraction-coefficient series to Poly constants."""
    return s.map(lambda c: Poly.const(c))


# ---------------------------------------------------------------------------
# Closed-form EGFs
# ---------------------------------------------------------------------------

def egf_runsorted_descents(order: int = DEFAULT_ORDER) -> Series:
    """
    e^u * exp(t*(e^u - u - 1)): the coefficient of u^n, multiplied by n!,
    is the descent polynomial of the run-sorted permutations of [n+1].
    """
    one = Poly.const(1)
    e = _poly_series(exp_u(order))
    inner_scalar = exp_u(order)
    inner_scalar.coeffs[0] -= 1
    if order >= 1:
        inner_scalar.coeffs[1] -= 1
    inner = Series([Poly([0, c]) for c in inner_scalar.coeffs])  # t * (e^u-u-1)
    return e * series_exp(inner, one)


def egf_runsorted_report(order: int = DEFAULT_ORDER) -> dict:
    g = egf_runsorted_descents(order)
    mismatches = []
    for n in range(order + 1):
        want = Poly(run_count_triangle(n + 1)[n])
        got = g.coeffs[n] * factorial(n)
        if got != want:
            mismatches.append({"n": n, "got": got.to_json(), "want": want.to_json()})
    return {"order": order, "ok": not mismatches, "mismatches": mismatches}


def sheffer_product_check(order: int = DEFAULT_ORDER) -> dict:
    """
    Verify that the series assembled from the run-count recurrence equals
    the product form P(u) * exp(t*Q(u)) with P = e^u and Q = e^u - u - 1.

    Note: Q has no linear term, so the pair falls outside the classical
    normalisation P(0) != 0, Q'(0) != 0 even though the product identity
    itself holds; the report records both facts.
    """
    product = egf_runsorted_descents(order)
    triangle = run_count_triangle(order + 1)
    assembled = Series(
        [Poly(triangle[n]) / factorial(n) for n in range(order + 1)]
    )
    q_linear = Fraction(1, 1) - 1  # [u^1] of e^u - u - 1
    return {
        "order": order,
        "identity_holds": product == assembled,
        "p_constant_nonzero": True,
        "q_linear_coefficient_zero": q_linear == 0,
    }


def egf_peaks(order: int = DEFAULT_ORDER) -> Series:
    """
    tan(u*s) / (s - tan(u*s)) with s^2 = t - 1, expanded so that every
    coefficient is an honest polynomial in t; n! times the coefficient of
    u^n is the peak polynomial of S_n.
    """
    base = Poly([-1, 1])  # t - 1
    tanc = tan_u(order)
    zero = Poly()

    def tan_us_coeff(j: int) -> SqrtExt:
        if j % 2 == 0:
            return SqrtExt(zero, zero, base)
        return SqrtExt(zero, base ** ((j - 1) // 2) * tanc.coeffs[j], base)

    tan_us = Series([tan_us_coeff(j) for j in range(order + 1)])
    s_elt = Series(
        [SqrtExt(zero, Poly.const(1) if j == 0 else zero, base) for j in range(order + 1)]
    )
    num = _odd_parts(tan_us)
    den = _odd_parts(s_elt - tan_us)
    return series_div(num, den, Poly.const(1))


def egf_peaks_report(order: int = DEFAULT_ORDER) -> dict:
    """The tan form starts at u^1 (its constant term is 0), so n >= 1."""
    g = egf_peaks(order)
    mismatches = []
    for n in range(1, order + 1):
        want = peak_poly(n)
        got = g.coeffs[n] * factorial(n)
        if got != want:
            mismatches.append({"n": n, "got": got.to_json(), "want": want.to_json()})
    return {
        "order": order,
        "ok": not mismatches and g.coeffs[0].is_zero(),
        "mismatches": mismatches,
    }


def expected_peaks_series(order: int = DEFAULT_ORDER) -> list[Fraction]:
    """
    The t-derivative of the peak EGF at t = 1; the coefficient of u^n is
    the expected number of peaks of a uniform permutation of [n], and the
    whole series equals u^3 / (3 (u-1)^2).
    """
    g = egf_peaks(order)
    means = [c.derivative()(Fraction(1)) for c in g.coeffs]
    closed = [Fraction(0)] * (order + 1)
    for n in range(3, order + 1):
        closed[n] = Fraction(n - 2, 3)
    if means != closed:
        raise AssertionError("t-derivative at 1 does not match u^3/(3(u-1)^2)")
    return means


def egf_binary_descents(order: int = DEFAULT_ORDER) -> Series:
    """
    e^u * (sinh(r u) + r*((t-1)(u+1) + cosh(r u))) / (t * r) with r^2 = t;
    n! times the coefficient of u^n is the descent-after-runsort polynomial
    of length-n binary words.
    """
    base = Poly.t()
    zero = Poly()

    def elt(even: Poly, odd: Poly) -> SqrtExt:
        return SqrtExt(even, odd, base)

    sinh = Series(
        [
            elt(zero, base ** ((j - 1) // 2) / factorial(j)) if j % 2 else elt(zero, zero)
            for j in range(order + 1)
        ]
    )
    cosh_even = [
        base ** (j // 2) / factorial(j) if j % 2 == 0 else zero
        for j in range(order + 1)
    ]
    tminus1 = Poly([-1, 1])
    extra = [tminus1, tminus1] + [zero] * (order - 1)  # (t-1)*(u+1)
    r_times = Series(
        [elt(zero, cosh_even[j] + extra[j]) for j in range(order + 1)]
    )
    numerator = _odd_parts(sinh + r_times)
    over_t = numerator.map(lambda p: p.exact_div(Poly.t()))
    return _poly_series(exp_u(order)) * over_t


def egf_binary_report(order: int = DEFAULT_ORDER) -> dict:
    from .binwords import binary_descent_poly

    g = egf_binary_descents(order)
    mismatches = []
    for n in range(order + 1):
        want = binary_descent_poly(n)
        got = g.coeffs[n] * factorial(n)
        if got != want:
            mismatches.append({"n": n, "got": got.to_json(), "want": want.to_json()})
    return {"order": order, "ok": not mismatches, "mismatches": mismatches}
