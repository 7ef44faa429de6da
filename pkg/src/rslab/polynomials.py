"""
Exact univariate and sparse multivariate polynomial arithmetic, plus the
descent- and peak-counting polynomial families built on top of it.

Coefficients are Python ints or ``fractions.Fraction``; nothing here ever
rounds.  Univariate polynomials are dense (degrees stay small), the
multivariate ones are sparse maps from exponent vectors to coefficients.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Sequence

from . import perms

Scalar = int | Fraction


def _trim(coeffs: list[Scalar]) -> tuple[Scalar, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """
    Dense univariate polynomial; ``coeffs[i]`` is the coefficient of t^i.

    >>> Poly([1, 11, 3]).human()
    '3t^2+11t+1'
    >>> (Poly.t() * Poly([1, 1])).coeffs
    (0, 1, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(list(coeffs))

    @staticmethod
    def t() -> "Poly":
        return Poly([0, 1])

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly([c])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-other if isinstance(other, Poly) else Poly.const(-other))

    def __rsub__(self, other) -> "Poly":
        return Poly.const(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        out: list[Scalar] = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Poly":
        return Poly([Fraction(c) / scalar for c in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift_up(self, k: int = 1) -> "Poly":
        """Multiply by t^k."""
        return Poly([0] * k + list(self.coeffs))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Exact rational Euclidean division."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = [Fraction(c) for c in self.coeffs]
        div = [Fraction(c) for c in other.coeffs]
        dq = len(rem) - len(div)
        quo = [Fraction(0)] * (dq + 1 if dq >= 0 else 0)
        lead = div[-1]
        for i in range(dq, -1, -1):
            c = rem[i + len(div) - 1] / lead
            quo[i] = c
            if c:
                for j, d in enumerate(div):
                    rem[i + j] -= c * d
        return Poly(quo), Poly(rem[: len(div) - 1])

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{self.human()} is not divisible by {other.human()}")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Poly([Fraction(c, 1) / lead for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def square_free(self) -> "Poly":
        if self.degree <= 0:
            return self.monic()
        return self.exact_div(self.gcd(self.derivative())).monic()

    def human(self, var: str = "t") -> str:
        """Descending-degree ASCII rendering, e.g. ``3t^2+11t+1``."""
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                v = var if i == 1 else f"{var}^{i}"
                body = v if mag == 1 else f"{mag}{v}"
            parts.append(sign + body)
        return "".join(parts)

    def to_json(self) -> list:
        """Ascending coefficient list (ints where possible, else [num, den])."""
        out: list = []
        for c in self.coeffs:
            if isinstance(c, Fraction):
                out.append(int(c) if c.denominator == 1 else [c.numerator, c.denominator])
            else:
                out.append(c)
        return out

    def __repr__(self) -> str:
        return f"Poly({self.human()})"


Monomial = tuple[tuple[int, int], ...]  # sorted ((var, exp), ...), exp >= 1


def monomial_from_set(vars_: Iterable[int]) -> Monomial:
    return tuple((v, 1) for v in sorted(vars_))


class MPoly:
    """
    Sparse multivariate polynomial over the integers (or Fractions);
    variables are indexed by positive integers.  The zero coefficient is
    never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self.terms: dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = c

    @staticmethod
    def const(c: Scalar) -> "MPoly":
        return MPoly({(): c})

    @staticmethod
    def from_set(vars_: Iterable[int], coeff: Scalar = 1) -> "MPoly":
        return MPoly({monomial_from_set(vars_): coeff})

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPoly(out)

    def __sub__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) - c
        return MPoly(out)

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            return MPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                d = dict(d1)
                for v, e in m2:
                    d[v] = d.get(v, 0) + e
                key = tuple(sorted(d.items()))
                out[key] = out.get(key, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def relabel(self, mapping: Mapping[int, int]) -> "MPoly":
        out: dict[Monomial, Scalar] = {}
        for m, c in self.terms.items():
            key = tuple(sorted((mapping[v], e) for v, e in m))
            out[key] = out.get(key, 0) + c
        return MPoly(out)

    def specialize(self) -> Poly:
        """Send every variable to t."""
        out: dict[int, Scalar] = {}
        for m, c in self.terms.items():
            d = sum(e for _, e in m)
            out[d] = out.get(d, 0) + c
        size = max(out) + 1 if out else 0
        return Poly([out.get(i, 0) for i in range(size)])

    def ray_restriction(self, lam: Sequence[Scalar]) -> Poly:
        """
        Substitute x_i -> lam[i-1] * t, giving a univariate polynomial.
        ``lam`` must cover every variable appearing here.
        """
        out: dict[int, Scalar] = {}
        for m, c in self.terms.items():
            d = 0
            for v, e in m:
                if v > len(lam):
                    raise ValueError(f"no ray weight supplied for x_{v}")
                c = c * lam[v - 1] ** e
                d += e
            out[d] = out.get(d, 0) + c
        size = max(out) + 1 if out else 0
        return Poly([out.get(i, 0) for i in range(size)])

    def to_json(self) -> list[dict]:
        items = sorted(self.terms.items())
        return [{"exponents": [list(p) for p in m], "coeff": c} for m, c in items]

    def __repr__(self) -> str:
        def mono(m):
            return "".join(f"x{v}" + (f"^{e}" if e > 1 else "") for v, e in m) or "1"

        return "MPoly(" + " + ".join(f"{c}*{mono(m)}" for m, c in sorted(self.terms.items())) + ")"


# ---------------------------------------------------------------------------
# Descent polynomials of run-sorted permutations
# ---------------------------------------------------------------------------

def run_count_triangle(n_max: int) -> list[list[int]]:
    """
    Triangle ``f[n][k-1]`` = number of run-sorted permutations of [n] with
    exactly k runs, for 1 <= n <= n_max, from the two-term recurrence
    f(n,k) = k*f(n-1,k) + (n-2)*f(n-2,k-1).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows: list[list[int]] = [[1]]  # n = 1
    if n_max >= 2:
        rows.append([1])
    for n in range(3, n_max + 1):
        width = (n + 1) // 2
        prev, prev2 = rows[n - 2], rows[n - 3]
        row = []
        for k in range(1, width + 1):
            a = prev[k - 1] if k - 1 < len(prev) else 0
            b = prev2[k - 2] if 0 <= k - 2 < len(prev2) else 0
            row.append(k * a + (n - 2) * b)
        rows.append(row)
    return rows


def runsorted_descent_poly(n: int) -> Poly:
    """
    Descent generating polynomial of the run-sorted permutations of [n]:
    coefficient of t^d counts those with d descents.
    """
    row = run_count_triangle(n)[n - 1]
    return Poly(row)  # k runs <-> k-1 descents, so the row is already aligned


def run_count_poly(n: int) -> Poly:
    """
    Run-count generating polynomial R with coefficient of t^k counting
    run-sorted permutations of [n] with k runs; computed independently
    through the derivative recurrence R_n = t R'_{n-1} + t (n-2) R_{n-2}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t = Poly.t()
    r_prev2, r_prev = t, t  # n = 1 and n = 2
    if n <= 2:
        return t
    for m in range(3, n + 1):
        r_new = t * r_prev.derivative() + (m - 2) * t * r_prev2
        r_prev2, r_prev = r_prev, r_new
    return r_prev


@lru_cache(maxsize=None)
def descent_multivar_from_end(n: int, method: str = "reck") -> MPoly:
    """
    Multivariate descent-set polynomial of run-sorted permutations of [n]
    with descent positions indexed from the *end* of the word: the word
    with descent set D contributes the monomial prod_{j in D} x_{n-j}.

    Three interchangeable routes (used to cross-check each other):

    - "rec1": peel the first run; weight (C(n-1, i) - 1).
    - "reck": split on whether 1 and 2 share a run; weight C(n-2, i-1).
    - "enum": direct summation over the run-sorted permutations.
    """
    if method == "enum":
        out = MPoly()
        for p in perms.enumerate_runsorted(n):
            out = out + MPoly.from_set({n - j for j in perms.descent_set(p)})
        return out
    if method == "rec1":
        out = MPoly.const(1)
        for i in range(1, n - 1):
            w = comb(n - 1, i) - 1
            out = out + MPoly.from_set([i], w) * descent_multivar_from_end(i, "rec1")
        return out
    if method == "reck":
        if n == 1:
            return MPoly.const(1)
        out = descent_multivar_from_end(n - 1, "reck")
        for i in range(1, n - 1):
            w = comb(n - 2, i - 1)
            out = out + MPoly.from_set([i], w) * descent_multivar_from_end(i, "reck")
        return out
    raise ValueError(f"unknown method {method!r}")


def descent_multivar(n: int) -> MPoly:
    """
    Multivariate descent-set polynomial of run-sorted permutations of [n]
    with *absolute* descent positions: each word contributes
    prod_{j in DES} x_j.  This is the same-phase-stability test subject.
    """
    out = MPoly()
    for p in perms.enumerate_runsorted(n):
        out = out + MPoly.from_set(perms.descent_set(p))
    return out


# ---------------------------------------------------------------------------
# Eulerian polynomials
# ---------------------------------------------------------------------------

def eulerian_poly(n: int) -> Poly:
    """Descent generating polynomial of all of S_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    row = [1]
    for m in range(2, n + 1):
        new = [0] * m
        for k, c in enumerate(row):
            new[k] += (k + 1) * c
            new[k + 1] += (m - 1 - k) * c
        while new and new[-1] == 0:
            new.pop()
        row = new
    return Poly(row)


def eulerian_multivar(n: int) -> MPoly:
    """Multivariate Eulerian polynomial: sum over S_n of prod_{j in DES} x_j."""
    out: dict[Monomial, Scalar] = {}
    for p in perms.enumerate_sn(n):
        key = monomial_from_set(perms.descent_set(p))
        out[key] = out.get(key, 0) + 1
    return MPoly(out)


# ---------------------------------------------------------------------------
# Peak polynomials
# ---------------------------------------------------------------------------

def peak_triangle(n_max: int) -> list[list[int]]:
    """
    Triangle ``b[n][k]`` = number of permutations of [n] with k peaks,
    via the insertion recurrence
    b(n,k) = (2k+2) b(n-1,k) + (n-2k) b(n-1,k-1).
    """
    rows = [[1]]
    for n in range(2, n_max + 1):
        prev = rows[-1]
        width = (n + 1) // 2  # k ranges over 0 .. ceil(n/2)-1
        row = []
        for k in range(width):
            a = prev[k] if k < len(prev) else 0
            b = prev[k - 1] if 0 <= k - 1 < len(prev) else 0
            row.append((2 * k + 2) * a + (n - 2 * (k - 1) - 2) * b)
        while row and row[-1] == 0:
            row.pop()
        rows.append(row)
    return rows


def peak_poly(n: int, method: str = "insertion") -> Poly:
    """
    Peak generating polynomial of S_n: coefficient of t^k counts the
    permutations with k peaks.

    Methods: "insertion" (triangle recurrence), "derivative"
    (B_n = (2 + t(n-2)) B_{n-1} + 2t(1-t) B'_{n-1}), "enum".
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if method == "insertion":
        return Poly(peak_triangle(n)[n - 1])
    if method == "derivative":
        b = Poly.const(1)
        t = Poly.t()
        for m in range(2, n + 1):
            b = (Poly.const(2) + (m - 2) * t) * b + 2 * t * (1 - t) * b.derivative()
        return b
    if method == "enum":
        counts: dict[int, int] = {}
        for p in perms.enumerate_sn(n):
            k = perms.peaks(p)
            counts[k] = counts.get(k, 0) + 1
        return Poly([counts.get(i, 0) for i in range(max(counts) + 1)])
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def peak_multivar(n: int, method: str = "recursion") -> MPoly:
    """
    Multivariate peak-value polynomial of S_n: each permutation
    contributes prod of x_v over its peak values v.

    "recursion" places the letter n at every position: at either border it
    contributes 2*previous, and as a peak at position k it splits the
    remaining letters into an ordered pair of smaller instances on
    complementary variable sets.
    """
    if method == "enum":
        out: dict[Monomial, Scalar] = {}
        for p in perms.enumerate_sn(n):
            key = monomial_from_set(perms.peak_values(p))
            out[key] = out.get(key, 0) + 1
        return MPoly(out)
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    if n == 1:
        return MPoly.const(1)
    out = 2 * peak_multivar(n - 1, "recursion")
    xn = MPoly.from_set([n])
    universe = list(range(1, n))
    for k in range(2, n):
        left_size = k - 1
        for T in itertools.combinations(universe, left_size):
            rest = [v for v in universe if v not in T]
            left = peak_multivar(left_size, "recursion").relabel(
                {i + 1: T[i] for i in range(left_size)}
            )
            right = peak_multivar(n - k, "recursion").relabel(
                {i + 1: rest[i] for i in range(n - k)}
            )
            out = out + xn * left * right
    return out

