"""
Exact real-root machinery: Sturm counts, interval isolation, interlacing
verdicts, and the sampled same-phase stability harness.

No floating point enters any verdict; floats appear only as human-readable
annotations inside reports.  Roots are handled as exact rationals or as
open-closed rational intervals containing exactly one root, refined on
demand until every needed comparison is unambiguous (shared roots are
recognised exactly through gcds, so refinement always terminates).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .polynomials import MPoly, Poly
from .prng import SplitMix64, rational_in_0_10

NEG_INF = "-inf"
POS_INF = "+inf"
Endpoint = Fraction | Literal["-inf", "+inf"]


def sturm_chain(p: Poly) -> list[Poly]:
    """Canonical Sturm chain p, p', then negated remainders down to the gcd."""
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(-rem)
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _sign_at(p: Poly, x: Endpoint) -> int:
    if p.is_zero():
        return 0
    if x == POS_INF:
        lead = p.coeffs[-1]
        return 1 if lead > 0 else -1
    if x == NEG_INF:
        lead = p.coeffs[-1]
        s = 1 if lead > 0 else -1
        return s if p.degree % 2 == 0 else -s
    v = p(x)
    return 0 if v == 0 else (1 if v > 0 else -1)


def _variations(chain: Sequence[Poly], x: Endpoint) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_real_roots(p: Poly, lo: Endpoint = NEG_INF, hi: Endpoint = POS_INF) -> int:
    """
    Number of distinct real roots of p in the half-open interval (lo, hi],
    by Sturm's theorem (multiple roots counted once; p(lo) must not vanish
    when lo is finite, which the callers arrange).
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root count")
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def is_real_rooted(p: Poly) -> bool:
    """True iff the square-free part has as many distinct real roots as
    its degree."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    q = p.square_free()
    return count_real_roots(q) == q.degree


def root_bound(p: Poly) -> Fraction:
    """Cauchy bound: every real root lies in [-B, B]."""
    lead = abs(Fraction(p.coeffs[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass
class IsolatedRoot:
    """One distinct real root: an exact rational or an isolating interval
    (lo, hi] on which the square-free part has exactly one sign change;
    interval endpoints are never roots."""

    kind: Literal["point", "interval"]
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    def approx(self) -> float:
        return float(self.lo) if self.kind == "point" else float((self.lo + self.hi) / 2)


@dataclass
class RootIsolation:
    poly: Poly
    square_free: Poly
    roots: list[IsolatedRoot] = field(default_factory=list)  # ascending


def _bisect_once(q: Poly, r: IsolatedRoot) -> IsolatedRoot:
    """Halve an isolating interval (possibly collapsing to an exact point)."""
    if r.kind == "point":
        return r
    mid = (r.lo + r.hi) / 2
    if q(mid) == 0:
        return IsolatedRoot("point", mid, mid, r.multiplicity)
    if count_real_roots(q, r.lo, mid) == 1:
        return IsolatedRoot("interval", r.lo, mid, r.multiplicity)
    return IsolatedRoot("interval", mid, r.hi, r.multiplicity)


def isolate_real_roots(p: Poly, width: Fraction | None = None) -> RootIsolation:
    """
    Disjoint isolating intervals (or exact points) for the distinct real
    roots of p, each labelled with its multiplicity; optionally refined
    until intervals are narrower than ``width``.
    """
    q = p.square_free()
    out = RootIsolation(poly=p, square_free=q)
    total = count_real_roots(q)
    if total == 0:
        return out
    bound = root_bound(q)
    lo, hi = -bound - 1, bound
    stack = [(lo, hi, total)]
    found: list[IsolatedRoot] = []
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            found.append(IsolatedRoot("interval", a, b))
            continue
        # pick a split point that is not itself a root, so every interval
        # we ever count over has non-root endpoints
        mid = (a + b) / 2
        step = (b - a) / 4
        while q(mid) == 0:
            mid = mid + step
            step = step / 2
        left = count_real_roots(q, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    # multiplicities through the repeated-gcd chain
    layers = [p.monic()]
    while layers[-1].degree > 0:
        nxt = layers[-1].gcd(layers[-1].derivative())
        if nxt.degree == 0:
            break
        layers.append(nxt)
    for r in found:
        mult = 1
        for layer in layers[1:]:
            if r.kind == "point":
                inside = layer(r.lo) == 0
            else:
                inside = count_real_roots(layer, r.lo, r.hi) >= 1
            if inside:
                mult += 1
            else:
                break
        r.multiplicity = mult
    found.sort(key=lambda r: (r.lo, r.hi))
    if width is not None:
        for i, r in enumerate(found):
            while r.kind == "interval" and r.hi - r.lo > width:
                r = _bisect_once(q, r)
            found[i] = r
    out.roots = found
    return out


def _compare_roots(
    rf: IsolatedRoot, qf: Poly, rg: IsolatedRoot, qg: Poly, common: Poly
) -> int:
    """Exact sign of (root_f - root_g); ``common`` = gcd of the square-free
    parts, whose roots are the shared ones."""
    while True:
        if rf.kind == "point" and rg.kind == "point":
            return (rf.lo > rg.lo) - (rf.lo < rg.lo)
        if rf.kind == "point":
            x = rf.lo
            if x <= rg.lo:
                return -1  # the g-root lies strictly above rg.lo
            if x >= rg.hi:
                return 1  # rg.hi is not a root, so the g-root is below it
            if qg(x) == 0:
                return 0
            return 1 if count_real_roots(qg, rg.lo, x) == 1 else -1
        if rg.kind == "point":
            return -_compare_roots(rg, qg, rf, qf, common)
        if rf.hi <= rg.lo:
            return -1
        if rg.hi <= rf.lo:
            return 1
        # overlapping intervals: equal iff both trap the same shared root
        if common.degree >= 1:
            inter_lo = max(rf.lo, rg.lo)
            inter_hi = min(rf.hi, rg.hi)
            if (
                count_real_roots(common, rf.lo, rf.hi) == 1
                and count_real_roots(common, rg.lo, rg.hi) == 1
                and inter_lo < inter_hi
                and count_real_roots(common, inter_lo, inter_hi) == 1
            ):
                return 0
        rf = _bisect_once(qf, rf)
        rg = _bisect_once(qg, rg)


@dataclass
class InterlaceReport:
    f: Poly
    g: Poly
    verdict: bool
    reason: str
    witness: list[tuple[str, float]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": [[tag, x] for tag, x in self.witness],
        }


def _positive_root_count(p: Poly) -> int:
    """Distinct roots in (0, +inf); strips any root at the origin first so
    the Sturm endpoint is never itself a root."""
    q = p
    while q.degree > 0 and q[0] == 0:
        q = Poly(q.coeffs[1:])
    if q.degree == 0:
        return 0
    return count_real_roots(q, Fraction(0), POS_INF)


def interlaces(f: Poly, g: Poly) -> InterlaceReport:
    """
    Weak interlacing verdict: with the roots of f and g listed in
    decreasing order (with multiplicity) the chain

        g_1 >= f_1 >= g_2 >= f_2 >= ...

    must hold, all roots must be real and non-positive, the leading
    coefficients positive, and the degrees may differ by at most one.
    """
    for name, p in (("f", f), ("g", g)):
        if p.is_zero():
            raise ValueError(f"{name} is the zero polynomial")
        if p.coeffs[-1] <= 0:
            raise ValueError(f"{name} must have a positive leading coefficient")
        if not is_real_rooted(p):
            raise ValueError(f"{name} is not real-rooted (is_real_rooted failed)")
        if _positive_root_count(p) > 0:
            raise ValueError(f"{name} has a root above 0")
    if abs(f.degree - g.degree) > 1:
        return InterlaceReport(f, g, False, "degrees differ by more than one")

    iso_f = isolate_real_roots(f)
    iso_g = isolate_real_roots(g)
    common = f.square_free().gcd(g.square_free())

    def expanded(iso: RootIsolation) -> list[IsolatedRoot]:
        out: list[IsolatedRoot] = []
        for r in reversed(iso.roots):  # descending
            out.extend([r] * r.multiplicity)
        return out

    F = expanded(iso_f)
    G = expanded(iso_g)

    def le(a: IsolatedRoot, pa: Poly, b: IsolatedRoot, pb: Poly) -> bool:
        return _compare_roots(a, pa, b, pb, common) <= 0

    qf, qg = iso_f.square_free, iso_g.square_free
    # The longer root list takes the outer chain positions; for equal
    # lengths g sits on top, matching the one-sided written chain.
    if len(F) > len(G):
        top, top_q, low, low_q = F, qf, G, qg
    else:
        top, top_q, low, low_q = G, qg, F, qf
    ok = True
    for i in range(len(low)):
        if not le(low[i], low_q, top[i], top_q):
            ok = False
            break
        if i + 1 < len(top) and not le(top[i + 1], top_q, low[i], low_q):
            ok = False
            break
    witness = sorted(
        [("f", r.approx()) for r in F] + [("g", r.approx()) for r in G],
        key=lambda t: -t[1],
    )
    reason = "chain holds" if ok else "chain violated"
    return InterlaceReport(f, g, ok, reason, witness)


def verify_interlacing_family(family: str, n_max: int = 25) -> dict:
    """
    Check consecutive interlacing along a polynomial family: "A"
    (run-sorted descent polynomials), "R" (run-count polynomials), "B"
    (peak polynomials), or "E" (Eulerian).  Exact; also confirms
    real-rootedness with non-positive roots at every step.
    """
    from .polynomials import eulerian_poly, peak_poly, run_count_poly, runsorted_descent_poly

    makers = {
        "A": runsorted_descent_poly,
        "R": run_count_poly,
        "B": peak_poly,
        "E": eulerian_poly,
    }
    if family not in makers:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(makers)}")
    make = makers[family]
    failures = []
    for n in range(2, n_max + 1):
        f, g = make(n - 1), make(n)
        rep = interlaces(f, g)
        if not rep.verdict:
            failures.append({"n": n, "report": rep.to_json()})
    return {
        "schema": 1,
        "family": family,
        "max_n": n_max,
        "verdict": not failures,
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# Same-phase stability sampling
# ---------------------------------------------------------------------------

def same_phase_check(
    p: MPoly, lam: Sequence[Fraction], partner: MPoly | None = None
) -> dict:
    """
    Restrict the multivariate polynomial to the positive ray x_i ->
    lam[i-1] * t and test exact real-rootedness; when ``partner`` (the
    previous family member) is supplied, also test that its restriction
    interlaces this one.
    """
    if any(x <= 0 for x in lam):
        raise ValueError("ray weights must be positive")
    needed = max(p.variables(), default=0)
    if len(lam) < needed:
        raise ValueError(f"need {needed} ray weights, got {len(lam)}")
    restricted = p.ray_restriction(lam)
    ok = is_real_rooted(restricted)
    out = {
        "lambda": [[x.numerator, x.denominator] for x in lam],
        "real_rooted": ok,
        "restriction": restricted.to_json(),
    }
    if partner is not None and ok:
        rep = interlaces(partner.ray_restriction(lam), restricted)
        out["interlaces"] = rep.verdict
    return out


def sample_lambdas(n_vars: int, *key: int) -> list[Fraction]:
    """Ray weights for one sample, derived independently per coordinate
    from the integer key tuple (order-insensitive across samples)."""
    return [
        rational_in_0_10(SplitMix64.seed_from(*key, v)) for v in range(1, n_vars + 1)
    ]


def conjecture_scan(
    family: str,
    n_max: int = 8,
    samples: int = 100,
    seed: int = 0,
    first_sample: int = 0,
) -> dict:
    """
    Sampled same-phase stability + consecutive interlacing scan for the
    multivariate descent polynomial of run-sorted permutations ("Q"), the
    multivariate Eulerian polynomial ("E"), or the multivariate peak-value
    polynomial ("B").  A failure is a reportable finding: the offending
    ray and restriction are returned in full, never swallowed.
    """
    from .polynomials import descent_multivar, eulerian_multivar, peak_multivar

    makers = {"Q": descent_multivar, "E": eulerian_multivar, "B": peak_multivar}
    if family not in makers:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(makers)}")
    make = makers[family]
    family_code = {"Q": 1, "E": 2, "B": 3}[family]
    failures = []
    cache: dict[int, MPoly] = {}
    for n in range(1, n_max + 1):
        cache[n] = make(n)
    for n in range(2, n_max + 1):
        for s in range(first_sample, first_sample + samples):
            lam = sample_lambdas(n, seed, family_code, n, s)
            res = same_phase_check(cache[n], lam, partner=cache[n - 1])
            if not res["real_rooted"] or not res.get("interlaces", True):
                failures.append({"n": n, "sample": s, **res})
    failures.sort(key=lambda d: (d["n"], d["sample"]))
    return {
        "schema": 1,
        "family": family,
        "max_n": n_max,
        "samples": samples,
        "first_sample": first_sample,
        "seed": seed,
        "verdict": not failures,
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# Interlacing closure properties (sum and shift closure)
# ---------------------------------------------------------------------------

def wagner_closure_check(f: Poly, g: Poly, h: Poly) -> dict:
    """
    For real-rooted f, g, h with non-positive roots and positive leading
    coefficients, test the three classical closure laws:

    (i)   f <= h and g <= h  implies  f+g <= h
    (ii)  h <= f and h <= g  implies  h <= f+g
    (iii) g <= f  iff  f <= t*g

    (<= meaning "interlaces").  Returns which hypotheses applied and
    whether the corresponding conclusions held.
    """
    t = Poly.t()
    out = {}
    fg = f + g
    if interlaces(f, h).verdict and interlaces(g, h).verdict:
        out["sum_below"] = interlaces(fg, h).verdict
    if interlaces(h, f).verdict and interlaces(h, g).verdict:
        out["sum_above"] = interlaces(h, fg).verdict
    out["shift_equivalence"] = (
        interlaces(g, f).verdict == interlaces(f, t * g).verdict
    )
    return out


def random_interlacing_pair(rng: SplitMix64, degree: int) -> tuple[Poly, Poly]:
    """
    A random pair f <= g built from an interleaved chain of non-positive
    rational roots (g's largest root on top), with random positive leading
    coefficients.
    """
    chain = sorted(
        (-rational_in_0_10(rng) for _ in range(2 * degree)), reverse=True
    )
    g_roots = chain[0::2]
    f_roots = chain[1::2]

    def build(roots: list[Fraction]) -> Poly:
        out = Poly.const(1 + rng.below(4))
        for r in roots:
            out = out * Poly([-r, 1])
        return out

    return build(f_roots), build(g_roots)
