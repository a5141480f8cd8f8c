"""Exact real-root counting, isolation, and interval sign certificates.

Everything here is integer/rational arithmetic: Sturm chains are built over
primitive integer remainder sequences (pseudo-division scaled by positive
factors only, so signs are the true remainder signs), endpoint roots are
stripped by exact division, and unbounded ends use the symbolic sign of the
leading term.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .engine import EngineConfig, chromatic_polynomial
from .hypergraph import Hypergraph
from .polyring import Poly, ONE, X

__all__ = [
    "SturmChain",
    "RootReport",
    "SignCertificate",
    "ReferenceReport",
    "squarefree_part",
    "sturm_chain",
    "count_real_roots",
    "isolate_roots",
    "certify_negative_ray",
    "certify_unit_interval",
    "certify_negative_ray_poly",
    "certify_unit_interval_poly",
    "reference_poly_negative_ray",
    "reference_poly_unit_interval",
    "verify_reference_negative_ray",
    "verify_reference_unit_interval",
]

DEFAULT_WIDTH = Fraction(1, 128)


# -- integer coefficient-list helpers (ascending order, trimmed) ------------


def _trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _content(cs) -> int:
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
    return g


def _primitive(cs):
    g = _content(cs)
    if g <= 1:
        return list(cs)
    return [c // g for c in cs]


def _prem_positive(a, b):
    """Pseudo-remainder of a by b, scaled so it is a positive multiple of the
    true remainder.  b must be nonzero."""
    r = list(a)
    lb = b[-1]
    steps = 0
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        lead = r[-1]
        r = [c * lb for c in r]
        for i, cb in enumerate(b):
            r[shift + i] -= lead * cb
        _trim(r)
        steps += 1
    if lb < 0 and steps % 2:
        r = [-c for c in r]
    return r


def _poly_gcd(a, b):
    """Primitive gcd with positive leading coefficient (zero-length for gcd of zeros)."""
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    while b:
        a, b = b, _primitive(_prem_positive(a, b))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _exact_div(a, b):
    """Quotient a / b for integer lists when division is exact; raises otherwise."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    r = [Fraction(c) for c in a]
    if len(a) < len(b):
        raise ArithmeticError("division is not exact")
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lb = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        c = r[shift + len(b) - 1] / lb
        q[shift] = c
        if c:
            for i, cb in enumerate(b):
                r[shift + i] -= c * cb
    if any(x != 0 for x in r):
        raise ArithmeticError("division is not exact")
    out = []
    for c in q:
        if c.denominator != 1:
            raise ArithmeticError("division is not exact over the integers")
        out.append(c.numerator)
    return _trim(out)


def _deriv(cs):
    return [i * c for i, c in enumerate(cs) if i > 0]


def _eval_fr(cs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_at(cs, x) -> int:
    """Sign at a point; x is a Fraction, or None meaning -inf, or the string
    "+inf" sentinel is not used - pass (None, False)/(None, True) via helpers."""
    return _sign(_eval_fr(cs, x))


def _sign_at_neg_inf(cs) -> int:
    if not cs:
        return 0
    deg = len(cs) - 1
    s = _sign(cs[-1])
    return s if deg % 2 == 0 else -s


def _sign_at_pos_inf(cs) -> int:
    return _sign(cs[-1]) if cs else 0


# -- chains and counting ----------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the squarefree part of a polynomial."""

    polys: tuple  # tuple of ascending-int coefficient tuples

    def variations_at(self, x, pos_inf: bool = False) -> int:
        """Sign variations at x (a Fraction, or None for -inf/+inf per pos_inf)."""
        return _chain_variations(self.polys, x, pos_inf)

    def count_open(self, lower, upper) -> int:
        """Distinct head roots in (lower, upper); endpoints must not be roots."""
        return (self.variations_at(lower, pos_inf=False)
                - self.variations_at(upper, pos_inf=True))


def _variations(signs) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def _chain_variations(chain, x, pos_inf: bool = False) -> int:
    if x is None:
        if pos_inf:
            return _variations([_sign_at_pos_inf(cs) for cs in chain])
        return _variations([_sign_at_neg_inf(cs) for cs in chain])
    return _variations([_sign_at(cs, x) for cs in chain])


def squarefree_part(p: Poly) -> Poly:
    """p with all repeated factors collapsed to multiplicity one."""
    if p.is_zero:
        raise ValueError("squarefree part of the zero polynomial is undefined")
    cs = list(p.coeffs)
    g = _poly_gcd(cs, _deriv(cs))
    if len(g) == 1:
        out = _primitive(cs)
    else:
        out = _exact_div(cs, g)
    if out and out[-1] < 0:
        out = [-c for c in out]
    return Poly(out)


def _build_chain(f_cs) -> list:
    chain = [list(f_cs)]
    d = _trim(_deriv(f_cs))
    if d:
        chain.append(d)
        while len(chain[-1]) > 1:
            r = _prem_positive(chain[-2], chain[-1])
            if not r:
                break
            chain.append(_primitive([-c for c in r]))
    return chain


def sturm_chain(p: Poly) -> SturmChain:
    """Chain over the squarefree part of p."""
    f = squarefree_part(p)
    return SturmChain(polys=tuple(tuple(cs) for cs in _build_chain(list(f.coeffs))))


def _strip_endpoint_roots(f_cs, endpoints):
    """Divide out (den*x - num) factors for every endpoint that is a root."""
    for x in endpoints:
        if x is None:
            continue
        while f_cs and len(f_cs) > 1 and _eval_fr(f_cs, x) == 0:
            lin = [-x.numerator, x.denominator]
            f_cs = _exact_div(f_cs, lin)
    return f_cs


def _validate_interval(lower, upper):
    if lower is not None and upper is not None and lower >= upper:
        raise ValueError(f"empty interval: ({lower}, {upper})")


def count_real_roots(p: Poly, lower: Fraction | None, upper: Fraction | None) -> int:
    """Distinct real roots of p in the open interval (lower, upper).

    None bounds mean -inf / +inf.  Endpoint roots are excluded by exact
    division before the chain is evaluated.
    """
    if p.is_zero:
        raise ValueError("root counting on the zero polynomial")
    lower = Fraction(lower) if lower is not None else None
    upper = Fraction(upper) if upper is not None else None
    _validate_interval(lower, upper)
    f = list(squarefree_part(p).coeffs)
    f = _strip_endpoint_roots(f, (lower, upper))
    if len(f) <= 1:
        return 0
    chain = _build_chain(f)
    va = _chain_variations(chain, lower, pos_inf=False)
    vb = _chain_variations(chain, upper, pos_inf=True)
    return va - vb


def _cauchy_bound(f_cs) -> Fraction:
    """Strict bound B with every real root inside (-B, B)."""
    lead = abs(f_cs[-1])
    top = max((abs(c) for c in f_cs[:-1]), default=0)
    return Fraction(top, lead) + 2


@dataclass(frozen=True)
class RootReport:
    lower: Fraction | None
    upper: Fraction | None
    distinct_root_count: int
    isolating_intervals: tuple  # ((Fraction, Fraction), ...), pairwise disjoint
    multiplicity_at_zero: int


def isolate_roots(p: Poly, lower: Fraction | None, upper: Fraction | None,
                  width: Fraction = DEFAULT_WIDTH) -> RootReport:
    """Pairwise-disjoint open rational intervals, one around each distinct root
    of p inside (lower, upper), each no wider than `width`."""
    if p.is_zero:
        raise ValueError("root isolation on the zero polynomial")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    lower = Fraction(lower) if lower is not None else None
    upper = Fraction(upper) if upper is not None else None
    _validate_interval(lower, upper)
    f = list(squarefree_part(p).coeffs)
    f = _strip_endpoint_roots(f, (lower, upper))
    mult0 = p.multiplicity_at_zero()
    if len(f) <= 1:
        return RootReport(lower, upper, 0, (), mult0)
    chain = _build_chain(f)

    def count(a: Fraction, b: Fraction) -> int:
        if a >= b:
            return 0
        return _chain_variations(chain, a) - _chain_variations(chain, b)

    # replace infinite ends by a strict root bound; widen past a finite end if
    # the bound would land inside it
    bound = _cauchy_bound(f)
    if lower is None:
        lo = -bound if upper is None else min(-bound, upper - 1)
    else:
        lo = lower
    if upper is None:
        hi = bound if lower is None else max(bound, lower + 1)
    else:
        hi = upper

    def nonroot_radius(mid: Fraction, limit: Fraction) -> Fraction:
        d = limit
        while _eval_fr(f, mid - d) == 0 or _eval_fr(f, mid + d) == 0 \
                or count(mid - d, mid + d) > 1:
            d /= 2
        return d

    def refine(a: Fraction, b: Fraction):
        # exactly one root in (a, b), f nonzero at both ends
        while b - a > width:
            mid = (a + b) / 2
            if _eval_fr(f, mid) == 0:
                d = nonroot_radius(mid, min(width / 2, (b - mid) / 2, (mid - a) / 2))
                return (mid - d, mid + d)
            if count(a, mid) == 1:
                b = mid
            else:
                a = mid
        return (a, b)

    def split(a: Fraction, b: Fraction, c: int):
        if c == 0:
            return []
        if c == 1:
            return [refine(a, b)]
        mid = (a + b) / 2
        if _eval_fr(f, mid) == 0:
            d = nonroot_radius(mid, min(width / 2, (b - mid) / 2, (mid - a) / 2))
            left, right = mid - d, mid + d
            return (split(a, left, count(a, left))
                    + [(left, right)]
                    + split(right, b, count(right, b)))
        cl = count(a, mid)
        return split(a, mid, cl) + split(mid, b, c - cl)

    total = count(lo, hi)
    intervals = split(lo, hi, total)
    return RootReport(lower, upper, total, tuple(intervals), mult0)


# -- interval sign certificates --------------------------------------------


@dataclass(frozen=True)
class SignCertificate:
    holds: bool
    interval: str  # "neg" | "unit"
    nvertices: int
    root_count: int
    sign_checks: tuple  # ((label, sign), ...) with sign in {-1, 0, 1}
    multiplicity_at_zero: int
    root_report: RootReport


def certify_negative_ray_poly(p: Poly, nvertices: int,
                              width: Fraction = DEFAULT_WIDTH) -> SignCertificate:
    """Certificate that (-1)^n * p is strictly positive on (-inf, 0).

    Zero-freeness on the ray is decided by Sturm counting; the parity-adjusted
    sign is probed at -1 and -10 to pin the sign of the whole ray.
    """
    if p.is_zero:
        raise ValueError("cannot certify the zero polynomial")
    parity = 1 if nvertices % 2 == 0 else -1
    rc = count_real_roots(p, None, Fraction(0))
    s1 = _sign(parity * p(Fraction(-1)))
    s2 = _sign(parity * p(Fraction(-10)))
    holds = rc == 0 and s1 > 0 and s2 > 0
    report = isolate_roots(p, None, Fraction(0), width)
    return SignCertificate(
        holds=holds, interval="neg", nvertices=nvertices, root_count=rc,
        sign_checks=(("(-1)^n p(-1)", s1), ("(-1)^n p(-10)", s2)),
        multiplicity_at_zero=p.multiplicity_at_zero(), root_report=report)


def certify_unit_interval_poly(p: Poly, nvertices: int,
                               width: Fraction = DEFAULT_WIDTH) -> SignCertificate:
    """Certificate that (-1)^(n+1) * p is strictly positive on (0, 1) with a
    simple zero at 0 (so p / x does not vanish at 0 either)."""
    if p.is_zero:
        raise ValueError("cannot certify the zero polynomial")
    parity = 1 if (nvertices + 1) % 2 == 0 else -1
    rc = count_real_roots(p, Fraction(0), Fraction(1))
    mult = p.multiplicity_at_zero()
    q = p
    for _ in range(mult):
        q = q.div_x()
    s_half = _sign(parity * p(Fraction(1, 2)))
    s_q0 = _sign(parity * q(Fraction(0)))
    holds = rc == 0 and mult == 1 and s_half > 0 and s_q0 > 0
    report = isolate_roots(p, Fraction(0), Fraction(1), width)
    return SignCertificate(
        holds=holds, interval="unit", nvertices=nvertices, root_count=rc,
        sign_checks=(("(-1)^(n+1) p(1/2)", s_half), ("(-1)^(n+1) (p/x^m)(0)", s_q0)),
        multiplicity_at_zero=mult, root_report=report)


def certify_negative_ray(h: Hypergraph, config: EngineConfig | None = None,
                         width: Fraction = DEFAULT_WIDTH) -> SignCertificate:
    p, _ = chromatic_polynomial(h, config)
    return certify_negative_ray_poly(p, h.n, width)


def certify_unit_interval(h: Hypergraph, config: EngineConfig | None = None,
                          width: Fraction = DEFAULT_WIDTH) -> SignCertificate:
    p, _ = chromatic_polynomial(h, config)
    return certify_unit_interval_poly(p, h.n, width)


# -- bundled reference polynomials -----------------------------------------


def reference_poly_negative_ray() -> Poly:
    """Degree-17 product x^6 (x-1)^4 (x^3-2) (x^2+x+1)^2: zero-free on the
    negative ray, real roots only at 0, 1 and the cube root of 2."""
    return (Poly.monomial(6) * (X - ONE) ** 4
            * (X ** 3 - Poly((2,))) * (X ** 2 + X + ONE) ** 2)


def reference_poly_unit_interval() -> Poly:
    """Degree-6 product x (x-1) (x-2) (x(x-2)^2 - 1): exactly one root inside
    the open unit interval, near 0.382."""
    two = Poly((2,))
    return X * (X - ONE) * (X - two) * (X * (X - two) ** 2 - ONE)


@dataclass(frozen=True)
class ReferenceReport:
    holds: bool
    checks: tuple  # ((label, bool), ...)


def verify_reference_negative_ray(width: Fraction = DEFAULT_WIDTH) -> ReferenceReport:
    """Machine-check the structural facts of the degree-17 reference polynomial."""
    p = reference_poly_negative_ray()
    report = isolate_roots(p, None, None, width)
    ivs = report.isolating_intervals
    pinned = False
    if len(ivs) == 3:
        (a0, b0), (a1, b1), (a2, b2) = ivs
        # cubing both ends keeps the order, so a2 < 2^(1/3) < b2 exactly
        pinned = a0 < 0 < b0 and a1 < 1 < b1 and a2 ** 3 < 2 < b2 ** 3
    checks = (
        ("degree is 17", p.degree == 17),
        ("no roots on (-inf, 0)", count_real_roots(p, None, Fraction(0)) == 0),
        ("multiplicity 6 at zero", p.multiplicity_at_zero() == 6),
        ("exactly one root in (1, 2)", count_real_roots(p, Fraction(1), Fraction(2)) == 1),
        ("three distinct real roots", count_real_roots(p, None, None) == 3),
        ("isolating intervals pin 0, 1 and the cube root of 2", pinned),
    )
    return ReferenceReport(holds=all(ok for _, ok in checks), checks=checks)


def verify_reference_unit_interval(width: Fraction = DEFAULT_WIDTH) -> ReferenceReport:
    """Machine-check the unit-interval root of the degree-6 reference polynomial."""
    p = reference_poly_unit_interval()
    report = isolate_roots(p, Fraction(0), Fraction(1), width)
    one_interval = len(report.isolating_intervals) == 1
    inside = False
    narrow = False
    if one_interval:
        a, b = report.isolating_intervals[0]
        inside = Fraction(37, 100) <= a and b <= Fraction(39, 100)
        narrow = b - a <= width
    checks = (
        ("exactly one root in (0, 1)", report.distinct_root_count == 1),
        ("single isolating interval", one_interval),
        (f"interval no wider than {width}", narrow),
        ("interval inside (0.37, 0.39)", inside),
    )
    return ReferenceReport(holds=all(ok for _, ok in checks), checks=checks)
