"""Brute-force coloring counts and the polynomial interpolated from them.

This module is the independent cross-check for the deletion-contraction
engine: it never shares code with it.  Counting is plain exhaustive
enumeration (no inclusion-exclusion, no algebra), delegated to a compiled
kernel when available and to a pure-Python twin otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _count_py
from .hypergraph import Hypergraph
from .polyring import Poly, X, ONE

try:
    from . import _count_cy
except ImportError:  # pragma: no cover - exercised only on uncompiled installs
    _count_cy = None

__all__ = [
    "StateSpaceError",
    "GUARD_LIMIT",
    "CountResult",
    "available_backends",
    "default_backend",
    "count_colorings",
    "interpolate_polynomial",
]

GUARD_LIMIT = 10**9


class StateSpaceError(ValueError):
    """The enumeration k**n would exceed the guard limit."""


@dataclass(frozen=True)
class CountResult:
    """One exact enumeration outcome: `count` colorings with `k` colors."""
    k: int
    count: int


_KERNELS = {"python": _count_py.count_weak_colorings}
if _count_cy is not None:
    _KERNELS["cython"] = _count_cy.count_weak_colorings


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def default_backend() -> str:
    return "cython" if "cython" in _KERNELS else "python"


def _kernel(backend):
    name = backend or default_backend()
    try:
        return name, _KERNELS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")


def _guard(n: int, k: int):
    if k >= 2 and n >= 1 and k**n > GUARD_LIMIT:
        raise StateSpaceError(
            f"{k}**{n} assignments exceed the enumeration guard of {GUARD_LIMIT}")


def count_colorings(h: Hypergraph, k: int, backend: str | None = None) -> CountResult:
    """Exact number of k-colorings of h with no single-colored edge."""
    if k < 0:
        raise ValueError("k must be non-negative")
    _guard(h.n, k)
    _, fn = _kernel(backend)
    return CountResult(k=k, count=fn(h.n, h.edges, k))


def interpolate_polynomial(h: Hypergraph, backend: str | None = None) -> Poly:
    """The degree-n polynomial through the counts at k = 0..n, exactly.

    Lagrange interpolation over exact rationals; a non-integer coefficient
    cannot happen for genuine counts and aborts loudly if it does.
    """
    n = h.n
    _guard(n, n)
    counts = [count_colorings(h, k, backend).count for k in range(n + 1)]
    # numerator polynomials (x - j) for j != i, exact rational weights
    coeffs = [Fraction(0)] * (n + 1)
    for i, y in enumerate(counts):
        if y == 0:
            continue
        num = ONE
        den = 1
        for j in range(n + 1):
            if j != i:
                num = num * (X - Poly((j,)))
                den *= i - j
        w = Fraction(y, den)
        for t, c in enumerate(num.coeffs):
            coeffs[t] += w * c
    out = []
    for t, c in enumerate(coeffs):
        if c.denominator != 1:
            raise ArithmeticError(
                f"interpolation produced non-integer coefficient {c} at degree {t}; "
                "this indicates an internal bug")
        out.append(c.numerator)
    return Poly(out)
