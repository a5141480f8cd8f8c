"""Exact chromatic polynomials by memoized deletion-contraction.

P(h, k) counts the k-colorings in which every edge sees at least two colors.
The recursion is P(h) = P(h - e0) - P((h / e0) reduced), after Sperner
reduction, with multiplicative splitting over connected components.  All
arithmetic is exact over Python ints.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .hypergraph import Hypergraph, as_edge
from .polyring import Poly, ZERO, ONE

__all__ = [
    "PIVOT_RULES",
    "EngineConfig",
    "EngineStats",
    "chromatic_polynomial",
    "q_polynomial",
    "deletion_contraction_check",
]

PIVOT_RULES = ("largest_edge", "smallest_big_edge", "first_edge")


@dataclass
class EngineConfig:
    pivot_rule: str = "largest_edge"
    memo: bool = True
    memo_capacity: int = 1 << 20

    def __post_init__(self):
        if self.pivot_rule not in PIVOT_RULES:
            raise ValueError(f"pivot_rule must be one of {PIVOT_RULES}, got {self.pivot_rule!r}")
        if self.memo_capacity < 1:
            raise ValueError("memo_capacity must be positive")


@dataclass
class EngineStats:
    recursive_calls: int = 0
    memo_hits: int = 0
    max_depth: int = 0
    elapsed_seconds: float = 0.0


def _pick_pivot(h: Hypergraph, rule: str):
    # edges are canonically ordered (size ascending, then lex), so ties
    # resolve to the first edge of the winning size automatically
    if rule == "first_edge":
        return h.edges[0]
    if rule == "smallest_big_edge":
        for e in h.edges:
            if len(e) > 2:
                return e
        return h.edges[0]
    top = max(len(e) for e in h.edges)
    for e in h.edges:
        if len(e) == top:
            return e
    raise AssertionError("unreachable")


class _Engine:
    def __init__(self, config: EngineConfig):
        self.config = config
        self.stats = EngineStats()
        self.memo: dict[bytes, Poly] = {}

    def run(self, h: Hypergraph) -> Poly:
        start = time.perf_counter()
        result = self._p(h.sperner(), 1)
        self.stats.elapsed_seconds = time.perf_counter() - start
        return result

    def _p(self, h: Hypergraph, depth: int) -> Poly:
        # h arrives Sperner-reduced: deletion preserves that, contraction
        # re-reduces below
        self.stats.recursive_calls += 1
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        if any(len(e) == 1 for e in h.edges):
            return ZERO
        if h.m == 0:
            return Poly.monomial(h.n)
        key = h.canonical_key() if self.config.memo else None
        if key is not None:
            got = self.memo.get(key)
            if got is not None:
                self.stats.memo_hits += 1
                return got
        comps = h.components()
        if len(comps) > 1:
            result = ONE
            for comp in comps:
                result = result * self._p(comp.hypergraph, depth + 1)
        else:
            e0 = _pick_pivot(h, self.config.pivot_rule)
            deleted = h.without_edge(e0)
            contracted = h.contract(e0).hypergraph.sperner()
            result = self._p(deleted, depth + 1) - self._p(contracted, depth + 1)
        if key is not None:
            if len(self.memo) >= self.config.memo_capacity:
                self.memo.clear()  # whole-cache reset, deliberately simple
            self.memo[key] = result
        return result


def chromatic_polynomial(h: Hypergraph, config: EngineConfig | None = None):
    """Exact chromatic polynomial of h; returns (Poly, EngineStats)."""
    eng = _Engine(config or EngineConfig())
    p = eng.run(h)
    return p, eng.stats


def q_polynomial(h: Hypergraph, config: EngineConfig | None = None):
    """P divided once by the variable; requires P(0) = 0 (any h with n >= 1)."""
    p, stats = chromatic_polynomial(h, config)
    if not p.is_zero and p.coeffs[0] != 0:
        raise ValueError("P(0) != 0, quotient polynomial is undefined (n = 0 input)")
    return p.div_x(), stats


def deletion_contraction_check(h: Hypergraph, e, config: EngineConfig | None = None) -> bool:
    """Verify P(h) == P(h - e) - P(h / e) for one edge, all sides computed fresh."""
    e = as_edge(e)
    cfg = config or EngineConfig()
    whole, _ = chromatic_polynomial(h, cfg)
    without, _ = chromatic_polynomial(h.without_edge(e), cfg)
    merged, _ = chromatic_polynomial(h.contract(e).hypergraph, cfg)
    return whole == without - merged
