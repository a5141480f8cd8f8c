"""Deterministic hypergraph generation: seeded random members and exhaustive
small enumeration.

Randomness comes from a SplitMix64 stream so identical seeds give identical
hypergraphs on every platform.  Family generation is constructive where that
is cheap (spanning 2-edge trees, incidence-forest big edges) and falls back to
classifier-verified rejection otherwise; the classifier verdict is always
asserted before a member is returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import in_l0, in_l0_prime, in_l1
from .hypergraph import Hypergraph, build, canonical_edges

__all__ = [
    "SplitMix64",
    "GenSpec",
    "GenerationError",
    "random_hypergraph",
    "random_family_member",
    "exhaustive_small",
]

_MASK = (1 << 64) - 1

FAMILIES = ("any", "l1", "l0", "l0prime")


class GenerationError(RuntimeError):
    """The requested instance could not be produced (infeasible or tries exhausted)."""


class SplitMix64:
    """The SplitMix64 stream: platform-independent 64-bit words from a seed."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); multiply-shift reduction."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next64() * bound) >> 64

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def sample(self, seq, k: int) -> list:
        """k distinct items, partial Fisher-Yates; order is draw order."""
        if k > len(seq):
            raise ValueError("sample larger than population")
        pool = list(seq)
        out = []
        for _ in range(k):
            i = self.below(len(pool))
            out.append(pool[i])
            pool[i] = pool[-1]
            pool.pop()
        return out


@dataclass(frozen=True)
class GenSpec:
    """What to generate: n vertices, m2 size-2 edges, big edges of the given sizes."""

    n: int
    m2: int
    big_sizes: tuple = ()
    family: str = "any"
    seed: int = 0
    max_tries: int = 200

    def __post_init__(self):
        object.__setattr__(self, "big_sizes", tuple(self.big_sizes))
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.n < 0 or self.m2 < 0 or self.max_tries < 1:
            raise ValueError("n, m2 must be non-negative and max_tries positive")
        for s in self.big_sizes:
            if s < 3:
                raise ValueError(f"big edge sizes must be at least 3, got {s}")
            if s > self.n:
                raise ValueError(f"big edge size {s} exceeds n={self.n}")
            if self.family != "any" and (s % 2 or s < 4):
                raise ValueError(f"family {self.family} needs even big sizes >= 4, got {s}")
        if self.m2 > self.n * (self.n - 1) // 2:
            raise ValueError(f"cannot place {self.m2} distinct pairs on {self.n} vertices")
        if self.family == "l0prime" and self.m2 < self.n - 1:
            raise ValueError("l0prime needs m2 >= n - 1 to span all vertices")

    @property
    def m_big(self) -> int:
        return len(self.big_sizes)


def _pair_pool(n: int) -> list:
    return list(itertools.combinations(range(1, n + 1), 2))


def _random_big_edge(rng: SplitMix64, n: int, size: int) -> tuple:
    return tuple(sorted(rng.sample(range(1, n + 1), size)))


def _distinct_bigs(rng: SplitMix64, spec: GenSpec) -> list:
    out: set = set()
    attempts = 0
    for size in spec.big_sizes:
        while True:
            e = _random_big_edge(rng, spec.n, size)
            if e not in out:
                out.add(e)
                break
            attempts += 1
            if attempts > 64 * max(1, spec.m_big):
                raise GenerationError(f"could not place {spec.m_big} distinct big edges")
    return sorted(out)


def random_hypergraph(spec: GenSpec) -> Hypergraph:
    """One seeded draw with no family constraint: distinct random 2-edges plus
    distinct random big edges of the requested sizes."""
    rng = SplitMix64(spec.seed)
    pairs = rng.sample(_pair_pool(spec.n), spec.m2)
    bigs = _distinct_bigs(rng, spec)
    return build(spec.n, list(pairs) + bigs)


def _tree_pairs(rng: SplitMix64, n: int) -> list:
    # random spanning tree: each vertex beyond the first attaches to an
    # earlier vertex
    return [tuple(sorted((1 + rng.below(v - 1), v))) for v in range(2, n + 1)]


def _attempt_l0prime(rng: SplitMix64, spec: GenSpec) -> Hypergraph:
    twos = set(_tree_pairs(rng, spec.n))
    extra = [p for p in _pair_pool(spec.n) if p not in twos]
    for p in rng.sample(extra, spec.m2 - len(twos)):
        twos.add(p)
    bigs = _distinct_bigs(rng, spec)
    return build(spec.n, sorted(twos) + bigs)


def _attempt_l0(rng: SplitMix64, spec: GenSpec) -> Hypergraph:
    bigs = _distinct_bigs(rng, spec)
    twos: set = set()
    guard = 0
    while len(twos) < spec.m2:
        if bigs and rng.below(2):
            e = rng.choice(bigs)
            p = tuple(sorted(rng.sample(e, 2)))
        else:
            p = tuple(sorted(rng.sample(range(1, spec.n + 1), 2)))
        if p not in twos:
            twos.add(p)
        guard += 1
        if guard > 64 * max(1, spec.m2):
            raise GenerationError(f"could not place {spec.m2} distinct 2-edges")
    return build(spec.n, sorted(twos) + bigs)


def _attempt_l1(rng: SplitMix64, spec: GenSpec) -> Hypergraph:
    # grow big edges so every pair of picked vertices lies in distinct
    # incidence components: the big-edge incidence graph stays a forest
    parent = list(range(spec.n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    bigs = []
    for size in spec.big_sizes:
        order = rng.sample(range(1, spec.n + 1), spec.n)
        picked = []
        roots = set()
        for v in order:
            r = find(v)
            if r not in roots:
                roots.add(r)
                picked.append(v)
                if len(picked) == size:
                    break
        if len(picked) < size:
            raise GenerationError(
                f"cannot place a size-{size} edge across distinct components")
        e = tuple(sorted(picked))
        if e in bigs:
            raise GenerationError("duplicate big edge in forest construction")
        bigs.append(e)
        r0 = find(e[0])
        for v in e[1:]:
            parent[find(v)] = r0
    pairs = rng.sample(_pair_pool(spec.n), spec.m2)
    return build(spec.n, pairs + sorted(bigs))


def random_family_member(spec: GenSpec) -> Hypergraph:
    """A seeded member of the requested family, classifier-verified.

    Constructive templates raise the hit rate; every candidate is still
    re-tested and rejected until the classifier says yes, up to max_tries.
    """
    if spec.family == "any":
        return random_hypergraph(spec)
    attempt = {"l0prime": _attempt_l0prime, "l0": _attempt_l0, "l1": _attempt_l1}[spec.family]
    test = {"l0prime": in_l0_prime, "l0": in_l0, "l1": in_l1}[spec.family]
    rng = SplitMix64(spec.seed)
    failures = []
    for _ in range(spec.max_tries):
        try:
            h = attempt(rng, spec)
        except GenerationError as exc:
            failures.append(str(exc))
            continue
        if test(h).value == "yes":
            return h
    detail = f"; last construction error: {failures[-1]}" if failures else ""
    raise GenerationError(
        f"no {spec.family} member found in {spec.max_tries} tries (seed {spec.seed}){detail}")


_EXHAUSTIVE_N_MAX = 6
_EXHAUSTIVE_M_MAX = 5


def exhaustive_small(n_max: int, m_max: int):
    """Every hypergraph with n <= n_max vertices and up to m_max edges of size
    >= 2, exactly one representative per canonical form, in a fixed order.

    Guarded at n_max <= 6, m_max <= 5: the scan is a full pass over all edge
    subsets, so the bounds are a promise about runtime.
    """
    if n_max < 0 or m_max < 0:
        raise ValueError("bounds must be non-negative")
    if n_max > _EXHAUSTIVE_N_MAX or m_max > _EXHAUSTIVE_M_MAX:
        raise ValueError(
            f"exhaustive enumeration is guarded at n_max <= {_EXHAUSTIVE_N_MAX}, "
            f"m_max <= {_EXHAUSTIVE_M_MAX}")
    for n in range(n_max + 1):
        pool = []
        for s in range(2, n + 1):
            pool.extend(itertools.combinations(range(1, n + 1), s))
        pool.sort(key=lambda e: (len(e), e))
        for m in range(min(m_max, len(pool)) + 1):
            for combo in itertools.combinations(range(len(pool)), m):
                edges = tuple(pool[i] for i in combo)
                canon, _iso = canonical_edges(edges, n)
                if canon == edges:
                    yield Hypergraph(n, edges)
