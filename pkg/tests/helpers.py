"""Shared builders and hypothesis strategies for the test suite."""

import itertools

from hypothesis import strategies as st

from hychro import Hypergraph, build


def edge_pool(n, min_size=2):
    """All candidate edges on vertices 1..n with at least min_size vertices."""
    out = []
    for r in range(min_size, n + 1):
        out.extend(itertools.combinations(range(1, n + 1), r))
    return out


@st.composite
def hypergraphs(draw, max_n=6, max_m=5, min_size=2):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = edge_pool(n, min_size)
    if not pool:
        return build(n, [])
    m = draw(st.integers(min_value=0, max_value=min(max_m, len(pool))))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=m, max_size=m,
                           unique=True))
    return build(n, chosen)


@st.composite
def graphs(draw, max_n=6, max_m=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = list(itertools.combinations(range(1, n + 1), 2))
    if not pool:
        return build(n, [])
    m = draw(st.integers(min_value=0, max_value=min(max_m, len(pool))))
    chosen = draw(st.lists(st.sampled_from(pool), min_size=m, max_size=m,
                           unique=True))
    return build(n, chosen)


def brute_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Permutation search; only call for small n."""
    if h1.n != h2.n:
        return False
    if sorted(map(len, h1.edges)) != sorted(map(len, h2.edges)):
        return False
    target = set(h2.edges)
    for perm in itertools.permutations(range(1, h1.n + 1)):
        mapped = {tuple(sorted(perm[v - 1] for v in e)) for e in h1.edges}
        if mapped == target:
            return True
    return False
