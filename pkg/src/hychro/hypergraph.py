"""Finite vertex-labelled hypergraphs and the set-system edits the engine needs.

Vertices are ints 1..n.  Edges are stored as strictly increasing tuples in a
fixed canonical order (size first, then lexicographic), with duplicates
collapsed.  All operations return new objects; nothing mutates in place.
"""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = [
    "Edge",
    "Hypergraph",
    "ContractionResult",
    "Component",
    "build",
    "as_edge",
    "canonical_edges",
]

Edge = tuple  # strictly increasing vertex ids


def as_edge(vertices) -> Edge:
    """Normalize an iterable of vertex ids into a sorted edge tuple."""
    e = tuple(sorted(set(vertices)))
    if not e:
        raise ValueError("an edge must contain at least one vertex")
    for v in e:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"vertex ids must be ints >= 1, got {v!r}")
    return e


def _edge_key(e: Edge):
    return (len(e), e)


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on vertices 1..n with canonically ordered edges."""

    n: int
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in self.edges:
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            if not e:
                raise ValueError("empty edge")
            if e[-1] > self.n or e[0] < 1:
                raise ValueError(f"edge {e} has vertex ids outside 1..{self.n}")
        if tuple(sorted(self.edges, key=_edge_key)) != self.edges:
            raise ValueError("edges are not in canonical order; use build()")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_sizes(self) -> tuple[int, ...]:
        return tuple(len(e) for e in self.edges)

    @property
    def max_edge_size(self) -> int:
        return max(self.edge_sizes, default=0)

    def two_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if len(e) == 2)

    def big_edges(self) -> tuple[Edge, ...]:
        """Edges of size greater than two."""
        return tuple(e for e in self.edges if len(e) > 2)

    def covered_vertices(self) -> frozenset:
        out = set()
        for e in self.edges:
            out.update(e)
        return frozenset(out)

    def is_sperner(self) -> bool:
        """True when no edge strictly contains another edge."""
        sets = [frozenset(e) for e in self.edges]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a < b:
                    return False
        return True

    # -- edits -------------------------------------------------------------

    def sperner(self) -> "Hypergraph":
        """Drop every edge that strictly contains another edge."""
        sets = [frozenset(e) for e in self.edges]
        keep = []
        for i, e in enumerate(self.edges):
            a = sets[i]
            if not any(j != i and sets[j] < a for j in range(len(sets))):
                keep.append(e)
        if len(keep) == self.m:
            return self
        return Hypergraph(self.n, tuple(keep), self.labels)

    def without_edge(self, e) -> "Hypergraph":
        e = as_edge(e)
        if e not in self.edges:
            raise ValueError(f"edge {e} is not present")
        return Hypergraph(self.n, tuple(f for f in self.edges if f != e), self.labels)

    def identify(self, v0) -> "ContractionResult":
        """Merge the vertex set v0 into a single new vertex.

        Survivors keep their relative order as ids 1..n-|v0|, the merged
        vertex takes the last id n-|v0|+1.  Labels are dropped.
        """
        vs = sorted(set(v0))
        if not vs:
            raise ValueError("cannot identify an empty vertex set")
        if vs[0] < 1 or vs[-1] > self.n:
            raise ValueError(f"vertex set {vs} is outside 1..{self.n}")
        merged = set(vs)
        survivors = [v for v in range(1, self.n + 1) if v not in merged]
        origin = {v: i + 1 for i, v in enumerate(survivors)}
        w = len(survivors) + 1
        for v in merged:
            origin[v] = w
        new_edges = {tuple(sorted({origin[v] for v in e})) for e in self.edges}
        h = Hypergraph(w, tuple(sorted(new_edges, key=_edge_key)))
        return ContractionResult(hypergraph=h, merged_vertex=w, origin_map=origin)

    def contract(self, e) -> "ContractionResult":
        """Delete the edge, then identify its vertices; |V| drops by |e|-1."""
        e = as_edge(e)
        return self.without_edge(e).identify(e)

    def components(self) -> list["Component"]:
        """Connected pieces under shared-edge reachability, isolated vertices included."""
        parent = list(range(self.n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for e in self.edges:
            r = find(e[0])
            for v in e[1:]:
                rv = find(v)
                if rv != r:
                    parent[rv] = r
        groups: dict[int, list[int]] = {}
        for v in range(1, self.n + 1):
            groups.setdefault(find(v), []).append(v)
        out = []
        for vs in sorted(groups.values()):
            remap = {v: i + 1 for i, v in enumerate(vs)}
            inside = [e for e in self.edges if find(e[0]) == find(vs[0])]
            sub_edges = tuple(sorted((tuple(remap[v] for v in e) for e in inside), key=_edge_key))
            out.append(Component(vertices=tuple(vs), hypergraph=Hypergraph(len(vs), sub_edges)))
        return out

    def two_edge_spanning_connected(self) -> bool:
        """True when the graph formed by the size-2 edges connects all n vertices (n >= 1)."""
        if self.n < 1:
            return False
        parent = list(range(self.n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        pieces = self.n
        for e in self.two_edges():
            ra, rb = find(e[0]), find(e[1])
            if ra != rb:
                parent[rb] = ra
                pieces -= 1
        return pieces == 1

    # -- canonical form ----------------------------------------------------

    def canonical_key(self) -> bytes:
        """Stable bytes identifying this hypergraph up to the canonical relabeling.

        Equal keys imply isomorphism (the converse is not guaranteed; this is
        a cheap normal form, not a complete invariant).
        """
        edges, iso = canonical_edges(self.edges, self.n)
        body = ";".join(",".join(map(str, e)) for e in edges)
        return f"{iso}|{body}".encode()

    def canonical_form(self) -> "Hypergraph":
        """This hypergraph relabeled into the normal form behind canonical_key."""
        edges, iso = canonical_edges(self.edges, self.n)
        return Hypergraph(self.n, edges)


@dataclass(frozen=True)
class ContractionResult:
    hypergraph: Hypergraph
    merged_vertex: int
    origin_map: dict = field(compare=False)


@dataclass(frozen=True)
class Component:
    vertices: tuple  # original vertex ids, ascending
    hypergraph: Hypergraph  # induced piece relabeled 1..len(vertices)


def build(n: int, edges, labels=None) -> Hypergraph:
    """Validating constructor: normalizes, deduplicates and orders the edges."""
    norm = sorted({as_edge(e) for e in edges}, key=_edge_key)
    return Hypergraph(n, tuple(norm), tuple(labels) if labels is not None else None)


# -- first-occurrence relabeling, iterated to a stable normal form ----------


def _relabel_once(edges):
    mapping = {}
    nxt = 0
    for e in edges:
        for v in e:
            if v not in mapping:
                nxt += 1
                mapping[v] = nxt
    return tuple(sorted((tuple(sorted(mapping[v] for v in e)) for e in edges), key=_edge_key))


def canonical_edges(edges, n: int):
    """Return (normal-form edge tuple, isolated vertex count).

    A single first-occurrence relabel is not idempotent (re-sorting the mapped
    edges can change the discovery order), so the relabel map is iterated until
    it revisits a form and the least serialized member of the eventual cycle is
    taken.  That choice is idempotent and stable under any relabeling that
    preserves the canonical edge order.
    """
    used = set()
    for e in edges:
        used.update(e)
    iso = n - len(used)
    if not edges:
        return (), iso
    seen: dict[tuple, int] = {}
    trail = []
    cur = _relabel_once(edges)
    while cur not in seen:
        seen[cur] = len(trail)
        trail.append(cur)
        cur = _relabel_once(cur)
    cycle = trail[seen[cur]:]
    return min(cycle), iso
