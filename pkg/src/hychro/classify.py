"""Membership tests for the even-edge-size hypergraph families.

Three nested families are recognized, all requiring every edge size to be
even:

* l1: no cycle consists purely of big edges (size > 2); equivalently the
  bipartite incidence graph of the big edges is a forest.
* l0: every cycle made of big edges spans some size-2 edge of the hypergraph
  inside the union of its edges.
* l0prime: l0, and the size-2 edges alone connect all vertices.

Cycles here alternate vertices and edges (v1, e1, ..., vt, et) with t >= 2,
all vertices and edges distinct, and {vi, v(i+1)} inside ei cyclically.

Verdicts are "yes" / "no" / "unknown"; "unknown" only ever means the cycle
enumeration budget ran out before the answer was decided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hypergraph import Hypergraph, as_edge

__all__ = [
    "CycleWitness",
    "FamilyVerdict",
    "ClassificationReport",
    "ClosureReport",
    "CycleBudgetExceeded",
    "PreconditionError",
    "DEFAULT_CYCLE_BUDGET",
    "enumerate_pure_big_cycles",
    "in_l1",
    "in_l0",
    "in_l0_prime",
    "in_l1_exhaustive",
    "in_l0_exhaustive",
    "classify",
    "check_closure_l0",
    "check_contraction_containment",
]

DEFAULT_CYCLE_BUDGET = 1_000_000

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class CycleBudgetExceeded(RuntimeError):
    """Raised when cycle enumeration runs out of partial-state budget."""


class PreconditionError(ValueError):
    """A structural precondition of a check was violated."""


@dataclass(frozen=True)
class CycleWitness:
    """An alternating cycle: edges[i] contains {vertices[i], vertices[(i+1) % t]}."""

    vertices: tuple
    edges: tuple

    @property
    def length(self) -> int:
        return len(self.edges)

    def is_valid_for(self, h: Hypergraph) -> bool:
        t = len(self.edges)
        if t < 2 or len(self.vertices) != t:
            return False
        if len(set(self.vertices)) != t or len(set(self.edges)) != t:
            return False
        for i, e in enumerate(self.edges):
            if e not in h.edges:
                return False
            pair = {self.vertices[i], self.vertices[(i + 1) % t]}
            if not pair <= set(e):
                return False
        return True

    def edge_union(self) -> frozenset:
        out = set()
        for e in self.edges:
            out.update(e)
        return frozenset(out)


@dataclass(frozen=True)
class FamilyVerdict:
    value: str  # "yes" | "no" | "unknown"
    reason: str
    odd_edge: tuple | None = None
    witness: CycleWitness | None = None
    cycles_examined: int = 0


@dataclass(frozen=True)
class ClassificationReport:
    is_graph: bool
    is_sperner: bool
    all_even: bool
    in_l1: FamilyVerdict
    in_l0: FamilyVerdict
    in_l0_prime: FamilyVerdict
    big_edge_count: int
    witness: CycleWitness | None
    cycles_examined: int


@dataclass(frozen=True)
class ClosureReport:
    family: str
    edge: tuple
    deleted: FamilyVerdict
    contracted: FamilyVerdict

    @property
    def holds(self) -> bool:
        return self.deleted.value == YES and self.contracted.value == YES


class _Budget:
    __slots__ = ("left",)

    def __init__(self, amount: int):
        self.left = amount

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise CycleBudgetExceeded("cycle enumeration budget exhausted")


def _odd_edge(h: Hypergraph):
    for e in h.edges:
        if len(e) % 2:
            return e
    return None


def _iter_cycles(h: Hypergraph, big_only: bool, budget: _Budget):
    """Yield each distinct cycle once (up to rotation and direction).

    Rotation is fixed by starting at the cycle's smallest pool edge, direction
    by ordering the first two vertices; a canonical-key set backs both up.
    """
    pool = [i for i, e in enumerate(h.edges) if len(e) > 2 or not big_only]
    esets = {i: frozenset(h.edges[i]) for i in pool}
    incident: dict[int, list[int]] = {}
    for i in pool:
        for v in h.edges[i]:
            incident.setdefault(v, []).append(i)
    seen_keys = set()

    def witness(path_v, path_e):
        return CycleWitness(vertices=tuple(path_v), edges=tuple(h.edges[i] for i in path_e))

    def extend(a, v1, cur_v, path_v, path_e, used_v):
        for b in incident.get(cur_v, ()):
            if b <= a or b in path_e:
                continue
            eb = esets[b]
            if v1 in eb:
                seq = tuple(path_e) + (b,)
                key = min(seq, (seq[0],) + tuple(reversed(seq[1:])))
                if key not in seen_keys:
                    seen_keys.add(key)
                    yield witness(path_v, seq)
            for u in h.edges[b]:
                if u == cur_v or u in used_v:
                    continue
                budget.spend()
                yield from extend(a, v1, u, path_v + [u], path_e + [b], used_v | {u})

    for a in pool:
        ea = h.edges[a]
        for v1 in ea:
            for v2 in ea:
                if v1 >= v2:
                    continue
                budget.spend()
                yield from extend(a, v1, v2, [v1, v2], [a], {v1, v2})


def enumerate_pure_big_cycles(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET):
    """All distinct cycles whose edges all have size > 2.

    Raises CycleBudgetExceeded when the partial-state budget runs out; never
    returns a partial answer silently.
    """
    return list(_iter_cycles(h, big_only=True, budget=_Budget(budget)))


def _incidence_forest(h: Hypergraph) -> bool:
    """True when the big-edge incidence graph is acyclic."""
    big = h.big_edges()
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, e in enumerate(big):
        node = ("e", i)
        parent[node] = node
        for v in e:
            if ("v", v) not in parent:
                parent[("v", v)] = ("v", v)
            ra, rb = find(node), find(("v", v))
            if ra == rb:
                return False
            parent[rb] = ra
    return True


def _find_pure_big_cycle(h: Hypergraph) -> CycleWitness | None:
    """A single pure-big cycle extracted from the incidence graph, if one exists."""
    big = list(h.big_edges())
    adj: dict = {}
    for i, e in enumerate(big):
        adj[("e", i)] = [("v", v) for v in e]
        for v in e:
            adj.setdefault(("v", v), []).append(("e", i))
    visited = set()
    parent: dict = {}

    def dfs(node):
        visited.add(node)
        for nb in adj.get(node, ()):
            if nb == parent.get(node):
                continue
            if nb in visited:
                # back edge: walk up from node to nb
                path = [node]
                while path[-1] != nb:
                    path.append(parent[path[-1]])
                return path
            parent[nb] = node
            found = dfs(nb)
            if found is not None:
                return found
        return None

    for start in adj:
        if start in visited:
            continue
        parent[start] = None
        cyc = dfs(start)
        if cyc is not None:
            if cyc[0][0] == "e":  # rotate so the cycle starts on a vertex node
                cyc = cyc[1:] + cyc[:1]
            vs = tuple(node[1] for node in cyc[0::2])
            es = tuple(big[node[1]] for node in cyc[1::2])
            # dfs walks the cycle against its orientation; realign so that
            # edges[i] joins vertices[i] and vertices[i+1]
            w = CycleWitness(vertices=vs, edges=es)
            if w.is_valid_for(h):
                return w
            vs2 = (vs[0],) + tuple(reversed(vs[1:]))
            es2 = tuple(reversed(es))
            w2 = CycleWitness(vertices=vs2, edges=es2)
            return w2
    return None


def in_l1(h: Hypergraph) -> FamilyVerdict:
    """Even edge sizes and a big-edge incidence forest.  Needs no budget."""
    odd = _odd_edge(h)
    if odd is not None:
        return FamilyVerdict(NO, "odd-size edge", odd_edge=odd)
    if _incidence_forest(h):
        return FamilyVerdict(YES, "big-edge incidence graph is a forest")
    return FamilyVerdict(NO, "pure big-edge cycle exists", witness=_find_pure_big_cycle(h))


def in_l0(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET) -> FamilyVerdict:
    """Even edge sizes, and every pure-big cycle spans a size-2 edge."""
    odd = _odd_edge(h)
    if odd is not None:
        return FamilyVerdict(NO, "odd-size edge", odd_edge=odd)
    if _incidence_forest(h):
        # no pure-big cycles at all, the condition is vacuous
        return FamilyVerdict(YES, "big-edge incidence graph is a forest")
    twos = [frozenset(e) for e in h.two_edges()]
    examined = 0
    try:
        for cyc in _iter_cycles(h, big_only=True, budget=_Budget(budget)):
            examined += 1
            union = cyc.edge_union()
            if not any(t <= union for t in twos):
                return FamilyVerdict(NO, "pure big-edge cycle spans no size-2 edge",
                                     witness=cyc, cycles_examined=examined)
    except CycleBudgetExceeded:
        return FamilyVerdict(UNKNOWN, "cycle enumeration budget exhausted",
                             cycles_examined=examined)
    return FamilyVerdict(YES, "every pure big-edge cycle spans a size-2 edge",
                         cycles_examined=examined)


def in_l0_prime(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET) -> FamilyVerdict:
    """in_l0 plus: the size-2 edges alone connect all vertices."""
    base = in_l0(h, budget)
    if base.value != YES:
        return base
    if not h.two_edge_spanning_connected():
        return FamilyVerdict(NO, "size-2 edges do not span connectively",
                             cycles_examined=base.cycles_examined)
    return FamilyVerdict(YES, base.reason, cycles_examined=base.cycles_examined)


def in_l1_exhaustive(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET) -> FamilyVerdict:
    """Slow cross-check of in_l1 by direct pure-big cycle enumeration."""
    odd = _odd_edge(h)
    if odd is not None:
        return FamilyVerdict(NO, "odd-size edge", odd_edge=odd)
    examined = 0
    try:
        for cyc in _iter_cycles(h, big_only=True, budget=_Budget(budget)):
            examined += 1
            return FamilyVerdict(NO, "pure big-edge cycle exists", witness=cyc,
                                 cycles_examined=examined)
    except CycleBudgetExceeded:
        return FamilyVerdict(UNKNOWN, "cycle enumeration budget exhausted",
                             cycles_examined=examined)
    return FamilyVerdict(YES, "no pure big-edge cycle", cycles_examined=examined)


def in_l0_exhaustive(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET) -> FamilyVerdict:
    """Slow cross-check of in_l0: every cycle of any composition must span a size-2 edge.

    Restricting to pure-big cycles is sound because a cycle through a size-2
    edge contains that edge in its union; this function does not rely on that
    and checks them all.
    """
    odd = _odd_edge(h)
    if odd is not None:
        return FamilyVerdict(NO, "odd-size edge", odd_edge=odd)
    twos = [frozenset(e) for e in h.two_edges()]
    examined = 0
    try:
        for cyc in _iter_cycles(h, big_only=False, budget=_Budget(budget)):
            examined += 1
            union = cyc.edge_union()
            if not any(t <= union for t in twos):
                return FamilyVerdict(NO, "cycle spans no size-2 edge", witness=cyc,
                                     cycles_examined=examined)
    except CycleBudgetExceeded:
        return FamilyVerdict(UNKNOWN, "cycle enumeration budget exhausted",
                             cycles_examined=examined)
    return FamilyVerdict(YES, "every cycle spans a size-2 edge", cycles_examined=examined)


def classify(h: Hypergraph, budget: int = DEFAULT_CYCLE_BUDGET) -> ClassificationReport:
    """Full structural report: graph/Sperner/evenness flags and all three verdicts."""
    l1 = in_l1(h)
    l0 = in_l0(h, budget)
    l0p = in_l0_prime(h, budget)
    witness = l0.witness or l1.witness
    return ClassificationReport(
        is_graph=h.max_edge_size <= 2,
        is_sperner=h.is_sperner(),
        all_even=all(s % 2 == 0 for s in h.edge_sizes),
        in_l1=l1,
        in_l0=l0,
        in_l0_prime=l0p,
        big_edge_count=len(h.big_edges()),
        witness=witness,
        cycles_examined=max(l0.cycles_examined, l0p.cycles_examined, l1.cycles_examined),
    )


def _require_member(h: Hypergraph, family: str, budget: int):
    test = in_l0_prime if family == "l0prime" else in_l0
    verdict = test(h, budget)
    if verdict.value == UNKNOWN:
        raise PreconditionError(f"{family} membership could not be decided within budget")
    if verdict.value != YES:
        raise PreconditionError(f"hypergraph is not in {family}: {verdict.reason}")


def check_closure_l0(h: Hypergraph, e0, family: str = "l0",
                     budget: int = DEFAULT_CYCLE_BUDGET) -> ClosureReport:
    """Delete-and-contract closure: both derived hypergraphs should stay in the family.

    Preconditions (violations raise): h is Sperner and in the family, e0 is a
    big edge of h.  The contracted side is Sperner-reduced before the retest.
    """
    if family not in ("l0", "l0prime"):
        raise ValueError(f"unknown family {family!r}")
    e0 = as_edge(e0)
    if not h.is_sperner():
        raise PreconditionError("hypergraph is not Sperner")
    if e0 not in h.edges:
        raise PreconditionError(f"edge {e0} is not present")
    if len(e0) <= 2:
        raise PreconditionError(f"edge {e0} is not big (size must exceed 2)")
    _require_member(h, family, budget)
    test = in_l0_prime if family == "l0prime" else in_l0
    deleted = h.without_edge(e0)
    contracted = h.contract(e0).hypergraph.sperner()
    return ClosureReport(family=family, edge=e0,
                         deleted=test(deleted, budget),
                         contracted=test(contracted, budget))


def check_contraction_containment(h: Hypergraph, e0,
                                  budget: int = DEFAULT_CYCLE_BUDGET) -> bool:
    """Every edge surviving Sperner reduction of the contraction meets e0 in at most one vertex.

    Concretely: each edge of sperner_reduce(h / e0) must be the image of an
    original edge e with |e & e0| <= 1 (edges disjoint from e0 pass through,
    edges meeting it in one vertex pick up the merged vertex).  Preconditions
    (violations raise): h is Sperner and in l0, e0 is an edge of h.
    """
    e0 = as_edge(e0)
    if not h.is_sperner():
        raise PreconditionError("hypergraph is not Sperner")
    if e0 not in h.edges:
        raise PreconditionError(f"edge {e0} is not present")
    _require_member(h, "l0", budget)
    cr = h.contract(e0)
    om = cr.origin_map
    e0set = set(e0)
    allowed = set()
    for e in h.edges:
        if e == e0:
            continue
        if len(set(e) & e0set) <= 1:
            allowed.add(tuple(sorted({om[v] for v in e})))
    reduced = cr.hypergraph.sperner()
    return all(e in allowed for e in reduced.edges)
