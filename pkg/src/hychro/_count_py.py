"""Pure-Python coloring counter, the fallback behind the compiled kernel.

Counts maps from vertices to {0..k-1} in which no edge is monochromatic, by
depth-first enumeration over vertices in id order.  Each edge is checked once
its highest vertex gets a color, which prunes every extension of a dead
prefix.  Semantics must stay bit-identical to _count_cy.
"""

from __future__ import annotations

__all__ = ["count_weak_colorings"]


def count_weak_colorings(n: int, edges, k: int) -> int:
    """Number of k-colorings of vertices 1..n leaving no edge single-colored."""
    if n == 0:
        return 1
    if k <= 0:
        return 0
    # closing[v] holds, per edge whose maximum vertex is v+1, the other
    # vertices as 0-based ids; a size-1 edge contributes an empty tuple and
    # therefore kills every branch, which is the intended meaning
    closing = [[] for _ in range(n)]
    for e in edges:
        vs = [v - 1 for v in e]
        top = max(vs)
        closing[top].append(tuple(u for u in vs if u != top))
    color = [0] * n

    def rec(v: int) -> int:
        if v == n:
            return 1
        total = 0
        checks = closing[v]
        for c in range(k):
            color[v] = c
            for others in checks:
                for u in others:
                    if color[u] != c:
                        break
                else:
                    break  # edge fully matched color c: monochromatic
            else:
                total += rec(v + 1)
        return total

    return rec(0)
