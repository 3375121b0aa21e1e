"""Exact dominating-set solvers with black/white semantics.

A set D covers a graph when every black vertex has a member of D in its
closed neighborhood; white vertices may be used but need not be covered.
Plain graphs are all-black, so gamma_bw coincides with gamma there.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Color, Graph, GraphError
from .reduction import Mode, reduce

BRUTE_FORCE_CAP = 26
_CHUNK_BITS = 20


class InstanceTooLarge(ValueError):
    pass


@dataclass
class SolveResult:
    gamma: int
    witness: frozenset[int]
    nodes_explored: int = 0
    forced: frozenset[int] = field(default_factory=frozenset)


def verify_certificate(g: Graph, witness) -> bool:
    witness = set(witness)
    for x in witness:
        if x not in g.adj:
            raise GraphError(f"witness vertex {x} is not live")
    for u, c in g.color.items():
        if c is Color.BLACK and u not in witness and g.adj[u].isdisjoint(witness):
            return False
    return True


def brute_force_gamma(g: Graph) -> SolveResult:
    """Minimum cover by enumerating every vertex subset.

    The domination mask of all ``2**n`` subsets is built by doubling
    (``mask[S | bit_i] = mask[S] | N[i]``) in numpy chunks; the answer is the
    lowest-popcount covering subset, ties broken by subset index, i.e.
    towards low vertex ids.
    """
    n = g.num_vertices
    if n > BRUTE_FORCE_CAP:
        raise InstanceTooLarge(f"{n} vertices exceeds brute-force cap {BRUTE_FORCE_CAP}")
    order = g.vertices()
    index = {v: i for i, v in enumerate(order)}
    closed = []
    black = 0
    for v in order:
        m = 1 << index[v]
        for u in g.adj[v]:
            m |= 1 << index[u]
        closed.append(m)
        if g.color[v] is Color.BLACK:
            black |= 1 << index[v]
    if black == 0:
        return SolveResult(0, frozenset(), 1)

    low = min(n, _CHUNK_BITS)
    dom_low = np.zeros(1 << low, dtype=np.uint32)
    pop_low = np.zeros(1 << low, dtype=np.uint8)
    for i in range(low):
        half = 1 << i
        dom_low[half : 2 * half] = dom_low[:half] | np.uint32(closed[i])
        pop_low[half : 2 * half] = pop_low[:half] + 1

    best_size = n + 1
    best_subset = -1
    explored = 0
    black_u = np.uint32(black)
    for hi in range(1 << (n - low)):
        hi_dom = 0
        hi_pop = 0
        for j in range(n - low):
            if hi >> j & 1:
                hi_dom |= closed[low + j]
                hi_pop += 1
        if hi_pop >= best_size:
            continue
        explored += 1 << low
        covers = ((dom_low | np.uint32(hi_dom)) & black_u) == black_u
        if not covers.any():
            continue
        sizes = np.where(covers, pop_low, 255)
        idx = int(np.argmin(sizes))
        size = int(sizes[idx]) + hi_pop
        if size < best_size:
            best_size = size
            best_subset = (hi << low) | idx
    witness = frozenset(order[i] for i in range(n) if best_subset >> i & 1)
    return SolveResult(best_size, witness, explored)


def _cover_all_black(g: Graph) -> SolveResult:
    # one vertex per black vertex always works; bounds the search from above
    return SolveResult(len(g.black_vertices()), frozenset(g.black_vertices()))


class _Search:
    def __init__(self) -> None:
        self.nodes = 0
        self.mode = Mode.annotated_mode(extra_rules=True)

    def solve(self, g: Graph, limit: int) -> tuple[int, set[int]] | None:
        """Optimal cover of ``g`` if one of size < ``limit`` exists, else None."""
        self.nodes += 1
        blacks = [v for v, c in g.color.items() if c is Color.BLACK]
        if not blacks:
            return 0, set()
        if limit <= 1:
            return None
        u = min(blacks, key=lambda b: (len(g.adj[b]), b))
        best: tuple[int, set[int]] | None = None
        for x in sorted(g.adj[u] | {u}):
            h = g.copy()
            for y in h.adj[x]:
                h.color[y] = Color.WHITE
            h.remove_vertex(x)
            red = reduce(h, self.mode)
            spent = 1 + len(red.forced)
            if spent >= limit:
                continue
            sub = self.solve(red.graph, limit - spent)
            if sub is None:
                continue
            size = spent + sub[0]
            sol = red.lift(sub[1]) | {x}
            best = (size, sol)
            limit = size
        return best


def branch_and_reduce(g: Graph, mode: Mode = Mode()) -> SolveResult:
    """Reduce, then branch on the closed neighborhood of a min-degree black vertex.

    Kernels of either mode are finished with annotated reductions inside
    the search, since branching whitens vertices. Witnesses are lifted back
    through the reduction log onto ``g``.
    """
    if not any(c is Color.BLACK for c in g.color.values()):
        return SolveResult(0, frozenset())
    red = reduce(g, mode)
    search = _Search()
    upper = _cover_all_black(red.graph)
    found = search.solve(red.graph, upper.gamma + 1)
    assert found is not None
    witness = frozenset(red.lift(found[1]))
    return SolveResult(len(witness), witness, search.nodes, red.forced)
