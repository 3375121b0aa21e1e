"""Exit/guard/prisoner partition of a vertex or pair neighborhood.

For a center set C (one vertex or two), with base set B = N(C) minus C and
closed set N[C]:

* n1 (exit):     members of B with a neighbor outside N[C],
* n2 (guard):    remaining members of B adjacent to some exit vertex,
* n3 (prisoner): everything else in B.

Prisoners can only be dominated from inside N[C], which is what both
reduction rules exploit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class TriPartition:
    centers: tuple[int, ...]
    n1: frozenset[int]
    n2: frozenset[int]
    n3: frozenset[int]

    @property
    def base(self) -> frozenset[int]:
        return self.n1 | self.n2 | self.n3


def _classify(
    adj: dict[int, set[int]], base: set[int], closed: set[int]
) -> tuple[set[int], set[int], set[int]]:
    n1 = {u for u in base if not adj[u] <= closed}
    rest = base - n1
    n3 = {u for u in rest if adj[u].isdisjoint(n1)}
    n2 = rest - n3
    return n1, n2, n3


def single_sets(g: Graph, v: int) -> tuple[set[int], set[int], set[int]]:
    """Unwrapped ``(n1, n2, n3)`` for one center; no liveness check."""
    adj = g.adj
    base = adj[v]
    return _classify(adj, base, base | {v})


def pair_sets(g: Graph, v: int, w: int) -> tuple[set[int], set[int], set[int]]:
    """Unwrapped ``(n1, n2, n3)`` for a pair; no liveness check."""
    adj = g.adj
    base = adj[v] | adj[w]
    base.discard(v)
    base.discard(w)
    closed = base | {v, w}
    return _classify(adj, base, closed)


def partition_single(g: Graph, v: int) -> TriPartition:
    if v not in g.adj:
        raise GraphError(f"vertex {v} is not live")
    n1, n2, n3 = single_sets(g, v)
    return TriPartition((v,), frozenset(n1), frozenset(n2), frozenset(n3))


def partition_pair(g: Graph, v: int, w: int) -> TriPartition:
    """Pair partition over N(v) | N(w) with both centers excluded."""
    if v == w:
        raise GraphError("pair partition needs two distinct vertices")
    if v not in g.adj or w not in g.adj:
        raise GraphError(f"pair ({v}, {w}) has a dead vertex")
    n1, n2, n3 = pair_sets(g, v, w)
    return TriPartition((v, w), frozenset(n1), frozenset(n2), frozenset(n3))
