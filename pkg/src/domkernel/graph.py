"""Mutable undirected simple graph with black/white vertex annotation.

Vertex ids are non-negative integers handed out by a per-graph counter and
never reused, so rule events can refer to vertices after they were deleted.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, Iterator


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"


class Origin(enum.Enum):
    ORIGINAL = "original"
    GADGET = "gadget"


class GraphError(ValueError):
    """Raised on invalid graph mutations or queries (dead ids, self-loops)."""


class Graph:
    """Adjacency-set graph.

    ``adj`` maps every live vertex to the set of its neighbors. Callers may
    read it directly for speed but must mutate only through the methods.
    """

    __slots__ = ("adj", "color", "origin", "_next_id", "_num_edges")

    def __init__(self) -> None:
        self.adj: dict[int, set[int]] = {}
        self.color: dict[int, Color] = {}
        self.origin: dict[int, Origin] = {}
        self._next_id = 0
        self._num_edges = 0

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        white: Iterable[int] = (),
    ) -> Graph:
        """Build a graph on vertices ``0..n-1``."""
        g = cls()
        for _ in range(n):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(u, v)
        for u in white:
            g.set_color(u, Color.WHITE)
        return g

    # -- mutation ---------------------------------------------------------

    def add_vertex(self, color: Color = Color.BLACK, origin: Origin = Origin.ORIGINAL) -> int:
        v = self._next_id
        self._next_id += 1
        self.adj[v] = set()
        self.color[v] = color
        self.origin[v] = origin
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop on vertex {u}")
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            self.adj[u].add(v)
            self.adj[v].add(u)
            self._num_edges += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            raise GraphError(f"no edge {u}-{v}")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self._num_edges -= 1

    def remove_vertex(self, v: int) -> None:
        self._check(v)
        nbrs = self.adj.pop(v)
        for u in nbrs:
            self.adj[u].discard(v)
        self._num_edges -= len(nbrs)
        del self.color[v]
        del self.origin[v]

    def set_color(self, v: int, color: Color) -> None:
        self._check(v)
        self.color[v] = color

    # -- queries ----------------------------------------------------------

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def __iter__(self) -> Iterator[int]:
        return iter(self.adj)

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return self._num_edges

    @property
    def next_id(self) -> int:
        return self._next_id

    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        return sorted((u, v) for u, nbrs in self.adj.items() for v in nbrs if u < v)

    def neighbors(self, v: int) -> set[int]:
        self._check(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> set[int]:
        self._check(v)
        return self.adj[v] | {v}

    def is_black(self, v: int) -> bool:
        return self.color[v] is Color.BLACK

    def black_vertices(self) -> list[int]:
        return sorted(v for v, c in self.color.items() if c is Color.BLACK)

    def ball(self, sources: Iterable[int], radius: int) -> set[int]:
        """All live vertices within ``radius`` hops of any source."""
        seen = set()
        frontier = []
        for s in sources:
            if s in self.adj and s not in seen:
                seen.add(s)
                frontier.append(s)
        adj = self.adj
        for _ in range(radius):
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            if not nxt:
                break
            frontier = nxt
        return seen

    def distances(self, v: int, radius: int | None = None) -> dict[int, int]:
        """BFS hop counts from ``v``, optionally cut off at ``radius``."""
        self._check(v)
        dist = {v: 0}
        frontier = [v]
        adj = self.adj
        d = 0
        while frontier and (radius is None or d < radius):
            d += 1
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        return dist

    def within_distance(self, v: int, w: int, d: int) -> bool:
        """True iff some path of length at most ``d`` joins ``v`` and ``w``."""
        self._check(v)
        self._check(w)
        if d < 0:
            raise GraphError("distance bound must be non-negative")
        if v == w:
            return True
        seen = {v}
        queue = deque([(v, 0)])
        adj = self.adj
        while queue:
            x, dist = queue.popleft()
            if dist == d:
                continue
            for y in adj[x]:
                if y == w:
                    return True
                if y not in seen:
                    seen.add(y)
                    queue.append((y, dist + 1))
        return False

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g.adj = {v: set(nbrs) for v, nbrs in self.adj.items()}
        g.color = dict(self.color)
        g.origin = dict(self.origin)
        g._next_id = self._next_id
        g._num_edges = self._num_edges
        return g

    def same_as(self, other: Graph) -> bool:
        """Exact equality of vertex ids, adjacency, colors and origins."""
        return (
            self.adj == other.adj
            and self.color == other.color
            and self.origin == other.origin
        )

    def validate(self) -> None:
        """Full-scan consistency check; raises ``GraphError`` on violation."""
        if set(self.color) != set(self.adj) or set(self.origin) != set(self.adj):
            raise GraphError("color/origin keys differ from live vertices")
        half = 0
        for v, nbrs in self.adj.items():
            if v in nbrs:
                raise GraphError(f"self-loop on {v}")
            if v >= self._next_id or v < 0:
                raise GraphError(f"id {v} outside allocated range")
            for u in nbrs:
                if u not in self.adj or v not in self.adj[u]:
                    raise GraphError(f"asymmetric edge {v}-{u}")
            half += len(nbrs)
        if half != 2 * self._num_edges:
            raise GraphError(f"edge counter {self._num_edges} != {half // 2}")

    def _check(self, v: int) -> None:
        if v not in self.adj:
            raise GraphError(f"vertex {v} is not live")

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices}, m={self.num_edges})"
