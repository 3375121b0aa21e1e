"""Independent oracles and seeded instance sets shared by the test modules.

Nothing here calls into the partition, reduction or solver code: the
oracles re-derive everything from plain adjacency with itertools.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from domkernel.graph import Color, Graph
from domkernel.plangen import GenSpec, random_planar


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def literal_partition(g: Graph, centers: tuple[int, ...]):
    """Evaluate the three set-builder definitions clause by clause."""
    open_nbhd = set()
    for c in centers:
        open_nbhd.update(g.adj[c])
    base = [u for u in open_nbhd if u not in centers]
    closed = set(open_nbhd) | set(centers)
    n1 = set()
    for u in base:
        outside = [x for x in g.adj[u] if x not in closed]
        if len(outside) > 0:
            n1.add(u)
    n2 = set()
    for u in base:
        if u in n1:
            continue
        if len([x for x in g.adj[u] if x in n1]) > 0:
            n2.add(u)
    n3 = set(base) - n1 - n2
    return n1, n2, n3


def covers(g: Graph, subset) -> bool:
    chosen = set(subset)
    for u in g.adj:
        if g.color[u] is Color.BLACK and u not in chosen and not (g.adj[u] & chosen):
            return False
    return True


def enum_gamma(g: Graph) -> int:
    """Smallest covering subset by plain combinations, smallest size first."""
    verts = sorted(g.adj)
    for k in range(len(verts) + 1):
        for subset in itertools.combinations(verts, k):
            if covers(g, subset):
                return k
    raise AssertionError("unreachable: the full vertex set covers")


def planar_small(rng: random.Random, lo: int = 3, hi: int = 18) -> Graph:
    n = rng.randint(lo, hi)
    return random_planar(GenSpec(n, rng.randint(0, 3 * n - 6), rng.getrandbits(64)))


def general_small(rng: random.Random, lo: int = 1, hi: int = 18) -> Graph:
    n = rng.randint(lo, hi)
    return erdos_renyi(n, rng.uniform(0.05, 0.6), rng)


@lru_cache(maxsize=None)
def criterion_instances(seed: int = 20021, count: int = 500) -> tuple[tuple[str, Graph], ...]:
    """``count`` planar plus ``count`` general graphs with n <= 18."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        out.append((f"planar-{i}", planar_small(rng)))
    for i in range(count):
        out.append((f"general-{i}", general_small(rng)))
    return tuple(out)
