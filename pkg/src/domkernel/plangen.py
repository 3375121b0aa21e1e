"""Seeded random planar graphs built by face insertion.

Start from a triangle (two faces), repeatedly drop a new vertex into a
uniformly chosen face and join it to the face's three corners. The result
is a maximal planar graph with ``3n - 6`` edges; uniformly random edges are
then deleted down to the requested count. Planarity holds by construction,
and the insertion log is kept so the triangulation can be replayed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph

BENCH_SIZES = (100, 500, 750, 1000, 1500, 2000, 3000, 4000)
BENCH_COUNT = 100


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        if not 0 <= self.m <= 3 * self.n - 6:
            raise ValueError(f"edge target {self.m} outside [0, {3 * self.n - 6}]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass
class PlanarInstance:
    spec: GenSpec
    graph: Graph
    # (new vertex, (a, b, c)) for every face insertion, in order
    insertions: list[tuple[int, tuple[int, int, int]]]
    triangulation_edges: list[tuple[int, int]]


def _triangulate(n: int, rng: random.Random):
    faces = [(0, 1, 2), (0, 1, 2)]
    edges = [(0, 1), (0, 2), (1, 2)]
    log = []
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((a, c, v))
        edges.extend([(a, v), (b, v), (c, v)])
        log.append((v, (a, b, c)))
    return edges, log


def replay_insertions(n: int, insertions) -> list[tuple[int, int]]:
    """Rebuild the triangulation's edge list from an insertion log."""
    edges = [(0, 1), (0, 2), (1, 2)]
    for v, (a, b, c) in insertions:
        edges.extend([(a, v), (b, v), (c, v)])
    return edges


def generate(spec: GenSpec) -> PlanarInstance:
    rng = random.Random(spec.seed)
    tri, log = _triangulate(spec.n, rng)
    kept = sorted(rng.sample(range(len(tri)), spec.m))
    g = Graph.from_edges(spec.n, (tri[i] for i in kept))
    return PlanarInstance(spec, g, log, tri)


def random_planar(spec: GenSpec) -> Graph:
    return generate(spec).graph


def derive_seed(rng: random.Random) -> int:
    return rng.getrandbits(64)


def sample_specs(sizes, count: int, seed: int) -> list[GenSpec]:
    """``count`` specs per size, edge targets uniform in ``[n, 3n - 6]``."""
    rng = random.Random(seed)
    specs = []
    for n in sizes:
        for _ in range(count):
            specs.append(GenSpec(n, rng.randint(min(n, 3 * n - 6), 3 * n - 6), derive_seed(rng)))
    return specs


def paper_sample_sets(seed: int) -> list[GenSpec]:
    """Eight sizes times one hundred instances, edge counts drawn per instance."""
    return sample_specs(BENCH_SIZES, BENCH_COUNT, seed)
