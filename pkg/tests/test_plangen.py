import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domkernel.plangen import (
    BENCH_SIZES,
    GenSpec,
    generate,
    paper_sample_sets,
    random_planar,
    replay_insertions,
)


def to_nx(edges, n):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h


def test_n4_full_is_k4():
    g = random_planar(GenSpec(4, 6, 1))
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_exact_edge_count():
    for m in (0, 100, 200, 294):
        g = random_planar(GenSpec(100, m, 5))
        assert g.num_edges == m and g.num_vertices == 100
        g.validate()


def test_spec_validation():
    with pytest.raises(ValueError):
        GenSpec(100, 295, 0)
    with pytest.raises(ValueError):
        GenSpec(2, 0, 0)
    with pytest.raises(ValueError):
        GenSpec(10, 5, -1)


def test_deterministic_in_seed():
    a = random_planar(GenSpec(300, 500, 99))
    b = random_planar(GenSpec(300, 500, 99))
    c = random_planar(GenSpec(300, 500, 100))
    assert a.edges() == b.edges()
    assert a.edges() != c.edges()


@given(st.integers(3, 60), st.integers(0, 2**64 - 1))
@settings(max_examples=60, deadline=None)
def test_triangulation_is_maximal_planar_and_replayable(n, seed):
    rng = random.Random(seed)
    spec = GenSpec(n, rng.randint(0, 3 * n - 6), seed)
    inst = generate(spec)
    tri = inst.triangulation_edges
    assert len(set(map(frozenset, tri))) == len(tri) == 3 * n - 6
    assert replay_insertions(n, inst.insertions) == tri
    planar, _ = nx.check_planarity(to_nx(tri, n))
    assert planar
    if n >= 4:
        assert min(d for _, d in to_nx(tri, n).degree()) >= 3
    kept = {tuple(e) for e in inst.graph.edges()}
    assert kept <= {tuple(sorted(e)) for e in tri}
    assert inst.graph.num_edges == spec.m


def test_paper_sample_sets_shape():
    specs = paper_sample_sets(2002)
    assert len(specs) == 800
    assert Counter(s.n for s in specs) == {n: 100 for n in BENCH_SIZES}
    assert all(s.n <= s.m <= 3 * s.n - 6 for s in specs)
    assert len({s.seed for s in specs}) == 800
    assert paper_sample_sets(2002) == specs
