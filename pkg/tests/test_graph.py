import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domkernel.graph import Color, Graph, GraphError, Origin

from _support import path, star


def test_fresh_vertex_is_isolated():
    g = Graph()
    v = g.add_vertex()
    assert g.neighbors(v) == set()
    assert g.color[v] is Color.BLACK
    assert g.origin[v] is Origin.ORIGINAL


def test_ids_are_distinct_and_never_reused():
    g = Graph()
    a = g.add_vertex()
    b = g.add_vertex()
    assert a != b
    g.remove_vertex(b)
    c = g.add_vertex()
    assert c not in (a, b)


def test_add_edge_is_idempotent_and_symmetric():
    g = Graph.from_edges(2, [])
    g.add_edge(0, 1)
    g.add_edge(0, 1)
    g.add_edge(1, 0)
    assert g.degree(0) == 1
    assert 0 in g.neighbors(1)
    assert g.num_edges == 1


def test_add_edge_rejects_self_loops_and_dead_ids():
    g = Graph.from_edges(2, [])
    with pytest.raises(GraphError):
        g.add_edge(0, 0)
    g.remove_vertex(1)
    with pytest.raises(GraphError):
        g.add_edge(0, 1)


def test_remove_center_of_star():
    g = star(3)
    g.remove_vertex(0)
    assert g.num_vertices == 3
    assert g.num_edges == 0
    assert all(g.degree(v) == 0 for v in g)


def test_remove_isolated_and_path_endpoint():
    g = Graph.from_edges(3, [(0, 1)])
    g.remove_vertex(2)
    assert g.num_edges == 1
    g.remove_vertex(1)
    assert g.num_vertices == 1 and g.num_edges == 0
    with pytest.raises(GraphError):
        g.remove_vertex(1)


def test_closed_neighborhood():
    g = star(3)
    assert g.closed_neighborhood(0) == {0, 1, 2, 3}
    assert g.closed_neighborhood(2) == {0, 2}
    h = Graph.from_edges(1, [])
    assert h.closed_neighborhood(0) == {0}
    with pytest.raises(GraphError):
        h.closed_neighborhood(5)


def test_within_distance():
    g = path(4)
    assert g.within_distance(0, 3, 3)
    assert not g.within_distance(0, 3, 2)
    assert g.within_distance(2, 2, 0)
    with pytest.raises(GraphError):
        g.within_distance(0, 9, 1)


def test_distances_and_ball():
    g = path(5)
    assert g.distances(0) == {0: 0, 1: 1, 2: 2, 3: 3, 4: 4}
    assert g.distances(0, 2) == {0: 0, 1: 1, 2: 2}
    assert g.ball((0, 4), 1) == {0, 1, 3, 4}


def test_mutation_fuzz_keeps_invariants():
    rng = random.Random(7)
    g = Graph()
    shadow_edges = set()
    for _ in range(12000):
        live = list(g.adj)
        op = rng.random()
        if op < 0.3 or len(live) < 2:
            g.add_vertex(rng.choice(list(Color)))
        elif op < 0.75:
            u, v = rng.sample(live, 2)
            g.add_edge(u, v)
            shadow_edges.add(frozenset((u, v)))
        elif op < 0.85:
            u, v = rng.sample(live, 2)
            if frozenset((u, v)) in shadow_edges:
                g.remove_edge(u, v)
                shadow_edges.discard(frozenset((u, v)))
        else:
            v = rng.choice(live)
            g.remove_vertex(v)
            shadow_edges = {e for e in shadow_edges if v not in e}
    g.validate()
    assert g.num_edges == len(shadow_edges)
    assert g.num_vertices == len(g.color) == len(g.origin)
    assert {frozenset(e) for e in g.edges()} == shadow_edges


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_unrelated_deletion_keeps_neighbor_ids(data):
    n = data.draw(st.integers(3, 12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True))
    g = Graph.from_edges(n, edges)
    victim = data.draw(st.integers(0, n - 1))
    before = {v: set(g.adj[v]) - {victim} for v in g if v != victim}
    g.remove_vertex(victim)
    assert {v: set(g.adj[v]) for v in g} == before
    g.validate()


def test_copy_is_independent():
    g = path(3)
    h = g.copy()
    h.remove_vertex(1)
    assert g.num_edges == 2 and h.num_edges == 0
    assert h.add_vertex() == 3
