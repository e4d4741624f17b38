import pytest
from hypothesis import given, strategies as st

from planarspex.families import g_m, star
from planarspex.graph import (
    GraphError,
    VertexSetPair,
    complete_bipartite,
    complete_graph,
    components,
    cycle_graph,
    disjoint_union,
    edge_counts,
    empty_graph,
    from_edge_list,
    is_connected,
    join,
    path_graph,
    remove_isolated,
)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(chosen, n)


def test_from_edge_list_examples():
    p3 = from_edge_list([(0, 1), (1, 2)], 3)
    assert (p3.n, p3.m) == (3, 2)
    assert from_edge_list([], 0).m == 0
    assert from_edge_list([(0, 1), (0, 1)], 2).m == 1
    assert from_edge_list([(1, 0), (0, 1)], 2).m == 1


@pytest.mark.parametrize("edges,n", [([(0, 0)], 1), ([(0, 3)], 3), ([(-1, 0)], 2)])
def test_from_edge_list_rejects(edges, n):
    with pytest.raises(GraphError):
        from_edge_list(edges, n)


def test_join_examples():
    g7 = join(complete_graph(2), empty_graph(3))
    assert (g7.n, g7.m) == (5, 7)
    assert sorted(g7.degrees()) == sorted(g_m(7).degrees())
    fan = join(empty_graph(1), path_graph(4))
    assert (fan.n, fan.m) == (5, 7)
    h = cycle_graph(5)
    assert join(empty_graph(0), h) == h


def test_disjoint_union_examples():
    g = disjoint_union(star(2), empty_graph(1))
    assert (g.n, g.m) == (4, 2)
    h = cycle_graph(4)
    assert disjoint_union(h, empty_graph(0)) == h
    two = disjoint_union(complete_graph(2), complete_graph(2))
    assert (two.n, two.m) == (4, 2)
    assert not is_connected(two)


def test_edge_counts_examples():
    assert edge_counts(complete_graph(4), VertexSetPair({0, 1, 2}, {3})) == (3, 3)
    assert edge_counts(cycle_graph(6), VertexSetPair(set(), {1, 2})) == (0, 0)
    k23 = complete_bipartite(2, 3)
    assert edge_counts(k23, VertexSetPair({0, 1}, {2, 3, 4})) == (0, 6)
    with pytest.raises(GraphError):
        VertexSetPair({0, 1}, {1, 2})


def test_connectivity_examples():
    assert not is_connected(disjoint_union(complete_graph(2), complete_graph(2)))
    assert is_connected(g_m(7))
    assert remove_isolated(disjoint_union(complete_graph(2), empty_graph(1))) == complete_graph(2)


def test_relabel_and_induced():
    p = path_graph(4)
    q = p.relabel([3, 2, 1, 0])
    assert sorted(q.edges()) == sorted(p.edges())
    assert p.induced([0, 1, 2]).m == 2


@given(graphs())
def test_adjacency_is_symmetric_and_handshake(g):
    for u in range(g.n):
        for v in g.neighbors(u):
            assert g.has_edge(v, u)
    assert sum(g.degrees()) == 2 * g.m


@given(graphs(), graphs())
def test_join_and_union_counts(g, h):
    j = join(g, h)
    u = disjoint_union(g, h)
    assert (j.n, j.m) == (g.n + h.n, g.m + h.m + g.n * h.n)
    assert (u.n, u.m) == (g.n + h.n, g.m + h.m)
    assert len(components(u)) == len(components(g)) + len(components(h))


@given(graphs(), st.data())
def test_edge_counts_match_direct_count(g, data):
    side = data.draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    s = {v for v in range(g.n) if side[v] == 0}
    t = {v for v in range(g.n) if side[v] == 1}
    inside = sum(1 for a, b in g.edges() if a in s and b in s)
    across = sum(1 for a, b in g.edges() if (a in s and b in t) or (a in t and b in s))
    assert edge_counts(g, VertexSetPair(s, t)) == (inside, across)


@given(graphs())
def test_remove_isolated_keeps_edges(g):
    h = remove_isolated(g)
    assert h.m == g.m
    assert all(d > 0 for d in h.degrees())
