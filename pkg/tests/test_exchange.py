import json
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorful_polytopes.exchange import (
    build_colorful_exchange_graph,
    build_cyclohedron_exchange_graph,
    build_uncolored_cyclohedron_graph,
    build_uncolored_exchange_graph,
    color_classes,
    graph_from_json,
    project_edges,
    support_projection,
    validate,
)
from colorful_polytopes.triangulations import CENTRAL_COLOR, flip
from builders import make_graph
from oracles import bfs_classes


def _is_cycle(g, m):
    rep = validate(g)
    return rep.num_vertices == m and rep.num_edges == m and rep.regularity == 2 and rep.is_connected


def test_uncolored_small_cases():
    assert _is_cycle(build_uncolored_exchange_graph(2), 5)
    g0 = build_uncolored_exchange_graph(0)
    assert g0.num_vertices == 1 and g0.edges == ()
    g3 = build_uncolored_exchange_graph(3)
    assert (g3.num_vertices, len(g3.edges)) == (14, 21)
    assert not g3.colored


def test_colorful_pentagon_graph_is_a_10_cycle():
    g = build_colorful_exchange_graph(2)
    assert _is_cycle(g, 10)
    rep = validate(g)
    assert rep.is_proper and rep.chromatic_index_witness == 2
    # opposite vertices of the cycle: same support, swapped colors
    adj = g.adjacency()
    order = [0]
    prev = None
    while len(order) < 10:
        nxt = [u for u, _ in adj[order[-1]] if u != prev][0]
        prev = order[-1]
        order.append(nxt)
    for k in range(5):
        a, b = g.vertices[order[k]], g.vertices[order[k + 5]]
        assert a.support == b.support
        assert all(a.color_of(d) != b.color_of(d) for d in a.diagonals)


def test_quadrilateral_graph_is_one_edge():
    g = build_colorful_exchange_graph(1)
    assert g.num_vertices == 2 and g.edges == ((0, 1),)


def test_colorful_hexagon_graph():
    g = build_colorful_exchange_graph(3)
    rep = validate(g)
    assert (rep.num_vertices, rep.num_edges, rep.regularity, rep.chromatic_index_witness) == (84, 126, 3, 3)
    assert rep.is_connected and rep.colorful_hypotheses


@pytest.mark.parametrize("n,v,e", [(1, 6, 6), (2, 40, 60), (3, 420, 840)])
def test_cyclohedron_graphs(n, v, e):
    g = build_cyclohedron_exchange_graph(n)
    rep = validate(g)
    assert (rep.num_vertices, rep.num_edges, rep.regularity) == (v, e, n + 1)
    assert rep.colorful_hypotheses and CENTRAL_COLOR in g.color_set


def test_edges_are_flips_colored_by_the_flipped_diagonal():
    g = build_colorful_exchange_graph(3)
    for (u, v), c in zip(g.edges, g.edge_colors):
        t, s = g.vertices[u], g.vertices[v]
        (d,) = [d for d in t.diagonals if d not in s.diagonals]
        assert flip(t, d) == s and t.color_of(d) == c


def test_central_flips_carry_the_sentinel():
    g = build_cyclohedron_exchange_graph(2)
    for (u, v), c in zip(g.edges, g.edge_colors):
        t, s = g.vertices[u], g.vertices[v]
        changed = set(t.diagonals) - set(s.diagonals)
        P = t.polygon
        if c == CENTRAL_COLOR:
            assert len(changed) == 1 and P.is_central(changed.pop())
        else:
            assert len(changed) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_support_projection_gives_plain_graph(n):
    colored, plain = build_colorful_exchange_graph(n), build_uncolored_exchange_graph(n)
    proj = support_projection(colored, plain)
    assert project_edges(colored, proj) == set(plain.edges)
    assert set(Counter(proj).values()) == {len(colored.vertices) // len(plain.vertices)}


@pytest.mark.parametrize("n", [1, 2])
def test_cyclohedron_support_projection(n):
    colored, plain = build_cyclohedron_exchange_graph(n), build_uncolored_cyclohedron_graph(n)
    assert project_edges(colored, support_projection(colored, plain)) == set(plain.edges)


@pytest.mark.parametrize("builder,n", [(build_colorful_exchange_graph, 3), (build_cyclohedron_exchange_graph, 2)])
def test_color_classes_are_perfect_matchings(builder, n):
    g = builder(n)
    for es in color_classes(g).values():
        touched = [x for e in es for x in e]
        assert sorted(touched) == list(range(g.num_vertices))


def test_validate_detects_improper_coloring():
    g = make_graph(3, [(0, 1, 0), (1, 2, 0), (0, 2, 1)])
    rep = validate(g)
    assert rep.is_proper is False
    assert any("proper coloring violated at vertex 1" in v for v in rep.violations)
    assert not rep.colorful_hypotheses


def test_validate_disjoint_edges():
    g = make_graph(4, [(0, 1, 0), (2, 3, 0)])
    rep = validate(g)
    assert rep.is_proper is True and rep.is_connected is False


def test_validate_uncolored_skips_properness():
    rep = validate(build_uncolored_exchange_graph(2))
    assert rep.is_proper is None and rep.is_regular


def test_graph_rejects_loops_and_multi_edges():
    with pytest.raises(ValueError):
        make_graph(2, [(0, 0, 1)])
    with pytest.raises(ValueError):
        make_graph(2, [(0, 1, 0), (1, 0, 1)])


def test_json_round_trip_and_dot():
    g = build_cyclohedron_exchange_graph(1)
    h = graph_from_json(json.loads(json.dumps(g.to_json())))
    assert h.vertices == g.vertices and h.edges == g.edges and h.edge_colors == g.edge_colors
    dot = g.to_dot()
    assert dot.startswith("graph") and 'color="c*"' in dot


@st.composite
def random_colored_graph(draw):
    V = draw(st.integers(2, 7))
    pairs = [(u, v) for u in range(V) for v in range(u + 1, V)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    colors = draw(st.lists(st.integers(0, 2), min_size=len(chosen), max_size=len(chosen)))
    return V, [(u, v, c) for (u, v), c in zip(chosen, colors)]


@settings(max_examples=200, deadline=None)
@given(random_colored_graph())
def test_validate_matches_direct_recount(data):
    V, es = data
    g = make_graph(V, es) if es else make_graph(V, [], colors=())
    rep = validate(g)
    deg = Counter()
    at = Counter()
    for u, v, c in es:
        deg[u] += 1
        deg[v] += 1
        at[(u, c)] += 1
        at[(v, c)] += 1
    degrees = [deg[x] for x in range(V)]
    assert rep.is_regular == (len(set(degrees)) == 1)
    if es:
        assert rep.is_proper == all(k == 1 for k in at.values())
    comps = bfs_classes(V, [(u, v) for u, v, _ in es], [0] * len(es), {0})
    assert rep.is_connected == (len(comps) == 1)
