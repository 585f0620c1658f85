import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorful_polytopes import families as fam
from colorful_polytopes.colorful import facet_families
from colorful_polytopes.exchange import build_colorful_exchange_graph, build_cyclohedron_exchange_graph
from colorful_polytopes.search import forced_maps, isomorphisms
from colorful_polytopes.symmetry import (
    COLOR_PRESERVING,
    COLOR_RESPECTING,
    FULL,
    Permutation,
    PermGroup,
    action_on_sets,
    canonical_subgroup_generators,
    closure,
    dihedral,
    dihedral_factor_generators,
    graph_automorphisms,
    is_block_system,
    is_color_respecting,
    polytope_automorphisms,
    symmetric_factor_generators,
    symmetric_times_dihedral,
    verify_group_structure,
    vertex_action,
)
from colorful_polytopes.triangulations import Polygon, rotation
from builders import cube_graph, make_graph
from oracles import brute_automorphism_count


def test_pentagon_graph_groups():
    g = build_colorful_exchange_graph(2)
    full = graph_automorphisms(g, FULL)
    resp = graph_automorphisms(g, COLOR_RESPECTING)
    pres = graph_automorphisms(g, COLOR_PRESERVING)
    assert (full.order, resp.order, pres.order) == (20, 20, 10)
    # preserving = the respecting elements with identity color map, by direct filter
    direct = {x for x in full if all(g.edge_color(x(u), x(v)) == c for (u, v), c in zip(g.edges, g.edge_colors))}
    assert direct == set(pres.elements)
    for x in resp:
        assert is_color_respecting(g, x)
        assert resp.color_map(x) is not None


@pytest.mark.parametrize("graph", [build_colorful_exchange_graph(2), build_colorful_exchange_graph(3), build_cyclohedron_exchange_graph(1), cube_graph()])
def test_subgroup_chain(graph):
    p = graph_automorphisms(graph, COLOR_PRESERVING)
    c = graph_automorphisms(graph, COLOR_RESPECTING)
    f = graph_automorphisms(graph, FULL)
    assert p.is_subgroup_of(c) and c.is_subgroup_of(f)


def test_cube_groups():
    g = cube_graph()
    assert graph_automorphisms(g, FULL).order == 48
    assert graph_automorphisms(g, COLOR_RESPECTING).order == 48
    assert graph_automorphisms(g, COLOR_PRESERVING).order == 8


@st.composite
def small_graph(draw):
    V = draw(st.integers(1, 6))
    pairs = [(u, v) for u in range(V) for v in range(u + 1, V)]
    return V, draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []


@settings(max_examples=60, deadline=None)
@given(small_graph())
def test_full_group_matches_brute_force(data):
    V, edges = data
    g = make_graph(V, [(u, v, None) for u, v in edges]) if edges else make_graph(V, [], colors=())
    assert graph_automorphisms(g, FULL).order == brute_automorphism_count(V, edges)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(10)))
def test_isomorphism_search_finds_relabelings(perm):
    g = build_colorful_exchange_graph(2)
    adj = [[] for _ in range(10)]
    adj2 = [[] for _ in range(10)]
    for (u, v), c in zip(g.edges, g.edge_colors):
        adj[u].append((v, c))
        adj[v].append((u, c))
        adj2[perm[u]].append((perm[v], c))
        adj2[perm[v]].append((perm[u], c))
    images = list(isomorphisms(adj, [0] * 10, adj2, [0] * 10))
    assert list(perm) in images and len(images) == 10


def test_forced_maps_identity():
    t = build_colorful_exchange_graph(3).neighbor_table()
    maps = forced_maps(t, t, 0, range(t.shape[1]))
    assert any((m == range(t.shape[1])).all() for m in maps)


# polytope groups -------------------------------------------------------------


def test_polytope_group_equals_color_respecting_n2():
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 2)
    A = polytope_automorphisms(p)
    assert A.order == 20
    assert vertex_action(p, A).elements == graph_automorphisms(p.graph, COLOR_RESPECTING).elements


def test_classical_groups():
    assert polytope_automorphisms(fam.family_polytope(fam.ASSOCIAHEDRON, 3)).order == 12
    assert polytope_automorphisms(fam.family_polytope(fam.COLORFUL_CYCLOHEDRON, 1)).order == 12


@pytest.mark.parametrize("n", [2, 3])
def test_group_order_divides_flags_and_stabilizer_trivial(n):
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
    A = polytope_automorphisms(p)
    flags = p.flags()
    assert len(flags) % A.order == 0
    base = tuple(flags[0])
    fixing = [g for g in A if tuple(g(f) for f in base) == base]
    assert len(fixing) == 1


def test_structure_checks():
    g = build_colorful_exchange_graph(3)
    G = graph_automorphisms(g, COLOR_RESPECTING)
    st_ = symmetric_times_dihedral(3, 6, symmetric_factor_generators(g), dihedral_factor_generators(g))
    assert G.order == 72 and verify_group_structure(G, st_)
    h = build_cyclohedron_exchange_graph(2)
    H = graph_automorphisms(h, COLOR_RESPECTING)
    st2 = symmetric_times_dihedral(2, 4, symmetric_factor_generators(h), dihedral_factor_generators(h))
    assert H.order == 16 and verify_group_structure(H, st2)
    trivial = PermGroup([], 5)
    assert not verify_group_structure(trivial, dihedral(3))
    # wrong dihedral degree
    assert not verify_group_structure(G, symmetric_times_dihedral(3, 5, symmetric_factor_generators(g), dihedral_factor_generators(g)))


def test_classical_dihedral_structure():
    A = polytope_automorphisms(fam.family_polytope(fam.ASSOCIAHEDRON, 2))
    assert verify_group_structure(A, dihedral(5))
    assert not verify_group_structure(A, dihedral(4))


def test_color_transposition_is_antipodal_on_decagon():
    g = build_colorful_exchange_graph(2)
    sigma = canonical_subgroup_generators("color_permutation", {0: 1, 1: 0}, g)
    # distance 5 along the cycle
    adj = g.adjacency()
    for v in range(10):
        dist = {v: 0}
        frontier = [v]
        while frontier:
            nxt = []
            for x in frontier:
                for y, _ in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        assert dist[sigma(v)] == 5
    ident = canonical_subgroup_generators("color_permutation", {0: 0, 1: 1}, g)
    assert ident.is_identity()


def test_octagon_rotation_on_cyclohedron_graph():
    h = build_cyclohedron_exchange_graph(2)
    P = Polygon.for_cyclohedron(2)
    r = canonical_subgroup_generators("polygon_symmetry", rotation(P, 1), h)
    assert r.order() == 4
    assert all(r(v) != v for v in range(h.num_vertices))
    assert canonical_subgroup_generators("polygon_symmetry", rotation(P, 4), h).is_identity()
    assert r in graph_automorphisms(h, COLOR_RESPECTING)
    with pytest.raises(ValueError):
        canonical_subgroup_generators("polygon_symmetry", (2, 1, 3, 4, 5, 6, 7, 8), h)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_color_and_polygon_actions_commute(n):
    g = build_colorful_exchange_graph(n)
    for a in symmetric_factor_generators(g):
        for b in dihedral_factor_generators(g):
            assert a * b == b * a


def test_facet_families_are_blocks():
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 3)
    fams = facet_families(p)
    keys = sorted(fams)
    sets = [p.vertex_sets[fams[k]] for k in keys]
    G = graph_automorphisms(p.graph, COLOR_RESPECTING)
    perms = action_on_sets(G, sets)
    blocks = [[k for k, (i, _) in enumerate(keys) if i == j] for j in range(1, 7)]
    assert is_block_system(perms, blocks)
    # color classes are blocks too (the group is a direct product)
    color_blocks = [[k for k, (_, c) in enumerate(keys) if c == col] for col in range(3)]
    assert is_block_system(perms, color_blocks)
    # an arbitrary pairing is not
    pairing = [[k, k + 1] for k in range(0, 18, 2)]
    assert not is_block_system(perms, pairing)


# permutations -----------------------------------------------------------------


@settings(max_examples=100)
@given(st.permutations(range(6)), st.permutations(range(6)), st.permutations(range(6)))
def test_permutation_algebra(a, b, c):
    p, q, r = Permutation(a), Permutation(b), Permutation(c)
    assert (p * q) * r == p * (q * r)
    assert p * p.inverse() == Permutation.identity(6)
    assert all((p * q)(x) == p(q(x)) for x in range(6))
    assert (p ** p.order()).is_identity()


def test_closure_of_s3():
    s = Permutation([1, 0, 2])
    t = Permutation([0, 2, 1])
    assert len(closure([s, t], 3)) == 6
    G = PermGroup.from_elements(closure([s, t], 3), 3)
    assert G.order == 6 and Permutation([2, 1, 0]) in G
    with pytest.raises(ValueError):
        PermGroup.from_elements([Permutation([1, 0, 2]), Permutation([0, 2, 1])], 3)


def test_group_json():
    G = graph_automorphisms(build_cyclohedron_exchange_graph(1), COLOR_RESPECTING)
    data = G.to_json()
    assert data["order"] == 12 and data["degree"] == 6
    assert all(sorted(x) == list(range(6)) for x in data["generators"])
    assert any(m is not None and "c*" in m for m in data["color_maps"])
