from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colorful_polytopes import families as fam
from colorful_polytopes.colorful import facet_families
from colorful_polytopes.exchange import build_colorful_exchange_graph, build_uncolored_exchange_graph, support_projection
from colorful_polytopes.poset import RankedPoset, check_axioms
from colorful_polytopes.quotient import (
    build_classical_associahedron,
    build_classical_cyclohedron,
    classical_facet,
    classical_facet_census,
    covering_map,
    lift_to_faces,
    poset_isomorphic,
    quotient,
)
from colorful_polytopes.symmetry import Permutation, PermGroup, symmetric_factor_generators
from colorful_polytopes.triangulations import catalan
from builders import cube_poset


def polygon_poset(m: int) -> RankedPoset:
    ranks = [-1] + [0] * m + [1] * m + [2]
    covers = [(0, v) for v in range(1, m + 1)]
    for k in range(m):
        e = m + 1 + k
        covers += [(1 + k, e), (1 + (k + 1) % m, e), (e, 2 * m + 1)]
    return RankedPoset(ranks, covers)


def test_classical_associahedra():
    assert build_classical_associahedron(2).f_vector() == (5, 5, 1)
    p3 = build_classical_associahedron(3)
    assert p3.f_vector() == (14, 21, 9, 1)
    sizes = Counter(len(p3.vertex_sets[f]) for f in p3.faces_of_rank(2))
    assert sizes == {5: 6, 4: 3}
    p0 = build_classical_associahedron(0)
    assert p0.f_vector() == (1,) and len(p0) == 2
    for n in range(0, 5):
        assert check_axioms(build_classical_associahedron(n)).passed


def test_classical_cyclohedra():
    z1 = build_classical_cyclohedron(1)
    assert z1.f_vector() == (6, 6, 1)
    assert poset_isomorphic(z1, polygon_poset(6))[0]
    z2 = build_classical_cyclohedron(2)
    assert z2.f_vector()[0] == 20
    assert all(len(z2.up[v]) == 3 for v in z2.faces_of_rank(0))
    for n in (1, 2, 3):
        p = build_classical_cyclohedron(n)
        assert p.f_vector()[0] == (n + 2) * catalan(n + 1)
        assert check_axioms(p).passed


def test_pentagon_vs_hexagon():
    ok, w = poset_isomorphic(polygon_poset(5), polygon_poset(6))
    assert not ok and w is None


def test_isomorphism_witness_is_an_isomorphism():
    a = build_classical_associahedron(2)
    ok, w = poset_isomorphic(a, polygon_poset(5))
    assert ok
    idx = {k: polygon_poset(5).face(v) for k, v in w.items()}
    b = polygon_poset(5)
    img = [idx[a.keys[f]] for f in range(len(a))]
    assert sorted(img) == list(range(len(b)))
    assert {(img[x], img[y]) for x, y in a.covers()} == set(b.covers())


@settings(max_examples=25, deadline=None)
@given(st.permutations(range(27)))
def test_relabeled_cube_is_isomorphic(perm):
    p = cube_poset()
    order = [0] + [1 + x for x in perm]
    inv = {f: k for k, f in enumerate(order)}
    q = RankedPoset([p.ranks[f] for f in order], [(inv[a], inv[b]) for a, b in p.covers()])
    assert poset_isomorphic(p, q)[0]


def test_trivial_quotient_is_a_copy():
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 2)
    q = quotient(p, PermGroup([], p.graph.num_vertices))
    assert len(q) == len(p) and poset_isomorphic(p, q)[0]


@pytest.mark.parametrize("n", [2, 3])
def test_quotient_is_classical(n):
    g = build_colorful_exchange_graph(n)
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
    q = quotient(p, PermGroup(symmetric_factor_generators(g), g.num_vertices))
    assert check_axioms(q).passed
    assert poset_isomorphic(q, build_classical_associahedron(n))[0]
    # every orbit has faces of a single rank and incidence holds on representatives
    for a, b in q.covers():
        assert q.incident(a, b)


def test_cyclohedron_quotient():
    g = fam.family_graph(fam.COLORFUL_CYCLOHEDRON, 2)
    p = fam.family_polytope(fam.COLORFUL_CYCLOHEDRON, 2)
    q = quotient(p, PermGroup(symmetric_factor_generators(g), g.num_vertices))
    assert q.f_vector()[0] == 20
    assert poset_isomorphic(q, build_classical_cyclohedron(2))[0]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transpositions_are_poset_automorphisms(n):
    g = build_colorful_exchange_graph(n)
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
    for s in symmetric_factor_generators(g):
        img = lift_to_faces(p, s)
        assert sorted(img) == list(range(len(p)))


def test_lift_rejects_non_automorphisms():
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 2)
    bad = Permutation([1, 0] + list(range(2, 10)))
    with pytest.raises(ValueError):
        lift_to_faces(p, bad)


def test_two_fold_cover_of_pentagon():
    g, plain = build_colorful_exchange_graph(2), build_uncolored_exchange_graph(2)
    cov = covering_map(fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 2), build_classical_associahedron(2), support_projection(g, plain))
    assert cov.valid and cov.degree == 2


def test_identity_cover():
    a = build_classical_associahedron(3)
    cov = covering_map(a, a, list(range(14)))
    assert cov.valid and cov.degree == 1


def test_cover_of_3_associahedron_and_facets():
    g, plain = build_colorful_exchange_graph(3), build_uncolored_exchange_graph(3)
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 3)
    c = build_classical_associahedron(3)
    cov = covering_map(p, c, support_projection(g, plain))
    assert cov.valid and cov.degree == 6 and cov.fiber_sizes == {6: 14}
    for (i, _), f in facet_families(p).items():
        assert cov.assignment[f] == classical_facet(c, i)


def test_bad_projection_fails():
    a = build_classical_associahedron(2)
    cov = covering_map(a, a, [0, 0, 1, 2, 3])
    assert not cov.valid and cov.failures


@pytest.mark.parametrize("n", [3, 4])
def test_classical_facet_census(n):
    census = classical_facet_census(build_classical_associahedron(n), build_classical_associahedron(n - 1))
    assert len(census["isomorphic"]) == n + 3
    N = n + 3
    for (j, k), ridge in census["ridge"].items():
        adjacent = (k - j) % N in (1, N - 1)
        assert ridge == (not adjacent)
