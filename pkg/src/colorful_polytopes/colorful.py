"""The colorful polytope of a properly edge-colored regular graph.

For a color subset ``C`` the ``~C`` classes are the connected components of
the subgraph of ``C``-colored edges; the ``|C|``-faces are these classes.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .exchange import ColoredGraph, validate
from .poset import RankedPoset
from .triangulations import ColoredTriangulation, diagonal


class HypothesisError(ValueError):
    """The graph is not connected, regular and properly colored with Δ colors."""


def _canonical(labels: np.ndarray) -> np.ndarray:
    # relabel classes in order of their least vertex
    _, first = np.unique(labels, return_index=True)
    order = np.argsort(first)
    remap = np.empty(len(order), dtype=np.int64)
    remap[order] = np.arange(len(order))
    return remap[labels]


def equivalence_classes(graph: ColoredGraph) -> dict[frozenset, np.ndarray]:
    """Class labels of ``~C`` for every color subset ``C``.

    Classes for ``C`` are obtained by merging the classes for ``C - {c}``
    along the edges of color ``c``.
    """
    V = graph.num_vertices
    R = tuple(graph.color_set)
    by_color = {c: [] for c in R}
    for e, c in zip(graph.edges, graph.edge_colors or ()):
        by_color[c].append(e)
    by_color = {c: np.array(es, dtype=np.int64).reshape(-1, 2) for c, es in by_color.items()}
    labels = {frozenset(): np.arange(V, dtype=np.int64)}
    for size in range(1, len(R) + 1):
        for C in itertools.combinations(R, size):
            C = frozenset(C)
            c = max(C)
            base = labels[C - {c}]
            es = by_color[c]
            k = int(base.max()) + 1 if V else 0
            g = coo_matrix(
                (np.ones(len(es), dtype=np.int8), (base[es[:, 0]], base[es[:, 1]])),
                shape=(k, k),
            )
            comp = connected_components(g, directed=False)[1]
            labels[C] = _canonical(comp[base])
    return labels


class ColorfulPolytope(RankedPoset):
    """Face poset of the colorful polytope, keyed by ``(colors, least vertex)``."""

    def __init__(self, graph: ColoredGraph, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.graph = graph
        self.color_set = tuple(graph.color_set)
        self.classes = None

    def face_of(self, colors, vertex: int) -> int:
        colors = frozenset(colors)
        lab = self.classes[colors]
        rep = int(np.flatnonzero(lab == lab[vertex])[0])
        return self.face((tuple(sorted(colors)), rep))


BOTTOM = ("bottom",)


def build_polytope(graph: ColoredGraph) -> ColorfulPolytope:
    """Faces of rank ``j`` are the ``~C`` classes for ``j``-subsets ``C``.

    Raises :class:`HypothesisError` if the graph is not connected, regular
    and properly colored with exactly Δ colors.
    """
    report = validate(graph)
    if not report.colorful_hypotheses:
        raise HypothesisError("; ".join(report.violations) or "graph hypotheses unmet")
    R = tuple(sorted(graph.color_set))
    if len(R) != report.regularity:
        raise HypothesisError(f"color set has {len(R)} colors but degree is {report.regularity}")
    classes = equivalence_classes(graph)

    ranks, keys, vsets = [-1], [BOTTOM], [frozenset()]
    index = {}
    for size in range(len(R) + 1):
        for C in itertools.combinations(R, size):
            lab = classes[frozenset(C)]
            order = np.argsort(lab, kind="stable")
            bounds = np.flatnonzero(np.diff(lab[order])) + 1
            for members in np.split(order, bounds):
                rep = int(members.min())
                key = (C, rep)
                index[key] = len(keys)
                ranks.append(size)
                keys.append(key)
                vsets.append(frozenset(members.tolist()))
    covers = [(0, index[((), v)]) for v in range(graph.num_vertices)]
    for key, f in index.items():
        C, rep = key
        for c in R:
            if c in C:
                continue
            D = tuple(sorted(C + (c,)))
            lab = classes[frozenset(D)]
            rep_d = int(np.flatnonzero(lab == lab[rep])[0])
            covers.append((f, index[(D, rep_d)]))
    poly = ColorfulPolytope(graph, ranks, covers, keys=keys, vertex_sets=vsets, payloads=graph.vertices)
    poly.classes = classes
    return poly


# --------------------------------------------------------------------------
# facet families of the colorful associahedron


def _short_diagonal(poly: ColorfulPolytope, i: int):
    P = poly.payloads[0].polygon
    if not 1 <= i <= P.num_vertices:
        raise ValueError(f"polygon vertex {i} out of range 1..{P.num_vertices}")
    return diagonal(P.wrap(i - 1), P.wrap(i + 1))


def facet_family(poly: ColorfulPolytope, i: int, c: int) -> int:
    """The facet whose vertices are the triangulations with ``{i-1, i+1}`` colored ``c``."""
    if not isinstance(poly.payloads[0], ColoredTriangulation) or poly.payloads[0].polygon.symmetric:
        raise ValueError("facet families are defined for colorful associahedra")
    if c not in poly.color_set:
        raise ValueError(f"color {c} not in {poly.color_set}")
    d = _short_diagonal(poly, i)
    members = [
        v for v, t in enumerate(poly.payloads) if d in t.diagonals and t.color_of(d) == c
    ]
    if not members:
        raise ValueError(f"no vertex has diagonal {d} colored {c}")
    rest = tuple(x for x in poly.color_set if x != c)
    f = poly.face((rest, min(members)))
    if poly.vertex_sets[f] != frozenset(members):
        raise AssertionError(f"facet G_({i},{c}) does not match its defining vertex set")
    return f


def facet_families(poly: ColorfulPolytope) -> dict[tuple[int, int], int]:
    N = poly.payloads[0].polygon.num_vertices
    return {(i, c): facet_family(poly, i, c) for i in range(1, N + 1) for c in poly.color_set}


def share_vertex(poly: RankedPoset, f: int, g: int) -> bool:
    return not poly.vertex_sets[f].isdisjoint(poly.vertex_sets[g])


def intersection_count(poly: ColorfulPolytope, i: int, c: int, j: int, c2: int, families=None) -> int:
    """Number of other family facets meeting both ``G_(i,c)`` and ``G_(j,c2)`` in a vertex."""
    if (i, c) == (j, c2):
        raise ValueError("the two facets must be distinct")
    fam = families or facet_families(poly)
    a, b = fam[(i, c)], fam[(j, c2)]
    return sum(
        1
        for g in fam.values()
        if g != a and g != b and share_vertex(poly, g, a) and share_vertex(poly, g, b)
    )


def cyclic_distance(i: int, j: int, N: int) -> int:
    d = (i - j) % N
    return min(d, N - d)


def predicted_intersection_count(n: int, i: int, c: int, j: int, c2: int) -> int:
    """Closed form for the intersection counts, seven cases."""
    N = n + 3
    d = cyclic_distance(i, j, N)
    same = c == c2
    if d == 0:
        if same:
            raise ValueError("the two facets must be distinct")
        return (n - 2) * n
    if d == 1:
        return (n - 1) ** 2 if same else (n - 1) * (n - 2)
    if d == 2:
        return (n - 1) * (n - 2) if same else (n - 2) ** 2
    return (n - 1) * (n - 3) if same else (n - 2) * (n - 3)


def meet_rank(poly: RankedPoset, f: int, g: int) -> int:
    """Largest rank of a face below both ``f`` and ``g`` (``-1`` if only the bottom)."""
    common = poly.downset(f) & poly.downset(g)
    return max(poly.ranks[h] for h in common)


def k_table(poly: ColorfulPolytope) -> list[dict]:
    """Computed versus predicted intersection counts for every ordered facet pair."""
    n = len(poly.color_set)
    fam = facet_families(poly)
    rows = []
    for (i, c), (j, c2) in itertools.permutations(fam, 2):
        rows.append(
            {
                "i": i,
                "c": c,
                "j": j,
                "c2": c2,
                "computed": intersection_count(poly, i, c, j, c2, fam),
                "predicted": predicted_intersection_count(n, i, c, j, c2),
            }
        )
    return rows


def class_partition(poly: ColorfulPolytope, colors: Sequence) -> list[frozenset]:
    lab = poly.classes[frozenset(colors)]
    out = {}
    for v, l in enumerate(lab.tolist()):
        out.setdefault(l, set()).add(v)
    return [frozenset(s) for s in out.values()]


def facet_meeting_violations(poly: ColorfulPolytope) -> list[tuple]:
    """Pairs of family facets contradicting the meeting rule.

    ``G_(i,c)`` and ``G_(j,c2)`` must share a vertex exactly when ``j`` is not
    ``i`` or a neighbor of ``i`` and ``c != c2``; when they do, they must share
    a face of rank ``n - 2``.
    """
    n = len(poly.color_set)
    N = n + 3
    fam = facet_families(poly)
    bad = []
    for (i, c), (j, c2) in itertools.combinations(fam, 2):
        a, b = fam[(i, c)], fam[(j, c2)]
        expect = cyclic_distance(i, j, N) > 1 and c != c2
        meets = share_vertex(poly, a, b)
        if meets != expect:
            bad.append(((i, c), (j, c2), "vertex"))
        elif meets and meet_rank(poly, a, b) != n - 2:
            bad.append(((i, c), (j, c2), "ridge"))
    return bad


def family_disjointness(poly: ColorfulPolytope) -> dict[tuple[int, int], bool]:
    """For ``i != j``: no facet of family ``i`` meets one of family ``j``."""
    N = poly.payloads[0].polygon.num_vertices
    fam = facet_families(poly)
    out = {}
    for i, j in itertools.permutations(range(1, N + 1), 2):
        out[(i, j)] = all(
            not share_vertex(poly, fam[(i, c)], fam[(j, c2)])
            for c in poly.color_set
            for c2 in poly.color_set
        )
    return out


def cyclohedron_facets(poly: ColorfulPolytope) -> dict[str, list[int]]:
    """Facets split by their missing color: the uncolor (central rigid
    diagonal) or an ordinary color (a rigid symmetric pair)."""
    from .triangulations import CENTRAL_COLOR

    out = {"central": [], "pair": []}
    for f in poly.faces_of_rank(poly.rank - 1):
        colors, _ = poly.keys[f]
        missing = set(poly.color_set) - set(colors)
        out["central" if missing == {CENTRAL_COLOR} else "pair"].append(f)
    return out


def rigid_diagonals(poly: ColorfulPolytope, f: int) -> set:
    """Diagonals kept fixed throughout facet ``f`` (those carrying the missing color)."""
    colors, rep = poly.keys[f]
    (missing,) = set(poly.color_set) - set(colors)
    t = poly.payloads[rep]
    rigid = set(t.diagonals_of_color(missing))
    for v in poly.vertex_sets[f]:
        if set(poly.payloads[v].diagonals_of_color(missing)) != rigid:
            raise AssertionError("a rigid diagonal moved inside its facet")
    return rigid
