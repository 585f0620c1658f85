"""Permutation groups, graph and polytope automorphisms, group structure checks."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Mapping, Sequence

import numpy as np

from .exchange import ColoredGraph, validate
from .poset import RankedPoset
from .search import forced_maps, isomorphisms, table_classes
from .triangulations import (
    CENTRAL_COLOR,
    is_polygon_symmetry,
    recolor,
    reflection,
    relabel,
    rotation,
)

log = logging.getLogger(__name__)

FULL = "full"
COLOR_PRESERVING = "color_preserving"
COLOR_RESPECTING = "color_respecting"


class Permutation:
    """A bijection of ``range(degree)``; ``(p * q)(x) == p(q(x))``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        self.images = tuple(int(x) for x in images)
        self._hash = hash(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        a = self.images
        return Permutation(a[i] for i in other.images)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        for _ in range(k):
            out = self * out
        return out

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = self * p
            k += 1
        return k

    def is_bijection(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if len(self.images) <= 12:
            return f"Permutation({list(self.images)})"
        return f"<Permutation of degree {self.degree}>"


def closure(generators: Sequence[Permutation], degree: int) -> frozenset:
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


class PermGroup:
    """Finite permutation group; elements are enumerated on demand."""

    def __init__(
        self,
        generators: Sequence[Permutation],
        degree: int,
        elements: Iterable[Permutation] | None = None,
        color_maps: Mapping[Permutation, dict] | None = None,
    ):
        self.generators = tuple(generators)
        self.degree = degree
        self._elements = frozenset(elements) if elements is not None else None
        self.color_maps = dict(color_maps or {})

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation], degree: int, color_maps=None):
        elements = frozenset(elements)
        gens = []
        span = frozenset([Permutation.identity(degree)])
        for g in sorted(elements, key=lambda p: p.images):
            if g not in span:
                gens.append(g)
                span = closure(gens, degree)
        if span != elements:
            raise ValueError("elements do not form a group")
        return cls(gens, degree, elements, color_maps)

    @property
    def elements(self) -> frozenset:
        if self._elements is None:
            self._elements = closure(self.generators, self.degree)
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def __iter__(self):
        return iter(self.elements)

    def color_map(self, g: Permutation) -> dict | None:
        return self.color_maps.get(g)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.elements <= other.elements

    def to_json(self) -> dict:
        def col(c):
            return "c*" if c == CENTRAL_COLOR else c

        return {
            "degree": self.degree,
            "order": self.order,
            "generators": [list(g.images) for g in self.generators],
            "color_maps": [
                {str(col(a)): col(b) for a, b in sorted(self.color_maps[g].items())}
                if g in self.color_maps
                else None
                for g in self.generators
            ],
        }


# --------------------------------------------------------------------------
# graph automorphisms


def _forced_ok(graph: ColoredGraph) -> bool:
    report = validate(graph)
    return graph.colored and graph.num_vertices > 0 and report.colorful_hypotheses and report.regularity == len(graph.color_set)


def graph_automorphisms(graph: ColoredGraph, mode: str = FULL) -> PermGroup:
    """Automorphism group of the graph, or its color-preserving/-respecting subgroup.

    Elements of the color-respecting group carry their induced color map in
    ``group.color_maps``.
    """
    if mode not in (FULL, COLOR_PRESERVING, COLOR_RESPECTING):
        raise ValueError(f"unknown mode {mode!r}")
    V = graph.num_vertices
    if mode != FULL and not graph.colored:
        raise ValueError("color modes need an edge-colored graph")
    R = tuple(graph.color_set)
    elements, cmaps = set(), {}
    if mode != FULL and _forced_ok(graph):
        table = graph.neighbor_table()
        perms = itertools.permutations(range(len(R))) if mode == COLOR_RESPECTING else [tuple(range(len(R)))]
        for pi in perms:
            for phi in forced_maps(table, table[list(pi)], 0, range(V)):
                g = Permutation(phi)
                elements.add(g)
                cmaps[g] = {R[a]: R[b] for a, b in enumerate(pi)}
    else:
        cidx = {c: k for k, c in enumerate(R)}
        colors = graph.edge_colors or [None] * len(graph.edges)

        def adjacency(relabel):
            adj = [[] for _ in range(V)]
            for (u, v), c in zip(graph.edges, colors):
                lab = relabel(c)
                adj[u].append((v, lab))
                adj[v].append((u, lab))
            return adj

        if mode == FULL:
            a = adjacency(lambda c: 0)
            for img in isomorphisms(a, [0] * V, a, [0] * V):
                elements.add(Permutation(img))
        else:
            src = adjacency(lambda c: cidx[c])
            perms = itertools.permutations(range(len(R))) if mode == COLOR_RESPECTING else [tuple(range(len(R)))]
            for pi in perms:
                dst = adjacency(lambda c: pi[cidx[c]])
                for img in isomorphisms(src, [0] * V, dst, [0] * V):
                    g = Permutation(img)
                    elements.add(g)
                    cmaps[g] = {R[a]: R[b] for a, b in enumerate(pi)}
        if V == 0:
            elements.add(Permutation(()))
    if mode == COLOR_RESPECTING:
        cmaps = {g: m for g, m in cmaps.items() if _induced_color_map(graph, g) == m}
    return PermGroup.from_elements(elements, V, cmaps or None)


def _induced_color_map(graph: ColoredGraph, g: Permutation) -> dict | None:
    """The color map induced by ``g`` or ``None`` if it is not well defined."""
    lookup = graph.edge_lookup()
    out = {}
    for (u, v), c in zip(graph.edges, graph.edge_colors):
        a, b = g(u), g(v)
        k = lookup.get((min(a, b), max(a, b)))
        if k is None:
            return None
        if out.setdefault(c, graph.edge_colors[k]) != graph.edge_colors[k]:
            return None
    return out


def is_color_respecting(graph: ColoredGraph, g: Permutation) -> bool:
    return _induced_color_map(graph, g) is not None


# --------------------------------------------------------------------------
# polytope automorphisms


def _flag_invariant(adj: np.ndarray) -> np.ndarray:
    """Per flag: lengths of the alternating ``(i, i+1)`` walks through it."""
    n, F = adj.shape
    cols = []
    start = np.arange(F)
    for i in range(n - 1):
        cur = adj[i + 1][adj[i][start]]
        length = np.ones(F, dtype=np.int64)
        done = cur == start
        while not done.all():
            cur = adj[i + 1][adj[i][cur]]
            length += ~done
            done |= cur == start
        cols.append(length)
    if not cols:
        return np.zeros(F, dtype=np.int64)
    return np.unique(np.stack(cols, axis=1), axis=0, return_inverse=True)[1].ravel()


def polytope_automorphisms(poset: RankedPoset) -> PermGroup:
    """Order-preserving face bijections, found by extending a base flag.

    An automorphism of a polytope is fixed by the image of one flag, so the
    group is the set of successful extensions of flag 0 to other flags.
    Returned as a permutation group on face ids.
    """
    flags, adj = poset.flag_graph()
    F = len(flags)
    if (adj < 0).any():
        raise ValueError("diamond condition fails; flag adjacency undefined")
    if adj.shape[0] == 0:
        return PermGroup([], len(poset), [Permutation.identity(len(poset))])
    classes = table_classes(adj, _flag_invariant(adj))
    candidates = np.flatnonzero(classes == classes[0])
    elements = []
    for phi in forced_maps(adj, adj, 0, candidates):
        face_map = np.full(len(poset), -1, dtype=np.int64)
        face_map[flags] = flags[phi]
        if (face_map < 0).any() or (face_map[flags] != flags[phi]).any():
            continue
        g = Permutation(face_map)
        if g.is_bijection():
            elements.append(g)
    log.debug("polytope automorphisms: %d of %d candidate flags", len(elements), len(candidates))
    return PermGroup.from_elements(elements, len(poset))


def vertex_action(poset: RankedPoset, group: PermGroup) -> PermGroup:
    """Restrict a face-permutation group to its action on vertex indices."""
    vf = poset.vertex_face()
    fv = {f: v for v, f in vf.items()}
    V = len(vf)
    images = {}
    for g in group.elements:
        h = Permutation(fv[g(vf[v])] for v in range(V))
        if h in images:
            raise ValueError("the group does not act faithfully on vertices")
        images[h] = g
    return PermGroup.from_elements(images, V)


# --------------------------------------------------------------------------
# explicit subgroups


def canonical_subgroup_generators(kind: str, mapping, graph: ColoredGraph) -> Permutation:
    """Vertex permutation induced by a color permutation or a polygon symmetry.

    ``kind="color_permutation"``: ``mapping`` sends colors to colors (the
    central sentinel is fixed).  ``kind="polygon_symmetry"``: ``mapping`` is
    a vertex map of the polygon as a tuple indexed by ``i - 1``.
    """
    if kind == "color_permutation":
        sigma = dict(mapping) if isinstance(mapping, Mapping) else dict(enumerate(mapping))
        return Permutation(graph.index(recolor(t, sigma)) for t in graph.vertices)
    if kind == "polygon_symmetry":
        P = graph.vertices[0].polygon
        if not is_polygon_symmetry(P, mapping):
            raise ValueError("not a symmetry of the polygon")
        return Permutation(graph.index(relabel(t, mapping)) for t in graph.vertices)
    raise ValueError(f"unknown kind {kind!r}")


def symmetric_factor_generators(graph: ColoredGraph) -> list[Permutation]:
    """Adjacent color transpositions ``(0 1), (1 2), ...`` as vertex permutations."""
    colors = sorted(c for c in graph.color_set if c != CENTRAL_COLOR)
    gens = []
    for a, b in zip(colors, colors[1:]):
        sigma = {c: c for c in colors}
        sigma[a], sigma[b] = b, a
        gens.append(canonical_subgroup_generators("color_permutation", sigma, graph))
    return gens


def dihedral_factor_generators(graph: ColoredGraph) -> tuple[Permutation, Permutation]:
    """(one-step rotation, reflection) of the polygon as vertex permutations."""
    P = graph.vertices[0].polygon
    return (
        canonical_subgroup_generators("polygon_symmetry", rotation(P, 1), graph),
        canonical_subgroup_generators("polygon_symmetry", reflection(P, 0), graph),
    )


# --------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class Dihedral:
    m: int
    generators: tuple | None = None  # (rotation, reflection)

    @property
    def order(self) -> int:
        return 2 * self.m


@dataclass(frozen=True)
class SymmetricTimesDihedral:
    n: int
    m: int
    symmetric_generators: tuple
    dihedral_generators: tuple

    @property
    def order(self) -> int:
        return factorial(self.n) * 2 * self.m


def dihedral(m: int, generators=None) -> Dihedral:
    return Dihedral(m, None if generators is None else tuple(generators))


def symmetric_times_dihedral(n: int, m: int, symmetric_generators, dihedral_generators) -> SymmetricTimesDihedral:
    return SymmetricTimesDihedral(n, m, tuple(symmetric_generators), tuple(dihedral_generators))


def _is_dihedral_pair(r: Permutation, s: Permutation, m: int) -> bool:
    e = Permutation.identity(r.degree)
    if r.order() != m or s * s != e or s == e:
        return False
    if (s * r) * (s * r) != e:
        return False
    return len(closure([r, s], r.degree)) == 2 * m


def _is_symmetric_presentation(gens: Sequence[Permutation], n: int, degree: int) -> bool:
    # Coxeter relations of type A_(n-1) plus the right order
    e = Permutation.identity(degree)
    if len(gens) != max(n - 1, 0):
        return False
    for i, a in enumerate(gens):
        if a * a != e:
            return False
        for j in range(i + 1, len(gens)):
            b = gens[j]
            k = 3 if j == i + 1 else 2
            if (a * b) ** k != e:
                return False
    return len(closure(list(gens), degree)) == factorial(n)


def _find_dihedral_pair(group: PermGroup, m: int):
    e = Permutation.identity(group.degree)
    rots = [g for g in group.elements if g.order() == m]
    invols = [g for g in group.elements if g != e and g * g == e]
    for r in rots:
        for s in invols:
            if _is_dihedral_pair(r, s, m):
                return r, s
    return None


def verify_group_structure(group: PermGroup, structure) -> bool:
    """Check ``group`` against ``dihedral(m)`` or ``symmetric_times_dihedral(n, m, ...)``.

    For the product the two explicit factors must lie in the group, present
    ``S_n`` and ``D_m``, commute elementwise and meet trivially; together with
    the order count this identifies the group as their direct product.
    """
    if group.order != structure.order:
        log.info("order %d != %d", group.order, structure.order)
        return False
    if isinstance(structure, Dihedral):
        pair = structure.generators or _find_dihedral_pair(group, structure.m)
        if pair is None:
            return False
        r, s = pair
        return r in group and s in group and _is_dihedral_pair(r, s, structure.m)
    sym = list(structure.symmetric_generators)
    r, s = structure.dihedral_generators
    if not all(g in group for g in sym + [r, s]):
        log.info("factor generators are not group elements")
        return False
    if not _is_symmetric_presentation(sym, structure.n, group.degree):
        log.info("symmetric factor fails its presentation")
        return False
    if not _is_dihedral_pair(r, s, structure.m):
        log.info("dihedral factor fails its presentation")
        return False
    if any(a * b != b * a for a in sym for b in (r, s)):
        log.info("factors do not commute")
        return False
    S = closure(sym, group.degree)
    D = closure([r, s], group.degree)
    if len(S & D) != 1:
        log.info("factors intersect non-trivially")
        return False
    return True


def action_on_sets(group: PermGroup, sets: Sequence[frozenset]) -> list[tuple[int, ...]]:
    """Permutations of ``sets`` induced by the (vertex) group elements."""
    where = {s: k for k, s in enumerate(sets)}
    out = []
    for g in group.elements:
        img = []
        for s in sets:
            t = frozenset(g(v) for v in s)
            if t not in where:
                raise ValueError("the sets are not permuted by the group")
            img.append(where[t])
        out.append(tuple(img))
    return out


def is_block_system(perms: Sequence[Sequence[int]], blocks: Sequence[Sequence[int]]) -> bool:
    """Every permutation maps each block wholly onto some block."""
    block_of = {x: b for b, blk in enumerate(blocks) for x in blk}
    for p in perms:
        for blk in blocks:
            if len({block_of[p[x]] for x in blk}) != 1:
                return False
    return True
