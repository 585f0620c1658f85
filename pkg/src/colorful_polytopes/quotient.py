"""Classical associahedra/cyclohedra, quotients by vertex groups, isomorphisms, coverings."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from scipy.cluster.hierarchy import DisjointSet

from .exchange import _sort_key
from .poset import RankedPoset
from .search import isomorphisms
from .symmetry import PermGroup, Permutation
from .triangulations import Polygon, enumerate_triangulations

BOTTOM = ("bottom",)


def _fixed_diagonal_poset(polygon: Polygon, rank: int) -> RankedPoset:
    """Faces = sets of diagonals (closed under the central inversion when
    the polygon is symmetric) that occur together in some triangulation; the
    face consists of all triangulations containing the set.
    """
    verts = sorted(enumerate_triangulations(polygon), key=_sort_key)
    members: dict[frozenset, set] = {}
    for v, t in enumerate(verts):
        orbits = sorted({polygon.orbit(d) for d in t.diagonals})
        for k in range(len(orbits) + 1):
            for chosen in itertools.combinations(orbits, k):
                D = frozenset(d for o in chosen for d in o)
                members.setdefault(D, set()).add(v)

    def n_orbits(D):
        return len({polygon.orbit(d) for d in D})

    faces = sorted(members, key=lambda D: (-n_orbits(D), sorted(D)))
    # rank-0 faces first in vertex order so vertex numbering matches ``verts``
    zero = sorted((D for D in faces if n_orbits(D) == rank), key=lambda D: min(members[D]))
    faces = zero + [D for D in faces if n_orbits(D) != rank]
    index = {D: i + 1 for i, D in enumerate(faces)}
    ranks = [-1] + [rank - n_orbits(D) for D in faces]
    keys = [BOTTOM] + [("fixed", tuple(sorted(D))) for D in faces]
    vsets = [frozenset()] + [frozenset(members[D]) for D in faces]
    covers = [(0, index[D]) for D in zero]
    for D in faces:
        for o in {polygon.orbit(d) for d in D}:
            covers.append((index[D], index[D - set(o)]))
    return RankedPoset(ranks, covers, keys=keys, vertex_sets=vsets, payloads=verts)


def build_classical_associahedron(n: int) -> RankedPoset:
    """Face poset of the n-associahedron from fixed sets of uncolored diagonals."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _fixed_diagonal_poset(Polygon.for_associahedron(n), n)


def build_classical_cyclohedron(n: int) -> RankedPoset:
    """Face poset of the (n+1)-cyclohedron from centrally symmetric diagonal sets."""
    return _fixed_diagonal_poset(Polygon.for_cyclohedron(n), n + 1)


def classical_facet(poset: RankedPoset, j: int) -> int:
    """Facet ``F_j``: triangulations containing the short diagonal ``{j-1, j+1}``."""
    P = poset.payloads[0].polygon
    d = tuple(sorted((P.wrap(j - 1), P.wrap(j + 1))))
    return poset.face(("fixed", (d,)))


# --------------------------------------------------------------------------
# quotients


def lift_to_faces(poset: RankedPoset, g: Permutation) -> list[int]:
    """Face permutation induced by a vertex permutation; ``ValueError`` if ``g``
    is not an automorphism of the poset."""
    lookup = {(poset.ranks[f], poset.vertex_sets[f]): f for f in range(len(poset))}
    if len(lookup) != len(poset):
        raise ValueError("faces are not determined by rank and vertex set")
    img = []
    for f in range(len(poset)):
        key = (poset.ranks[f], frozenset(g(v) for v in poset.vertex_sets[f]))
        if key not in lookup:
            raise ValueError(f"group element is not an automorphism (face {f} has no image)")
        img.append(lookup[key])
    covers = set(poset.covers())
    if any((img[a], img[b]) not in covers for a, b in covers):
        raise ValueError("group element is not an automorphism (a cover is not preserved)")
    return img


class QuotientPoset(RankedPoset):
    """Orbits of faces; two orbits are incident iff some representatives are."""

    def __init__(self, source: RankedPoset, orbits: list[list[int]]):
        self.source = source
        self.orbits = orbits
        self.orbit_of = {}
        for k, orb in enumerate(orbits):
            for f in orb:
                self.orbit_of[f] = k
        ranks = [source.ranks[orb[0]] for orb in orbits]
        covers = {(self.orbit_of[a], self.orbit_of[b]) for a, b in source.covers()}
        keys = [("orbit", source.keys[min(orb)]) for orb in orbits]
        super().__init__(ranks, sorted(covers), keys=keys)

    def incident(self, a: int, b: int) -> bool:
        """Orbit ``a`` lies below orbit ``b`` (checked on representatives)."""
        return any(self.source.leq(x, y) for x in self.orbits[a] for y in self.orbits[b])


def quotient(poset: RankedPoset, group: PermGroup) -> QuotientPoset:
    """Orbit poset of ``poset`` under a group acting on its vertices."""
    uf = DisjointSet(range(len(poset)))
    for g in group.generators:
        for f, h in enumerate(lift_to_faces(poset, g)):
            uf.merge(f, h)
    orbits = sorted((sorted(s) for s in uf.subsets()), key=lambda o: (poset.ranks[o[0]], o[0]))
    for orb in orbits:
        if len({poset.ranks[f] for f in orb}) != 1:
            raise AssertionError("orbit mixes ranks")
    return QuotientPoset(poset, orbits)


# --------------------------------------------------------------------------
# isomorphism


def _signature(p: RankedPoset):
    return (
        p.rank,
        p.f_vector(),
        sorted(Counter((p.ranks[f], len(p.up[f]), len(p.down[f])) for f in range(len(p))).items()),
    )


def _hasse(p: RankedPoset):
    adj = [[] for _ in range(len(p))]
    for a, b in p.covers():
        adj[a].append((b, 0))
        adj[b].append((a, 1))
    colors = [(p.ranks[f], len(p.up[f]), len(p.down[f])) for f in range(len(p))]
    return adj, colors


def poset_isomorphic(a: RankedPoset, b: RankedPoset) -> tuple[bool, dict | None]:
    """Decide isomorphism of two ranked posets; returns ``(found, witness)``.

    The witness maps face keys of ``a`` to face keys of ``b``.  Search runs
    on the Hasse diagrams with faces colored by (rank, up-degree,
    down-degree).
    """
    if len(a) != len(b) or _signature(a) != _signature(b):
        return False, None
    adj1, col1 = _hasse(a)
    adj2, col2 = _hasse(b)
    for img in isomorphisms(adj1, col1, adj2, col2, first_only=True):
        return True, {a.keys[f]: b.keys[img[f]] for f in range(len(a))}
    return False, None


# --------------------------------------------------------------------------
# coverings


@dataclass
class CoveringMap:
    source: RankedPoset
    target: RankedPoset
    assignment: list
    fiber_sizes: Counter
    failures: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    @property
    def degree(self) -> int | None:
        """Common size of the vertex fibers, if uniform."""
        return next(iter(self.fiber_sizes)) if len(self.fiber_sizes) == 1 else None

    def witness(self) -> dict:
        return {
            repr(self.source.keys[f]): repr(self.target.keys[g])
            for f, g in enumerate(self.assignment)
            if g is not None
        }


def covering_map(source: RankedPoset, target: RankedPoset, projection: Sequence[int]) -> CoveringMap:
    """Extend a vertex projection to faces and check the covering properties.

    A face maps to the target face of the same rank whose vertex set is the
    image of its vertex set.  Checked: every face has such an image,
    incidences are preserved, the map is onto, and all vertex fibers have
    the same size.
    """
    lookup = {(target.ranks[g], target.vertex_sets[g]): g for g in range(len(target))}
    failures = []
    assignment = []
    for f in range(len(source)):
        key = (source.ranks[f], frozenset(projection[v] for v in source.vertex_sets[f]))
        g = lookup.get(key)
        if g is None:
            failures.append(f"face {source.keys[f]!r} has no image of rank {key[0]}")
        assignment.append(g)
    tcovers = set(target.covers())
    for a, b in source.covers():
        ga, gb = assignment[a], assignment[b]
        if ga is not None and gb is not None and (ga, gb) not in tcovers:
            failures.append(f"incidence {source.keys[a]!r} < {source.keys[b]!r} not preserved")
    missing = set(range(len(target))) - set(assignment)
    if missing:
        failures.append(f"not surjective: {len(missing)} target faces missed")
    fibers = Counter(projection[v] for v in range(len(projection)))
    sizes = Counter(fibers.values())
    if len(set(fibers)) != len(target.faces_of_rank(0)):
        failures.append("vertex projection is not onto")
    if len(sizes) != 1:
        failures.append(f"vertex fibers have sizes {dict(sizes)}")
    return CoveringMap(source, target, assignment, sizes, failures)


def classical_facet_census(poset: RankedPoset, smaller: RankedPoset) -> dict:
    """Facets isomorphic to the next smaller associahedron and how they meet.

    Returns the facet ids found isomorphic to ``smaller`` and, for the
    short-diagonal facets ``F_j``, which pairs share a ridge.
    """
    n = poset.rank
    N = n + 3
    iso = [
        f
        for f in poset.faces_of_rank(n - 1)
        if poset_isomorphic(poset.section(poset.bottom, f), smaller)[0]
    ]
    F = {j: classical_facet(poset, j) for j in range(1, N + 1)}
    ridge = {}
    for j, k in itertools.combinations(range(1, N + 1), 2):
        common = poset.downset(F[j]) & poset.downset(F[k])
        ridge[(j, k)] = max(poset.ranks[h] for h in common) == n - 2
    return {"isomorphic": iso, "short": F, "ridge": ridge}
