"""Polygons, diagonals, (colored) triangulations and flips.

Vertices of a polygon are labeled ``1..N`` in cyclic order.  A diagonal is a
normalized pair ``(i, j)`` with ``i < j``.  Colors are plain integers
``0..n-1``; the uncolored central diagonal of a centrally symmetric
triangulation carries the sentinel :data:`CENTRAL_COLOR`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Mapping, Sequence

PLAIN = "plain"
CENTRALLY_SYMMETRIC = "centrally_symmetric"

#: label of the uncolored central diagonal (serialized as ``"c*"``)
CENTRAL_COLOR = -1

Diagonal = tuple[int, int]


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def diagonal(i: int, j: int) -> Diagonal:
    """Normalize an unordered vertex pair."""
    return (i, j) if i < j else (j, i)


def crosses(d: Diagonal, e: Diagonal) -> bool:
    """True iff the two diagonals cross in the interior of the polygon.

    Exactly one endpoint of ``e`` must lie strictly inside the open arc of
    ``d``; diagonals sharing an endpoint never cross.
    """
    i, j = d
    k, l = e
    if k in d or l in d:
        return False
    return (i < k < j) != (i < l < j)


@dataclass(frozen=True)
class Polygon:
    num_vertices: int
    kind: str = PLAIN

    def __post_init__(self):
        if self.kind not in (PLAIN, CENTRALLY_SYMMETRIC):
            raise ValueError(f"unknown polygon kind {self.kind!r}")
        if self.num_vertices < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        if self.kind == CENTRALLY_SYMMETRIC:
            if self.num_vertices % 2 or self.num_vertices < 6:
                raise ValueError(
                    "a centrally symmetric polygon needs an even number >= 6 of vertices"
                )

    @classmethod
    def for_associahedron(cls, n: int) -> "Polygon":
        if n < 0:
            raise ValueError("n must be non-negative")
        return cls(n + 3)

    @classmethod
    def for_cyclohedron(cls, n: int) -> "Polygon":
        if n < 1:
            raise ValueError("cyclohedra need n >= 1")
        return cls(2 * n + 4, CENTRALLY_SYMMETRIC)

    @property
    def symmetric(self) -> bool:
        return self.kind == CENTRALLY_SYMMETRIC

    @property
    def n(self) -> int:
        """Number of colors used by a colored triangulation of this polygon."""
        if self.symmetric:
            return (self.num_vertices - 4) // 2
        return self.num_vertices - 3

    def wrap(self, i: int) -> int:
        return (i - 1) % self.num_vertices + 1

    def antipode(self, i: int) -> int:
        return self.wrap(i + self.num_vertices // 2)

    def is_boundary(self, d: Diagonal) -> bool:
        i, j = d
        return j - i == 1 or (i == 1 and j == self.num_vertices)

    def is_diagonal(self, d: Diagonal) -> bool:
        i, j = d
        return 1 <= i < j <= self.num_vertices and not self.is_boundary(d)

    def boundary_edges(self) -> frozenset[Diagonal]:
        N = self.num_vertices
        return frozenset(diagonal(i, i % N + 1) for i in range(1, N + 1))

    def diagonals(self) -> list[Diagonal]:
        N = self.num_vertices
        return [
            (i, j)
            for i in range(1, N + 1)
            for j in range(i + 2, N + 1)
            if not (i == 1 and j == N)
        ]

    def is_short(self, d: Diagonal) -> bool:
        i, j = d
        return j - i == 2 or (j - i) == self.num_vertices - 2

    def is_central(self, d: Diagonal) -> bool:
        return self.symmetric and d[1] - d[0] == self.num_vertices // 2

    def mirror(self, d: Diagonal) -> Diagonal:
        """Image of ``d`` under the central inversion."""
        return diagonal(self.antipode(d[0]), self.antipode(d[1]))

    def orbit(self, d: Diagonal) -> tuple[Diagonal, ...]:
        if not self.symmetric or self.is_central(d):
            return (d,)
        return tuple(sorted((d, self.mirror(d))))

    def to_json(self) -> dict:
        return {"n_vertices": self.num_vertices, "kind": self.kind}


@dataclass(frozen=True)
class Triangulation:
    polygon: Polygon
    diagonals: tuple[Diagonal, ...]

    @classmethod
    def from_diagonals(cls, polygon: Polygon, diagonals: Iterable[Sequence[int]]):
        t = cls(polygon, tuple(sorted(diagonal(*d) for d in diagonals)))
        t.validate()
        return t

    def validate(self):
        P = self.polygon
        ds = self.diagonals
        if len(set(ds)) != len(ds):
            raise ValueError("repeated diagonal")
        for d in ds:
            if not P.is_diagonal(d):
                raise ValueError(f"{d} is not a diagonal of the {P.num_vertices}-gon")
        for d, e in itertools.combinations(ds, 2):
            if crosses(d, e):
                raise ValueError(f"diagonals {d} and {e} cross")
        if len(ds) != P.num_vertices - 3:
            raise ValueError("diagonal set is not maximal")
        if P.symmetric:
            if set(ds) != {P.mirror(d) for d in ds}:
                raise ValueError("triangulation is not centrally symmetric")

    @property
    def support(self) -> "Triangulation":
        return self

    def edges(self) -> frozenset[Diagonal]:
        return self.polygon.boundary_edges() | frozenset(self.diagonals)

    def triangles(self) -> list[tuple[int, int, int]]:
        E = self.edges()
        N = self.polygon.num_vertices
        return [
            (a, b, c)
            for a, b, c in itertools.combinations(range(1, N + 1), 3)
            if (a, b) in E and (b, c) in E and (a, c) in E
        ]

    def central_diagonal(self) -> Diagonal | None:
        for d in self.diagonals:
            if self.polygon.is_central(d):
                return d
        return None

    def available_flips(self) -> list[Diagonal]:
        """One diagonal per independent flip (pair representatives for symmetric polygons)."""
        P = self.polygon
        if not P.symmetric:
            return list(self.diagonals)
        return [d for d in self.diagonals if P.orbit(d)[0] == d]

    def to_json(self) -> dict:
        return {
            "polygon": self.polygon.to_json(),
            "diagonals": [list(d) for d in self.diagonals],
        }


@dataclass(frozen=True)
class ColoredTriangulation:
    polygon: Polygon
    coloring: tuple[tuple[Diagonal, int], ...]

    @classmethod
    def from_coloring(cls, polygon: Polygon, coloring: Mapping[Diagonal, int] | Iterable):
        items = coloring.items() if isinstance(coloring, Mapping) else coloring
        t = cls(polygon, tuple(sorted((diagonal(*d), c) for d, c in items)))
        t.validate()
        return t

    @property
    def diagonals(self) -> tuple[Diagonal, ...]:
        return tuple(d for d, _ in self.coloring)

    @property
    def support(self) -> Triangulation:
        return Triangulation(self.polygon, self.diagonals)

    def color_of(self, d: Diagonal) -> int:
        for e, c in self.coloring:
            if e == d:
                return c
        raise KeyError(d)

    def diagonals_of_color(self, c: int) -> tuple[Diagonal, ...]:
        return tuple(d for d, e in self.coloring if e == c)

    def colors(self) -> frozenset[int]:
        return frozenset(c for _, c in self.coloring)

    def validate(self):
        self.support.validate()
        P = self.polygon
        cmap = dict(self.coloring)
        if not P.symmetric:
            if len(set(cmap.values())) != len(cmap) or CENTRAL_COLOR in cmap.values():
                raise ValueError("colors of a triangulation must be pairwise distinct")
            return
        for d, c in cmap.items():
            if P.is_central(d):
                if c != CENTRAL_COLOR:
                    raise ValueError("the central diagonal must stay uncolored")
            elif c == CENTRAL_COLOR or cmap[P.mirror(d)] != c:
                raise ValueError(f"diagonal {d} and its mirror image must share a color")
        pair_colors = [c for d, c in cmap.items() if not P.is_central(d)]
        if len(set(pair_colors)) * 2 != len(pair_colors):
            raise ValueError("distinct symmetric pairs need distinct colors")

    def available_flips(self) -> list[Diagonal]:
        return self.support.available_flips()

    def to_json(self) -> dict:
        out = self.support.to_json()
        out["colors"] = [
            [i, j, "c*" if c == CENTRAL_COLOR else c] for (i, j), c in self.coloring
        ]
        return out


AnyTriangulation = Triangulation | ColoredTriangulation


def from_json(data: dict) -> AnyTriangulation:
    """Inverse of ``to_json`` for both plain and colored triangulations."""
    poly = Polygon(int(data["polygon"]["n_vertices"]), data["polygon"].get("kind", PLAIN))
    if "colors" not in data:
        return Triangulation.from_diagonals(poly, data["diagonals"])
    coloring = [
        ((i, j), CENTRAL_COLOR if c == "c*" else int(c)) for i, j, c in data["colors"]
    ]
    t = ColoredTriangulation.from_coloring(poly, coloring)
    if sorted(t.diagonals) != sorted(diagonal(*d) for d in data["diagonals"]):
        raise ValueError("colored diagonals do not match the diagonal list")
    return t


# --------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _triangulate(vertices: tuple[int, ...]) -> tuple[frozenset, ...]:
    # ear on the boundary edge (v0, v1): its apex splits the polygon in two
    k = len(vertices)
    if k < 3:
        return (frozenset(),)
    if k == 3:
        return (frozenset(),)
    v0, v1 = vertices[0], vertices[1]
    out = []
    for m in range(2, k):
        apex = vertices[m]
        new = []
        if m > 2:
            new.append(diagonal(v1, apex))
        if m < k - 1:
            new.append(diagonal(apex, v0))
        left = _triangulate(vertices[1 : m + 1])
        right = _triangulate(vertices[m:] + (v0,))
        for a in left:
            for b in right:
                out.append(a | b | frozenset(new))
    return tuple(out)


def enumerate_triangulations(polygon: Polygon) -> set[Triangulation]:
    """All triangulations; only the centrally symmetric ones for symmetric polygons."""
    raw = _triangulate(tuple(range(1, polygon.num_vertices + 1)))
    out = set()
    for ds in raw:
        if polygon.symmetric and ds != {polygon.mirror(d) for d in ds}:
            continue
        out.add(Triangulation(polygon, tuple(sorted(ds))))
    return out


def _check_colors(polygon: Polygon, colors) -> tuple[int, ...]:
    if colors is None:
        return tuple(range(polygon.n))
    colors = tuple(colors)
    if len(colors) != polygon.n or len(set(colors)) != len(colors):
        raise ValueError(
            f"need {polygon.n} distinct colors for this polygon, got {len(colors)}"
        )
    if CENTRAL_COLOR in colors:
        raise ValueError("the central sentinel is not an ordinary color")
    return colors


def colorings(t: Triangulation, colors: Sequence[int] | None = None) -> list[ColoredTriangulation]:
    """Every admissible coloring of one triangulation."""
    P = t.polygon
    colors = _check_colors(P, colors)
    if not P.symmetric:
        return [
            ColoredTriangulation(P, tuple(zip(t.diagonals, perm)))
            for perm in itertools.permutations(colors)
        ]
    pairs = sorted({P.orbit(d) for d in t.diagonals if not P.is_central(d)})
    central = t.central_diagonal()
    out = []
    for perm in itertools.permutations(colors):
        cmap = {central: CENTRAL_COLOR}
        for pair, c in zip(pairs, perm):
            for d in pair:
                cmap[d] = c
        out.append(ColoredTriangulation(P, tuple(sorted(cmap.items()))))
    return out


def enumerate_colored_triangulations(
    polygon: Polygon, colors: Sequence[int] | None = None
) -> set[ColoredTriangulation]:
    colors = _check_colors(polygon, colors)
    out = set()
    for t in enumerate_triangulations(polygon):
        out.update(colorings(t, colors))
    return out


def predicted_count(polygon: Polygon, colored: bool = False) -> int:
    n = polygon.n
    if polygon.symmetric:
        base = (n + 2) * catalan(n + 1)
        return factorial(n) * comb(2 * n + 2, n + 1) if colored else base
    return factorial(n) * catalan(n + 1) if colored else catalan(n + 1)


# --------------------------------------------------------------------------
# flips


def _flip_one(polygon: Polygon, diags: set[Diagonal], d: Diagonal) -> Diagonal:
    a, b = d
    edges = diags | polygon.boundary_edges()
    apexes = [
        x
        for x in range(1, polygon.num_vertices + 1)
        if x != a and x != b and diagonal(a, x) in edges and diagonal(b, x) in edges
    ]
    if len(apexes) != 2:
        raise ValueError(f"{d} does not separate two triangles")
    return diagonal(*apexes)


def flip(t: AnyTriangulation, d: Sequence[int]) -> AnyTriangulation:
    """Flip ``d`` (and its mirror image, for non-central symmetric diagonals).

    Colors travel with the flipped diagonals.
    """
    d = diagonal(*d)
    P = t.polygon
    if d not in t.diagonals:
        raise ValueError(f"{d} is not a diagonal of the triangulation")
    diags = set(t.diagonals)
    replaced = {}
    for e in P.orbit(d):
        new = _flip_one(P, diags, e)
        diags.discard(e)
        diags.add(new)
        replaced[e] = new
    if isinstance(t, Triangulation):
        return Triangulation(P, tuple(sorted(diags)))
    return ColoredTriangulation(
        P, tuple(sorted((replaced.get(e, e), c) for e, c in t.coloring))
    )


def flip_color(t: ColoredTriangulation, d: Diagonal) -> int:
    return t.color_of(diagonal(*d))


# --------------------------------------------------------------------------
# relabelings


def rotation(polygon: Polygon, k: int = 1) -> tuple[int, ...]:
    """Vertex map ``i -> i + k`` as a tuple indexed by ``i - 1``."""
    return tuple(polygon.wrap(i + k) for i in range(1, polygon.num_vertices + 1))


def reflection(polygon: Polygon, k: int = 0) -> tuple[int, ...]:
    """Vertex map ``i -> k + 1 - i`` (mod N)."""
    return tuple(polygon.wrap(k + 1 - i) for i in range(1, polygon.num_vertices + 1))


def is_polygon_symmetry(polygon: Polygon, gamma: Sequence[int]) -> bool:
    N = polygon.num_vertices
    if sorted(gamma) != list(range(1, N + 1)):
        return False
    step = (gamma[1] - gamma[0]) % N
    if step not in (1, N - 1):
        return False
    return all((gamma[i + 1] - gamma[i]) % N == step for i in range(N - 1))


def relabel(t: AnyTriangulation, gamma: Sequence[int]) -> AnyTriangulation:
    """Image of ``t`` under a polygon symmetry; colors stay on their diagonals."""
    if not is_polygon_symmetry(t.polygon, gamma):
        raise ValueError("not a symmetry of the polygon")

    def img(d):
        return diagonal(gamma[d[0] - 1], gamma[d[1] - 1])

    if isinstance(t, Triangulation):
        return Triangulation(t.polygon, tuple(sorted(img(d) for d in t.diagonals)))
    return ColoredTriangulation(
        t.polygon, tuple(sorted((img(d), c) for d, c in t.coloring))
    )


def recolor(t: ColoredTriangulation, sigma: Mapping[int, int]) -> ColoredTriangulation:
    """Replace every color ``c`` by ``sigma[c]``; the central sentinel is fixed."""
    return ColoredTriangulation(
        t.polygon,
        tuple((d, c if c == CENTRAL_COLOR else sigma[c]) for d, c in t.coloring),
    )
