"""Exchange graphs of (colored) triangulations and edge-coloring diagnostics."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Hashable, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .triangulations import (
    CENTRAL_COLOR,
    ColoredTriangulation,
    Polygon,
    Triangulation,
    enumerate_colored_triangulations,
    enumerate_triangulations,
    flip,
    from_json as triangulation_from_json,
)


def _sort_key(t):
    # deterministic vertex order: by serialized diagonals, then colors
    if isinstance(t, ColoredTriangulation):
        return (t.diagonals, tuple(c for _, c in t.coloring))
    if isinstance(t, Triangulation):
        return (t.diagonals, ())
    return ((), (t,))


@dataclass(frozen=True, eq=False)
class ColoredGraph:
    """Finite simple graph with an (optional) edge coloring.

    ``edges`` are pairs ``(u, v)`` with ``u < v``; ``edge_colors[k]`` is the
    color of ``edges[k]`` or ``None`` for uncolored graphs.
    """

    vertices: tuple
    edges: tuple[tuple[int, int], ...]
    edge_colors: tuple | None = None
    color_set: tuple = ()
    _index: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < v < len(self.vertices)):
                raise ValueError(f"bad edge {(u, v)}")
        if len(set(self.edges)) != len(self.edges):
            raise ValueError("multiple edges")
        if self.edge_colors is not None and len(self.edge_colors) != len(self.edges):
            raise ValueError("edge_colors must align with edges")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def colored(self) -> bool:
        return self.edge_colors is not None

    def index(self, payload: Hashable) -> int:
        if self._index is None:
            object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.vertices)})
        return self._index[payload]

    def edge_color(self, u: int, v: int):
        k = self.edge_lookup()[(min(u, v), max(u, v))]
        return None if self.edge_colors is None else self.edge_colors[k]

    def edge_lookup(self) -> dict:
        cache = self.__dict__.get("_edge_lookup")
        if cache is None:
            cache = {e: k for k, e in enumerate(self.edges)}
            object.__setattr__(self, "_edge_lookup", cache)
        return cache

    def adjacency(self) -> list[list[tuple[int, Any]]]:
        adj = [[] for _ in self.vertices]
        colors = self.edge_colors or [None] * len(self.edges)
        for (u, v), c in zip(self.edges, colors):
            adj[u].append((v, c))
            adj[v].append((u, c))
        return adj

    def neighbor_table(self) -> np.ndarray:
        """``table[k, v]`` = neighbor of ``v`` along the edge of color ``color_set[k]``.

        Only defined for properly colored regular graphs using every color at
        every vertex; raises ``ValueError`` otherwise.
        """
        cidx = {c: k for k, c in enumerate(self.color_set)}
        table = np.full((len(self.color_set), self.num_vertices), -1, dtype=np.int64)
        if not self.colored:
            raise ValueError("graph is uncolored")
        for (u, v), c in zip(self.edges, self.edge_colors):
            k = cidx[c]
            if table[k, u] != -1 or table[k, v] != -1:
                raise ValueError("coloring is not proper")
            table[k, u] = v
            table[k, v] = u
        if (table < 0).any():
            raise ValueError("some vertex misses a color")
        return table

    def subgraph_colors(self, colors) -> list[tuple[int, int]]:
        colors = set(colors)
        return [e for e, c in zip(self.edges, self.edge_colors) if c in colors]

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        def payload(p, i):
            return p.to_json() if hasattr(p, "to_json") else i

        def col(c):
            return "c*" if c == CENTRAL_COLOR else c

        return {
            "vertices": [payload(p, i) for i, p in enumerate(self.vertices)],
            "edges": [list(e) for e in self.edges],
            "edge_color": None
            if self.edge_colors is None
            else [col(c) for c in self.edge_colors],
            "color_set": [col(c) for c in self.color_set],
        }

    def to_dot(self) -> str:
        lines = ["graph G {"]
        for i, p in enumerate(self.vertices):
            if hasattr(p, "to_json"):
                data = p.to_json()
                label = json.dumps(data.get("colors", data["diagonals"]))
            else:
                label = str(i)
            lines.append(f'  {i} [label="{label.replace(chr(34), "")}"];')
        colors = self.edge_colors or [None] * len(self.edges)
        for (u, v), c in zip(self.edges, colors):
            attr = "" if c is None else f' [color="{"c*" if c == CENTRAL_COLOR else c}"]'
            lines.append(f"  {u} -- {v}{attr};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_from_json(data: dict) -> ColoredGraph:
    """Parse the JSON produced by :meth:`ColoredGraph.to_json`.

    Vertex payloads that look like serialized triangulations are decoded;
    anything else is kept as-is.  Structural problems (loops, multi-edges,
    misaligned colors) raise ``ValueError``.
    """

    def col(c):
        return CENTRAL_COLOR if c == "c*" else c

    verts = []
    for i, p in enumerate(data["vertices"]):
        if isinstance(p, dict) and "polygon" in p:
            verts.append(triangulation_from_json(p))
        else:
            verts.append(p if p is not None else i)
    edges = []
    for e in data["edges"]:
        u, v = int(e[0]), int(e[1])
        edges.append((u, v) if u < v else (v, u))
    colors = data.get("edge_color")
    if colors is not None:
        colors = tuple(col(c) for c in colors)
    color_set = data.get("color_set")
    if color_set is None:
        color_set = sorted(set(colors or ()))
    order = sorted(range(len(edges)), key=lambda k: edges[k])
    return ColoredGraph(
        tuple(verts),
        tuple(edges[k] for k in order),
        None if colors is None else tuple(colors[k] for k in order),
        tuple(col(c) for c in color_set),
    )


def _build(vertices, neighbors) -> ColoredGraph:
    """Apply every flip at every vertex and deduplicate the resulting edges."""
    vertices = tuple(sorted(vertices, key=_sort_key))
    index = {t: i for i, t in enumerate(vertices)}
    found = {}
    for u, t in enumerate(vertices):
        for s, color in neighbors(t):
            v = index[s]
            e = (u, v) if u < v else (v, u)
            if found.setdefault(e, color) != color:
                raise AssertionError(f"edge {e} received two colors")
    edges = tuple(sorted(found))
    colors = tuple(found[e] for e in edges)
    return ColoredGraph(vertices, edges, colors, tuple(sorted(set(colors))), index)


def build_uncolored_exchange_graph(n: int) -> ColoredGraph:
    """The flip graph of the ``(n+3)``-gon; edges carry no colors."""
    if n < 0:
        raise ValueError("n must be non-negative")
    P = Polygon.for_associahedron(n)
    g = _build(
        enumerate_triangulations(P), lambda t: [(flip(t, d), None) for d in t.diagonals]
    )
    return ColoredGraph(g.vertices, g.edges, None, (), g._index)


def build_colorful_exchange_graph(n: int) -> ColoredGraph:
    """Colored triangulations of the ``(n+3)``-gon joined by color-keeping flips."""
    if n < 0:
        raise ValueError("n must be non-negative")
    P = Polygon.for_associahedron(n)
    g = _build(
        enumerate_colored_triangulations(P),
        lambda t: [(flip(t, d), c) for d, c in t.coloring],
    )
    return ColoredGraph(g.vertices, g.edges, g.edge_colors, tuple(range(n)), g._index)


def build_cyclohedron_exchange_graph(n: int) -> ColoredGraph:
    """Centrally symmetric colored triangulations of the ``(2n+4)``-gon.

    Central flips are colored :data:`CENTRAL_COLOR`, pair flips by the
    color of the pair.
    """
    P = Polygon.for_cyclohedron(n)
    g = _build(
        enumerate_colored_triangulations(P),
        lambda t: [(flip(t, d), t.color_of(d)) for d in t.available_flips()],
    )
    return ColoredGraph(
        g.vertices, g.edges, g.edge_colors, (CENTRAL_COLOR,) + tuple(range(n)), g._index
    )


def build_uncolored_cyclohedron_graph(n: int) -> ColoredGraph:
    P = Polygon.for_cyclohedron(n)
    g = _build(
        enumerate_triangulations(P),
        lambda t: [(flip(t, d), None) for d in t.available_flips()],
    )
    return ColoredGraph(g.vertices, g.edges, None, (), g._index)


# --------------------------------------------------------------------------
# validation


@dataclass
class GraphReport:
    num_vertices: int
    num_edges: int
    degree_profile: Counter
    is_regular: bool
    regularity: int | None
    is_simple: bool
    is_proper: bool | None
    num_colors: int
    chromatic_index_witness: int | None
    is_connected: bool
    violations: list[str]

    @property
    def colorful_hypotheses(self) -> bool:
        """Connected, regular, properly colored with exactly Δ colors."""
        return bool(
            self.is_simple
            and self.is_regular
            and self.is_proper
            and self.is_connected
            and self.chromatic_index_witness == self.regularity
        )

    def to_json(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "num_edges": self.num_edges,
            "degree_profile": {str(k): v for k, v in sorted(self.degree_profile.items())},
            "is_regular": self.is_regular,
            "regularity": self.regularity,
            "is_simple": self.is_simple,
            "is_proper": self.is_proper,
            "num_colors": self.num_colors,
            "chromatic_index_witness": self.chromatic_index_witness,
            "is_connected": self.is_connected,
            "violations": self.violations,
        }


def validate(graph: ColoredGraph) -> GraphReport:
    """Check the hypotheses of the colorful-polytope construction.

    Failures are reported, never raised.  χ₁ is not computed; a proper
    coloring with exactly Δ colors witnesses χ₁ = Δ.
    """
    V = graph.num_vertices
    degree = [0] * V
    seen = [dict() for _ in range(V)]
    violations = []
    uf = DisjointSet(range(V))
    simple = len(set(graph.edges)) == len(graph.edges) and all(u != v for u, v in graph.edges)
    colors = graph.edge_colors or [None] * len(graph.edges)
    proper = True
    for (u, v), c in zip(graph.edges, colors):
        degree[u] += 1
        degree[v] += 1
        uf.merge(u, v)
        if graph.colored:
            for w in (u, v):
                if c in seen[w]:
                    proper = False
                    violations.append(
                        f"proper coloring violated at vertex {w}: color {c} on two edges"
                    )
                seen[w][c] = True
    profile = Counter(degree)
    regular = len(profile) <= 1
    regularity = degree[0] if (regular and V) else (0 if V == 0 else None)
    used = len(set(c for c in colors if c is not None)) if graph.colored else 0
    witness = used if (graph.colored and proper) else None
    connected = V == 0 or uf.n_subsets == 1
    if not regular:
        violations.append(f"not regular: degrees {dict(profile)}")
    if not connected:
        violations.append(f"not connected: {uf.n_subsets} components")
    if graph.colored and proper and regular and used != regularity:
        violations.append(f"{used} colors used but degree is {regularity}")
    return GraphReport(
        num_vertices=V,
        num_edges=len(graph.edges),
        degree_profile=profile,
        is_regular=regular,
        regularity=regularity,
        is_simple=simple,
        is_proper=proper if graph.colored else None,
        num_colors=used,
        chromatic_index_witness=witness,
        is_connected=connected,
        violations=violations,
    )


def color_classes(graph: ColoredGraph) -> dict:
    out = {}
    for e, c in zip(graph.edges, graph.edge_colors):
        out.setdefault(c, []).append(e)
    return out


def support_projection(colored: ColoredGraph, plain: ColoredGraph) -> list[int]:
    """Index in ``plain`` of the support of every vertex of ``colored``."""
    return [plain.index(t.support) for t in colored.vertices]


def project_edges(colored: ColoredGraph, proj: Sequence[int]) -> set[tuple[int, int]]:
    return {tuple(sorted((proj[u], proj[v]))) for u, v in colored.edges}
