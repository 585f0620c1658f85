"""Rank-3 polytopes as closed surfaces."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .poset import RankedPoset


@dataclass
class SurfaceReport:
    v: int
    e: int
    f: int
    euler_characteristic: int
    orientable: bool
    genus: int | None
    crosscaps: int | None
    num_flags: int
    face_sizes: Counter
    vertex_census: Counter
    edges_in_two_faces: bool

    def to_json(self) -> dict:
        return {
            "v": self.v,
            "e": self.e,
            "f": self.f,
            "euler_characteristic": self.euler_characteristic,
            "orientable": self.orientable,
            "genus": self.genus,
            "crosscaps": self.crosscaps,
            "num_flags": self.num_flags,
            "face_sizes": {str(k): c for k, c in sorted(self.face_sizes.items())},
            "vertex_census": {
                "+".join(map(str, k)): c for k, c in sorted(self.vertex_census.items())
            },
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["v", "e", "f", "chi", "orientable", "genus", "crosscaps"])
        w.writerow([self.v, self.e, self.f, self.euler_characteristic, self.orientable, self.genus, self.crosscaps])
        return buf.getvalue()


def _two_colorable(adj: np.ndarray) -> bool:
    """Flags adjacent by any move get opposite signs."""
    n, F = adj.shape
    rows = np.concatenate([np.arange(F)] * n)
    cols = adj.ravel()
    # bipartite iff the doubled cover splits into two components per component
    g = coo_matrix((np.ones(2 * len(rows), dtype=np.int8), (np.concatenate([rows, rows + F]), np.concatenate([cols + F, cols]))), shape=(2 * F, 2 * F))
    k_double = connected_components(g, directed=False)[0]
    g1 = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(F, F))
    k = connected_components(g1, directed=False)[0]
    return k_double == 2 * k


def surface_report(poset: RankedPoset) -> SurfaceReport:
    """Euler characteristic, orientability, genus and vertex types of a rank-3 polytope."""
    if poset.rank != 3:
        raise ValueError(f"surface analysis needs rank 3, got {poset.rank}")
    v, e, f = (len(poset.faces_of_rank(j)) for j in range(3))
    chi = v - e + f
    flags, adj = poset.flag_graph()
    if (adj < 0).any():
        raise ValueError("diamond condition fails")
    orientable = _two_colorable(adj)
    sizes = {g: len(poset.vertex_sets[g]) for g in poset.faces_of_rank(2)}
    census = Counter()
    for x in poset.faces_of_rank(0):
        around = [g for g in poset.upset(x) if poset.ranks[g] == 2]
        census[tuple(sorted(sizes[g] for g in around))] += 1
    two = all(len(poset.up[x]) == 2 for x in poset.faces_of_rank(1))
    return SurfaceReport(
        v=v,
        e=e,
        f=f,
        euler_characteristic=chi,
        orientable=orientable,
        genus=(2 - chi) // 2 if orientable else None,
        crosscaps=None if orientable else 2 - chi,
        num_flags=len(flags),
        face_sizes=Counter(sizes.values()),
        vertex_census=census,
        edges_in_two_faces=two,
    )
