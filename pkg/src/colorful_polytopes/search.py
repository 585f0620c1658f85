"""Isomorphism search on vertex- and edge-labeled graphs.

Two engines:

* :func:`isomorphisms` -- individualization/refinement backtracking for
  arbitrary labeled graphs (used for full automorphism groups and for poset
  isomorphism on Hasse diagrams);
* :func:`forced_maps` -- for graphs in which every vertex has exactly one
  edge of each label (properly edge-colored regular graphs, flag graphs),
  where a map is forced by the image of a single vertex.  Candidate images
  are propagated in bulk with numpy.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

import numpy as np

Adjacency = Sequence[Sequence[tuple[int, int]]]


def refine(adj: Adjacency, colors: Sequence[int]) -> list[int]:
    """Stable 1-dimensional color refinement.

    Colors are canonical: new ids are ranks of sorted signatures, so the same
    refinement run on a disjoint union yields comparable ids on both parts.
    """
    cur = list(colors)
    ncls = len(set(cur))
    while True:
        sigs = [
            (cur[v], tuple(sorted((lab, cur[u]) for u, lab in adj[v])))
            for v in range(len(adj))
        ]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(ids) == ncls:
            return new
        ncls = len(ids)
        cur = new


def _normalize(values: Sequence) -> list[int]:
    ids = {v: i for i, v in enumerate(sorted(set(values), key=repr))}
    return [ids[v] for v in values]


def isomorphisms(
    adj1: Adjacency,
    colors1: Sequence,
    adj2: Adjacency,
    colors2: Sequence,
    first_only: bool = False,
) -> Iterator[list[int]]:
    """Yield every label-preserving isomorphism ``G1 -> G2`` as an image list.

    Edge labels must be integers; vertex colors any hashables with a stable
    ``repr``.  The search refines the disjoint union, individualizes one
    vertex of the smallest non-trivial cell against every same-colored
    vertex of the other side, and prunes whenever cell sizes disagree.
    """
    N = len(adj1)
    if N != len(adj2):
        return
    union = [list(a) for a in adj1] + [[(u + N, l) for u, l in a] for a in adj2]
    start = _normalize(list(colors1) + list(colors2))

    def rec(colors):
        colors = refine(union, colors)
        left = Counter(colors[:N])
        if left != Counter(colors[N:]):
            return
        if len(left) == N:
            where = {c: w for w, c in enumerate(colors[N:])}
            img = [where[c] for c in colors[:N]]
            if _is_isomorphism(adj1, adj2, img):
                yield img
            return
        cell = min((size, c) for c, size in left.items() if size > 1)[1]
        v = colors.index(cell)
        fresh = max(colors) + 1
        for w in range(N):
            if colors[N + w] != cell:
                continue
            new = list(colors)
            new[v] = fresh
            new[N + w] = fresh
            found = False
            for img in rec(new):
                found = True
                yield img
            if found and first_only:
                return

    yield from rec(start)


def _is_isomorphism(adj1, adj2, img) -> bool:
    if len(set(img)) != len(img):
        return False
    for v, nbrs in enumerate(adj1):
        target = Counter((img[u], l) for u, l in nbrs)
        if target != Counter(adj2[img[v]]):
            return False
    return True


# --------------------------------------------------------------------------
# forced propagation


def _bfs_layers(table: np.ndarray, base: int) -> tuple[list, int]:
    """Spanning-tree layers from ``base``: lists of (label, children, parents)."""
    k, V = table.shape
    seen = np.zeros(V, dtype=bool)
    seen[base] = True
    frontier = np.array([base])
    layers = []
    reached = 1
    while len(frontier):
        layer = []
        nxt = []
        for lab in range(k):
            kids = table[lab, frontier]
            fresh = ~seen[kids]
            kids, parents = kids[fresh], frontier[fresh]
            kids, first = np.unique(kids, return_index=True)
            parents = parents[first]
            if len(kids):
                seen[kids] = True
                layer.append((lab, kids, parents))
                nxt.append(kids)
                reached += len(kids)
        if layer:
            layers.append(layer)
        frontier = np.concatenate(nxt) if nxt else np.array([], dtype=np.int64)
    return layers, reached


def forced_maps(
    src: np.ndarray,
    dst: np.ndarray,
    base: int,
    candidates: Sequence[int],
    batch: int = 256,
) -> list[np.ndarray]:
    """All bijections ``phi`` with ``phi[src[l, v]] == dst[l, phi[v]]`` for every label ``l``.

    ``src`` and ``dst`` are ``(labels, V)`` neighbor tables of connected
    graphs in which each vertex has exactly one neighbor per label.  The
    image of ``base`` ranges over ``candidates``; every other image is then
    forced along a spanning tree and the result is checked on all edges.
    """
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    k, V = src.shape
    if V == 0:
        return []
    layers, reached = _bfs_layers(src, base)
    if reached != V:
        raise ValueError("forced propagation needs a connected graph")
    out = []
    candidates = np.asarray(list(candidates), dtype=np.int64)
    ident = np.arange(V)
    for start in range(0, len(candidates), batch):
        cand = candidates[start : start + batch]
        phi = np.empty((len(cand), V), dtype=np.int64)
        phi[:, base] = cand
        for layer in layers:
            for lab, kids, parents in layer:
                phi[:, kids] = dst[lab][phi[:, parents]]
        ok = np.ones(len(cand), dtype=bool)
        for lab in range(k):
            ok &= (phi[:, src[lab]] == dst[lab][phi]).all(axis=1)
        ok &= (np.sort(phi, axis=1) == ident).all(axis=1)
        out.extend(phi[ok])
    return out


def table_classes(table: np.ndarray, initial: np.ndarray | None = None) -> np.ndarray:
    """Stable refinement of a labeled neighbor table (numpy version of :func:`refine`)."""
    k, V = table.shape
    col = np.zeros(V, dtype=np.int64) if initial is None else np.unique(initial, return_inverse=True)[1].ravel()
    ncls = len(np.unique(col))
    while True:
        stacked = np.stack([col] + [col[table[l]] for l in range(k)], axis=1)
        new = np.unique(stacked, axis=0, return_inverse=True)[1].ravel()
        m = int(new.max()) + 1
        if m == ncls:
            return new
        ncls, col = m, new
