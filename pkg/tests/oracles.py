"""Brute-force reference implementations, independent of the package code."""

from __future__ import annotations

import itertools
import math
from collections import deque


def _point(i: int, N: int):
    a = 2 * math.pi * (i - 1) / N
    return math.cos(a), math.sin(a)


def _orient(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def segments_cross(d, e, N) -> bool:
    """Proper crossing of two chords of the regular N-gon, by coordinates."""
    if set(d) & set(e):
        return False
    p, q = _point(d[0], N), _point(d[1], N)
    r, s = _point(e[0], N), _point(e[1], N)
    return (_orient(p, q, r) > 0) != (_orient(p, q, s) > 0) and (_orient(r, s, p) > 0) != (_orient(r, s, q) > 0)


def all_diagonals(N: int):
    return [(i, j) for i in range(1, N + 1) for j in range(i + 2, N + 1) if not (i == 1 and j == N)]


def brute_triangulations(N: int, symmetric: bool = False) -> set[frozenset]:
    """Maximal non-crossing chord sets of the N-gon (size N - 3), by exhaustion.

    With ``symmetric`` only sets closed under the half-turn are kept; those
    are searched as one diameter plus (N - 4) / 2 mirror pairs.
    """
    diags = all_diagonals(N)

    def ok(combo):
        return not any(segments_cross(a, b, N) for a, b in itertools.combinations(combo, 2))

    if not symmetric:
        return {frozenset(c) for c in itertools.combinations(diags, N - 3) if ok(c)}
    h = N // 2

    def mirror(d):
        a, b = (d[0] + h - 1) % N + 1, (d[1] + h - 1) % N + 1
        return (min(a, b), max(a, b))

    diameters = [d for d in diags if d[1] - d[0] == h]
    pairs = sorted({tuple(sorted((d, mirror(d)))) for d in diags if d[1] - d[0] != h})
    out = set()
    for dia in diameters:
        for chosen in itertools.combinations(pairs, (N - 4) // 2):
            combo = [dia] + [d for p in chosen for d in p]
            if ok(combo):
                out.add(frozenset(combo))
    return out


def brute_flip(diags: frozenset, d, N: int):
    """The unique other chord completing ``diags - {d}`` to a triangulation."""
    rest = diags - {d}
    hits = [
        e
        for e in all_diagonals(N)
        if e != d and e not in rest and not any(segments_cross(e, x, N) for x in rest)
    ]
    assert len(hits) == 1, hits
    return hits[0]


def bfs_classes(num_vertices: int, edges, colors, allowed) -> list[frozenset]:
    """Classes of vertices joined by paths using only ``allowed`` colors."""
    adj = [[] for _ in range(num_vertices)]
    for (u, v), c in zip(edges, colors):
        if c in allowed:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * num_vertices
    out = []
    for s in range(num_vertices):
        if seen[s]:
            continue
        comp, q = {s}, deque([s])
        seen[s] = True
        while q:
            x = q.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.add(y)
                    q.append(y)
        out.append(frozenset(comp))
    return out


def brute_automorphism_count(num_vertices: int, edges) -> int:
    E = {frozenset(e) for e in edges}
    return sum(
        1
        for p in itertools.permutations(range(num_vertices))
        if {frozenset((p[u], p[v])) for u, v in edges} == E
    )


def brute_strongly_flag_connected(flags: list[tuple], adjacent) -> bool:
    """Every two flags joined by adjacent flags that all contain their common faces."""
    flags = [tuple(f) for f in flags]
    nbrs = {f: [g for g in flags if adjacent(f, g)] for f in flags}
    for a, b in itertools.combinations(flags, 2):
        common = set(a) & set(b)
        seen, q = {a}, deque([a])
        while q:
            x = q.popleft()
            for y in nbrs[x]:
                if y not in seen and common <= set(y):
                    seen.add(y)
                    q.append(y)
        if b not in seen:
            return False
    return True


def differ_in_one(f, g) -> bool:
    return sum(1 for x, y in zip(f, g) if x != y) == 1
