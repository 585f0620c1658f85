"""Ranked posets given by their Hasse diagram, flags and the polytope axioms."""

from __future__ import annotations

import csv
import io
import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Hashable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class RankedPoset:
    """A finite ranked poset stored as its cover relation.

    Faces are integers ``0..len(self)-1``.  ``keys[f]`` is a hashable identity
    key, ``vertex_sets[f]`` the set of vertex indices below ``f`` (empty for
    the least face).  The order relation is the reflexive-transitive closure
    of the covers.
    """

    def __init__(
        self,
        ranks: Sequence[int],
        covers: Sequence[tuple[int, int]],
        keys: Sequence[Hashable] | None = None,
        vertex_sets: Sequence[frozenset] | None = None,
        payloads: Sequence | None = None,
    ):
        self.ranks = tuple(int(r) for r in ranks)
        m = len(self.ranks)
        up = [[] for _ in range(m)]
        down = [[] for _ in range(m)]
        for a, b in covers:
            up[a].append(b)
            down[b].append(a)
        self.up = tuple(tuple(sorted(x)) for x in up)
        self.down = tuple(tuple(sorted(x)) for x in down)
        self.keys = tuple(keys) if keys is not None else tuple(range(m))
        self._key_index = {k: i for i, k in enumerate(self.keys)}
        if len(self._key_index) != m:
            raise ValueError("face keys must be distinct")
        self.rank = max(self.ranks) if m else -1
        self.payloads = tuple(payloads) if payloads is not None else None
        self._vertex_sets = tuple(vertex_sets) if vertex_sets is not None else None
        self._flags = None
        self._flag_graph = None

    def __len__(self):
        return len(self.ranks)

    def __repr__(self):
        return f"<RankedPoset rank={self.rank} f={self.f_vector()}>"

    # basic structure -----------------------------------------------------

    def face(self, key: Hashable) -> int:
        return self._key_index[key]

    def faces_of_rank(self, j: int) -> list[int]:
        return [f for f, r in enumerate(self.ranks) if r == j]

    def f_vector(self) -> tuple[int, ...]:
        c = Counter(self.ranks)
        return tuple(c.get(j, 0) for j in range(0, self.rank + 1))

    @property
    def bottom(self) -> int:
        (b,) = [f for f in range(len(self)) if not self.down[f]]
        return b

    @property
    def top(self) -> int:
        (t,) = [f for f in range(len(self)) if not self.up[f]]
        return t

    def covers(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(len(self)) for b in self.up[a]]

    def upset(self, f: int) -> set[int]:
        seen = {f}
        stack = [f]
        while stack:
            for g in self.up[stack.pop()]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return seen

    def downset(self, f: int) -> set[int]:
        seen = {f}
        stack = [f]
        while stack:
            for g in self.down[stack.pop()]:
                if g not in seen:
                    seen.add(g)
                    stack.append(g)
        return seen

    def leq(self, a: int, b: int) -> bool:
        if a == b:
            return True
        if self.ranks[a] >= self.ranks[b]:
            return False
        return b in self.upset(a)

    @property
    def vertex_sets(self) -> tuple[frozenset, ...]:
        if self._vertex_sets is None:
            # vertices are numbered by the position of the rank-0 faces
            vidx = {f: i for i, f in enumerate(self.faces_of_rank(0))}
            sets = [None] * len(self)
            for f in sorted(range(len(self)), key=lambda x: self.ranks[x]):
                if self.ranks[f] < 0:
                    sets[f] = frozenset()
                elif self.ranks[f] == 0:
                    sets[f] = frozenset([vidx[f]])
                else:
                    sets[f] = frozenset().union(*(sets[g] for g in self.down[f]))
            self._vertex_sets = tuple(sets)
        return self._vertex_sets

    def vertex_face(self) -> dict[int, int]:
        """Vertex index -> rank-0 face."""
        return {next(iter(self.vertex_sets[f])): f for f in self.faces_of_rank(0)}

    def section(self, lower: int, upper: int) -> "RankedPoset":
        """The interval ``upper/lower`` re-ranked so that ``lower`` has rank -1."""
        faces = sorted(self.upset(lower) & self.downset(upper))
        pos = {f: i for i, f in enumerate(faces)}
        shift = self.ranks[lower] + 1
        covers = [(pos[a], pos[b]) for a in faces for b in self.up[a] if b in pos]
        return RankedPoset(
            [self.ranks[f] - shift for f in faces],
            covers,
            keys=[self.keys[f] for f in faces],
            vertex_sets=[self.vertex_sets[f] for f in faces],
        )

    # flags ---------------------------------------------------------------

    def flags(self) -> np.ndarray:
        """All maximal chains as rows (one column per rank, bottom first)."""
        if self._flags is None:
            out = []

            def walk(chain):
                nxt = self.up[chain[-1]]
                if not nxt:
                    out.append(tuple(chain))
                    return
                for g in nxt:
                    chain.append(g)
                    walk(chain)
                    chain.pop()

            for b in range(len(self)):
                if not self.down[b]:
                    walk([b])
            width = max((len(c) for c in out), default=0)
            if any(len(c) != width for c in out):
                self._flags = out  # ragged: left as a list for the report
            else:
                self._flags = np.array(out, dtype=np.int64).reshape(len(out), width)
        return self._flags

    def flag_graph(self) -> tuple[np.ndarray, np.ndarray]:
        """``(flags, adj)`` with ``adj[i, k]`` the ``i``-adjacent flag of flag ``k``.

        Entries are ``-1`` where the diamond condition fails to give a unique
        neighbor.
        """
        if self._flag_graph is None:
            flags = self.flags()
            if not isinstance(flags, np.ndarray):
                raise ValueError("flags have different lengths")
            F, width = flags.shape
            n = width - 2
            index = {tuple(r): k for k, r in enumerate(flags.tolist())}
            adj = np.full((max(n, 0), F), -1, dtype=np.int64)
            down_sets = [set(d) for d in self.down]
            for k, row in enumerate(flags.tolist()):
                for i in range(n):
                    p = i + 1
                    others = [
                        h for h in self.up[row[p - 1]] if h != row[p] and h in down_sets[row[p + 1]]
                    ]
                    if len(others) == 1:
                        new = list(row)
                        new[p] = others[0]
                        adj[i, k] = index[tuple(new)]
            self._flag_graph = (flags, adj)
        return self._flag_graph

    # export --------------------------------------------------------------

    def to_json(self) -> dict:
        def enc(k):
            if isinstance(k, (tuple, list, frozenset)):
                return [enc(x) for x in (sorted(k) if isinstance(k, frozenset) else k)]
            return k

        faces = {}
        for f in range(len(self)):
            faces.setdefault(self.ranks[f], []).append({"id": f, "key": enc(self.keys[f])})
        return {
            "rank": self.rank,
            "f_vector": list(self.f_vector()),
            "faces": {str(r): faces[r] for r in sorted(faces)},
            "covers": [list(c) for c in self.covers()],
        }

    def summary_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["rank"] + [f"f{j}" for j in range(self.rank + 1)] + ["flags"])
        flags = self.flags()
        w.writerow([self.rank, *self.f_vector(), len(flags)])
        return buf.getvalue()


# --------------------------------------------------------------------------
# axioms


@dataclass
class AxiomReport:
    rank: int
    num_flags: int
    unique_extremes: bool
    graded_covers: bool
    flag_length_ok: bool
    diamond_violations: list = field(default_factory=list)
    flag_connectivity: str = "skipped"  # exhaustive | sampled | skipped
    flag_connectivity_failures: list = field(default_factory=list)
    pairs_checked: int = 0
    simplicity_violations: list = field(default_factory=list)

    @property
    def diamond(self) -> bool:
        return not self.diamond_violations

    @property
    def strongly_flag_connected(self) -> bool:
        return self.flag_connectivity != "skipped" and not self.flag_connectivity_failures

    @property
    def simple(self) -> bool:
        return not self.simplicity_violations

    @property
    def passed(self) -> bool:
        return (
            self.unique_extremes
            and self.graded_covers
            and self.flag_length_ok
            and self.diamond
            and self.strongly_flag_connected
            and self.simple
        )

    def lines(self) -> list[str]:
        def pf(ok):
            return "pass" if ok else "fail"

        return [
            f"flags: {self.num_flags} of length {self.rank + 2}: {pf(self.flag_length_ok and self.unique_extremes and self.graded_covers)}",
            f"diamond condition: {pf(self.diamond)}",
            f"strong flag-connectedness ({self.flag_connectivity}): {pf(self.strongly_flag_connected)}",
            f"simple vertex-figures: {pf(self.simple)}",
        ]


def diamond_violations(poset: RankedPoset) -> list[tuple[int, int, int]]:
    """Pairs ``F < G`` two ranks apart with other than two faces in between."""
    bad = []
    for f in range(len(poset)):
        count = Counter(g for h in poset.up[f] for g in poset.up[h])
        for g, k in count.items():
            if k != 2:
                bad.append((f, g, k))
    return bad


def _components_for_fixed_ranks(adj: np.ndarray, fixed: Sequence[int]) -> np.ndarray:
    n, F = adj.shape
    moves = [i for i in range(n) if i not in fixed]
    if not moves:
        return np.arange(F)
    rows = np.concatenate([np.arange(F)] * len(moves))
    cols = np.concatenate([adj[i] for i in moves])
    g = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(F, F))
    return connected_components(g, directed=False)[1]


def strong_flag_connectivity(
    poset: RankedPoset, exhaustive: bool = True, samples: int = 10_000, seed: int = 0
) -> tuple[list, int]:
    """Check that any two flags are joined inside the flags containing their meet.

    Flags sharing the faces at a set ``S`` of ranks must lie in one component
    of the flag graph restricted to moves at ranks outside ``S``.  The
    exhaustive mode checks this for every ``S``; the sampled mode checks
    ``samples`` random flag pairs.  Returns ``(failures, pairs_checked)``.
    """
    flags, adj = poset.flag_graph()
    F = len(flags)
    n = adj.shape[0]
    failures = []
    cache = {}

    def comps(S):
        if S not in cache:
            cache[S] = _components_for_fixed_ranks(adj, S)
        return cache[S]

    if exhaustive:
        for size in range(n + 1):
            for S in itertools.combinations(range(n), size):
                lab = comps(S)
                cols = [i + 1 for i in S]
                sig = np.unique(flags[:, cols], axis=0, return_inverse=True)[1].ravel() if cols else np.zeros(F, dtype=np.int64)
                n_sig = sig.max() + 1 if F else 0
                n_comp = lab.max() + 1 if F else 0
                pairs = np.unique(np.stack([lab, sig], axis=1), axis=0)
                if n_comp != n_sig or len(pairs) != n_comp:
                    failures.append({"fixed_ranks": list(S), "components": int(n_comp), "chains": int(n_sig)})
        return failures, F * (F - 1) // 2
    rng = random.Random(seed)
    for _ in range(samples):
        a, b = rng.randrange(F), rng.randrange(F)
        S = tuple(i for i in range(n) if flags[a, i + 1] == flags[b, i + 1])
        if comps(S)[a] != comps(S)[b]:
            failures.append({"flags": (a, b), "fixed_ranks": list(S)})
    return failures, samples


def simplicity_violations(poset: RankedPoset) -> list[tuple[int, str]]:
    """Vertices whose vertex-figure is not a Boolean lattice on ``rank`` atoms."""
    n = poset.rank
    bad = []
    for v in poset.faces_of_rank(0):
        above = poset.upset(v)
        atoms = [a for a in poset.up[v]]
        if len(atoms) != n:
            bad.append((v, f"{len(atoms)} edges at the vertex"))
            continue
        sets = {v: frozenset()}
        for a in atoms:
            sets[a] = frozenset([a])
        ok = True
        for g in sorted(above, key=lambda x: poset.ranks[x]):
            if poset.ranks[g] <= 1:
                continue
            below = [h for h in poset.down[g] if h in above]
            sets[g] = frozenset().union(*(sets[h] for h in below))
            j = poset.ranks[g]
            if len(sets[g]) != j or len(below) != j:
                ok = False
        counts = Counter(poset.ranks[g] for g in above)
        if ok and any(counts[j] != comb(n, j) for j in range(n + 1)):
            ok = False
        if ok and len(set(sets.values())) != len(sets):
            ok = False
        if not ok:
            bad.append((v, "vertex-figure is not a Boolean lattice"))
    return bad


def check_axioms(
    poset: RankedPoset,
    exhaustive: bool | None = None,
    samples: int = 10_000,
    seed: int = 0,
) -> "AxiomReport":
    """Verify the abstract-polytope axioms plus simplicity.

    ``exhaustive=None`` means exhaustive flag-connectivity up to rank 3 and
    ``samples`` random flag pairs above that.
    """
    n = poset.rank
    minimal = [f for f in range(len(poset)) if not poset.down[f]]
    maximal = [f for f in range(len(poset)) if not poset.up[f]]
    unique = len(minimal) == 1 and len(maximal) == 1
    unique = unique and poset.ranks[minimal[0]] == -1
    graded = all(poset.ranks[b] == poset.ranks[a] + 1 for a, b in poset.covers())
    flags = poset.flags()
    length_ok = isinstance(flags, np.ndarray) and flags.shape[1] == n + 2
    report = AxiomReport(
        rank=n,
        num_flags=len(flags),
        unique_extremes=unique,
        graded_covers=graded,
        flag_length_ok=length_ok,
        diamond_violations=diamond_violations(poset),
    )
    if length_ok and report.diamond and unique:
        if exhaustive is None:
            exhaustive = n <= 3
        failures, checked = strong_flag_connectivity(poset, exhaustive, samples, seed)
        report.flag_connectivity = "exhaustive" if exhaustive else "sampled"
        report.flag_connectivity_failures = failures
        report.pairs_checked = checked
    report.simplicity_violations = simplicity_violations(poset)
    return report
