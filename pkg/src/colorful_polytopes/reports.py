"""Verification checks and predicted-versus-computed tables."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Any, Callable

from . import families as fam
from .colorful import (
    build_polytope,
    cyclic_distance,
    cyclohedron_facets,
    facet_families,
    facet_meeting_violations,
    k_table,
)
from .exchange import ColoredGraph, support_projection, validate
from .poset import RankedPoset, check_axioms
from .quotient import classical_facet_census, covering_map, poset_isomorphic, quotient
from .surface import surface_report
from .symmetry import (
    COLOR_RESPECTING,
    PermGroup,
    dihedral,
    dihedral_factor_generators,
    graph_automorphisms,
    polytope_automorphisms,
    symmetric_factor_generators,
    symmetric_times_dihedral,
    verify_group_structure,
    vertex_action,
)
from .triangulations import Polygon, catalan, enumerate_colored_triangulations, enumerate_triangulations

THREADS_ENV = "COLORFUL_POLYTOPES_THREADS"


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def ordered_map(fn: Callable, items: list) -> list:
    """``map`` over a thread pool; results keep the input order."""
    k = thread_count()
    if k == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))


@dataclass
class Check:
    name: str
    expected: Any
    computed: Any
    ok: bool
    witness: Any = None

    def line(self) -> str:
        return f"{self.name}: expected {self.expected}, computed {self.computed}: {'pass' if self.ok else 'fail'}"

    def to_json(self) -> dict:
        out = {"check": self.name, "expected": self.expected, "computed": self.computed, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _eq(name, expected, computed, witness=None) -> Check:
    return Check(name, expected, computed, expected == computed, witness)


def symmetric_group(graph: ColoredGraph) -> PermGroup:
    """The color-permutation action of ``S_n`` on the vertices."""
    return PermGroup(symmetric_factor_generators(graph), graph.num_vertices)


# --------------------------------------------------------------------------
# individual check groups


def graph_checks(graph: ColoredGraph, family: str | None = None, n: int | None = None) -> list[Check]:
    rep = validate(graph)
    out = []
    if family is not None and family != fam.FROM_FILE:
        out.append(_eq("vertices", fam.predicted_vertices(family, n), rep.num_vertices))
        out.append(_eq("edges", fam.predicted_edges(family, n), rep.num_edges))
        out.append(_eq("regular degree", fam.rank_of(family, n), rep.regularity))
    else:
        out.append(Check("regular", True, rep.is_regular, rep.is_regular))
    out.append(Check("connected", True, rep.is_connected, rep.is_connected))
    if graph.colored:
        out.append(Check("proper coloring", True, rep.is_proper, bool(rep.is_proper), rep.violations or None))
        out.append(_eq("chromatic index = degree", rep.regularity, rep.chromatic_index_witness))
    return out


def axiom_checks(poset: RankedPoset, family: str | None, n: int | None, exhaustive=None, seed: int = 0) -> list[Check]:
    rep = check_axioms(poset, exhaustive=exhaustive, seed=seed)
    out = []
    if family is not None and family != fam.FROM_FILE:
        out.append(_eq("flags", fam.predicted_flags(family, n), rep.num_flags))
    out.append(Check("flag length", poset.rank + 2, poset.rank + 2 if rep.flag_length_ok else None, rep.flag_length_ok and rep.unique_extremes and rep.graded_covers))
    out.append(Check("diamond condition", 0, len(rep.diamond_violations), rep.diamond, rep.diamond_violations[:5] or None))
    out.append(
        Check(
            f"strong flag-connectedness ({rep.flag_connectivity}, {rep.pairs_checked} checks)",
            0,
            len(rep.flag_connectivity_failures),
            rep.strongly_flag_connected,
            [str(x) for x in rep.flag_connectivity_failures[:5]] or None,
        )
    )
    out.append(Check("simple vertex-figures", 0, len(rep.simplicity_violations), rep.simple, rep.simplicity_violations[:5] or None))
    return out


def group_checks(family: str, n: int, poset: RankedPoset, graph: ColoredGraph | None) -> list[Check]:
    A = polytope_automorphisms(poset)
    out = [_eq("|automorphism group|", fam.predicted_group_order(family, n), A.order)]
    m = fam.dihedral_degree(family, n)
    if family in fam.COLORED:
        G = graph_automorphisms(graph, COLOR_RESPECTING)
        same = vertex_action(poset, A).elements == G.elements
        out.append(Check("polytope group = color-respecting graph group", True, same, same))
        if n >= 2:
            st = symmetric_times_dihedral(n, m, symmetric_factor_generators(graph), dihedral_factor_generators(graph))
            ok = verify_group_structure(G, st)
            out.append(Check(f"structure S_{n} x D_{m}", True, ok, ok))
        elif m is not None:
            ok = verify_group_structure(G, dihedral(m))
            out.append(Check(f"structure D_{m}", True, ok, ok))
    elif m is not None:
        ok = verify_group_structure(A, dihedral(m))
        out.append(Check(f"structure D_{m}", True, ok, ok))
    return out


def surface_checks(family: str | None, n: int | None, poset: RankedPoset) -> list[Check]:
    if poset.rank != 3:
        return []
    rep = surface_report(poset)
    out = [
        _eq("flags = 4e", 4 * rep.e, rep.num_flags),
        Check("every edge in two 2-faces", True, rep.edges_in_two_faces, rep.edges_in_two_faces),
    ]
    pred = fam.predicted_surface(family, n) if family not in (None, fam.FROM_FILE) else None
    if pred is not None:
        out.append(_eq("euler characteristic", pred["euler_characteristic"], rep.euler_characteristic))
        out.append(_eq("orientable", pred["orientable"], rep.orientable))
        out.append(_eq("genus", pred["genus"], rep.genus))
    if family == fam.COLORFUL_ASSOCIAHEDRON and n == 3:
        out.append(_eq("2-face sizes", {10: 18, 4: 18}, dict(rep.face_sizes)))
        census = {"+".join(map(str, k)): c for k, c in sorted(rep.vertex_census.items())}
        out.append(_eq("vertex census", {"10+10+10": 12, "4+10+10": 72}, census))
    return out


def quotient_checks(family: str, n: int, poset: RankedPoset, graph: ColoredGraph) -> list[Check]:
    classical = fam.family_polytope(fam.classical_of(family), n)
    q = quotient(poset, symmetric_group(graph))
    ok, witness = poset_isomorphic(q, classical)
    out = [Check("quotient by S_n isomorphic to classical", True, ok, ok, _witness_json(witness))]
    plain = fam.family_graph(fam.classical_of(family), n)
    cov = covering_map(poset, classical, support_projection(graph, plain))
    out.append(Check("covering map valid", True, cov.valid, cov.valid, cov.failures[:5] or None))
    out.append(_eq("covering fiber size", factorial(n), cov.degree))
    return out


def _witness_json(w: dict | None):
    if w is None:
        return None
    return {repr(k): repr(v) for k, v in w.items()}


def facet_checks(family: str, n: int, poset: RankedPoset) -> list[Check]:
    out = []
    if family == fam.COLORFUL_ASSOCIAHEDRON and n >= 2:
        smaller = fam.family_polytope(family, n - 1)
        iso = sum(poset_isomorphic(poset.section(poset.bottom, f), smaller)[0] for f in poset.faces_of_rank(n - 1))
        out.append(_eq(f"facets isomorphic to the colorful {n - 1}-associahedron", n * (n + 3), iso))
        fams = facet_families(poset)
        out.append(_eq("facet family members", n * (n + 3), len(set(fams.values()))))
        bad = facet_meeting_violations(poset)
        out.append(Check("facet meeting rule", 0, len(bad), not bad, [str(b) for b in bad[:5]] or None))
        if n >= 3:
            rows = k_table(poset)
            miss = [r for r in rows if r["computed"] != r["predicted"]]
            out.append(Check(f"intersection counts ({len(rows)} pairs)", 0, len(miss), not miss, miss[:5] or None))
    elif family == fam.ASSOCIAHEDRON and n >= 3:
        census = classical_facet_census(poset, fam.family_polytope(family, n - 1))
        out.append(_eq(f"facets isomorphic to the {n - 1}-associahedron", n + 3, len(census["isomorphic"])))
        N = n + 3
        wrong = [jk for jk, r in census["ridge"].items() if r != (cyclic_distance(*jk, N) != 1)]
        out.append(Check("F_j meets F_k in a ridge iff k != j+-1", 0, len(wrong), not wrong, wrong[:5] or None))
    elif family == fam.COLORFUL_CYCLOHEDRON:
        smaller = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
        parts = cyclohedron_facets(poset)
        central = parts["central"]
        iso = sum(poset_isomorphic(poset.section(poset.bottom, f), smaller)[0] for f in central)
        out.append(_eq("facets with a central rigid diagonal", n + 2, len(central)))
        out.append(_eq("  of which isomorphic to the colorful n-associahedron", n + 2, iso))
        if n >= 2:
            other = sum(poset_isomorphic(poset.section(poset.bottom, f), smaller)[0] for f in parts["pair"])
            out.append(_eq("pair facets isomorphic to the colorful n-associahedron", 0, other))
    return out


# --------------------------------------------------------------------------
# verify


def verify(family: str, n: int | None = None, graph: ColoredGraph | None = None, exhaustive=None, seed: int = 0) -> list[Check]:
    """All checks for a family member (or a graph read from a file)."""
    if family == fam.FROM_FILE:
        if graph is None:
            raise fam.InputError("from_file needs a graph")
        checks = graph_checks(graph)
        if not all(c.ok for c in checks):
            return checks
        poset = build_polytope(graph)
        checks += axiom_checks(poset, None, None, exhaustive, seed)
        checks += surface_checks(None, None, poset)
        return checks
    fam.check_range(family, n, verify=True)
    graph = fam.family_graph(family, n)
    poset = fam.family_polytope(family, n)
    tasks = [
        lambda: graph_checks(graph, family, n),
        lambda: axiom_checks(poset, family, n, exhaustive, seed),
        lambda: group_checks(family, n, poset, graph),
        lambda: surface_checks(family, n, poset),
        lambda: quotient_checks(family, n, poset, graph) if family in fam.COLORED else [],
        lambda: facet_checks(family, n, poset),
    ]
    return [c for part in ordered_map(lambda t: t(), tasks) for c in part]


# --------------------------------------------------------------------------
# tables


@dataclass
class Table:
    kind: str
    columns: list[str]
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["match"] == "match" for r in self.rows)

    def to_text(self) -> str:
        cells = [self.columns] + [[str(r[c]) for c in self.columns] for r in self.rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(self.columns))]
        lines = ["  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "  ".join("-" * w for w in widths))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=self.columns)
        w.writeheader()
        for r in self.rows:
            w.writerow({c: r[c] for c in self.columns})
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"kind": self.kind, "columns": self.columns, "rows": self.rows}


def _row(**kw) -> dict:
    kw["match"] = "match" if kw["predicted"] == kw["computed"] else "mismatch"
    return kw


def _counts_rows() -> list[dict]:
    rows = []
    for n in range(6):
        P = Polygon.for_associahedron(n)
        rows.append(_row(family="associahedron", n=n, quantity="vertices", formula="C(n+1)", predicted=catalan(n + 1), computed=len(enumerate_triangulations(P))))
        rows.append(_row(family="colorful_associahedron", n=n, quantity="vertices", formula="n! C(n+1)", predicted=factorial(n) * catalan(n + 1), computed=len(enumerate_colored_triangulations(P))))
    for n in range(1, 4):
        g = fam.family_graph(fam.COLORFUL_CYCLOHEDRON, n)
        rows.append(_row(family="colorful_cyclohedron", n=n, quantity="vertices", formula="n! binom(2n+2,n+1)", predicted=fam.predicted_vertices(fam.COLORFUL_CYCLOHEDRON, n), computed=g.num_vertices))
        rows.append(_row(family="colorful_cyclohedron", n=n, quantity="edges", formula="(n+1)/2 n! binom(2n+2,n+1)", predicted=fam.predicted_edges(fam.COLORFUL_CYCLOHEDRON, n), computed=len(g.edges)))
    return rows


def _group_row(item) -> dict:
    family, n = item
    poset = fam.family_polytope(family, n)
    order = polytope_automorphisms(poset).order
    formula = {
        fam.ASSOCIAHEDRON: "2(n+3)",
        fam.COLORFUL_ASSOCIAHEDRON: "n! 2(n+3)",
        fam.CYCLOHEDRON: "2(n+2)" if n > 1 else "12 (hexagon)",
        fam.COLORFUL_CYCLOHEDRON: "n! 2(n+2)" if n > 1 else "12 (hexagon)",
    }[family]
    return _row(family=family, n=n, formula=formula, predicted=fam.predicted_group_order(family, n), computed=order)


GROUP_ROWS = [
    (fam.ASSOCIAHEDRON, 2),
    (fam.ASSOCIAHEDRON, 3),
    (fam.ASSOCIAHEDRON, 4),
    (fam.COLORFUL_ASSOCIAHEDRON, 2),
    (fam.COLORFUL_ASSOCIAHEDRON, 3),
    (fam.COLORFUL_ASSOCIAHEDRON, 4),
    (fam.CYCLOHEDRON, 1),
    (fam.CYCLOHEDRON, 2),
    (fam.CYCLOHEDRON, 3),
    (fam.COLORFUL_CYCLOHEDRON, 1),
    (fam.COLORFUL_CYCLOHEDRON, 2),
    (fam.COLORFUL_CYCLOHEDRON, 3),
]


def _surface_rows() -> list[dict]:
    rows = []
    for family, n in [(fam.COLORFUL_ASSOCIAHEDRON, 3), (fam.COLORFUL_CYCLOHEDRON, 2), (fam.ASSOCIAHEDRON, 3), (fam.CYCLOHEDRON, 2)]:
        rep = surface_report(fam.family_polytope(family, n))
        pred = fam.predicted_surface(family, n)
        for q in ("euler_characteristic", "orientable", "genus"):
            rows.append(_row(family=family, n=n, quantity=q, predicted=pred[q], computed=getattr(rep, q)))
    return rows


BRANCHES = [
    ("j=i, c!=c'", "(n-2)n"),
    ("|j-i|=1, c=c'", "(n-1)^2"),
    ("|j-i|=1, c!=c'", "(n-1)(n-2)"),
    ("|j-i|=2, c=c'", "(n-1)(n-2)"),
    ("|j-i|=2, c!=c'", "(n-2)^2"),
    ("|j-i|>2, c=c'", "(n-1)(n-3)"),
    ("|j-i|>2, c!=c'", "(n-2)(n-3)"),
]


def _branch(n: int, r: dict) -> int:
    d = cyclic_distance(r["i"], r["j"], n + 3)
    same = r["c"] == r["c2"]
    if d == 0:
        return 0
    if d <= 2:
        return 2 * d - 1 + (0 if same else 1)
    return 5 + (0 if same else 1)


def _k_rows(n: int) -> list[dict]:
    poly = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
    by = {k: [] for k in range(7)}
    for r in k_table(poly):
        by[_branch(n, r)].append(r)
    rows = []
    for k, (case, formula) in enumerate(BRANCHES):
        rs = by[k]
        if not rs:
            continue
        pred = {r["predicted"] for r in rs}
        comp = Counter(r["computed"] for r in rs)
        (p,) = pred
        computed = next(iter(comp)) if len(comp) == 1 else dict(comp)
        rows.append(_row(n=n, case=case, formula=formula, pairs=len(rs), predicted=p, computed=computed))
    return rows


def report_table(kind: str, n: int | None = None) -> Table:
    """Closed form next to the computed value, with a match flag per row."""
    if kind == "counts":
        return Table(kind, ["family", "n", "quantity", "formula", "predicted", "computed", "match"], _counts_rows())
    if kind == "groups":
        return Table(kind, ["family", "n", "formula", "predicted", "computed", "match"], ordered_map(_group_row, GROUP_ROWS))
    if kind == "surfaces":
        return Table(kind, ["family", "n", "quantity", "predicted", "computed", "match"], _surface_rows())
    if kind == "K_table":
        ns = [n] if n is not None else [3, 4]
        for m in ns:
            if not 2 <= m <= 4:
                raise fam.InputError("K_table needs 2 <= n <= 4")
        rows = [r for part in ordered_map(_k_rows, ns) for r in part]
        return Table(kind, ["n", "case", "formula", "pairs", "predicted", "computed", "match"], rows)
    raise fam.InputError(f"unknown report kind {kind!r}")


REPORT_KINDS = ("counts", "groups", "surfaces", "K_table")


def checks_to_json(checks: list[Check]) -> str:
    return json.dumps({"passed": all(c.ok for c in checks), "checks": [c.to_json() for c in checks]}, indent=2, default=str)


def checks_to_csv(checks: list[Check]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["check", "expected", "computed", "status"])
    for c in checks:
        w.writerow([c.name, c.expected, c.computed, "pass" if c.ok else "fail"])
    return buf.getvalue()


__all__ = [
    "Check",
    "Table",
    "verify",
    "report_table",
    "REPORT_KINDS",
    "THREADS_ENV",
]
