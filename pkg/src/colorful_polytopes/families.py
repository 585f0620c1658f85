"""Named families of exchange graphs and polytopes, with their closed forms."""

from __future__ import annotations

import json
from functools import lru_cache
from math import comb, factorial

from .colorful import build_polytope
from .exchange import (
    ColoredGraph,
    build_colorful_exchange_graph,
    build_cyclohedron_exchange_graph,
    build_uncolored_cyclohedron_graph,
    build_uncolored_exchange_graph,
    graph_from_json,
)
from .poset import RankedPoset
from .quotient import build_classical_associahedron, build_classical_cyclohedron
from .triangulations import catalan

ASSOCIAHEDRON = "associahedron"
COLORFUL_ASSOCIAHEDRON = "colorful_associahedron"
CYCLOHEDRON = "cyclohedron"
COLORFUL_CYCLOHEDRON = "colorful_cyclohedron"
FROM_FILE = "from_file"

FAMILIES = (ASSOCIAHEDRON, COLORFUL_ASSOCIAHEDRON, CYCLOHEDRON, COLORFUL_CYCLOHEDRON, FROM_FILE)
COLORED = (COLORFUL_ASSOCIAHEDRON, COLORFUL_CYCLOHEDRON)

# (smallest n, largest n to build, largest n for the full verify)
LIMITS = {
    ASSOCIAHEDRON: (0, 6, 5),
    COLORFUL_ASSOCIAHEDRON: (0, 5, 4),
    CYCLOHEDRON: (1, 4, 4),
    COLORFUL_CYCLOHEDRON: (1, 3, 3),
}


class InputError(ValueError):
    """Invalid user input (bad family, ``n`` out of range, unreadable file)."""


def check_range(family: str, n: int, verify: bool = False) -> None:
    if family not in LIMITS:
        raise InputError(f"unknown family {family!r}")
    lo, build_hi, verify_hi = LIMITS[family]
    hi = verify_hi if verify else build_hi
    if not lo <= n <= hi:
        what = "verify" if verify else "build"
        raise InputError(f"{family}: n must lie in {lo}..{hi} to {what}, got {n}")


def rank_of(family: str, n: int) -> int:
    return n + 1 if family in (CYCLOHEDRON, COLORFUL_CYCLOHEDRON) else n


@lru_cache(maxsize=None)
def family_graph(family: str, n: int) -> ColoredGraph:
    check_range(family, n)
    return {
        ASSOCIAHEDRON: build_uncolored_exchange_graph,
        COLORFUL_ASSOCIAHEDRON: build_colorful_exchange_graph,
        CYCLOHEDRON: build_uncolored_cyclohedron_graph,
        COLORFUL_CYCLOHEDRON: build_cyclohedron_exchange_graph,
    }[family](n)


@lru_cache(maxsize=None)
def family_polytope(family: str, n: int) -> RankedPoset:
    check_range(family, n)
    if family == ASSOCIAHEDRON:
        return build_classical_associahedron(n)
    if family == CYCLOHEDRON:
        return build_classical_cyclohedron(n)
    return build_polytope(family_graph(family, n))


def classical_of(family: str) -> str:
    return {COLORFUL_ASSOCIAHEDRON: ASSOCIAHEDRON, COLORFUL_CYCLOHEDRON: CYCLOHEDRON}[family]


def load_graph(path: str) -> ColoredGraph:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return graph_from_json(data)
    except FileNotFoundError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed graph JSON ({exc})") from exc


# --------------------------------------------------------------------------
# closed forms


def predicted_vertices(family: str, n: int) -> int:
    if family == ASSOCIAHEDRON:
        return catalan(n + 1)
    if family == COLORFUL_ASSOCIAHEDRON:
        return factorial(n) * catalan(n + 1)
    if family == CYCLOHEDRON:
        return (n + 2) * catalan(n + 1)
    if family == COLORFUL_CYCLOHEDRON:
        return factorial(n) * comb(2 * n + 2, n + 1)
    raise ValueError(family)


def predicted_edges(family: str, n: int) -> int:
    # regular of degree = rank
    return predicted_vertices(family, n) * rank_of(family, n) // 2


def predicted_flags(family: str, n: int) -> int:
    # simple polytope: every vertex-figure is a simplex with rank! flags
    return predicted_vertices(family, n) * factorial(rank_of(family, n))


def predicted_group_order(family: str, n: int) -> int:
    """Automorphism group order of the polytope.

    Dihedral of the polygon (modulo the central inversion for cyclohedra),
    times ``S_n`` for the colorful families.  Small ``n`` where the polytope
    is a point, segment or hexagon are special.
    """
    if family in (ASSOCIAHEDRON, COLORFUL_ASSOCIAHEDRON):
        if n == 0:
            return 1
        if n == 1:
            return 2
        base = 2 * (n + 3)
    else:
        if n == 1:
            return 12
        base = 2 * (n + 2)
    return base * (factorial(n) if family in COLORED else 1)


def dihedral_degree(family: str, n: int) -> int | None:
    """``m`` with the (polygon part of the) group ``D_m``, where it applies."""
    if family in (ASSOCIAHEDRON, COLORFUL_ASSOCIAHEDRON):
        return n + 3 if n >= 2 else None
    return n + 2 if n >= 2 else 6


def predicted_surface(family: str, n: int) -> dict | None:
    """Euler characteristic and genus for the rank-3 members."""
    if rank_of(family, n) != 3:
        return None
    if family == COLORFUL_ASSOCIAHEDRON:
        return {"euler_characteristic": -6, "orientable": True, "genus": 4}
    if family == COLORFUL_CYCLOHEDRON:
        return {"euler_characteristic": 0, "orientable": True, "genus": 1}
    return {"euler_characteristic": 2, "orientable": True, "genus": 0}
