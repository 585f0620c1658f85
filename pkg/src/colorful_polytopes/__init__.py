"""Colorful associahedra and cyclohedra as abstract polytopes.

Triangulations and flips, edge-colored exchange graphs, the colorful
polytope of a properly colored regular graph, automorphism groups,
quotients by the color-permutation action and surface invariants.
"""

from .colorful import (
    ColorfulPolytope,
    HypothesisError,
    build_polytope,
    equivalence_classes,
    facet_family,
    facet_families,
    intersection_count,
    predicted_intersection_count,
)
from .exchange import (
    ColoredGraph,
    GraphReport,
    build_colorful_exchange_graph,
    build_cyclohedron_exchange_graph,
    build_uncolored_cyclohedron_graph,
    build_uncolored_exchange_graph,
    graph_from_json,
    support_projection,
    validate,
)
from .poset import AxiomReport, RankedPoset, check_axioms
from .quotient import (
    CoveringMap,
    QuotientPoset,
    build_classical_associahedron,
    build_classical_cyclohedron,
    covering_map,
    poset_isomorphic,
    quotient,
)
from .surface import SurfaceReport, surface_report
from .symmetry import (
    COLOR_PRESERVING,
    COLOR_RESPECTING,
    FULL,
    Permutation,
    PermGroup,
    canonical_subgroup_generators,
    dihedral,
    graph_automorphisms,
    polytope_automorphisms,
    symmetric_times_dihedral,
    verify_group_structure,
)
from .triangulations import (
    CENTRAL_COLOR,
    ColoredTriangulation,
    Polygon,
    Triangulation,
    enumerate_colored_triangulations,
    enumerate_triangulations,
    flip,
)

__version__ = "0.1.0"
