# %% [markdown]
# # Symmetry, quotients and coverings

# %%
from colorful_polytopes import families as fam
from colorful_polytopes.exchange import support_projection
from colorful_polytopes.quotient import covering_map, poset_isomorphic, quotient
from colorful_polytopes.symmetry import (
    COLOR_PRESERVING,
    COLOR_RESPECTING,
    FULL,
    PermGroup,
    graph_automorphisms,
    polytope_automorphisms,
    symmetric_factor_generators,
)

# %%
g = fam.family_graph(fam.COLORFUL_ASSOCIAHEDRON, 3)
for name, mode in [("full", FULL), ("preserving", COLOR_PRESERVING), ("respecting", COLOR_RESPECTING)]:
    print(name, graph_automorphisms(g, mode).order)

# %%
for family in (fam.ASSOCIAHEDRON, fam.CYCLOHEDRON):
    print(family, [polytope_automorphisms(fam.family_polytope(family, n)).order for n in (1, 2, 3)])

# %% [markdown]
# Dividing out the color permutations recovers the classical polytope, and
# forgetting colors is a covering with fibers of size n!.

# %%
for family in fam.COLORED:
    for n in (1, 2, 3):
        g, p = fam.family_graph(family, n), fam.family_polytope(family, n)
        cl = fam.classical_of(family)
        q = quotient(p, PermGroup(symmetric_factor_generators(g), g.num_vertices))
        ok, _ = poset_isomorphic(q, fam.family_polytope(cl, n))
        cov = covering_map(p, fam.family_polytope(cl, n), support_projection(g, fam.family_graph(cl, n)))
        print(family, n, q.f_vector(), ok, cov.valid, cov.degree)
