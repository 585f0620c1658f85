# %% [markdown]
# # Colorful polytopes
#
# Face posets built from the exchange graphs, the polytope axioms, and the
# facet structure of the colorful associahedra.

# %%
from colorful_polytopes import families as fam
from colorful_polytopes.colorful import facet_families, k_table
from colorful_polytopes.poset import check_axioms
from colorful_polytopes.quotient import poset_isomorphic

# %%
for n in range(0, 4):
    p = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, n)
    rep = check_axioms(p, exhaustive=True)
    print(n, p.f_vector(), rep.num_flags, rep.passed)

# %%
p = fam.family_polytope(fam.COLORFUL_CYCLOHEDRON, 2)
print(p.f_vector(), check_axioms(p, exhaustive=True).passed)

# %% [markdown]
# Every facet of the colorful 3-associahedron is a colorful 2-associahedron.

# %%
p3 = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 3)
p2 = fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 2)
fams = facet_families(p3)
iso = [f for f in fams.values() if poset_isomorphic(p3.section(p3.bottom, f), p2)[0]]
print(len(fams), len(iso))

# %%
K = k_table(p3)
for row in K[:10]:
    print(row)
