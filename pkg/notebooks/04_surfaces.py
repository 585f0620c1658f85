# %% [markdown]
# # Rank-3 members as maps on surfaces

# %%
from colorful_polytopes import families as fam
from colorful_polytopes.surface import surface_report

# %%
for family, n in [
    (fam.ASSOCIAHEDRON, 3),
    (fam.COLORFUL_ASSOCIAHEDRON, 3),
    (fam.CYCLOHEDRON, 2),
    (fam.COLORFUL_CYCLOHEDRON, 2),
]:
    rep = surface_report(fam.family_polytope(family, n))
    print(family, n, rep.v, rep.e, rep.f, rep.euler_characteristic, rep.orientable, rep.genus)

# %%
rep = surface_report(fam.family_polytope(fam.COLORFUL_ASSOCIAHEDRON, 3))
print(rep.face_sizes)
print(rep.vertex_census)
