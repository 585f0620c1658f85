# %% [markdown]
# # Triangulations, colorings and exchange graphs
#
# Colored triangulations of the (n+3)-gon, flips, and the edge-colored
# graphs they span.

# %%
from math import factorial

import numpy as np

from colorful_polytopes.exchange import (
    build_colorful_exchange_graph,
    build_cyclohedron_exchange_graph,
    validate,
)
from colorful_polytopes.triangulations import (
    Polygon,
    catalan,
    colorings,
    enumerate_colored_triangulations,
    enumerate_triangulations,
    flip,
)

# %% [markdown]
# Counts against the closed forms.

# %%
for n in range(6):
    P = Polygon.for_associahedron(n)
    plain = len(enumerate_triangulations(P))
    colored = len(enumerate_colored_triangulations(P))
    print(n, plain, catalan(n + 1), colored, factorial(n) * catalan(n + 1))

# %% [markdown]
# A flip replaces one diagonal and keeps its color; flipping back undoes it.

# %%
P = Polygon.for_associahedron(3)
t = colorings(min(enumerate_triangulations(P), key=lambda t: t.diagonals))[0]
d = t.diagonals[0]
s = flip(t, d)
back = [e for e in s.diagonals if e not in t.diagonals][0]
print(t, "->", s)
print("involution:", flip(s, back) == t)

# %%
for n in range(1, 4):
    rep = validate(build_colorful_exchange_graph(n))
    print("assoc", n, rep.num_vertices, rep.num_edges, rep.regularity, rep.is_proper, rep.is_connected)
for n in range(1, 4):
    rep = validate(build_cyclohedron_exchange_graph(n))
    print("cyclo", n, rep.num_vertices, rep.num_edges, rep.regularity, rep.is_proper, rep.is_connected)

# %% [markdown]
# Degree histogram of the colorful 3-associahedron graph.

# %%
g = build_colorful_exchange_graph(3)
deg = np.bincount(np.asarray([e[:2] for e in g.edges]).ravel())
print(np.unique(deg, return_counts=True))
