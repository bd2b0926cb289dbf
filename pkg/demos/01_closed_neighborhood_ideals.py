# %% [markdown]
# Closed neighborhood ideals and their decompositions
#
# Every vertex v of a graph contributes the monomial whose variables are v and
# its neighbors. The ideal they generate decomposes as the intersection of the
# variable ideals (X_i : i in S) over the minimal dominating sets S.

# %%
from domideal import (
    closed_neighborhood_ideal,
    irreducible_decomposition,
    minimal_dominating_sets,
    parse_edge_list,
)
from domideal.ideal import intersect_all

# path X1-X2-X3 with a whisker on each vertex
G = parse_edge_list("""
6
1 2
2 3
1 4
2 5
3 6
""")

# %% raw generators, one per vertex, before minimization
for v in range(G.n):
    print(f"N(X{v + 1}) =", "*".join(f"X{u + 1}" for u in range(G.n) if G.closed_masks[v] >> u & 1))

# %% only three generators survive
N = closed_neighborhood_ideal(G)
print("N_G =", N)

# %% the decomposition and the minimal dominating sets are the same family
D = irreducible_decomposition(N)
print("N_G =", D)
print("minimal dominating sets:", [str(s) for s in minimal_dominating_sets(G)])
assert D.components == minimal_dominating_sets(G)

# %% intersecting the components gives the ideal back
assert intersect_all(D.ideals()) == N

# %% a triangle with whiskers has the very same ideal: G -> N_G is not injective
H = parse_edge_list("6\n1 2\n1 3\n2 3\n1 4\n2 5\n3 6\n")
print("N_H =", closed_neighborhood_ideal(H), "| same ideal:", closed_neighborhood_ideal(H) == N)
