# %% [markdown]
# Coronas: whiskers everywhere make everything uniform
#
# Adding a pendant vertex to each of d vertices gives a graph whose minimal
# dominating sets all have d elements (there are 2^d of them) and whose ideal
# is generated by d pairwise coprime monomials.

# %%
from domideal import closed_neighborhood_ideal, corona, is_complete_intersection, minimal_dominating_sets
from domideal.graph import cycle_graph, random_graph, recognize_corona
from domideal.theorems import verify_corona_proposition

for name, base in [("C4", cycle_graph(4)), ("G(6, 0.5)", random_graph(6, 0.5, seed=1))]:
    H = corona(base)
    sets = minimal_dominating_sets(H)
    N = closed_neighborhood_ideal(H)
    print(f"{name}: {len(sets)} minimal dominating sets, sizes {sorted(sets.sizes())}")
    print("  N_H =", N, "| complete intersection:", is_complete_intersection(N))
    print("  whisker pairing recovered:", recognize_corona(H))

# %% the verifier packages the same checks with structured evidence
print(verify_corona_proposition(random_graph(7, 0.3, seed=2)).to_json())
