# %% [markdown]
# Which trees have Cohen-Macaulay closed neighborhood ideals?
#
# For a tree, being a corona, being domination-unmixed, having an unmixed
# ideal, and having a complete-intersection ideal all coincide. Here we look
# at a few trees and then sweep every labeled tree up to 8 vertices.

# %%
import time

from domideal import cm_status_of_tree, random_tree
from domideal.graph import path_graph
from domideal.theorems import sweep_trees_exhaustive_many, verify_tree_theorem

for name, T in [("P3", path_graph(3)), ("P4", path_graph(4)), ("random(10)", random_tree(10, seed=5))]:
    status = cm_status_of_tree(T)
    print(f"{name:11s} {status.kind.value:22s} {status.note}")

# %% the one-vertex tree is the documented edge case
print(verify_tree_theorem(path_graph(1)).to_json())

# %% exhaustive sweep, vectorized over batches of trees
start = time.perf_counter()
reports = sweep_trees_exhaustive_many(("tree-theorem", "tree-corollary"), max_n=8)
for claim, rep in reports.items():
    print(claim, {k: rep.to_json()[k] for k in ("instances", "passes", "vacuous")}, "failures:", len(rep.failures))
print(f"swept in {time.perf_counter() - start:.1f} s")
