# %% [markdown]
# # Splitting off factors
#
# A connected digraph may still be equivalent to a disjoint union.  The
# cherry 0 -> 1 <- 2 splits into a point and an arc.

# %%
from realbott import BottMatrix
from realbott.decompose import connected_components, decompose, max_components_oracle

cherry = BottMatrix.from_arcs(3, [(0, 1), (2, 1)])
print(connected_components(cherry))
d = decompose(cherry)
print(d.to_dict())
print(d.witness)
print(max_components_oracle(cherry))

# %% [markdown]
# Seven vertices, one of the three roots turns out to be redundant.

# %%
a = BottMatrix.from_bin("0100110/0010000/0000000/0000100/0000010/0000000/0000000")
d = decompose(a)
print(d.isolated_count, d.factor_keys())
print(d.witness.to_bin("\n"))
