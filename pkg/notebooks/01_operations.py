# %% [markdown]
# # Moves on acyclic digraphs
#
# A matrix here is the adjacency matrix of an acyclic digraph.  Three moves
# generate the equivalence we care about: relabelling the vertices, local
# complementation at a vertex, and sliding one row onto another when the two
# vertices have the same in-neighbours.

# %%
from realbott import BottMatrix, Permutation, local_complement, relabel, slide
from realbott.canon import bott_canon, iso_canon, orbit_forms

a = BottMatrix.from_bin("011/001/000")
print(a.to_bin("\n"))

# %% [markdown]
# Local complementation at vertex 1 adds row 1 to every row with an arc into 1.

# %%
b = local_complement(a, 1)
print(b)
print(local_complement(b, 1) == a)

# %% [markdown]
# Vertices 0 and 1 of `001/001/000` are both roots, so row 0 may be slid onto row 1.

# %%
c = BottMatrix.from_bin("001/001/000")
print(slide(c, 0, 1))

# %%
p = Permutation.reversal(3)
print(relabel(a, p), iso_canon(relabel(a, p)).matrix)

# %% [markdown]
# The class of `a` up to relabelling has two members.

# %%
rep = bott_canon(a)
print(rep.canonical.to_hex(), rep.orbit_size)
for rows in orbit_forms(a):
    print(BottMatrix(rows, 3).to_bin())
