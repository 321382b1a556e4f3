# %% [markdown]
# # Invariants and where they stop
#
# The fingerprint bundles levels, rank, odd height, sibling classes,
# cut-ranks of level unions and Betti numbers.  It separates all classes
# on four vertices but not on five.

# %%
from collections import Counter

from realbott import BottMatrix, classify_all
from realbott.canon import bott_equivalent
from realbott.invariants import betti, fingerprint

path = BottMatrix.from_bin("0100/0010/0001/0000")
fp = fingerprint(path)
print(fp.to_json())
print(betti(path), 2 ** (4 - path.rank()))

# %%
for n in (4, 5):
    reps = [r.canonical for r in classify_all(n).records]
    buckets = Counter(fingerprint(a) for a in reps)
    print(n, len(reps), len(buckets), max(buckets.values()))

# %% [markdown]
# A colliding pair on five vertices.

# %%
left = BottMatrix.from_arcs(5, [(0, 1), (1, 2), (3, 4), (3, 2)])
right = BottMatrix.from_arcs(5, [(0, 1), (1, 2), (3, 4), (0, 4)])
print(fingerprint(left) == fingerprint(right), bott_equivalent(left, right))
