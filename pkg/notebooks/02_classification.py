# %% [markdown]
# # Counting classes
#
# `classify_all` canonicalises every strictly upper triangular matrix of a
# given size and merges iso-forms joined by a single move.

# %%
import time

import numpy as np

from realbott import classify_all

rows = []
for n in range(1, 7):
    t0 = time.perf_counter()
    s = classify_all(n)
    rows.append((n, s.D, s.O, s.S, time.perf_counter() - t0))

table = np.array(rows)
print(" n     D    O    S   seconds")
for n, d, o, s_, t in table:
    print(f"{int(n):2d} {int(d):5d} {int(o):4d} {int(s_):4d}   {t:7.2f}")

# %% [markdown]
# Class sizes at n = 5, counted in upper triangular members.

# %%
s5 = classify_all(5)
sizes = np.array([r.member_count for r in s5.records])
print(sizes.sum(), 2 ** 10)
values, freq = np.unique(sizes, return_counts=True)
print(dict(zip(values.tolist(), freq.tolist())))

# %%
print(s5.to_csv().splitlines()[:6])
