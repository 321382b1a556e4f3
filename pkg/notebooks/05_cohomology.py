# %% [markdown]
# # The mod 2 ring
#
# Generators x1..xn with x_j^2 = x_j * alpha_j, where alpha_j reads column j.

# %%
from realbott import BottMatrix
from realbott.cohomology import (CohomRing, eigen_elements, eigen_space_bruteforce,
                                 format_element, parse_element)

r = CohomRing(BottMatrix.from_bin("011/001/000"))
x3 = r.generator(2)
print(format_element(r.square(x3)))
u = parse_element("x1+x3", 3)
print(format_element(r.multiply(u, u)))

# %%
for e in eigen_elements(r):
    basis = ", ".join(format_element(b) for b in e.eigenspace_basis)
    print(f"{format_element(e.alpha):8s} dim {e.dim} reduced {e.reduced_dim}  [{basis}]")

# %% [markdown]
# Solving x^2 = alpha x over all eight degree-one classes gives the same spaces.

# %%
for e in eigen_elements(r):
    print(eigen_space_bruteforce(r, e.alpha))
