"""Root systems from Cartan matrices.

Run with ``python demos/01_root_systems.py``.
"""

# %%
from indextrace import Weight, build_root_system, inner_product, positive_roots, rho, weyl_order

G2 = [[2, -1], [-3, 2]]
rs = build_root_system(G2)

# %% [markdown]
# Positive roots are listed by height, in simple-root coordinates.

# %%
for a in positive_roots(rs):
    print(f"{str(a):>10}  height {a.height}  length^2 {inner_product(rs, a, a)}")

# %%
print("rho =", rho(rs), " |W| =", weyl_order(rs))

# %% [markdown]
# The form is normalised so that short roots have squared length 2.
# Scaling it changes every pairing by the same factor.

# %%
w = Weight([1, 2])
print("(w, w) =", inner_product(rs, w, w))
