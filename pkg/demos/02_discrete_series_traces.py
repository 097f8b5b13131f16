"""Traces of discrete series on a small grid of compact-type weights.

Run with ``python demos/02_discrete_series_traces.py``.
"""

# %%
from itertools import product

from indextrace import Weight, check_factorization, standard_pair

# %%
# SL(2,R): the trace of the m-th representation is -m
p = standard_pair("SL(2,R)")
print([str(check_factorization(p, Weight([m])).tau_G) for m in range(1, 8)])

# %% [markdown]
# SU(2,1) with the second simple root noncompact.  Each row satisfies
# tau_G = factor * dim_V; singular parameters give zero.

# %%
p = standard_pair("SU(2,1)")
print(f"{'mu':>8} {'dim_V':>6} {'d_H':>8} {'tau_G':>8} {'factor':>8}")
for a, b in product(range(3), repeat=2):
    r = check_factorization(p, Weight([a, b]))
    print(f"{str(r.mu):>8} {r.dim_V:>6} {str(r.formal_degree):>8} {str(r.tau_G):>8} {str(r.factor):>8}")

# %%
for name in ("Sp(4,R)", "Sp(1,1)", "G2(2)"):
    q = standard_pair(name)
    r = check_factorization(q, Weight([1] * q.rs.rank))
    print(name, "factor at mu = rho:", r.factor)
