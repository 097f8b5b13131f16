"""Characteristic numbers of complex projective spaces.

Run with ``python demos/03_genera_on_cpn.py``.
"""

# %%
from indextrace import AHAT, L_GENUS, TODD, product_genus, signature_cpn, twisted_ahat_cpn
from indextrace.genera import hattori_range

# %% [markdown]
# Twisting A-hat by e^{kx/2} kills every k strictly inside the range
# |k| < n + 1 of the right parity.

# %%
for n in range(1, 7):
    row = {k: str(twisted_ahat_cpn(n, k)) for k in range(-n - 1, n + 2) if (k - n - 1) % 2 == 0}
    print(n, row, "vanishing range:", hattori_range(n))

# %%
print("signatures:", [signature_cpn(n) for n in range(1, 9)])

# %%
# genera are multiplicative on products
for spec in (AHAT, L_GENUS, TODD):
    print(spec.name, product_genus(spec, [2, 2], [0, 0]), product_genus(spec, [2], [0]) ** 2)
