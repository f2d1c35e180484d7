# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # The abelian degeneration of sl_n
#
# In the degenerate algebra the lowering operators commute with each other,
# and a raising operator only reaches a lowering one when the root difference
# is a nonzero sum of positive roots.

# %%
from __future__ import annotations

from pbwflag.liealg import (
    LieElement,
    WedgeVector,
    bracket,
    check_jacobi,
    contraction_limit_check,
    e,
    exp_orbit_vector,
    f,
    fund_action,
)

n = 3
E = lambda g: LieElement(n, {g: 1})
print("[f11, f22]   classical:", bracket(E(f(1, 1)), E(f(2, 2))))
print("[f11, f22]   degenerate:", bracket(E(f(1, 1)), E(f(2, 2)), "degenerate"))
print("[e11, f12]   degenerate:", bracket(E(e(1, 1)), E(f(1, 2)), "degenerate"))
print("[e12, f11]   degenerate:", bracket(E(e(1, 2)), E(f(1, 1)), "degenerate"))

# %% [markdown]
# The new bracket is still a Lie bracket, and it is the limit of the classical
# one after rescaling every f by a parameter that goes to zero.

# %%
for k in range(2, 6):
    print(k, check_jacobi(k, "degenerate"), contraction_limit_check(k))

# %% [markdown]
# ## Fundamental modules
#
# On the wedge powers only some lowering operators survive, and those that do
# raise the PBW degree by one.

# %%
v = WedgeVector.basis_vector(4, (1, 2))
for g in (f(2, 2), f(1, 3), f(1, 1)):
    print(g, "->", fund_action(g, v))

# %% [markdown]
# Since the operators commute, the orbit of the highest weight line is a
# terminating exponential series with polynomial coefficients.

# %%
for J, value in exp_orbit_vector(2, 4).items():
    print(J, value)
