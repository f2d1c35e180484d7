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
# # Exact polynomials and determinants
#
# Everything downstream runs over the rationals. Polynomials are sparse maps
# from monomials to `Fraction`, and print in a canonical text form that the
# golden files and the CLI share.

# %%
from __future__ import annotations

from fractions import Fraction

from pbwflag.exactalg import Poly, PolyMatrix, Var, det_permutation_sum, poly_det, rank_exact

x = Poly.var(Var("c", (1, 1)))
y = Poly.var(Var("c", (1, 2)))
p = (x + y) * (x - y) + Fraction(1, 3)
print(p)
print(Poly.parse(p.serialize()) == p)

# %% [markdown]
# Determinants use cofactor expansion for small matrices and fraction-free
# elimination above that. The permutation sum is kept around as an oracle.

# %%
m = PolyMatrix([[x, y, 1], [0, x, y], [y, 0, x]])
print(poly_det(m))
print(poly_det(m) == det_permutation_sum(m))

# %%
print(rank_exact(PolyMatrix([[1, 2, 3], [2, 4, 6], [0, 1, Fraction(1, 2)]])))
