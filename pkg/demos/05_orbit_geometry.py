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
# # Orbit coordinates and certificates
#
# Along the open orbit every Plücker coordinate is a polynomial in the
# parameters c. The degenerate ones are small determinants; the classical
# ones are minors of a unipotent matrix, and their lowest-degree part is the
# degenerate coordinate.

# %%
from __future__ import annotations

from pbwflag.geometry import (
    D_a_tableau,
    classical_coordinates,
    degenerate_coordinates,
    flatness_check,
    independence_certificate,
    leading_monomial,
    vanishing_negative_control,
    verify_vanishing,
)
from pbwflag.tableaux import PartitionShape, enumerate_sspbw

for J in [(1, 2), (1, 3), (2, 4), (3, 4)]:
    cl = classical_coordinates(J, 2, 4)
    print(J, "|", degenerate_coordinates(J, 2, 4), "|", cl, "| lowest:", cl.lowest_part()[1])

# %% [markdown]
# ## Vanishing
#
# The degenerate coordinates satisfy the degenerate relations. As a control,
# they do not satisfy the classical ones.

# %%
print(verify_vanishing(4, (1, 2, 3), "degenerate").passed)
print(verify_vanishing(4, (1, 2, 3), "classical").passed)
neg = vanishing_negative_control(3, (1, 2))
print(neg.passed, neg.details)

# %% [markdown]
# ## Independence
#
# Each semistandard tableau contributes a product of determinants with a
# distinguished monomial, which makes the family triangular.

# %%
for T in enumerate_sspbw(PartitionShape((2, 1)), 3):
    print(T, "|", leading_monomial(T, 3), "|", D_a_tableau(T, 3))
print(independence_certificate((2, 2), 4).to_json())

# %%
print(flatness_check(4, (1, 2), [(1, 1), (2, 0)]).to_json())
