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
# # Degenerate Plücker relations
#
# The degenerate relations keep only those terms of a classical quadratic
# relation whose PBW degree is minimal. The t-family interpolates: at t = 1
# it is classical, at t = 0 degenerate.

# %%
from __future__ import annotations

from fractions import Fraction

from pbwflag.plucker import (
    RelationSpec,
    classical_relation,
    degenerate_relation,
    generate_generators,
    graded_piece_dimension,
    straighten,
    t_relation,
)

spec = RelationSpec(1, (1, 2), (3,))
print(classical_relation(spec))
print(degenerate_relation(spec))
print(t_relation(spec))

# %%
for g in generate_generators(4, (1, 2), "degenerate"):
    print(g)

# %% [markdown]
# ## Graded pieces
#
# The dimension of each multigraded piece of the quotient ring does not move
# with t, which is the computational shadow of flatness.

# %%
for t in (0, 1, 2, Fraction(-1, 2)):
    print(t, [graded_piece_dimension(3, (1, 2), "t", deg, t) for deg in [(1, 0), (1, 1), (2, 1), (2, 2)]])

# %% [markdown]
# ## Straightening
#
# A product that is not semistandard gets rewritten with the relations until
# only semistandard tableaux remain.

# %%
for variant in ("degenerate", "classical"):
    print(variant, {str(T): q for T, q in straighten([(1, 2), (3, 4)], variant, 4).items()})
