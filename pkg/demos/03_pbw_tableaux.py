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
# # PBW-tableaux and Vinberg configurations
#
# Semistandard PBW-tableaux count the same thing as classical semistandard
# tableaux, namely the dimension of the irreducible representation, but the
# fillings look different: entries up to the column length are pinned to
# their own row, and larger entries decrease downwards.

# %%
from __future__ import annotations

from pbwflag.tableaux import (
    PartitionShape,
    enumerate_sspbw,
    enumerate_ssyt_classical,
    enumerate_vinberg,
    partition_of_weight,
    psi,
    psi_inv,
    weyl_dim,
)

shape = PartitionShape((2, 1))
for T in enumerate_sspbw(shape, 3):
    print(T)

# %%
for m1 in range(4):
    row = []
    for m2 in range(4):
        sh = partition_of_weight((m1, m2))
        row.append((len(enumerate_sspbw(sh, 3)), len(enumerate_ssyt_classical(sh, 3)), weyl_dim((m1, m2))))
    print(row)

# %% [markdown]
# ## The bijection
#
# Vinberg configurations are integer labels on positive roots, bounded along
# every Dyck path. The map psi fills the diagram from the bottom row up, and
# reading off how often each value appears in a row inverts it.

# %%
w = (1, 1, 1)
configs = enumerate_vinberg(w)
print(len(configs), weyl_dim(w))
for s in configs[:5]:
    T = psi(s, w)
    print({k: v for k, v in s.as_dict().items() if v}, "->", T, "->", psi_inv(T, 4) == s)
