"""Exact computations for PBW-degenerate flag varieties of type A.

The modules build on each other:

* ``exactalg``: sparse rational polynomials, determinants, exact rank
* ``liealg``: sl_n, its abelian degeneration and the fundamental modules
* ``tableaux``: PBW-tableaux, Vinberg configurations and the bijection psi
* ``plucker``: Plücker relations (classical, degenerate, t-family) and straightening
* ``geometry``: orbit coordinates, D^a polynomials and certificates
"""

from __future__ import annotations

from .exactalg import Poly, PolyMatrix, poly_det, rank_exact
from .geometry import (
    classical_coordinates,
    degenerate_coordinates,
    flatness_check,
    independence_certificate,
    verify_vanishing,
)
from .liealg import bracket, check_jacobi, contraction_limit_check
from .plucker import generate_generators, graded_piece_dimension, straighten
from .tableaux import Tableau, VinbergConfig, enumerate_sspbw, enumerate_vinberg, psi, psi_inv, weyl_dim

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "PolyMatrix",
    "poly_det",
    "rank_exact",
    "bracket",
    "check_jacobi",
    "contraction_limit_check",
    "Tableau",
    "VinbergConfig",
    "enumerate_sspbw",
    "enumerate_vinberg",
    "psi",
    "psi_inv",
    "weyl_dim",
    "generate_generators",
    "graded_piece_dimension",
    "straighten",
    "classical_coordinates",
    "degenerate_coordinates",
    "flatness_check",
    "independence_certificate",
    "verify_vanishing",
]
