"""Orbit coordinates, the D^a embedding, and computational certificates.

Degenerate coordinates X^a_J(c) are determinants of a d x d matrix C_J.  With
``m`` the number of entries of J that are <= d, row alpha of C_J is

* the unit vector at column beta when ``alpha = i_beta`` for some beta <= m,
* ``(0, ..., 0, c[alpha, i_{m+1}-1], ..., c[alpha, i_d-1])`` otherwise.

D^a_J uses the same matrix with ``Z[alpha, i_beta]`` in place of
``c[alpha, i_beta - 1]``, so the two agree under Z[i,j] <-> c[i,j-1] with no
extra sign.  Classical coordinates are minors of the unipotent matrix
exp(sum c[i,j] E_{j+1,i}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError
from .exactalg import Poly, PolyMatrix, Var, c as cvar, Z as zvar, poly_det, rank_of_rows
from .plucker import _check_dims, generate_generators, graded_piece_dimension
from .tableaux import (
    PartitionShape,
    Tableau,
    enumerate_sspbw,
    enumerate_vinberg,
    is_semistandard_pbw,
    psi,
    weight_of_shape,
    weyl_dim,
)

__all__ = [
    "Certificate",
    "coordinate_matrix",
    "degenerate_coordinates",
    "degenerate_coordinates_closed_form",
    "classical_coordinates",
    "unipotent_matrix",
    "D_a",
    "D_a_tableau",
    "leading_monomial",
    "config_monomial",
    "coordinate_map",
    "verify_vanishing",
    "vanishing_negative_control",
    "independence_certificate",
    "flatness_check",
    "z_to_c",
]


def _check_tuple(J: Sequence[int], d: int, n: int) -> tuple[int, ...]:
    J = tuple(J)
    if len(J) != d or list(J) != sorted(set(J)) or not all(1 <= j <= n for j in J):
        raise ValueError(f"J={J} is not a strictly increasing {d}-tuple in 1..{n}")
    return J


def coordinate_matrix(J: Sequence[int], d: int, n: int, entry) -> PolyMatrix:
    """The d x d matrix shared by C_J and D^a_J; ``entry(alpha, i_beta)`` fills it."""
    J = _check_tuple(J, d, n)
    small = [j for j in J if j <= d]
    m = len(small)
    rows = []
    for alpha in range(1, d + 1):
        if alpha in small:
            beta = small.index(alpha) + 1
            rows.append([int(b == beta) for b in range(1, d + 1)])
        else:
            rows.append([0] * m + [entry(alpha, J[b]) for b in range(m, d)])
    return PolyMatrix(rows)


@lru_cache(maxsize=None)
def degenerate_coordinates(J: tuple, d: int, n: int) -> Poly:
    """X^a_J(c) as the determinant of C_J."""
    mat = coordinate_matrix(J, d, n, lambda a, i: Poly.var(cvar(a, i - 1)))
    return poly_det(mat)


def degenerate_coordinates_closed_form(J: Sequence[int], d: int, n: int) -> Poly:
    """Signed sum over permutations of the parameters c[j_l, i_{r+sigma(l)} - 1]."""
    J = _check_tuple(J, d, n)
    small = [j for j in J if j <= d]
    large = [j for j in J if j > d]
    missing = [j for j in range(1, d + 1) if j not in small]
    sign = (-1) ** sum(i - l for l, i in enumerate(small, start=1))
    total = Poly.zero()
    for perm in itertools.permutations(range(len(large))):
        psign = 1
        for a, b in itertools.combinations(perm, 2):
            if a > b:
                psign = -psign
        term = Poly.const(psign)
        for l, s in enumerate(perm):
            term = term * Poly.var(cvar(missing[l], large[s] - 1))
        total = total + term
    return total * sign


@lru_cache(maxsize=None)
def unipotent_matrix(n: int) -> PolyMatrix:
    """exp(N) for N = sum_{i<=j} c[i,j] E_{j+1,i}; exact since N^n = 0."""
    N = PolyMatrix(
        [
            [Poly.var(cvar(b, a - 1)) if a > b else 0 for b in range(1, n + 1)]
            for a in range(1, n + 1)
        ]
    )
    total = PolyMatrix.identity(n)
    power = PolyMatrix.identity(n)
    for k in range(1, n):
        power = (power @ N).scale(Fraction(1, k))
        total = total + power
    return total


@lru_cache(maxsize=None)
def classical_coordinates(J: tuple, d: int, n: int) -> Poly:
    """Minor of exp(N) on rows J and columns 1..d."""
    J = _check_tuple(J, d, n)
    U = unipotent_matrix(n)
    return poly_det(U.submatrix([j - 1 for j in J], range(d)))


@lru_cache(maxsize=None)
def D_a(J: tuple, d: int, n: int) -> Poly:
    """D^a_J in the variables Z[i,j], i < j."""
    return poly_det(coordinate_matrix(J, d, n, lambda a, i: Poly.var(zvar(a, i))))


def z_to_c(p: Poly) -> Poly:
    """Rename Z[i,j] to c[i,j-1]."""
    return p.substitute({v: Poly.var(cvar(v.index[0], v.index[1] - 1)) for v in p.variables() if v.family == "Z"})


def D_a_tableau(T: Tableau, n: int) -> Poly:
    """Product over columns of sign * D^a of the sorted column."""
    out = Poly.const(1)
    for col in T.columns():
        if len(set(col)) != len(col):
            return Poly.zero()
        J = tuple(sorted(col))
        sign = 1
        for a, b in itertools.combinations(col, 2):
            if a > b:
                sign = -sign
        out = out * D_a(J, len(J), n) * sign
    return out


def leading_monomial(T: Tableau, n: int) -> Poly:
    """prod over boxes with T_{i,j} != i of Z[i, T_{i,j}]."""
    if not is_semistandard_pbw(T, n):
        raise PreconditionError(f"{T} is not a semistandard PBW-tableau")
    exps: dict = {}
    for i, row in enumerate(T.rows, start=1):
        for x in row:
            if x != i:
                v = zvar(i, x)
                exps[v] = exps.get(v, 0) + 1
    return Poly.monomial(exps)


def config_monomial(s) -> Poly:
    """prod Z[i, l+1]^{s_{i,l}} for a Vinberg configuration."""
    return Poly.monomial({zvar(i, l + 1): v for (i, l), v in s.as_dict().items() if v})


def coordinate_map(n: int, d: int, kind: str = "degenerate") -> dict[tuple, Poly]:
    """All Plücker coordinates of length d along the orbit (or D^a for kind='Da')."""
    fn = {"degenerate": degenerate_coordinates, "classical": classical_coordinates, "Da": D_a}[kind]
    return {J: fn(J, d, n) for J in itertools.combinations(range(1, n + 1), d)}


# --------------------------------------------------------------------------
# Certificates


@dataclass
class Certificate:
    check: str
    params: dict
    passed: bool
    details: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"check": self.check, "params": self.params, "pass": self.passed, "details": self.details}


def _substitution(n: int, dims: Sequence[int], family: str, coords: str) -> dict:
    mapping = {}
    for d in dims:
        for J, poly in coordinate_map(n, d, coords).items():
            mapping[Var(family, J)] = poly
    return mapping


def _residues(n: int, dims, variant: str, coords: str):
    family = "Xa" if variant == "degenerate" else "X"
    mapping = _substitution(n, dims, family, coords)
    out = []
    for gid, g in enumerate(generate_generators(n, dims, variant)):
        residue = g.substitute(mapping)
        if residue:
            out.append({"generator_id": gid, "generator": g.serialize(), "residue_serialized": residue.serialize()})
    return out


def verify_vanishing(n: int, dims: Iterable[int], variant: str = "degenerate", coords: str | None = None) -> Certificate:
    """Substitute orbit coordinates into every generator; pass iff all vanish."""
    dims = _check_dims(n, dims)
    if variant not in ("classical", "degenerate"):
        raise ValueError("vanishing is checked for the classical or degenerate ideal")
    coords = coords or variant
    details = _residues(n, dims, variant, coords)
    params = {"n": n, "dims": list(dims), "variant": variant, "coords": coords}
    return Certificate("vanishing", params, not details, details)


def vanishing_negative_control(n: int, dims: Iterable[int]) -> Certificate:
    """Degenerate coordinates against classical generators; passes iff some residue is nonzero."""
    dims = _check_dims(n, dims)
    details = _residues(n, dims, "classical", "degenerate")
    params = {"n": n, "dims": list(dims), "variant": "classical", "coords": "degenerate"}
    return Certificate("vanishing-negative-control", params, bool(details), details)


def independence_certificate(shape, n: int, cap: int | None = None) -> Certificate:
    """Rank of {D^a_T : T semistandard} and the triangularity of leading monomials."""
    if isinstance(shape, (tuple, list)):
        shape = PartitionShape(tuple(shape))
    tableaux = enumerate_sspbw(shape, n, cap)
    polys = [D_a_tableau(T, n) for T in tableaux]
    index: dict = {}
    rows = []
    for p in polys:
        rows.append({index.setdefault(m, len(index)): q for m, q in p.terms.items()})
    rank = rank_of_rows(rows)
    weight = weight_of_shape(shape, n)

    lead_ok = True
    for T, p in zip(tableaux, polys):
        if abs(p.coefficient(leading_monomial(T, n))) != 1:
            lead_ok = False

    # configurations in lex order on (i, l); the leading monomial of each one
    # must be absent from the images of all larger configurations
    configs = sorted(enumerate_vinberg(weight, cap), key=lambda s: s.values)
    images = {s: D_a_tableau(psi(s, weight), n) for s in configs}
    order_ok = True
    for a, s in enumerate(configs):
        ms = config_monomial(s)
        if ms != leading_monomial(psi(s, weight), n):
            order_ok = False
        for larger in configs[a + 1 :]:
            if images[larger].coefficient(ms):
                order_ok = False
    expected = len(tableaux)
    details = [
        {
            "rank": rank,
            "expected": expected,
            "weyl_dim": weyl_dim(weight, n),
            "leading_coefficients_unit": lead_ok,
            "order_argument": order_ok,
        }
    ]
    passed = rank == expected == weyl_dim(weight, n) and lead_ok and order_ok
    return Certificate("independence", {"n": n, "shape": list(shape.parts)}, passed, details)


FLATNESS_T_VALUES = (Fraction(0), Fraction(1), Fraction(2), Fraction(-1, 2))


def _weight_of_multidegree(n: int, dims: Sequence[int], deg: Sequence[int]) -> tuple[int, ...]:
    w = [0] * (n - 1)
    for d, m in zip(dims, deg):
        w[d - 1] += m
    return tuple(w)


def flatness_check(n: int, dims: Iterable[int], degs: Iterable[Sequence[int]], cap: int | None = None) -> Certificate:
    """Graded dimensions of the t-family at several t against weyl_dim."""
    dims = _check_dims(n, dims)
    details = []
    passed = True
    for deg in degs:
        deg = tuple(deg)
        values = {
            str(u): graded_piece_dimension(n, dims, "t", deg, u, cap) for u in FLATNESS_T_VALUES
        }
        expected = weyl_dim(_weight_of_multidegree(n, dims, deg), n)
        ok = all(v == expected for v in values.values())
        passed &= ok
        details.append({"deg": list(deg), "dimensions": values, "weyl_dim": expected, "pass": ok})
    return Certificate("flatness", {"n": n, "dims": list(dims)}, passed, details)
