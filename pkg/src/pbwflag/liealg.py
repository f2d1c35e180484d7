"""sl_n in the Chevalley basis, its abelian degeneration, and fundamental modules.

Matrix model (all signs derive from it)::

    e_{i,j} -> E_{i, j+1}      f_{i,j} -> E_{j+1, i}      h_i -> E_{i,i} - E_{i+1,i+1}

for ``1 <= i <= j <= n-1``.  On the fundamental module Lambda^d(C^n) the
element f_{i,j} sends v_i to v_{j+1} and acts as a derivation.

The degenerate module V^a_{omega_d} has the same basis v_J.  There f_{i,j}
survives only when it raises the PBW degree (``i <= d <= j``) and e_{i,j} only
when it preserves it (``d < i <= j`` or ``i <= j < d``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .exactalg import Poly, c as cvar, t as tvar

__all__ = [
    "Gen",
    "e",
    "f",
    "h",
    "LieElement",
    "basis",
    "bracket",
    "basis_bracket",
    "check_jacobi",
    "contraction_limit_check",
    "WedgeVector",
    "fund_action",
    "action_operator",
    "exp_orbit_vector",
    "wedge_pbw_degree",
]

VARIANTS = ("classical", "degenerate")


@dataclass(frozen=True, order=True)
class Gen:
    """Chevalley basis symbol.  For ``kind == 'h'`` only ``i`` is meaningful."""

    kind: str
    i: int
    j: int

    def __str__(self):
        return f"h_{self.i}" if self.kind == "h" else f"{self.kind}_{{{self.i},{self.j}}}"

    @property
    def root(self) -> frozenset:
        """Support of alpha_{i,j} in the simple roots."""
        return frozenset(range(self.i, self.j + 1))


def e(i: int, j: int) -> Gen:
    return Gen("e", i, j)


def f(i: int, j: int) -> Gen:
    return Gen("f", i, j)


def h(i: int) -> Gen:
    return Gen("h", i, i)


def basis(n: int) -> list[Gen]:
    roots = [(i, j) for i in range(1, n) for j in range(i, n)]
    return [e(*r) for r in roots] + [h(i) for i in range(1, n)] + [f(*r) for r in roots]


class LieElement:
    """Finite rational combination of Chevalley basis symbols of sl_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Gen, object] | None = None):
        self.n = n
        self.coeffs = {g: Fraction(q) for g, q in (coeffs or {}).items() if q}

    @classmethod
    def basis_element(cls, n: int, g: Gen) -> "LieElement":
        return cls(n, {g: 1})

    def __add__(self, other: "LieElement") -> "LieElement":
        _check_same_n(self, other)
        out = dict(self.coeffs)
        for g, q in other.coeffs.items():
            out[g] = out.get(g, 0) + q
        return LieElement(self.n, out)

    def __neg__(self):
        return LieElement(self.n, {g: -q for g, q in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q) -> "LieElement":
        return LieElement(self.n, {g: q * v for g, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, LieElement)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{q}*{g}" for g, q in sorted(self.coeffs.items()))


def _check_same_n(x: LieElement, y: LieElement):
    if x.n != y.n:
        raise ValueError(f"elements of sl_{x.n} and sl_{y.n} do not mix")


def _to_matrix(g: Gen) -> dict:
    if g.kind == "e":
        return {(g.i, g.j + 1): Fraction(1)}
    if g.kind == "f":
        return {(g.j + 1, g.i): Fraction(1)}
    return {(g.i, g.i): Fraction(1), (g.i + 1, g.i + 1): Fraction(-1)}


def _from_matrix(n: int, mat: Mapping) -> LieElement:
    out: dict = {}
    diag = [Fraction(0)] * (n + 1)
    for (a, b), q in mat.items():
        if not q:
            continue
        if a < b:
            out[e(a, b - 1)] = q
        elif a > b:
            out[f(b, a - 1)] = q
        else:
            diag[a] = q
    if sum(diag):
        raise ValueError("matrix is not traceless")
    running = Fraction(0)
    for i in range(1, n):
        running += diag[i]
        if running:
            out[h(i)] = running
    return LieElement(n, out)


def _commutator(x: dict, y: dict) -> dict:
    out: dict = {}
    for (a, b), p in x.items():
        for (b2, d), q in y.items():
            if b == b2:
                out[(a, d)] = out.get((a, d), 0) + p * q
    for (a, b), p in y.items():
        for (b2, d), q in x.items():
            if b == b2:
                out[(a, d)] = out.get((a, d), 0) - p * q
    return out


@lru_cache(maxsize=None)
def basis_bracket(n: int, x: Gen, y: Gen, variant: str = "classical") -> LieElement:
    """Bracket of two basis symbols in sl_n or its degeneration."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    classical = _from_matrix(n, _commutator(_to_matrix(x), _to_matrix(y)))
    if variant == "classical":
        return classical
    kinds = (x.kind, y.kind)
    if kinds == ("f", "f"):
        return LieElement(n)
    if kinds == ("e", "f"):
        return classical if _strictly_above(y.root, x.root) else LieElement(n)
    if kinds == ("f", "e"):
        return classical if _strictly_above(x.root, y.root) else LieElement(n)
    # h with anything, and e with e, keep the classical bracket.
    return classical


def _strictly_above(beta: frozenset, alpha: frozenset) -> bool:
    # beta - alpha is a nonzero element of Q_+; for roots of type A this is
    # strict containment of the supporting intervals.
    return alpha < beta


def bracket(x: LieElement, y: LieElement, variant: str = "classical") -> LieElement:
    _check_same_n(x, y)
    out = LieElement(x.n)
    for gx, qx in x.coeffs.items():
        for gy, qy in y.coeffs.items():
            out = out + basis_bracket(x.n, gx, gy, variant).scale(qx * qy)
    return out


def check_jacobi(n: int, variant: str = "degenerate") -> bool:
    """Jacobi identity and antisymmetry on every triple of basis symbols."""
    if not 2 <= n <= 6:
        raise ValueError("check_jacobi supports 2 <= n <= 6")
    elems = [LieElement.basis_element(n, g) for g in basis(n)]
    for x, y in itertools.product(elems, repeat=2):
        if not (bracket(x, y, variant) + bracket(y, x, variant)).is_zero():
            return False
    for x, y, z in itertools.combinations(elems, 3):
        total = (
            bracket(x, bracket(y, z, variant), variant)
            + bracket(y, bracket(z, x, variant), variant)
            + bracket(z, bracket(x, y, variant), variant)
        )
        if not total.is_zero():
            return False
    return True


def _eps_weight(g: Gen) -> int:
    return 1 if g.kind == "f" else 0


def contracted_bracket(n: int, x: Gen, y: Gen) -> dict:
    """Classical bracket of x(eps), y(eps) written in the rescaled basis.

    Returns ``{z: poly in eps}`` where eps is carried by the variable ``t``.
    With f(eps) = eps*f the coefficient of z(eps) is
    ``c_z * eps**(w(x) + w(y) - w(z))``.
    """
    out = {}
    for z, q in basis_bracket(n, x, y, "classical").coeffs.items():
        power = _eps_weight(x) + _eps_weight(y) - _eps_weight(z)
        if power < 0:
            raise ArithmeticError(f"rescaled basis not closed at [{x}, {y}]")
        out[z] = Poly.var(tvar, power) * q
    return out


def contraction_limit_check(n: int) -> bool:
    """eps -> 0 limit of the rescaled classical bracket equals the degenerate one."""
    if not 2 <= n <= 5:
        raise ValueError("contraction_limit_check supports 2 <= n <= 5")
    for x, y in itertools.product(basis(n), repeat=2):
        limit = {}
        for z, poly in contracted_bracket(n, x, y).items():
            value = poly.substitute({tvar: 0}).constant_value()
            if value:
                limit[z] = value
        if LieElement(n, limit) != basis_bracket(n, x, y, "degenerate"):
            return False
    return True


# --------------------------------------------------------------------------
# Fundamental modules


def _normalize(raw: tuple) -> tuple[tuple, int]:
    if len(set(raw)) != len(raw):
        return tuple(sorted(raw)), 0
    sign = 1
    seq = list(raw)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return tuple(sorted(raw)), sign


class WedgeVector:
    """Vector of V_{omega_d} (classical or PBW-graded) in the basis v_J.

    Coefficients are ``Poly`` so that orbit vectors with symbolic parameters
    live in the same type.
    """

    __slots__ = ("n", "d", "coeffs")

    def __init__(self, n: int, d: int, coeffs: Mapping[tuple, object] | None = None):
        self.n, self.d = n, d
        out: dict = {}
        for raw, q in (coeffs or {}).items():
            J, sign = _normalize(tuple(raw))
            if len(J) != d or not all(1 <= j <= n for j in J):
                raise ValueError(f"bad index tuple {raw} for d={d}, n={n}")
            if sign == 0:
                continue
            out[J] = out.get(J, Poly.zero()) + Poly.coerce(q) * sign
        self.coeffs = {J: q for J, q in out.items() if q}

    @classmethod
    def basis_vector(cls, n: int, J: tuple, coeff=1) -> "WedgeVector":
        return cls(n, len(J), {tuple(J): coeff})

    @classmethod
    def highest(cls, n: int, d: int) -> "WedgeVector":
        return cls.basis_vector(n, tuple(range(1, d + 1)))

    def __add__(self, other: "WedgeVector") -> "WedgeVector":
        out = dict(self.coeffs)
        for J, q in other.coeffs.items():
            out[J] = out.get(J, Poly.zero()) + q
        return WedgeVector(self.n, self.d, out)

    def scale(self, q) -> "WedgeVector":
        return WedgeVector(self.n, self.d, {J: p * q for J, p in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, J: tuple) -> Poly:
        return self.coeffs.get(tuple(J), Poly.zero())

    def __eq__(self, other):
        return (
            isinstance(other, WedgeVector)
            and (self.n, self.d) == (other.n, other.d)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        inner = " + ".join(f"({q})*v{J}" for J, q in sorted(self.coeffs.items()))
        return f"WedgeVector(n={self.n}, d={self.d}: {inner or '0'})"


def wedge_pbw_degree(J: tuple, d: int) -> int:
    return sum(1 for j in J if j > d)


def _acts(g: Gen, d: int, variant: str) -> bool:
    if variant == "classical" or g.kind == "h":
        return True
    if g.kind == "f":
        return g.i <= d <= g.j
    return d < g.i <= g.j or g.i <= g.j < d


def fund_action(g: Gen, v: WedgeVector, variant: str = "degenerate") -> WedgeVector:
    """Action of a basis symbol on a fundamental module.

    ``f_{i,j}`` replaces an entry ``i`` by ``j+1``; ``e_{i,j}`` replaces
    ``j+1`` by ``i``; ``h_i`` is diagonal.  Results are re-sorted with sign.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    n, d = v.n, v.d
    if g.kind != "h" and not 1 <= g.i <= g.j <= n - 1:
        raise ValueError(f"{g} is not a root vector of sl_{n}")
    if not _acts(g, d, variant):
        return WedgeVector(n, d)
    if g.kind == "h":
        out = {}
        for J, q in v.coeffs.items():
            weight = (g.i in J) - (g.i + 1 in J)
            if weight:
                out[J] = q * weight
        return WedgeVector(n, d, out)
    src, dst = (g.i, g.j + 1) if g.kind == "f" else (g.j + 1, g.i)
    out: dict = {}
    for J, q in v.coeffs.items():
        for r, jr in enumerate(J):
            if jr == src:
                new = J[:r] + (dst,) + J[r + 1 :]
                out[new] = out.get(new, Poly.zero()) + q
    return WedgeVector(n, d, out)


def action_operator(element: LieElement, v: WedgeVector, variant: str = "degenerate"):
    out = WedgeVector(v.n, v.d)
    for g, q in element.coeffs.items():
        out = out + fund_action(g, v, variant).scale(q)
    return out


def exp_orbit_vector(d: int, n: int, variant: str = "degenerate") -> dict[tuple, Poly]:
    """Coordinates of exp(sum c_{i,j} f_{i,j}) v_{1..d} as polynomials in c.

    The exponential is the terminating operator series
    ``sum_k A^k v / k!`` with ``A = sum c_{i,j} f_{i,j}``.
    """
    if not 1 <= d <= n - 1:
        raise ValueError("need 1 <= d <= n-1")
    roots = [(i, j) for i in range(1, n) for j in range(i, n)]

    def apply(vec: WedgeVector) -> WedgeVector:
        out = WedgeVector(n, d)
        for i, j in roots:
            out = out + fund_action(f(i, j), vec, variant).scale(Poly.var(cvar(i, j)))
        return out

    term = WedgeVector.highest(n, d)
    total = term
    k = 0
    # Classical f's are nilpotent of order n on C^n, so the series stops too.
    while not term.is_zero():
        k += 1
        term = apply(term).scale(Fraction(1, k))
        total = total + term
        if k > d * n:
            raise ArithmeticError("orbit series failed to terminate")
    return {J: total.coefficient(J) for J in itertools.combinations(range(1, n + 1), d)}


def iter_root_pairs(n: int) -> Iterator[tuple[Gen, Gen]]:
    roots = [(i, j) for i in range(1, n) for j in range(i, n)]
    for r1, r2 in itertools.product(roots, repeat=2):
        yield f(*r1), f(*r2)
