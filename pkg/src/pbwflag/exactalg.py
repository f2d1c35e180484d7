"""Exact rationals, sparse multivariate polynomials and exact linear algebra.

Everything here works over ``fractions.Fraction``; nothing is ever converted
to floating point.  Polynomials are immutable and hashable, and their terms are
kept in a canonical order so that printing is reproducible.

Variables are named by a family tag and integer index data:

* ``X[j1,...,jd]``  classical Plücker coordinate
* ``Xa[j1,...,jd]`` degenerate Plücker coordinate
* ``Z[i,j]``        entry variable of the polynomial embedding
* ``c[i,j]``        orbit parameter attached to the root alpha_{i,j}
* ``t``             deformation parameter
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import DimensionError, NonConstantError

__all__ = [
    "Var",
    "X",
    "Xa",
    "Z",
    "c",
    "t",
    "Poly",
    "PolyMatrix",
    "poly_arith",
    "poly_substitute",
    "poly_det",
    "det_permutation_sum",
    "rank_exact",
    "rank_of_rows",
    "divide_exact",
]

FAMILIES = ("X", "Xa", "Z", "c", "t")


class Var(NamedTuple):
    """A polynomial variable: family tag plus index tuple.

    Variables compare as plain tuples.  The family tags happen to sort in the
    intended global order ``X < Xa < Z < c < t``.
    """

    family: str
    index: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.family == "t":
            return "t"
        return f"{self.family}[{','.join(map(str, self.index))}]"


def X(*index: int) -> Var:
    return Var("X", tuple(index))


def Xa(*index: int) -> Var:
    return Var("Xa", tuple(index))


def Z(i: int, j: int) -> Var:
    return Var("Z", (i, j))


def c(i: int, j: int) -> Var:
    return Var("c", (i, j))


t = Var("t", ())

Monomial = tuple  # tuple[tuple[Var, int], ...], sorted by Var
Scalar = Union[int, Fraction]

_ONE: Monomial = ()
_END = (Var("~", ()), 0)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_key(m: Monomial):
    """Ascending sort on this key lists monomials in descending lex order."""
    return tuple((v, -e) for v, e in m) + (_END,)


def _mono_degree(m: Monomial, families=None) -> int:
    if families is None:
        return sum(e for _, e in m)
    return sum(e for v, e in m if v.family in families)


def _mono_str(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Sparse polynomial with rational coefficients.

    ``terms`` maps monomials (sorted tuples of ``(Var, exponent)``) to nonzero
    ``Fraction`` coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        if terms:
            for m, q in terms.items():
                if q:
                    m = tuple(sorted((v, e) for v, e in m if e))
                    clean[m] = clean.get(m, 0) + Fraction(q)
            clean = {m: q for m, q in clean.items() if q}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        value = Fraction(value)
        return cls._raw({_ONE: value} if value else {})

    @classmethod
    def var(cls, v: Var, power: int = 1) -> "Poly":
        if power == 0:
            return cls.const(1)
        return cls._raw({((v, power),): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Mapping[Var, int], coeff: Scalar = 1) -> "Poly":
        return cls({tuple(exps.items()): coeff})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical (descending lex) order."""
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == _ONE for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise NonConstantError(f"not a constant: {self}")
        return self._terms.get(_ONE, Fraction(0))

    def coefficient(self, monomial: Union[Monomial, "Poly"]) -> Fraction:
        if isinstance(monomial, Poly):
            (monomial,) = monomial._terms
        return self._terms.get(monomial, Fraction(0))

    def monomials(self) -> list:
        return [m for m, _ in self.items()]

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def degree(self, families=None) -> int:
        """Total degree, counting only variables of ``families`` if given."""
        if not self._terms:
            return -1
        return max(_mono_degree(m, families) for m in self._terms)

    def homogeneous_part(self, k: int, families=None) -> "Poly":
        return Poly._raw(
            {m: q for m, q in self._terms.items() if _mono_degree(m, families) == k}
        )

    def lowest_part(self, families=None) -> tuple[int, "Poly"]:
        """Lowest-degree homogeneous component and its degree."""
        if not self._terms:
            raise ValueError("zero polynomial has no lowest part")
        k = min(_mono_degree(m, families) for m in self._terms)
        return k, self.homogeneous_part(k, families)

    def is_homogeneous(self, families=None) -> bool:
        return len({_mono_degree(m, families) for m in self._terms}) <= 1

    def leading_term(self) -> tuple[Monomial, Fraction]:
        m = min(self._terms, key=_mono_key)
        return m, self._terms[m]

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def coerce(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, Var):
            return Poly.var(x)
        if isinstance(x, (int, Fraction)):
            return Poly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, q in other._terms.items():
            s = out.get(m, 0) + q
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -q for m, q in self._terms.items()})

    def __sub__(self, other):
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw({})
            return Poly._raw({m: q * other for m, q in self._terms.items()})
        other = Poly.coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, q1 in self._terms.items():
            for m2, q2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + q1 * q2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return divide_exact(self, Poly.coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Var)):
            other = Poly.coerce(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -----------------------------------------------------
    def substitute(self, mapping: Mapping[Var, object]) -> "Poly":
        """Replace variables by polynomials; unmapped variables stay fixed."""
        images = {v: Poly.coerce(p) for v, p in mapping.items()}
        powers: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] ** e
            return powers[key]

        result = Poly.zero()
        for m, q in self._terms.items():
            kept = []
            term = Poly.const(q)
            for v, e in m:
                if v in images:
                    term = term * power(v, e)
                else:
                    kept.append((v, e))
            if kept:
                term = term * Poly._raw({tuple(kept): Fraction(1)})
            result = result + term
        return result

    def evaluate(self, mapping: Mapping[Var, Scalar]) -> Fraction:
        value = self.substitute(mapping)
        return value.constant_value()

    # -- text -------------------------------------------------------------
    def serialize(self) -> str:
        """Canonical text: ``p/q*X[1,2]*Z[2,3]^2 + ...``; zero is ``0/1``."""
        if not self._terms:
            return "0/1"
        parts = []
        for m, q in self.items():
            parts.append(_frac_str(q) + ("*" + _mono_str(m) if m else ""))
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "Poly":
        text = text.strip()
        terms: dict = {}
        for chunk in text.split(" + "):
            coeff, *factors = chunk.split("*")
            exps: dict = {}
            for f in factors:
                v, e = _parse_factor(f)
                exps[v] = exps.get(v, 0) + e
            m = tuple(sorted(exps.items()))
            terms[m] = terms.get(m, 0) + Fraction(coeff)
        return cls(terms)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"Poly({self.serialize()!r})"


_FACTOR = re.compile(r"^(X|Xa|Z|c)\[([0-9,]+)\](?:\^(\d+))?$|^t(?:\^(\d+))?$")


def _parse_factor(f: str) -> tuple[Var, int]:
    match = _FACTOR.match(f)
    if not match:
        raise ValueError(f"bad factor {f!r}")
    fam, idx, e1, e2 = match.groups()
    if fam is None:
        return t, int(e2 or 1)
    return Var(fam, tuple(int(s) for s in idx.split(","))), int(e1 or 1)


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_substitute(p: Poly, mapping: Mapping[Var, object]) -> Poly:
    return p.substitute(mapping)


def divide_exact(a: Poly, b: Poly) -> Poly:
    """Quotient ``a / b`` when ``b`` divides ``a`` exactly; raise otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lm_b, lc_b = b.leading_term()
    quotient = Poly.zero()
    rest = a
    while rest:
        lm_r, lc_r = rest.leading_term()
        exps = dict(lm_r)
        for v, e in lm_b:
            left = exps.get(v, 0) - e
            if left < 0:
                raise ValueError("division is not exact")
            exps[v] = left
        q = Poly.monomial(exps, lc_r / lc_b)
        quotient = quotient + q
        rest = rest - q * b
    return quotient


class PolyMatrix:
    """Immutable rectangular matrix of polynomials."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[object]]):
        rows = tuple(tuple(Poly.coerce(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise DimensionError("matrix must have positive dimensions")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged matrix")
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0])

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(zip(*self.entries))

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise DimensionError("shape mismatch in product")
        return PolyMatrix(
            [
                [
                    reduce(
                        lambda acc, k: acc + self.entries[i][k] * other.entries[k][j],
                        range(self.cols),
                        Poly.zero(),
                    )
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in sum")
        return PolyMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def scale(self, q: Scalar) -> "PolyMatrix":
        return PolyMatrix([[x * Fraction(q) for x in row] for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"PolyMatrix({[[str(x) for x in r] for r in self.entries]})"


def _det_cofactor(m: PolyMatrix) -> Poly:
    # Laplace expansion along rows with memoized minors over column subsets.
    n = m.rows
    memo: dict = {}

    def minor(row: int, cols: tuple) -> Poly:
        if row == n:
            return Poly.const(1)
        if cols in memo:
            return memo[cols]
        total = Poly.zero()
        for pos, col in enumerate(cols):
            entry = m.entries[row][col]
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


def _det_bareiss(m: PolyMatrix) -> Poly:
    a = [list(row) for row in m.entries]
    n = m.rows
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return Poly.zero()
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = divide_exact(num, prev) if prev != 1 else num
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def poly_det(m: PolyMatrix) -> Poly:
    """Exact determinant: cofactor expansion up to 5x5, Bareiss above."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.rows <= 5:
        return _det_cofactor(m)
    return _det_bareiss(m)


def permutation_sign(perm) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    sign = 1
    seq = list(perm)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def det_permutation_sum(m: PolyMatrix) -> Poly:
    """Leibniz formula; an independent oracle for ``poly_det``."""
    if m.rows != m.cols:
        raise DimensionError("non-square")
    n = m.rows
    total = Poly.zero()
    for perm in itertools.permutations(range(n)):
        term = Poly.const(permutation_sign(perm))
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def rank_of_rows(rows: Iterable[Mapping[int, Scalar]]) -> int:
    """Rank over Q of sparse rows given as ``{column: value}`` maps."""
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {k: Fraction(v) for k, v in row.items() if v}
        while r:
            col = min(r)
            piv = pivots.get(col)
            if piv is None:
                lead = r[col]
                pivots[col] = {k: v / lead for k, v in r.items()}
                break
            factor = r[col]
            for k, v in piv.items():
                s = r.get(k, 0) - factor * v
                if s:
                    r[k] = s
                else:
                    r.pop(k, None)
    return len(pivots)


def rank_exact(m: PolyMatrix) -> int:
    """Rank over Q of a matrix whose entries are all rational constants."""
    rows = []
    for row in m.entries:
        rows.append({j: x.constant_value() for j, x in enumerate(row) if x})
    return rank_of_rows(rows)
