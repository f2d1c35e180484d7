"""Plücker variables, quadratic relations and straightening.

A relation R^k_{L,J} is labelled by tuples L (length p) and J (length q),
p >= q, and 1 <= k <= q.  Its formal terms are X_L X_J and, for every
r_1 < ... < r_k, the product obtained by swapping l_{r_1},...,l_{r_k} with
j_1,...,j_k.  The degenerate relation keeps a swap term only when none of the
l_r lies in the window {q+1,...,p}; the leading term X_L X_J is kept only when
none of j_1,...,j_k does.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import PreconditionError, ResourceError
from .exactalg import Poly, Var, rank_of_rows, t as tvar
from .tableaux import (
    Tableau,
    default_cap,
    is_semistandard_pbw,
    pbw_arrangement,
    semistandard_violation,
    xt_key,
)

__all__ = [
    "PlueckerVar",
    "RelationSpec",
    "normalize_index",
    "pbw_degree",
    "plucker_var",
    "relation_terms",
    "classical_relation",
    "degenerate_relation",
    "t_relation",
    "relation",
    "generate_generators",
    "multidegree",
    "monomials_of_multidegree",
    "graded_piece_dimension",
    "tableau_less",
    "straighten",
    "tableau_monomial",
]

VARIANTS = ("classical", "degenerate", "t")


def normalize_index(raw: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sorted tuple and sign of the sorting permutation; sign 0 on a repeat."""
    raw = tuple(raw)
    if len(set(raw)) != len(raw):
        return tuple(sorted(raw)), 0
    sign = 1
    for a, b in itertools.combinations(raw, 2):
        if a > b:
            sign = -sign
    return tuple(sorted(raw)), sign


def pbw_degree(J: Sequence[int], d: int | None = None) -> int:
    """Number of entries of J exceeding its length d."""
    if d is None:
        d = len(J)
    if len(J) != d:
        raise ValueError(f"tuple {tuple(J)} does not have length {d}")
    return sum(1 for j in J if j > d)


@dataclass(frozen=True)
class PlueckerVar:
    variant: str
    J: tuple[int, ...]

    def __post_init__(self):
        if list(self.J) != sorted(set(self.J)):
            raise ValueError(f"index tuple must be strictly increasing: {self.J}")

    @property
    def d(self) -> int:
        return len(self.J)

    def var(self) -> Var:
        return Var("Xa" if self.variant == "degenerate" else "X", self.J)


def plucker_var(J: Sequence[int], variant: str = "classical") -> Poly:
    """X_J (or Xa_J) for an arbitrary tuple, with the antisymmetry sign applied."""
    sortedJ, sign = normalize_index(J)
    if not sign:
        return Poly.zero()
    family = "Xa" if variant == "degenerate" else "X"
    return Poly.var(Var(family, sortedJ)) * sign


@dataclass(frozen=True)
class RelationSpec:
    k: int
    L: tuple[int, ...]
    J: tuple[int, ...]
    variant: str = "classical"

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(self.L))
        object.__setattr__(self, "J", tuple(self.J))
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if len(self.L) < len(self.J):
            raise ValueError("need p = |L| >= q = |J|")
        if not 1 <= self.k <= len(self.J):
            raise ValueError("need 1 <= k <= q")

    @property
    def p(self) -> int:
        return len(self.L)

    @property
    def q(self) -> int:
        return len(self.J)


def relation_terms(spec: RelationSpec):
    """Formal terms ``(coefficient, L', J', kept_in_degenerate)`` before normalization."""
    L, J, k, p, q = spec.L, spec.J, spec.k, spec.p, spec.q
    window = set(range(q + 1, p + 1))
    yield 1, L, J, not (set(J[:k]) & window)
    for rs in itertools.combinations(range(p), k):
        Lp = list(L)
        for pos, r in enumerate(rs):
            Lp[r] = J[pos]
        Jp = tuple(L[r] for r in rs) + J[k:]
        yield -1, tuple(Lp), Jp, not ({L[r] for r in rs} & window)


def _term_poly(coef: int, L, J, family: str) -> Poly:
    sL, signL = normalize_index(L)
    sJ, signJ = normalize_index(J)
    if not (signL and signJ):
        return Poly.zero()
    exps: dict = {}
    for key in (Var(family, sL), Var(family, sJ)):
        exps[key] = exps.get(key, 0) + 1
    return Poly.monomial(exps, coef * signL * signJ)


def classical_relation(spec: RelationSpec) -> Poly:
    total = Poly.zero()
    for coef, L, J, _ in relation_terms(spec):
        total = total + _term_poly(coef, L, J, "X")
    return total


def degenerate_relation(spec: RelationSpec) -> Poly:
    total = Poly.zero()
    for coef, L, J, kept in relation_terms(spec):
        if kept:
            total = total + _term_poly(coef, L, J, "Xa")
    return total


def monomial_pbw_degree(mono) -> int:
    return sum(e * pbw_degree(v.index) for v, e in mono if v.family in ("X", "Xa"))


def t_relation(spec: RelationSpec) -> Poly:
    """Classical relation with each term scaled by t^(its PBW degree - minimum)."""
    classical = classical_relation(spec)
    if classical.is_zero():
        return classical
    degs = {m: monomial_pbw_degree(m) for m in classical.terms}
    low = min(degs.values())
    return Poly(
        {m + ((tvar, degs[m] - low),): q for m, q in classical.terms.items()}
    )


def relation(spec: RelationSpec) -> Poly:
    return {"classical": classical_relation, "degenerate": degenerate_relation, "t": t_relation}[
        spec.variant
    ](spec)


def _monic(p: Poly) -> Poly:
    return p * (1 / p.leading_term()[1])


def _check_dims(n: int, dims: Iterable[int]) -> tuple[int, ...]:
    dims = tuple(sorted(set(dims)))
    if not dims or not all(1 <= d <= n - 1 for d in dims):
        raise ValueError(f"dims must be a nonempty subset of 1..{n - 1}")
    return dims


def iter_specs(n: int, dims: Iterable[int], variant: str):
    dims = _check_dims(n, dims)
    points = range(1, n + 1)
    for p, q in itertools.combinations_with_replacement(reversed(dims), 2):
        for k in range(1, q + 1):
            for L in itertools.combinations(points, p):
                for J in itertools.combinations(points, q):
                    yield RelationSpec(k, L, J, variant)


def generate_generators(n: int, dims: Iterable[int], variant: str, cap: int | None = None) -> list[Poly]:
    """All nonzero relations over sorted L, J, deduplicated up to scalar."""
    cap = default_cap() if cap is None else cap
    seen: set = set()
    out: list[Poly] = []
    for count, spec in enumerate(iter_specs(n, dims, variant), start=1):
        if count > cap:
            raise ResourceError(f"more than {cap} relation specs")
        poly = relation(spec)
        if poly.is_zero():
            continue
        key = _monic(poly)
        if key not in seen:
            seen.add(key)
            out.append(poly)
    return out


# --------------------------------------------------------------------------
# Graded pieces


def multidegree(mono, dims: Sequence[int]) -> tuple[int, ...]:
    counts = dict.fromkeys(dims, 0)
    for v, e in mono:
        if v.family in ("X", "Xa"):
            counts[len(v.index)] += e
    return tuple(counts[d] for d in dims)


def monomials_of_multidegree(n: int, dims: Sequence[int], deg: Sequence[int], family: str = "X"):
    """Monomials with deg[l] variables of column length dims[l]."""
    pools = []
    for d, m in zip(dims, deg):
        variables = [Var(family, J) for J in itertools.combinations(range(1, n + 1), d)]
        pools.append(list(itertools.combinations_with_replacement(variables, m)))
    out = []
    for choice in itertools.product(*pools):
        exps: dict = {}
        for group in choice:
            for v in group:
                exps[v] = exps.get(v, 0) + 1
        out.append(tuple(sorted(exps.items())))
    return out


def graded_piece_dimension(
    n: int,
    dims: Iterable[int],
    variant: str,
    deg: Sequence[int],
    t_value=None,
    cap: int | None = None,
) -> int:
    """Dimension of the multidegree-``deg`` piece of the quotient ring.

    The ideal piece is spanned by products of the quadratic generators with
    all monomials of complementary multidegree; its rank is exact.
    """
    cap = default_cap() if cap is None else cap
    dims = _check_dims(n, dims)
    deg = tuple(deg)
    if len(deg) != len(dims) or any(m < 0 for m in deg):
        raise ValueError("deg must give one nonnegative count per dim")
    if variant == "t" and t_value is None:
        raise ValueError("variant 't' needs a specialization t_value")
    family = "Xa" if variant == "degenerate" else "X"
    basis = monomials_of_multidegree(n, dims, deg, family)
    if len(basis) > cap:
        raise ResourceError(f"{len(basis)} monomials exceed cap {cap}")
    index = {m: i for i, m in enumerate(basis)}
    gens = generate_generators(n, dims, variant, cap)
    if variant == "t":
        gens = [g.substitute({tvar: Fraction(t_value)}) for g in gens]
        gens = [g for g in gens if g]
    rows = []
    complements: dict = {}
    for g in gens:
        gdeg = multidegree(next(iter(g.terms)), dims)
        rest = tuple(a - b for a, b in zip(deg, gdeg))
        if any(r < 0 for r in rest):
            continue
        if rest not in complements:
            complements[rest] = monomials_of_multidegree(n, dims, rest, family)
        for mono in complements[rest]:
            prod = g * Poly({mono: 1})
            rows.append({index[m]: q for m, q in prod.terms.items()})
            if len(rows) > cap:
                raise ResourceError(f"more than {cap} spanning rows")
    return len(basis) - rank_of_rows(rows)


# --------------------------------------------------------------------------
# Straightening


def tableau_less(T1: Tableau, T2: Tableau) -> bool:
    """T1 < T2 in the order of the straightening argument."""
    if T1.shape != T2.shape:
        raise ValueError("tableaux of different shapes are not comparable")
    return xt_key(T1) < xt_key(T2)


def tableau_monomial(T: Tableau, variant: str = "degenerate") -> Poly:
    """X_T: product over columns of the (signed) Plücker variable of each column."""
    out = Poly.const(1)
    for col in T.columns():
        out = out * plucker_var(col, variant)
    return out


def _tableau_pbw_degree(T: Tableau) -> int:
    return sum(pbw_degree(col) for col in T.columns())


def _prepare(columns: Sequence[Sequence[int]]) -> tuple[Tableau | None, int]:
    cols = [tuple(col) for col in columns]
    cols.sort(key=len, reverse=True)
    sign = 1
    arranged = []
    for col in cols:
        arr, s = pbw_arrangement(col)
        if not s:
            return None, 0
        sign *= s
        arranged.append(arr)
    return Tableau.from_columns(arranged), sign


def straighten(
    columns: Sequence[Sequence[int]],
    variant: str = "degenerate",
    n: int | None = None,
    max_steps: int = 100_000,
    trace: list | None = None,
) -> dict[Tableau, Fraction]:
    """Rewrite a product of Plücker variables in the semistandard X_T basis.

    ``columns`` are the index tuples of the factors (any order inside a
    column).  The result maps semistandard PBW-tableaux T to coefficients, so
    that the input equals ``sum coeff * X_T`` in the quotient ring, where X_T
    is the product of the column variables read top to bottom.

    Each step applies R^k to the first column pair (j, j+1) and row k where
    domination fails.  Pending tableaux are processed by increasing PBW degree
    and, within a degree, from the largest down; the degenerate relations never
    raise the degree and strictly lower the tableau, while the classical ones
    may also emit terms of higher degree.
    """
    if variant not in ("classical", "degenerate"):
        raise ValueError(f"unknown variant {variant!r}")
    if n is None:
        n = max((max(col) for col in columns if col), default=1)
    T0, sign = _prepare(columns)
    if T0 is None:
        return {}
    pending: dict[Tableau, Fraction] = {T0: Fraction(sign)}
    done: dict[Tableau, Fraction] = {}
    steps = 0
    while pending:
        T = min(pending, key=lambda S: (_tableau_pbw_degree(S), _neg(xt_key(S))))
        coeff = pending.pop(T)
        if not coeff:
            continue
        bad = semistandard_violation(T)
        if bad is None:
            done[T] = done.get(T, 0) + coeff
            continue
        steps += 1
        if steps > max_steps:
            raise ResourceError(f"straightening exceeded {max_steps} steps")
        for S, q in _rewrite(T, bad, variant):
            if variant == "degenerate" and not tableau_less(S, T):
                raise ArithmeticError(f"rewrite of {T} produced non-smaller {S}")
            if trace is not None:
                trace.append((T, S, q))
            pending[S] = pending.get(S, 0) + coeff * q
    out = {T: q for T, q in done.items() if q}
    for T in out:
        if not is_semistandard_pbw(T, n):
            raise ArithmeticError(f"straightening left {T}")
    return out


def _neg(key: tuple) -> tuple:
    return tuple(-x for x in key)


def _rewrite(T: Tableau, bad: tuple[int, int], variant: str):
    """X_T as a combination of other tableaux via R^k at the violation."""
    k, j_right = bad
    cols = T.columns()
    left, right = cols[j_right - 2], cols[j_right - 1]
    spec = RelationSpec(k, left, right, "classical")
    terms = list(relation_terms(spec))
    lead_coef, _, _, lead_kept = terms[0]
    if variant == "degenerate" and not lead_kept:
        raise ArithmeticError(f"leading term absent from the relation at {bad} in {T}")
    for coef, Lp, Jp, kept in terms[1:]:
        if variant == "degenerate" and not kept:
            continue
        newL, sL = pbw_arrangement(Lp)
        newJ, sJ = pbw_arrangement(Jp)
        if not (sL and sJ):
            continue
        new_cols = list(cols)
        new_cols[j_right - 2], new_cols[j_right - 1] = newL, newJ
        # R = X_L X_J + sum coef X_L' X_J' = 0, so X_L X_J = -sum coef X_L' X_J'
        yield Tableau.from_columns(new_cols), Fraction(-coef * sL * sJ, lead_coef)


def straighten_poly(columns: Sequence[Sequence[int]], variant: str = "degenerate", n: int | None = None) -> Poly:
    """Straighten and expand the result back into Plücker variables."""
    total = Poly.zero()
    for T, q in straighten(columns, variant, n).items():
        total = total + tableau_monomial(T, variant) * q
    return total


def check_semistandard_output(result: dict, n: int) -> bool:
    return all(is_semistandard_pbw(T, n) for T in result)


def _require_pbw(T: Tableau, n: int):
    if not is_semistandard_pbw(T, n):
        raise PreconditionError(f"{T} is not semistandard")
