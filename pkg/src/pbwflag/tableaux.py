"""Partitions, PBW-tableaux, Vinberg configurations and the bijection psi.

Rows and columns are numbered from 1, top to bottom and left to right.  A
tableau is stored row-wise; ``T.entry(i, j)`` is T_{i,j}.

A PBW-tableau pins every entry that is at most the column length to its own
row and lists the larger entries in decreasing order down the column.  It is
semistandard when every entry of column j > 1 is dominated by some entry of
column j-1 sitting in the same row or lower.
"""

from __future__ import annotations

import itertools
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import PreconditionError, ResourceError

log = logging.getLogger(__name__)

DEFAULT_CAP = 200_000

__all__ = [
    "DEFAULT_CAP",
    "PartitionShape",
    "Tableau",
    "VinbergConfig",
    "default_cap",
    "partition_of_weight",
    "weight_of_shape",
    "is_pbw_tableau",
    "is_semistandard_pbw",
    "semistandard_violation",
    "pbw_columns",
    "pbw_arrangement",
    "enumerate_sspbw",
    "enumerate_ssyt_classical",
    "dyck_paths",
    "is_vinberg",
    "enumerate_vinberg",
    "psi",
    "psi_inv",
    "weyl_dim",
    "xt_key",
]


def default_cap() -> int:
    return int(os.environ.get("PBWFLAG_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class PartitionShape:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def columns(self) -> tuple[int, ...]:
        """Column lengths mu_j = #{i : lambda_i >= j}."""
        if not self.parts:
            return ()
        return tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)


def partition_of_weight(weight: Sequence[int]) -> PartitionShape:
    """(m_1+...+m_{n-1}, m_2+...+m_{n-1}, ..., m_{n-1})."""
    if any(m < 0 for m in weight):
        raise ValueError("weights must be dominant")
    return PartitionShape(tuple(sum(weight[i:]) for i in range(len(weight))))


def weight_of_shape(shape: PartitionShape, n: int) -> tuple[int, ...]:
    parts = list(shape.parts) + [0] * (n - 1 - len(shape.parts))
    if len(parts) > n - 1:
        raise ValueError(f"shape {shape.parts} has more than {n - 1} rows")
    parts.append(0)
    return tuple(parts[i] - parts[i + 1] for i in range(n - 1))


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        PartitionShape(tuple(len(r) for r in rows))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "Tableau":
        columns = [tuple(col) for col in columns]
        height = max((len(col) for col in columns), default=0)
        rows = [[col[i] for col in columns if len(col) > i] for i in range(height)]
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> PartitionShape:
        return PartitionShape(tuple(len(r) for r in self.rows))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def columns(self) -> list[tuple[int, ...]]:
        mu = self.shape.columns
        return [tuple(self.rows[i][j] for i in range(mu[j])) for j in range(len(mu))]

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if list(t.shape.parts) != list(data["shape"]):
            raise ValueError("rows do not match the declared shape")
        return t

    def __str__(self):
        return " / ".join(" ".join(map(str, r)) for r in self.rows) or "(empty)"


def xt_key(T: Tableau) -> tuple:
    """Sort key for the tableau order used in straightening.

    T1 > T2 when they first differ, reading columns right to left and each
    column bottom to top, at a box where T1 is larger.
    """
    cols = T.columns()
    return tuple(x for col in reversed(cols) for x in reversed(col))


# --------------------------------------------------------------------------
# PBW-tableaux


def _column_is_pbw(col: Sequence[int], n: int) -> bool:
    mu = len(col)
    for i, x in enumerate(col, start=1):
        if not 1 <= x <= n:
            return False
        if x <= mu and x != i:
            return False
    for i1 in range(mu):
        if col[i1] != i1 + 1:
            for i2 in range(i1 + 1, mu):
                if not col[i1] > col[i2]:
                    return False
    return True


def is_pbw_tableau(T: Tableau, n: int) -> bool:
    return all(_column_is_pbw(col, n) for col in T.columns())


def _dominated(prev: Sequence[int], i: int, x: int) -> bool:
    # some entry of the previous column at row >= i is >= x (rows 1-based)
    return any(prev[r] >= x for r in range(i - 1, len(prev)))


def semistandard_violation(T: Tableau) -> tuple[int, int] | None:
    """First (row k, column j) with j > 1 breaking the domination condition."""
    cols = T.columns()
    for j in range(1, len(cols)):
        for k, x in enumerate(cols[j], start=1):
            if not _dominated(cols[j - 1], k, x):
                return k, j + 1
    return None


def is_semistandard_pbw(T: Tableau, n: int) -> bool:
    if not is_pbw_tableau(T, n):
        log.debug("not a PBW-tableau: %s", T)
        return False
    bad = semistandard_violation(T)
    if bad is not None:
        log.debug("tableau %s violates domination at row %d, column %d", T, *bad)
        return False
    return True


@lru_cache(maxsize=None)
def pbw_columns(d: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All PBW columns of length d with entries in 1..n, one per d-subset."""
    return tuple(pbw_arrangement(S)[0] for S in itertools.combinations(range(1, n + 1), d))


def pbw_arrangement(entries: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """PBW ordering of a column and the sign relative to ``entries`` as given.

    Returns ``(column, sign)`` with ``X_entries = sign * X_column``; sign is 0
    when an entry repeats.
    """
    entries = tuple(entries)
    d = len(entries)
    if len(set(entries)) != d:
        return entries, 0
    col: list = [None] * d
    for x in entries:
        if x <= d:
            col[x - 1] = x
    large = iter(sorted((x for x in entries if x > d), reverse=True))
    col = tuple(x if x is not None else next(large) for x in col)
    return col, _perm_sign(entries, col)


def _perm_sign(a: Sequence[int], b: Sequence[int]) -> int:
    """Sign of the permutation taking sequence ``a`` to sequence ``b``."""
    pos = {x: k for k, x in enumerate(b)}
    perm = [pos[x] for x in a]
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _enumerate_by_columns(shape: PartitionShape, candidates, compatible, cap: int | None):
    cap = default_cap() if cap is None else cap
    mu = shape.columns
    if not mu:
        return [Tableau(())]
    layer = [(col,) for col in candidates(mu[0])]
    for j in range(1, len(mu)):
        nxt = []
        for prefix in layer:
            for col in candidates(mu[j]):
                if compatible(prefix[-1], col):
                    nxt.append(prefix + (col,))
            if len(nxt) > cap:
                raise ResourceError(f"more than {cap} tableaux of shape {shape.parts}")
        layer = nxt
    if len(layer) > cap:
        raise ResourceError(f"more than {cap} tableaux of shape {shape.parts}")
    return [Tableau.from_columns(cols) for cols in layer]


def enumerate_sspbw(shape: PartitionShape, n: int, cap: int | None = None) -> list[Tableau]:
    """All semistandard PBW-tableaux of ``shape`` with entries in 1..n."""
    if isinstance(shape, (tuple, list)):
        shape = PartitionShape(tuple(shape))
    if len(shape) > n:
        return []

    def compatible(prev, col):
        return all(_dominated(prev, i, x) for i, x in enumerate(col, start=1))

    found = _enumerate_by_columns(shape, lambda d: pbw_columns(d, n), compatible, cap)
    return sorted(found, key=xt_key)


def enumerate_ssyt_classical(shape: PartitionShape, n: int, cap: int | None = None) -> list[Tableau]:
    """Classical semistandard tableaux: columns increase strictly, rows weakly."""
    if isinstance(shape, (tuple, list)):
        shape = PartitionShape(tuple(shape))
    if len(shape) > n:
        return []

    def candidates(d):
        return list(itertools.combinations(range(1, n + 1), d))

    def compatible(prev, col):
        return all(prev[i] <= x for i, x in enumerate(col))

    found = _enumerate_by_columns(shape, candidates, compatible, cap)
    return sorted(found, key=lambda T: T.rows)


# --------------------------------------------------------------------------
# Vinberg configurations


def _roots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(i, n)]


@dataclass(frozen=True)
class VinbergConfig:
    """Nonnegative integers s_{i,j}, 1 <= i <= j <= n-1, in lex order of (i,j)."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != len(_roots(self.n)):
            raise ValueError(f"need {len(_roots(self.n))} values for n={self.n}")
        if any(v < 0 for v in values):
            raise ValueError("configuration entries must be nonnegative")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_dict(cls, n: int, s: dict) -> "VinbergConfig":
        bad = set(s) - set(_roots(n))
        if bad:
            raise ValueError(f"not positive roots of sl_{n}: {sorted(bad)}")
        return cls(n, tuple(s.get(r, 0) for r in _roots(n)))

    @classmethod
    def zero(cls, n: int) -> "VinbergConfig":
        return cls(n, (0,) * len(_roots(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return dict(zip(_roots(self.n), self.values))[tuple(ij)]

    def as_dict(self) -> dict:
        return dict(zip(_roots(self.n), self.values))

    def to_json(self) -> dict:
        return {"n": self.n, "s": [[i, j, v] for (i, j), v in zip(_roots(self.n), self.values)]}

    @classmethod
    def from_json(cls, data: dict) -> "VinbergConfig":
        return cls.from_dict(data["n"], {(i, j): v for i, j, v in data["s"]})


def dyck_paths(i: int, j: int, n: int | None = None) -> list[tuple[tuple[int, int], ...]]:
    """Monotone paths from alpha_{i,i} to alpha_{j,j} through roots alpha_{a,b}.

    Each step raises either the right end b or the left end a by one, and the
    path never leaves the cone a <= b.
    """
    if not 1 <= i <= j or (n is not None and j > n - 1):
        raise ValueError(f"need 1 <= i <= j <= n-1, got i={i}, j={j}")
    paths = []

    def walk(path):
        a, b = path[-1]
        if (a, b) == (j, j):
            paths.append(tuple(path))
            return
        if b < j:
            walk(path + [(a, b + 1)])
        if a < b:
            walk(path + [(a + 1, b)])

    walk([(i, i)])
    return paths


def _bound(weight: Sequence[int], i: int, j: int) -> int:
    return sum(weight[i - 1 : j])


def is_vinberg(s: VinbergConfig, weight: Sequence[int]) -> bool:
    """Check every Dyck path inequality by explicit path enumeration."""
    n = len(weight) + 1
    if s.n != n:
        raise ValueError("configuration and weight disagree on n")
    vals = s.as_dict()
    for i, j in _roots(n):
        for path in dyck_paths(i, j):
            if sum(vals[p] for p in path) > _bound(weight, i, j):
                return False
    return True


def _max_path_sums(vals: dict, n: int) -> dict:
    """best[(i, j)] = max over Dyck paths from (i,i) to (j,j) of the path sum."""
    # best path from (a, b) to (j, j) for fixed j, by dynamic programming
    out = {}
    for j in range(1, n):
        memo = {}
        for a in range(j, 0, -1):
            for b in range(j, a - 1, -1):
                options = []
                if b < j:
                    options.append(memo[(a, b + 1)])
                if a < b:
                    options.append(memo[(a + 1, b)])
                memo[(a, b)] = vals.get((a, b), 0) + (max(options) if options else 0)
        for i in range(1, j + 1):
            out[(i, j)] = memo[(i, i)]
    return out


def enumerate_vinberg(weight: Sequence[int], cap: int | None = None) -> list[VinbergConfig]:
    """All Vinberg configurations for a dominant weight, in lex order."""
    cap = default_cap() if cap is None else cap
    n = len(weight) + 1
    roots = _roots(n)
    bounds = {(i, j): _bound(weight, i, j) for i, j in roots}
    found: list[tuple[int, ...]] = []
    vals: dict = {}

    def feasible() -> bool:
        # unassigned roots count as 0, which only lowers path sums
        best = _max_path_sums(vals, n)
        return all(best[r] <= bounds[r] for r in roots)

    def assign(k: int):
        if k == len(roots):
            found.append(tuple(vals[r] for r in roots))
            if len(found) > cap:
                raise ResourceError(f"more than {cap} Vinberg configurations")
            return
        r = roots[k]
        for v in range(bounds[r] + 1):
            vals[r] = v
            if not feasible():
                break
            assign(k + 1)
        vals.pop(r, None)

    assign(0)
    return [VinbergConfig(n, v) for v in found]


def psi(s: VinbergConfig, weight: Sequence[int]) -> Tableau:
    """Fill the Young diagram bottom to top from a Vinberg configuration."""
    n = len(weight) + 1
    if not is_vinberg(s, weight):
        raise PreconditionError("not a Vinberg configuration for this weight")
    shape = partition_of_weight(weight)
    length = {k: (shape.parts[k - 1] if k <= len(shape) else 0) for k in range(1, n)}
    rows: dict[int, list] = {k: [None] * length[k] for k in range(1, n)}
    for k in range(n - 1, 0, -1):
        for l in range(n, k, -1):
            count = s[(k, l - 1)]
            if not count:
                continue
            a_col = 0
            for i in range(k, n):
                for col, x in enumerate(rows[i], start=1):
                    if x is not None and x >= l:
                        a_col = max(a_col, col)
            if a_col + count > length[k]:
                raise PreconditionError(f"row {k} overflows while placing {l}")
            for col in range(a_col + 1, a_col + count + 1):
                if rows[k][col - 1] is not None:
                    raise PreconditionError(f"box ({k},{col}) already filled")
                rows[k][col - 1] = l
        rows[k] = [k if x is None else x for x in rows[k]]
    return Tableau(tuple(tuple(rows[k]) for k in range(1, n)))


def psi_inv(T: Tableau, n: int) -> VinbergConfig:
    """s_{k,l} = #{j : T_{k,j} = l+1}."""
    if not is_semistandard_pbw(T, n):
        raise PreconditionError(f"not a semistandard PBW-tableau: {T}")
    s = {}
    for k, row in enumerate(T.rows, start=1):
        for x in row:
            if x != k:
                s[(k, x - 1)] = s.get((k, x - 1), 0) + 1
    return VinbergConfig.from_dict(n, s)


def weyl_dim(weight: Sequence[int], n: int | None = None) -> int:
    """dim V_lambda by the Weyl product over positive roots of sl_n."""
    if n is None:
        n = len(weight) + 1
    if len(weight) != n - 1:
        raise ValueError(f"weight {tuple(weight)} does not belong to sl_{n}")
    dim = Fraction(1)
    for i, j in _roots(n):
        height = j - i + 1
        dim *= Fraction(_bound(weight, i, j) + height, height)
    assert dim.denominator == 1
    return int(dim)
