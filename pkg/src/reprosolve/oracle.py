"""Brute-force ground truth for conjunctions of linear matrix constraints.

A constraint ``sum_j s_j * P_j @ X @ Q_j = R`` is vectorized with
``vec(P X Q) = (Q^T kron P) vec(X)`` and every constraint is stacked into one
ordinary linear system that is solved by exact row reduction. Nothing in this
module knows about {1}-inverses or the closed-form solution formulas, so it
can serve as an independent check on them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import CapExceeded, DimensionMismatch, NotEnumerable, ShapeMismatch
from .field import FieldSpec
from .matrix import Matrix, _eliminate, kron, unvec_values, vec_values

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class LinearTerm:
    """One summand ``sign * left @ X @ right``."""

    left: Matrix
    right: Matrix
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.left.field != self.right.field:
            raise DimensionMismatch("term factors live in different fields")

    def apply(self, x: Matrix) -> Matrix:
        out = self.left @ x @ self.right
        return out if self.sign == 1 else -out

    def vectorized(self) -> Matrix:
        k = kron(self.right.T, self.left)
        return k if self.sign == 1 else -k


@dataclass(frozen=True)
class Constraint:
    terms: tuple[LinearTerm, ...]
    rhs: Matrix

    def __init__(self, terms: Sequence[LinearTerm], rhs: Matrix):
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "rhs", rhs)

    def residual(self, x: Matrix) -> Matrix:
        acc = -self.rhs
        for t in self.terms:
            acc = acc + t.apply(x)
        return acc


@dataclass(frozen=True)
class LinearMatrixSystem:
    x_rows: int
    x_cols: int
    constraints: tuple[Constraint, ...]

    def __init__(self, x_rows: int, x_cols: int, constraints: Sequence[Constraint]):
        object.__setattr__(self, "x_rows", x_rows)
        object.__setattr__(self, "x_cols", x_cols)
        object.__setattr__(self, "constraints", tuple(constraints))
        self._validate()

    def _validate(self):
        if not self.constraints:
            raise DimensionMismatch("a system needs at least one constraint")
        fields = set()
        for n, con in enumerate(self.constraints):
            if not con.terms:
                raise DimensionMismatch(f"constraint {n} has no terms")
            fields.add(con.rhs.field)
            for t in con.terms:
                fields.add(t.left.field)
                if t.left.cols != self.x_rows or t.right.rows != self.x_cols:
                    raise DimensionMismatch(
                        f"constraint {n}: term {t.left.shape}·X·{t.right.shape} does not fit X of shape "
                        f"{self.x_rows}x{self.x_cols}")
                if (t.left.rows, t.right.cols) != con.rhs.shape:
                    raise DimensionMismatch(
                        f"constraint {n}: term produces {t.left.rows}x{t.right.cols}, rhs is {con.rhs.shape}")
        if len(fields) != 1:
            raise DimensionMismatch("system mixes fields")

    @property
    def field(self) -> FieldSpec:
        return self.constraints[0].rhs.field

    def is_solution(self, x: Matrix) -> bool:
        return all(c.residual(x).is_zero() for c in self.constraints)

    def coefficient_rows(self) -> list[list]:
        """Rows of the stacked vectorized system ``M`` augmented with ``vec(R)``."""
        out = []
        for con in self.constraints:
            block = None
            for t in con.terms:
                v = t.vectorized()
                block = v if block is None else block + v
            for row, r in zip(block.data, vec_values(con.rhs)):
                out.append(list(row) + [r])
        return out


@dataclass(frozen=True)
class AffineSolutionSet:
    """``particular + span(basis)``, or the empty set when inconsistent."""

    consistent: bool
    x_rows: int
    x_cols: int
    field: FieldSpec
    particular: Matrix | None = None
    basis: tuple[Matrix, ...] = dc_field(default=())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.x_rows, self.x_cols)

    @cached_property
    def _span_echelon(self) -> tuple[list[list], list[int]]:
        rows = [vec_values(b) for b in self.basis]
        pivots = _eliminate(rows, self.field, self.x_rows * self.x_cols)
        return rows[: len(pivots)], pivots

    def _in_span(self, v: list) -> bool:
        red = self.field.reduce
        rows, pivots = self._span_echelon
        v = list(v)
        for row, c in zip(rows, pivots):
            f = v[c]
            if f:
                v = [red(a - f * b) for a, b in zip(v, row)]
        return not any(v)


def _check_shape(s: AffineSolutionSet, x: Matrix):
    if x.shape != s.shape:
        raise ShapeMismatch(f"matrix of shape {x.shape} vs solution set of shape {s.shape}")


def solve(system: LinearMatrixSystem) -> AffineSolutionSet:
    f = system.field
    n = system.x_rows * system.x_cols
    rows = system.coefficient_rows()
    pivots = _eliminate(rows, f, n)
    r = len(pivots)
    if any(row[n] for row in rows[r:]):
        return AffineSolutionSet(False, system.x_rows, system.x_cols, f)
    part = [f.zero] * n
    for i, c in enumerate(pivots):
        part[c] = rows[i][n]
    particular = unvec_values(part, system.x_rows, system.x_cols, f)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        v = [f.zero] * n
        v[free] = f.one
        for i, c in enumerate(pivots):
            v[c] = f.neg(rows[i][free])
        basis.append(unvec_values(v, system.x_rows, system.x_cols, f))
    return AffineSolutionSet(True, system.x_rows, system.x_cols, f, particular, tuple(basis))


def contains(s: AffineSolutionSet, x: Matrix) -> bool:
    _check_shape(s, x)
    if not s.consistent:
        return False
    return s._in_span(vec_values(x - s.particular))


def enumerate_solutions(s: AffineSolutionSet, cap: int = DEFAULT_CAP) -> Iterator[Matrix]:
    """Every member of a solution set over a finite field, in a fixed order."""
    f = s.field
    if not f.is_finite:
        raise NotEnumerable("solution sets over Q are infinite unless zero-dimensional; use contains()")
    if not s.consistent:
        return iter(())
    if f.p ** s.dimension > cap:
        raise CapExceeded(f"{f.p}^{s.dimension} solutions exceed the cap of {cap}")
    return _enumerate(s)


def _enumerate(s: AffineSolutionSet) -> Iterator[Matrix]:
    p = s.field.p
    base = vec_values(s.particular)
    dirs = [vec_values(b) for b in s.basis]
    for coeffs in itertools.product(range(p), repeat=len(dirs)):
        v = list(base)
        for c, d in zip(coeffs, dirs):
            if c:
                v = [x + c * y for x, y in zip(v, d)]
        yield unvec_values([x % p for x in v], s.x_rows, s.x_cols, s.field)


def sets_equal(a: AffineSolutionSet, b: AffineSolutionSet) -> bool:
    if a.shape != b.shape:
        raise ShapeMismatch(f"solution sets of shapes {a.shape} and {b.shape}")
    if not a.consistent or not b.consistent:
        return a.consistent == b.consistent
    if a.dimension != b.dimension:
        return False
    if not contains(a, b.particular) or not contains(b, a.particular):
        return False
    return all(a._in_span(vec_values(v)) for v in b.basis)


def system_of(constraints, x_rows: int, x_cols: int) -> LinearMatrixSystem:
    """Build a system from ``[([(P, Q, sign), ...], R), ...]`` tuples."""
    return LinearMatrixSystem(
        x_rows, x_cols,
        [Constraint([LinearTerm(p, q, s) for p, q, s in terms], rhs) for terms, rhs in constraints])
