"""The generalized Penrose system ``A^m X = B  and  X D^n = E``."""

from __future__ import annotations

from dataclasses import dataclass

from .cline import check_powers
from .errors import DimensionMismatch, Inconsistent, NotASolution, X1Unverified
from .generator import AffineGenerator
from .inverse import certify, one_inverse
from .matrix import Matrix
from .oracle import LinearMatrixSystem, LinearTerm, system_of
from .report import ConsistencyReport

LEFT_SOLVABLE = "A^m(A^m)^(1)B = B"
RIGHT_SOLVABLE = "E(D^n)^(1)D^n = E"
COMPATIBLE = "A^m E = B D^n"


@dataclass(frozen=True)
class PenroseProblem:
    a: Matrix
    b: Matrix
    d: Matrix
    e: Matrix
    m: int = 1
    n: int = 1

    def __post_init__(self):
        if not self.a.is_square or not self.d.is_square:
            raise DimensionMismatch("A and D must be square")
        shape = (self.a.rows, self.d.rows)
        if self.b.shape != shape or self.e.shape != shape:
            raise DimensionMismatch(f"B and E must both be {shape[0]}x{shape[1]}")
        if len({self.a.field, self.b.field, self.d.field, self.e.field}) != 1:
            raise DimensionMismatch("A, B, D, E live in different fields")
        if self.m < 1 or self.n < 1:
            raise ValueError("powers m, n must be positive")

    @property
    def field(self):
        return self.a.field

    @property
    def x_shape(self) -> tuple[int, int]:
        return self.b.shape

    def system(self) -> LinearMatrixSystem:
        p, q = self.x_shape
        f = self.field
        return system_of([
            ([(self.a ** self.m, Matrix.identity(q, f), 1)], self.b),
            ([(Matrix.identity(p, f), self.d ** self.n, 1)], self.e),
        ], p, q)

    def is_solution(self, x: Matrix) -> bool:
        return x.shape == self.x_shape and self.a ** self.m @ x == self.b and x @ self.d ** self.n == self.e


@dataclass(frozen=True)
class PenroseContext:
    am: Matrix
    dn: Matrix
    g_am: Matrix
    g_dn: Matrix
    x1: Matrix
    # the formula with the extra A factor taken at face value: G A^m A E G'
    x1_literal: Matrix
    below_index: bool = False

    @property
    def literal_reading_differs(self) -> bool:
        return self.x1 != self.x1_literal


def _clauses(am, dn, g_am, g_dn, prob) -> dict[str, Matrix]:
    return {
        LEFT_SOLVABLE: am @ g_am @ prob.b - prob.b,
        RIGHT_SOLVABLE: prob.e @ g_dn @ dn - prob.e,
        COMPATIBLE: am @ prob.e - prob.b @ dn,
    }


def penrose_context(prob: PenroseProblem, g_am: Matrix | None = None, g_dn: Matrix | None = None, *,
                    allow_small_power: bool = False) -> PenroseContext:
    below = check_powers(prob.a, prob.m, prob.d, prob.n, ("A", "D"), allow_small_power)
    am, dn = prob.a ** prob.m, prob.d ** prob.n
    g_am = one_inverse(am).g if g_am is None else certify(am, g_am).g
    g_dn = one_inverse(dn).g if g_dn is None else certify(dn, g_dn).g
    shared = g_am @ prob.b + prob.e @ g_dn
    x1 = shared - g_am @ am @ prob.e @ g_dn
    x1_literal = shared - g_am @ am @ prob.a @ prob.e @ g_dn
    consistent = all(d.is_zero() for d in _clauses(am, dn, g_am, g_dn, prob).values())
    if consistent and not (am @ x1 == prob.b and x1 @ dn == prob.e):
        raise X1Unverified("X1 fails A^m X = B or X D^n = E on a consistent system")
    return PenroseContext(am, dn, g_am, g_dn, x1, x1_literal, below)


def penrose_consistent(ctx: PenroseContext, prob: PenroseProblem) -> ConsistencyReport:
    """Both equations solvable on their own and ``A^m E = B D^n``."""
    defects = _clauses(ctx.am, ctx.dn, ctx.g_am, ctx.g_dn, prob)
    ok = all(d.is_zero() for d in defects.values())
    witnesses = {"(A^m)^(1)": ctx.g_am, "(D^n)^(1)": ctx.g_dn}
    notes = []
    if ok:
        witnesses["X1"] = ctx.x1
        if ctx.literal_reading_differs:
            notes.append("X1 with the extra A factor differs from the implemented X1"
                         + ("" if prob.is_solution(ctx.x1_literal) else " and does not solve the system"))
    if ctx.below_index:
        notes.append("power below index (override)")
    return ConsistencyReport(ok, defects, witnesses, tuple(notes))


def penrose_x1(ctx: PenroseContext, prob: PenroseProblem) -> Matrix:
    if not penrose_consistent(ctx, prob).consistent:
        raise Inconsistent("A^m X = B and X D^n = E have no common solution")
    if not prob.is_solution(ctx.x1):
        raise X1Unverified("X1 fails verification")
    return ctx.x1


def _linear_term(ctx: PenroseContext, prob: PenroseProblem) -> LinearTerm:
    p, q = prob.x_shape
    f = prob.field
    return LinearTerm(Matrix.identity(p, f) - ctx.g_am @ ctx.am, Matrix.identity(q, f) - ctx.dn @ ctx.g_dn)


_LABELS = [("(I - (A^m)^(1)A^m)", "(I - D^n(D^n)^(1))")]


def penrose_f_generator(ctx: PenroseContext, prob: PenroseProblem) -> AffineGenerator:
    x1 = penrose_x1(ctx, prob)
    p, q = prob.x_shape
    return AffineGenerator(x1, [_linear_term(ctx, prob)], p, q, _LABELS, "X1")


def penrose_g_generator(ctx: PenroseContext, prob: PenroseProblem, x0: Matrix) -> AffineGenerator:
    if not prob.is_solution(x0):
        raise NotASolution("x0 is not a common solution of A^m X = B and X D^n = E")
    p, q = prob.x_shape
    return AffineGenerator(x0, [_linear_term(ctx, prob)], p, q, _LABELS, "X0")
