"""Cline's equation ``A^m X B^n = C``."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, IndexTooSmall, Inconsistent, NotASolution
from .generator import AffineGenerator, identity_term
from .inverse import certify, index, one_inverse
from .matrix import Matrix
from .oracle import LinearMatrixSystem, LinearTerm, system_of
from .report import ConsistencyReport

CONSISTENCY_CLAUSE = "A^m(A^m)^(1)C(B^n)^(1)B^n = C"


@dataclass(frozen=True)
class ClineProblem:
    a: Matrix
    b: Matrix
    c: Matrix
    m: int = 1
    n: int = 1

    def __post_init__(self):
        if not self.a.is_square or not self.b.is_square:
            raise DimensionMismatch("A and B must be square")
        if self.c.shape != (self.a.rows, self.b.rows):
            raise DimensionMismatch(f"C must be {self.a.rows}x{self.b.rows}, got {self.c.shape}")
        if len({self.a.field, self.b.field, self.c.field}) != 1:
            raise DimensionMismatch("A, B, C live in different fields")
        if self.m < 1 or self.n < 1:
            raise ValueError("powers m, n must be positive")

    @property
    def field(self):
        return self.a.field

    def system(self) -> LinearMatrixSystem:
        """The equation as a plain linear constraint, for the oracle."""
        return system_of([([(self.a ** self.m, self.b ** self.n, 1)], self.c)], self.a.rows, self.b.rows)

    def is_solution(self, x: Matrix) -> bool:
        return x.shape == self.c.shape and self.a ** self.m @ x @ self.b ** self.n == self.c


@dataclass(frozen=True)
class ClineContext:
    am: Matrix
    bn: Matrix
    g_am: Matrix
    g_bn: Matrix
    # set when m < Ind(A) or n < Ind(B) was let through by the override
    below_index: bool = False


def check_powers(a: Matrix, m: int, b: Matrix, n: int, names=("A", "B"), allow_small_power=False) -> bool:
    """Validate ``m >= Ind(a)`` and ``n >= Ind(b)``; returns True when violated but allowed."""
    ka, kb = index(a), index(b)
    problems = []
    if m < ka:
        problems.append(f"m = {m} < Ind({names[0]}) = {ka}")
    if n < kb:
        problems.append(f"n = {n} < Ind({names[1]}) = {kb}")
    if problems and not allow_small_power:
        raise IndexTooSmall("; ".join(problems))
    return bool(problems)


def cline_context(prob: ClineProblem, g_am: Matrix | None = None, g_bn: Matrix | None = None, *,
                  allow_small_power: bool = False) -> ClineContext:
    below = check_powers(prob.a, prob.m, prob.b, prob.n, allow_small_power=allow_small_power)
    am, bn = prob.a ** prob.m, prob.b ** prob.n
    g_am = one_inverse(am).g if g_am is None else certify(am, g_am).g
    g_bn = one_inverse(bn).g if g_bn is None else certify(bn, g_bn).g
    return ClineContext(am, bn, g_am, g_bn, below)


def cline_particular(ctx: ClineContext, prob: ClineProblem) -> Matrix:
    return ctx.g_am @ prob.c @ ctx.g_bn


def cline_consistent(ctx: ClineContext, prob: ClineProblem) -> ConsistencyReport:
    x = cline_particular(ctx, prob)
    defect = ctx.am @ x @ ctx.bn - prob.c
    ok = defect.is_zero()
    witnesses = {"(A^m)^(1)": ctx.g_am, "(B^n)^(1)": ctx.g_bn}
    if ok:
        witnesses["X_particular"] = x
    notes = ("power below index (override)",) if ctx.below_index else ()
    return ConsistencyReport(ok, {CONSISTENCY_CLAUSE: defect}, witnesses, notes)


def _linear_terms(ctx: ClineContext, prob: ClineProblem):
    p, q = prob.c.shape
    f = prob.field
    terms = [identity_term(p, q, f), LinearTerm(ctx.g_am @ ctx.am, ctx.bn @ ctx.g_bn, -1)]
    labels = [("I", "I"), ("(A^m)^(1)A^m", "B^n(B^n)^(1)")]
    return terms, labels


def cline_f_generator(ctx: ClineContext, prob: ClineProblem) -> AffineGenerator:
    """``f(Y) = G C G' + Y - G A^m Y B^n G'`` with G, G' the chosen {1}-inverses."""
    if not cline_consistent(ctx, prob).consistent:
        raise Inconsistent("A^m X B^n = C has no solution")
    terms, labels = _linear_terms(ctx, prob)
    p, q = prob.c.shape
    return AffineGenerator(cline_particular(ctx, prob), terms, p, q, labels, "(A^m)^(1)C(B^n)^(1)")


def cline_g_generator(ctx: ClineContext, prob: ClineProblem, x0: Matrix) -> AffineGenerator:
    if not prob.is_solution(x0):
        raise NotASolution("x0 does not satisfy A^m X B^n = C")
    terms, labels = _linear_terms(ctx, prob)
    p, q = prob.c.shape
    return AffineGenerator(x0, terms, p, q, labels, "X0")
