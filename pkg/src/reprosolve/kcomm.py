"""k-commutative {1}-inverses: the system ``A X A = A  and  A^k X = X A^k``.

No closed-form consistency test is used here. Consistency and the
k-commutative {1}-inverse ``Abar`` both come from the linear oracle; the
closed-form pieces are ``Xhat = Abar A Abar``, the general solution
generators, and the supporting identities checked by
:func:`kcomm_lemma_report`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, Inconsistent, InvalidOneInverse, NotASolution
from .generator import AffineGenerator, identity_term
from .matrix import Matrix, rank
from .oracle import AffineSolutionSet, LinearMatrixSystem, LinearTerm, solve, system_of
from .report import ConsistencyReport


@dataclass(frozen=True)
class KCommProblem:
    a: Matrix
    k: int = 1

    def __post_init__(self):
        if not self.a.is_square:
            raise DimensionMismatch("A must be square")
        if self.k < 1:
            raise ValueError("k must be a positive integer")

    @property
    def field(self):
        return self.a.field

    @property
    def singular(self) -> bool:
        return rank(self.a) < self.a.rows

    def system(self) -> LinearMatrixSystem:
        a = self.a
        ak = a ** self.k
        i = Matrix.identity(a.rows, a.field)
        zero = Matrix.zeros(a.rows, a.rows, a.field)
        return system_of([
            ([(a, a, 1)], a),
            ([(ak, i, 1), (i, ak, -1)], zero),
        ], a.rows, a.rows)

    def is_solution(self, x: Matrix) -> bool:
        if x.shape != self.a.shape:
            return False
        ak = self.a ** self.k
        return self.a @ x @ self.a == self.a and ak @ x == x @ ak


@dataclass(frozen=True)
class KCommContext:
    abar: Matrix
    xhat: Matrix
    ak: Matrix
    abark: Matrix


def kcomm_context(prob: KCommProblem, abar: Matrix) -> KCommContext:
    """Context for a given k-commutative {1}-inverse, after checking both identities."""
    if not prob.is_solution(abar):
        raise InvalidOneInverse("supplied matrix is not a k-commutative {1}-inverse of A")
    xhat = abar @ prob.a @ abar
    if not prob.is_solution(xhat):
        raise AssertionError("Abar A Abar fails the system although Abar solves it")
    return KCommContext(abar, xhat, prob.a ** prob.k, abar ** prob.k)


def kcomm_solutions(prob: KCommProblem) -> AffineSolutionSet:
    return solve(prob.system())


def find_kcomm_inverse(prob: KCommProblem) -> KCommContext | None:
    """Oracle-backed k-commutative {1}-inverse, or ``None`` when none exists."""
    sols = kcomm_solutions(prob)
    if not sols.consistent:
        return None
    return kcomm_context(prob, sols.particular)


def kcomm_consistent(prob: KCommProblem, ctx: KCommContext | None = None) -> ConsistencyReport:
    if ctx is None:
        ctx = find_kcomm_inverse(prob)
    notes = () if prob.singular else ("A is nonsingular; the unique solution is A^-1",)
    if ctx is None:
        return ConsistencyReport(False, notes=notes)
    return ConsistencyReport(True, witnesses={"Abar": ctx.abar, "Xhat": ctx.xhat}, notes=notes)


def kcomm_xhat(ctx: KCommContext) -> Matrix:
    return ctx.xhat


def _linear_terms(ctx: KCommContext, prob: KCommProblem):
    a, abar = prob.a, ctx.abar
    p = a.rows
    f = a.field
    i = Matrix.identity(p, f)
    terms = [
        identity_term(p, p, f),
        LinearTerm(i - abar @ a, ctx.ak @ ctx.abark, -1),
        LinearTerm(ctx.abark @ ctx.ak, i - a @ abar, -1),
        LinearTerm(abar @ a, a @ abar, -1),
    ]
    labels = [("I", "I"), ("(I - Abar·A)", "A^k·Abar^k"), ("Abar^k·A^k", "(I - A·Abar)"), ("Abar·A", "A·Abar")]
    return terms, labels


def kcomm_f_generator(ctx: KCommContext, prob: KCommProblem) -> AffineGenerator:
    terms, labels = _linear_terms(ctx, prob)
    p = prob.a.rows
    return AffineGenerator(ctx.xhat, terms, p, p, labels, "Abar·A·Abar")


def kcomm_g_generator(ctx: KCommContext, prob: KCommProblem, x0: Matrix) -> AffineGenerator:
    if not prob.is_solution(x0):
        raise NotASolution("x0 does not solve A X A = A and A^k X = X A^k")
    terms, labels = _linear_terms(ctx, prob)
    p = prob.a.rows
    return AffineGenerator(x0, terms, p, p, labels, "X0")


def kcomm_generator_or_raise(prob: KCommProblem) -> tuple[KCommContext, AffineGenerator]:
    ctx = find_kcomm_inverse(prob)
    if ctx is None:
        raise Inconsistent("A X A = A and A^k X = X A^k have no common solution")
    return ctx, kcomm_f_generator(ctx, prob)


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    identity: str
    defect: Matrix

    @property
    def passed(self) -> bool:
        return self.defect.is_zero()


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[LemmaCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def kcomm_lemma_report(ctx: KCommContext, prob: KCommProblem, x0: Matrix | None = None) -> LemmaReport:
    """Evaluate the four identities the general solution rests on.

    ``x0`` defaults to ``Xhat``.
    """
    if x0 is None:
        x0 = ctx.xhat
    elif not prob.is_solution(x0):
        raise NotASolution("x0 does not solve A X A = A and A^k X = X A^k")
    ak, bk = ctx.ak, ctx.abark
    bk1 = bk @ ctx.abar
    return LemmaReport((
        LemmaCheck("commuting powers", "A^k Abar^k = Abar^k A^k", ak @ bk - bk @ ak),
        LemmaCheck("inner power", "A^k Abar^k A^k = A^k", ak @ bk @ ak - ak),
        LemmaCheck("right absorption", "X0 A^k Abar^k = A^k Abar^(k+1)", x0 @ ak @ bk - ak @ bk1),
        LemmaCheck("left absorption", "Abar^k A^k X0 = A^k Abar^(k+1)", bk @ ak @ x0 - ak @ bk1),
    ))
