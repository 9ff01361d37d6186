import itertools

import pytest

from conftest import M, all_2x2, rand_matrix
from reprosolve.cline import (ClineProblem, cline_consistent, cline_context, cline_f_generator, cline_g_generator,
                              cline_particular)
from reprosolve.errors import DimensionMismatch, Inconsistent, IndexTooSmall, InvalidOneInverse, NotASolution
from reprosolve.field import GF, QQ
from reprosolve.generator import apply, image_of, is_reproductive, linear_matrix_of
from reprosolve.inverse import all_one_inverses, index
from reprosolve.matrix import Matrix
from reprosolve.oracle import enumerate_solutions, sets_equal, solve, system_of

GF2, GF3 = GF(2), GF(3)
NILPOTENT = M([[0, 1], [0, 0]])


def random_consistent(rng, field, size=2):
    a, b = rand_matrix(rng, size, size, field), rand_matrix(rng, size, size, field)
    if rng.random() < 0.5:
        a = M([a.data[0], [0] * size] + [list(r) for r in a.data[2:]], field)
    m, n = max(1, index(a)), max(1, index(b))
    c = a ** m @ rand_matrix(rng, size, size, field) @ b ** n
    prob = ClineProblem(a, b, c, m, n)
    return cline_context(prob), prob


def test_context_examples():
    i2 = Matrix.identity(2)
    ctx = cline_context(ClineProblem(i2, i2, M([[1, 2], [3, 4]])))
    assert ctx.g_am == i2 and ctx.g_bn == i2
    with pytest.raises(IndexTooSmall):
        cline_context(ClineProblem(NILPOTENT, i2, Matrix.zeros(2, 2)))
    assert cline_context(ClineProblem(NILPOTENT, i2, Matrix.zeros(2, 2)), allow_small_power=True).below_index
    assert not cline_context(ClineProblem(Matrix.diag([1, 0]), i2, Matrix.zeros(2, 2))).below_index


def test_context_rejects_bad_one_inverse():
    d = Matrix.diag([1, 0])
    prob = ClineProblem(d, d, Matrix.zeros(2, 2))
    ctx = cline_context(prob, g_am=M([[1, 7], [8, 9]]))
    assert ctx.g_am == M([[1, 7], [8, 9]])
    with pytest.raises(InvalidOneInverse):
        cline_context(prob, g_bn=Matrix.zeros(2, 2))


def test_problem_validation():
    with pytest.raises(DimensionMismatch):
        ClineProblem(M([[1, 2]]), Matrix.identity(2), Matrix.zeros(1, 2))
    with pytest.raises(DimensionMismatch):
        ClineProblem(Matrix.identity(2), Matrix.identity(3), Matrix.zeros(2, 2))
    with pytest.raises(ValueError):
        ClineProblem(Matrix.identity(2), Matrix.identity(2), Matrix.zeros(2, 2), m=0)


def test_consistency_examples():
    c = M([[1, 2], [3, 4]])
    prob = ClineProblem(Matrix.zeros(2, 2), Matrix.identity(2), c)
    report = cline_consistent(cline_context(prob), prob)
    assert not report.consistent and report.defect == -c and len(report.failed_clauses) == 1
    prob = ClineProblem(Matrix.identity(2), Matrix.identity(2), c)
    report = cline_consistent(cline_context(prob), prob)
    assert report.consistent and report.defect is None and report.witnesses["X_particular"] == c


def test_verdict_is_independent_of_one_inverse_choice():
    """Every choice in A{1} x B{1} gives the same verdict on all GF(2) 2x2 instances.

    The verdict depends on the choices only through the projectors A G and G' B,
    so it is enough to run over the distinct projectors.
    """
    mats = all_2x2(GF2)
    for a, b in itertools.product(mats, repeat=2):
        lefts = {a @ g for g in enumerate_solutions(all_one_inverses(a))}
        rights = {g @ b for g in enumerate_solutions(all_one_inverses(b))}
        for c in mats:
            verdicts = {pl @ c @ pr == c for pl in lefts for pr in rights}
            assert verdicts == {solve(system_of([([(a, b, 1)], c)], 2, 2)).consistent}


def test_f_generator_examples(rng):
    c = M([[1, 2], [3, 4]])
    prob = ClineProblem(Matrix.identity(2), Matrix.identity(2), c)
    f = cline_f_generator(cline_context(prob), prob)
    assert linear_matrix_of(f).is_zero()
    assert all(apply(f, rand_matrix(rng, 2, 2)) == c for _ in range(5))
    bad = ClineProblem(Matrix.zeros(2, 2), Matrix.identity(2), c)
    with pytest.raises(Inconsistent):
        cline_f_generator(cline_context(bad), bad)


def test_f_reproductive_random_gf3(rng):
    for _ in range(100):
        ctx, prob = random_consistent(rng, GF3)
        assert is_reproductive(cline_f_generator(ctx, prob)).reproductive


def test_f_solves_and_fixes_solutions(rng):
    for field in (GF3, QQ):
        for _ in range(40):
            ctx, prob = random_consistent(rng, field, rng.choice((2, 3)))
            f = cline_f_generator(ctx, prob)
            for _ in range(5):
                assert prob.is_solution(apply(f, rand_matrix(rng, *prob.c.shape, field)))
            oracle = solve(prob.system())
            for x in [oracle.particular] + [oracle.particular + v for v in oracle.basis]:
                assert apply(f, x) == x


def test_g_generator_with_canonical_x0_equals_f(rng):
    for _ in range(20):
        ctx, prob = random_consistent(rng, GF3)
        f = cline_f_generator(ctx, prob)
        g = cline_g_generator(ctx, prob, cline_particular(ctx, prob))
        assert g.constant == f.constant and g.terms == f.terms


def test_g_square_minus_g_is_constant_shift(rng):
    for field in (GF3, QQ):
        for _ in range(30):
            ctx, prob = random_consistent(rng, field)
            oracle = solve(prob.system())
            x0 = oracle.particular + (oracle.basis[0] if oracle.basis else Matrix.zeros(2, 2, field))
            g = cline_g_generator(ctx, prob, x0)
            shift = x0 - cline_particular(ctx, prob)
            ys = [Matrix.unit(2, 2, i, j, field) for i in range(2) for j in range(2)] + [Matrix.zeros(2, 2, field)]
            for y in ys:
                assert apply(g, apply(g, y)) - apply(g, y) == shift
            assert is_reproductive(g).reproductive == (x0 == cline_particular(ctx, prob))


def test_g_not_a_solution():
    d = Matrix.diag([1, 0])
    prob = ClineProblem(d, d, d)
    with pytest.raises(NotASolution):
        cline_g_generator(cline_context(prob), prob, Matrix.zeros(2, 2))


def test_g_image_equals_f_image_exhaustive_gf2():
    mats = [a for a in all_2x2(GF2) if index(a) <= 1]
    checked = 0
    for a, b, c in itertools.product(mats, mats, all_2x2(GF2)):
        prob = ClineProblem(a, b, c)
        ctx = cline_context(prob)
        if not cline_consistent(ctx, prob).consistent:
            continue
        img = image_of(cline_f_generator(ctx, prob))
        for x0 in enumerate_solutions(solve(prob.system())):
            assert sets_equal(image_of(cline_g_generator(ctx, prob, x0)), img)
            checked += 1
    assert checked > 1000


def test_higher_powers_keep_consistency():
    """A^m X B^n = C is solvable for m >= Ind(A), n >= Ind(B) iff it is at the indices themselves."""
    for a, b, c in itertools.product(all_2x2(GF2), repeat=3):
        k, l = index(a), index(b)

        def solvable(m, n):
            return solve(system_of([([(a ** m, b ** n, 1)], c)], 2, 2)).consistent

        base = solvable(k, l)
        assert all(solvable(k + i, l + j) == base for i in range(3) for j in range(3))


def test_non_canonical_particular_solution_exists():
    a, b, c = Matrix.diag([1, 0], GF2), Matrix.identity(2, GF2), Matrix.diag([1, 0], GF2)
    x0 = Matrix.identity(2, GF2)
    prob = ClineProblem(a, b, c)
    assert prob.is_solution(x0)
    reachable = {g @ c @ h for g in enumerate_solutions(all_one_inverses(a))
                 for h in enumerate_solutions(all_one_inverses(b))}
    assert reachable == {M([[1, 0], [0, 0]], GF2), M([[1, 0], [1, 0]], GF2)}
    assert x0 not in reachable
    # the extended formula still reaches x0 (and everything else)
    ctx = cline_context(prob)
    assert sets_equal(image_of(cline_g_generator(ctx, prob, x0)), solve(prob.system()))
