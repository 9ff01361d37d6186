import itertools

import pytest

from conftest import M, all_2x2, rand_matrix
from reprosolve.errors import DimensionMismatch, Inconsistent, NotASolution
from reprosolve.field import GF, QQ
from reprosolve.generator import apply, image_of, is_reproductive
from reprosolve.inverse import index
from reprosolve.matrix import Matrix
from reprosolve.oracle import enumerate_solutions, sets_equal, solve
from reprosolve.penrose import (COMPATIBLE, LEFT_SOLVABLE, RIGHT_SOLVABLE, PenroseProblem, penrose_consistent,
                                penrose_context, penrose_f_generator, penrose_g_generator, penrose_x1)

GF2, GF3 = GF(2), GF(3)


def random_consistent(rng, field, p=2, q=2):
    a, d = rand_matrix(rng, p, p, field), rand_matrix(rng, q, q, field)
    if rng.random() < 0.5:
        a = M([[0] * p] + [list(r) for r in a.data[1:]], field)
    m, n = max(1, index(a)), max(1, index(d))
    x = rand_matrix(rng, p, q, field)
    prob = PenroseProblem(a, a ** m @ x, d, x @ d ** n, m, n)
    return penrose_context(prob), prob


def test_identity_case_needs_b_equal_e():
    i2 = Matrix.identity(2, GF2)
    for b, e in itertools.product(all_2x2(GF2)[:6], repeat=2):
        prob = PenroseProblem(i2, b, i2, e)
        report = penrose_consistent(penrose_context(prob), prob)
        assert report.consistent == (b == e)
        if b != e:
            assert report.failed_clauses == (COMPATIBLE,)


def test_zero_right_hand_sides(rng):
    for _ in range(20):
        a, d = rand_matrix(rng, 2, 2, GF3), rand_matrix(rng, 3, 3, GF3)
        z = Matrix.zeros(2, 3, GF3)
        prob = PenroseProblem(a, z, d, z, max(1, index(a)), max(1, index(d)))
        ctx = penrose_context(prob)
        assert penrose_consistent(ctx, prob).consistent
        assert penrose_x1(ctx, prob).is_zero()


def test_failed_clauses_are_named():
    z, i2 = Matrix.zeros(2, 2), Matrix.identity(2)
    prob = PenroseProblem(z, i2, i2, i2)
    report = penrose_consistent(penrose_context(prob), prob)
    assert LEFT_SOLVABLE in report.failed_clauses and RIGHT_SOLVABLE not in report.failed_clauses
    prob = PenroseProblem(i2, i2, z, i2)
    assert RIGHT_SOLVABLE in penrose_consistent(penrose_context(prob), prob).failed_clauses


def test_x1_examples():
    i2 = Matrix.identity(2)
    b = M([[1, 2], [3, 4]])
    prob = PenroseProblem(i2, b, i2, b)
    assert penrose_x1(penrose_context(prob), prob) == b
    bad = PenroseProblem(i2, b, i2, i2)
    with pytest.raises(Inconsistent):
        penrose_x1(penrose_context(bad), bad)


def test_x1_solves_random_instances(rng):
    for n in range(500):
        ctx, prob = random_consistent(rng, GF3, rng.choice((1, 2, 3)), rng.choice((1, 2, 3)))
        x1 = penrose_x1(ctx, prob)
        assert prob.a ** prob.m @ x1 == prob.b and x1 @ prob.d ** prob.n == prob.e


def test_literal_formula_reading_is_reported():
    # A invertible, so (A^m)^(1) A^m = I and the literal reading leaves an extra A
    f = GF3
    a = M([[2, 0], [0, 1]], f)
    i2 = Matrix.identity(2, f)
    x = M([[1, 1], [0, 1]], f)
    prob = PenroseProblem(a, a @ x, i2, x)
    ctx = penrose_context(prob)
    assert ctx.x1 == x
    assert ctx.literal_reading_differs and not prob.is_solution(ctx.x1_literal)
    assert any("extra A" in note for note in penrose_consistent(ctx, prob).notes)


def test_f_generator_examples(rng):
    i2 = Matrix.identity(2)
    b = M([[1, 2], [3, 4]])
    prob = PenroseProblem(i2, b, i2, b)
    f = penrose_f_generator(penrose_context(prob), prob)
    assert all(apply(f, rand_matrix(rng, 2, 2)) == b for _ in range(5))
    for _ in range(100):
        ctx, prob = random_consistent(rng, GF3)
        assert is_reproductive(penrose_f_generator(ctx, prob)).reproductive


def test_f_both_directions(rng):
    for field in (GF3, QQ):
        for _ in range(40):
            ctx, prob = random_consistent(rng, field, rng.choice((2, 3)), rng.choice((1, 2)))
            f = penrose_f_generator(ctx, prob)
            for _ in range(5):
                assert prob.is_solution(apply(f, rand_matrix(rng, *prob.x_shape, field)))
            oracle = solve(prob.system())
            for x in [oracle.particular] + [oracle.particular + v for v in oracle.basis]:
                assert apply(f, x) == x


def test_g_generator(rng):
    for field in (GF3, QQ):
        for _ in range(40):
            ctx, prob = random_consistent(rng, field)
            f = penrose_f_generator(ctx, prob)
            g = penrose_g_generator(ctx, prob, ctx.x1)
            assert g.constant == f.constant and g.terms == f.terms
            oracle = solve(prob.system())
            for x0 in [oracle.particular] + [oracle.particular + v for v in oracle.basis]:
                g = penrose_g_generator(ctx, prob, x0)
                for i, j in itertools.product(range(2), repeat=2):
                    y = Matrix.unit(2, 2, i, j, field)
                    assert apply(g, apply(g, y)) - apply(g, y) == x0 - ctx.x1
                assert is_reproductive(g).reproductive == (x0 == ctx.x1)
    with pytest.raises(NotASolution):
        penrose_g_generator(ctx, prob, ctx.x1 + Matrix.identity(2, field))


def test_g_image_equals_f_image_exhaustive_gf2():
    mats = all_2x2(GF2)
    checked = 0
    # A, D restricted to index <= 1 so m = n = 1 meets the hypotheses
    small = [a for a in mats if index(a) <= 1]
    for a, d in itertools.product(small, repeat=2):
        for x in mats:
            prob = PenroseProblem(a, a @ x, d, x @ d)
            ctx = penrose_context(prob)
            img = image_of(penrose_f_generator(ctx, prob))
            for x0 in enumerate_solutions(solve(prob.system())):
                assert sets_equal(image_of(penrose_g_generator(ctx, prob, x0)), img)
                checked += 1
    assert checked > 1000


def test_problem_validation():
    with pytest.raises(DimensionMismatch):
        PenroseProblem(Matrix.identity(2), Matrix.zeros(2, 3), Matrix.identity(3), Matrix.zeros(2, 2))
