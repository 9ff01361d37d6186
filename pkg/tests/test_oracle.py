import itertools

import pytest

from conftest import M, all_2x2, rand_matrix
from reprosolve.errors import CapExceeded, DimensionMismatch, NotEnumerable, ShapeMismatch
from reprosolve.field import GF, QQ
from reprosolve.inverse import one_inverse
from reprosolve.matrix import Matrix, kron, rank, vec
from reprosolve.oracle import (AffineSolutionSet, Constraint, LinearMatrixSystem, LinearTerm, contains,
                               enumerate_solutions, sets_equal, solve, system_of)


def axb(a, b, c):
    return system_of([([(a, b, 1)], c)], a.cols, b.rows)


def test_identity_system():
    c = M([[1, 2], [3, 4]])
    s = solve(axb(Matrix.identity(2), Matrix.identity(2), c))
    assert s.consistent and s.particular == c and s.dimension == 0


def test_vacuous_system():
    z = Matrix.zeros(2, 2)
    s = solve(axb(z, z, z))
    assert s.consistent and s.dimension == 4


def test_one_inverse_set_gf2():
    f = GF(2)
    d = Matrix.diag([1, 0], f)
    s = solve(axb(d, d, d))
    brute = {x for x in all_2x2(f) if d @ x @ d == d}
    assert len(brute) == 8
    assert set(enumerate_solutions(s)) == brute
    assert all(x[0, 0] == 1 for x in enumerate_solutions(s))


def test_inconsistent_verdict():
    s = solve(axb(Matrix.zeros(2, 2), Matrix.identity(2), Matrix.identity(2)))
    assert not s.consistent and s.particular is None
    assert list(enumerate_solutions(AffineSolutionSet(False, 2, 2, GF(2)))) == []


def test_contains():
    c = M([[1, 2], [3, 4]])
    s = solve(axb(Matrix.identity(2), Matrix.identity(2), c))
    assert contains(s, s.particular)
    only_zero = solve(system_of([([(Matrix.identity(2), Matrix.identity(2), 1)], Matrix.zeros(2, 2))], 2, 2))
    assert not contains(only_zero, Matrix.identity(2))
    with pytest.raises(ShapeMismatch):
        contains(s, Matrix.identity(3))


def test_contains_one_inverse(rng):
    for n in range(200):
        field = QQ if n % 2 else GF(3)
        a = rand_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), field)
        assert contains(solve(axb(a, a, a)), one_inverse(a).g)


def test_solution_properties(rng):
    consistent = 0
    for n in range(150):
        field = (QQ, GF(2), GF(3))[n % 3]
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        a, b = rand_matrix(rng, 2, p, field), rand_matrix(rng, q, 2, field)
        e, d = rand_matrix(rng, 3, p, field), rand_matrix(rng, q, 1, field)
        if n % 2:
            x0 = rand_matrix(rng, p, q, field)
            c, r = a @ x0 @ b, e @ x0 @ d
        else:
            c, r = rand_matrix(rng, 2, 2, field), rand_matrix(rng, 3, 1, field)
        system = system_of([([(a, b, 1)], c), ([(e, d, 1)], r)], p, q)
        s = solve(system)
        assert solve(system) == s
        if not s.consistent:
            continue
        consistent += 1
        stacked = Matrix([list(row) for row in kron(b.T, a).data] + [list(row) for row in kron(d.T, e).data], field)
        assert s.dimension == p * q - rank(stacked)
        assert system.is_solution(s.particular)
        for v in s.basis:
            assert all(homogeneous(con, v).is_zero() for con in system.constraints)
    assert consistent >= 75


def homogeneous(con, x):
    acc = None
    for t in con.terms:
        acc = t.apply(x) if acc is None else acc + t.apply(x)
    return acc


def test_enumerate_yields_solutions_only():
    f = GF(3)
    a = M([[1, 1], [0, 0]], f)
    s = solve(axb(a, Matrix.identity(2, f), M([[1, 2], [0, 0]], f)))
    sols = list(enumerate_solutions(s))
    assert len(sols) == 3 ** s.dimension == len(set(sols))
    assert all(a @ x == M([[1, 2], [0, 0]], f) for x in sols)


def test_enumerate_errors():
    s = solve(axb(Matrix.zeros(2, 2), Matrix.zeros(2, 2), Matrix.zeros(2, 2)))
    with pytest.raises(NotEnumerable):
        enumerate_solutions(s)
    f = GF(2)
    z = Matrix.zeros(3, 3, f)
    with pytest.raises(CapExceeded):
        enumerate_solutions(solve(axb(z, z, z)), cap=100)
    assert len(list(enumerate_solutions(solve(axb(z, z, z)), cap=512))) == 512


def test_sets_equal():
    c = Matrix.zeros(2, 2)
    s = solve(axb(Matrix.identity(2), Matrix.identity(2), c))
    assert sets_equal(s, s)
    scaled = solve(axb(Matrix.identity(2).scale(2), Matrix.identity(2), c))
    assert sets_equal(s, scaled)
    vac = solve(axb(Matrix.zeros(2, 2), Matrix.zeros(2, 2), c))
    assert not sets_equal(s, vac)
    bad = AffineSolutionSet(False, 2, 2, QQ)
    assert sets_equal(bad, bad) and not sets_equal(bad, s)
    with pytest.raises(ShapeMismatch):
        sets_equal(s, AffineSolutionSet(False, 3, 2, QQ))


def test_sets_equal_is_basis_independent():
    d = Matrix.diag([1, 0])
    s = solve(axb(d, d, d))
    shuffled = AffineSolutionSet(True, 2, 2, QQ, s.particular + s.basis[0].scale(3),
                                 (s.basis[0] + s.basis[1], s.basis[1].scale(-2), s.basis[2]))
    assert sets_equal(s, shuffled)
    short = AffineSolutionSet(True, 2, 2, QQ, s.particular, s.basis[:2])
    assert not sets_equal(s, short)


def test_assembly_errors():
    with pytest.raises(DimensionMismatch):
        system_of([([(Matrix.identity(3), Matrix.identity(2), 1)], Matrix.zeros(3, 2))], 2, 2)
    with pytest.raises(DimensionMismatch):
        system_of([([(Matrix.identity(2), Matrix.identity(2), 1)], Matrix.zeros(3, 2))], 2, 2)
    with pytest.raises(DimensionMismatch):
        LinearMatrixSystem(2, 2, [])
    with pytest.raises(ValueError):
        LinearTerm(Matrix.identity(2), Matrix.identity(2), 2)
