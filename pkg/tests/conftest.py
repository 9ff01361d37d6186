import itertools
import random
from fractions import Fraction

import pytest

from reprosolve.field import GF, QQ
from reprosolve.matrix import Matrix


def M(rows, field=QQ):
    return Matrix(rows, field)


def all_2x2(field):
    return [M([[a, b], [c, d]], field) for a, b, c, d in itertools.product(range(field.p), repeat=4)]


def rand_matrix(rng, rows, cols, field=QQ):
    if field.is_finite:
        return M([[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)], field)
    return M([[Fraction(rng.randint(-3, 3), rng.choice((1, 2, 3))) for _ in range(cols)] for _ in range(rows)], field)


@pytest.fixture
def rng():
    return random.Random(20261017)


FIELDS = [QQ, GF(2), GF(3), GF(7)]
