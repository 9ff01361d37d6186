"""{1}-inverses and the matrix index."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidOneInverse, NotSquare
from .matrix import Matrix, rank, rref
from .oracle import AffineSolutionSet, solve, system_of


@dataclass(frozen=True)
class OneInverseCertificate:
    g: Matrix
    input_rank: int
    construction: str  # "rank-normal-form" | "oracle-derived" | "user-supplied"


def is_one_inverse(a: Matrix, g: Matrix) -> bool:
    if g.shape != (a.cols, a.rows) or g.field != a.field:
        return False
    return a @ g @ a == a


@lru_cache(maxsize=4096)
def one_inverse(a: Matrix) -> OneInverseCertificate:
    """Deterministic {1}-inverse from the rank normal form.

    Row reduction gives ``P a = R``; row reducing ``R^T`` gives
    ``P2 R^T = N^T`` where ``N = [[I_r, 0], [0, 0]]``. With ``Q = P2^T`` we
    have ``P a Q = N`` and ``g = Q N^T P``.
    """
    f = a.field
    first = rref(a)
    second = rref(first.rref.T)
    r = first.rank
    normal_t = Matrix([[1 if i == j and i < r else 0 for j in range(a.rows)] for i in range(a.cols)], f)
    g = second.transform.T @ normal_t @ first.transform
    if not is_one_inverse(a, g):
        raise AssertionError("rank normal form produced a matrix failing a·g·a = a")
    return OneInverseCertificate(g, r, "rank-normal-form")


def certify(a: Matrix, g: Matrix, construction: str = "user-supplied") -> OneInverseCertificate:
    if not is_one_inverse(a, g):
        raise InvalidOneInverse(f"supplied matrix of shape {g.shape} does not satisfy a·g·a = a")
    return OneInverseCertificate(g, rank(a), construction)


def one_inverse_system(a: Matrix):
    return system_of([([(a, a, 1)], a)], a.cols, a.rows)


@lru_cache(maxsize=4096)
def all_one_inverses(a: Matrix) -> AffineSolutionSet:
    """The whole of A{1} as an affine solution set."""
    return solve(one_inverse_system(a))


@lru_cache(maxsize=4096)
def index(a: Matrix) -> int:
    """Smallest k >= 0 with rank(a^k) == rank(a^(k+1))."""
    if not a.is_square:
        raise NotSquare(f"index of a non-square {a.shape} matrix")
    current = Matrix.identity(a.rows, a.field)
    r_prev = a.rows
    k = 0
    while True:
        current = current @ a
        r_next = rank(current)
        if r_next == r_prev:
            return k
        r_prev = r_next
        k += 1
