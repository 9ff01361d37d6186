"""Dense exact matrices and the primitive algorithms every solver shares."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, NotSquare
from .field import FieldSpec, QQ, Value


class Matrix:
    """Immutable dense matrix over an exact field.

    Entries are held row-major as a tuple of row tuples of raw field values.
    Matrices are hashable so per-matrix results (index, {1}-inverse) can be
    cached across the exhaustive sweeps.
    """

    __slots__ = ("rows", "cols", "field", "data", "_hash")

    def __init__(self, data: Iterable[Iterable], field: FieldSpec = QQ, *, _trusted: bool = False):
        if _trusted:
            rows = data
        else:
            red = field.reduce
            rows = tuple(tuple(red(x) for x in r) for r in data)
            if not rows or not rows[0]:
                raise DimensionMismatch("matrices need at least one row and one column")
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
        self.data = rows
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.field = field
        self._hash = None

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> Matrix:
        z = field.zero
        return cls(tuple((z,) * cols for _ in range(rows)), field, _trusted=True)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> Matrix:
        z, o = field.zero, field.one
        return cls(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), field, _trusted=True)

    @classmethod
    def diag(cls, values: Sequence, field: FieldSpec = QQ) -> Matrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], field)

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int, field: FieldSpec = QQ) -> Matrix:
        """The standard basis matrix E_ij."""
        return cls([[1 if (r, c) == (i, j) else 0 for c in range(cols)] for r in range(rows)], field)

    # -- basic protocol ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.data)
        return f"Matrix[{self.field}]({body})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.data]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def _same(self, other: Matrix):
        if self.field != other.field:
            raise FieldMismatch(f"cannot combine {self.field} and {other.field}")

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        red = self.field.reduce
        return Matrix(tuple(tuple(red(a + b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
                      self.field, _trusted=True)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot subtract {other.shape} from {self.shape}")
        red = self.field.reduce
        return Matrix(tuple(tuple(red(a - b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)),
                      self.field, _trusted=True)

    def __neg__(self) -> Matrix:
        red = self.field.reduce
        return Matrix(tuple(tuple(red(-a) for a in r) for r in self.data), self.field, _trusted=True)

    def scale(self, s) -> Matrix:
        red = self.field.reduce
        s = red(s)
        return Matrix(tuple(tuple(red(s * a) for a in r) for r in self.data), self.field, _trusted=True)

    def __matmul__(self, other: Matrix) -> Matrix:
        return multiply(self, other)

    @property
    def T(self) -> Matrix:
        return Matrix(tuple(zip(*self.data)), self.field, _trusted=True)

    def column(self, j: int) -> Matrix:
        return Matrix(tuple((r[j],) for r in self.data), self.field, _trusted=True)

    def __pow__(self, e: int) -> Matrix:
        return power(self, e)


def multiply(a: Matrix, b: Matrix) -> Matrix:
    a._same(b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    red = a.field.reduce
    bt = tuple(zip(*b.data))
    return Matrix(tuple(tuple(red(sum([x * y for x, y in zip(r, c)])) for c in bt) for r in a.data),
                  a.field, _trusted=True)


def power(a: Matrix, e: int) -> Matrix:
    if not a.is_square:
        raise NotSquare(f"power of a non-square {a.shape} matrix")
    if e < 0:
        raise ValueError("negative exponent")
    result = Matrix.identity(a.rows, a.field)
    for _ in range(e):
        result = multiply(result, a)
    return result


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    f = blocks[0].field
    rows = blocks[0].rows
    if any(b.rows != rows or b.field != f for b in blocks):
        raise DimensionMismatch("hstack needs equal row counts and one field")
    return Matrix(tuple(sum((b.data[i] for b in blocks), ()) for i in range(rows)), f, _trusted=True)


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    f = blocks[0].field
    cols = blocks[0].cols
    if any(b.cols != cols or b.field != f for b in blocks):
        raise DimensionMismatch("vstack needs equal column counts and one field")
    return Matrix(sum((b.data for b in blocks), ()), f, _trusted=True)


# -- row reduction ---------------------------------------------------------------


def _eliminate(rows: list[list], field: FieldSpec, ncols: int) -> list[int]:
    """Gauss-Jordan in place on ``rows`` pivoting only in the first ``ncols`` columns.

    Pivot choice is the first nonzero entry scanning columns left to right,
    rows top to bottom. Returns the pivot columns.
    """
    red = field.reduce
    inv = field.inv
    nrows = len(rows)
    width = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if rows[i][c]:
                break
        else:
            continue
        if i != r:
            rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            s = inv(pv)
            prow = rows[r] = [red(s * x) for x in prow]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [red(row[j] - f * prow[j]) if prow[j] else row[j] for j in range(width)]
        pivots.append(c)
        r += 1
    return pivots


@dataclass(frozen=True)
class RrefResult:
    rref: Matrix
    rank: int
    transform: Matrix
    pivot_cols: tuple[int, ...]


def rref(a: Matrix) -> RrefResult:
    """Reduced row echelon form with the invertible transform T, T·a = rref."""
    f = a.field
    ident = Matrix.identity(a.rows, f).data
    rows = [list(r) + list(e) for r, e in zip(a.data, ident)]
    pivots = _eliminate(rows, f, a.cols)
    red = Matrix(tuple(tuple(r[: a.cols]) for r in rows), f, _trusted=True)
    transform = Matrix(tuple(tuple(r[a.cols:]) for r in rows), f, _trusted=True)
    return RrefResult(red, len(pivots), transform, tuple(pivots))


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a.data]
    return len(_eliminate(rows, a.field, a.cols))


def nullspace_basis(a: Matrix) -> list[Matrix]:
    """Column vectors spanning ker(a), one per free column in increasing order."""
    f = a.field
    rows = [list(r) for r in a.data]
    pivots = _eliminate(rows, f, a.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [f.zero] * a.cols
        v[free] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(rows[i][free])
        basis.append(Matrix(tuple((x,) for x in v), f, _trusted=True))
    return basis


# -- Kronecker product and vectorization ---------------------------------------------


def kron(a: Matrix, b: Matrix) -> Matrix:
    a._same(b)
    red = a.field.reduce
    out = []
    for ar in a.data:
        for br in b.data:
            out.append(tuple(red(x * y) for x in ar for y in br))
    return Matrix(tuple(out), a.field, _trusted=True)


def vec(a: Matrix) -> Matrix:
    """Column-stacking vectorization as a (rows*cols) x 1 matrix."""
    return Matrix(tuple((x,) for col in zip(*a.data) for x in col), a.field, _trusted=True)


def unvec(v: Matrix, rows: int, cols: int) -> Matrix:
    if v.cols != 1 or v.rows != rows * cols:
        raise DimensionMismatch(f"cannot reshape {v.shape} into {rows}x{cols}")
    flat = [r[0] for r in v.data]
    return Matrix(tuple(tuple(flat[j * rows + i] for j in range(cols)) for i in range(rows)), v.field, _trusted=True)


def vec_values(a: Matrix) -> list[Value]:
    return [x for col in zip(*a.data) for x in col]


def unvec_values(values: Sequence[Value], rows: int, cols: int, field: FieldSpec) -> Matrix:
    return Matrix(tuple(tuple(values[j * rows + i] for j in range(cols)) for i in range(rows)), field, _trusted=True)
