"""Affine solution generators ``h(Y) = C0 + sum_i s_i P_i Y Q_i``.

An affine map is idempotent exactly when its linear part ``L`` satisfies
``L∘L = L`` and ``L(C0) = 0``, which turns the universally quantified
condition ``h∘h = h`` into two finite matrix identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotComposable, ShapeMismatch
from .matrix import Matrix, _eliminate, unvec_values
from .oracle import AffineSolutionSet, LinearTerm


@dataclass(frozen=True)
class AffineGenerator:
    constant: Matrix
    terms: tuple[LinearTerm, ...]
    y_rows: int
    y_cols: int
    # display names for term factors, used when printing formulas
    labels: tuple[tuple[str, str], ...] = ()
    constant_label: str = "C0"

    def __init__(self, constant: Matrix, terms: Sequence[LinearTerm], y_rows: int, y_cols: int,
                 labels: Sequence[tuple[str, str]] = (), constant_label: str = "C0"):
        object.__setattr__(self, "constant", constant)
        object.__setattr__(self, "terms", tuple(terms))
        object.__setattr__(self, "y_rows", y_rows)
        object.__setattr__(self, "y_cols", y_cols)
        object.__setattr__(self, "labels", tuple(labels))
        object.__setattr__(self, "constant_label", constant_label)
        for t in self.terms:
            if t.left.cols != y_rows or t.right.rows != y_cols:
                raise ShapeMismatch(f"term {t.left.shape}·Y·{t.right.shape} does not fit Y of {y_rows}x{y_cols}")
            if (t.left.rows, t.right.cols) != constant.shape:
                raise ShapeMismatch(f"term output {t.left.rows}x{t.right.cols} differs from constant {constant.shape}")
            if t.left.field != constant.field:
                raise ShapeMismatch("term and constant live in different fields")

    @property
    def field(self):
        return self.constant.field

    @property
    def y_shape(self) -> tuple[int, int]:
        return (self.y_rows, self.y_cols)

    def __call__(self, y: Matrix) -> Matrix:
        return apply(self, y)

    def with_constant(self, constant: Matrix, label: str = "C0") -> AffineGenerator:
        return AffineGenerator(constant, self.terms, self.y_rows, self.y_cols, self.labels, label)

    def formula(self) -> str:
        parts = [self.constant_label]
        for n, t in enumerate(self.terms):
            lname, rname = self.labels[n] if n < len(self.labels) else (f"P{n + 1}", f"Q{n + 1}")
            body = "·".join(x for x in (lname, "Y", rname) if x != "I")
            parts.append(("+ " if t.sign == 1 else "- ") + body)
        return "X = " + " ".join(parts)


@dataclass(frozen=True)
class ReproVerdict:
    reproductive: bool
    linear_idempotent: bool
    constant_fixed: bool
    defect: Matrix  # h(h(0)) - h(0) = L(C0)


def apply(h: AffineGenerator, y: Matrix) -> Matrix:
    if y.shape != h.y_shape:
        raise ShapeMismatch(f"parameter of shape {y.shape}, generator expects {h.y_shape}")
    out = h.constant
    for t in h.terms:
        out = out + t.apply(y)
    return out


def linear_part(h: AffineGenerator, y: Matrix) -> Matrix:
    return apply(h, y) - h.constant


def linear_matrix_of(h: AffineGenerator) -> Matrix:
    """``M`` with ``vec(h(Y) - C0) = M vec(Y)``."""
    n_out = h.constant.rows * h.constant.cols
    m = Matrix.zeros(n_out, h.y_rows * h.y_cols, h.field)
    for t in h.terms:
        m = m + t.vectorized()
    return m


def is_reproductive(h: AffineGenerator) -> ReproVerdict:
    if h.constant.shape != h.y_shape:
        raise NotComposable(f"generator maps {h.y_shape} to {h.constant.shape}; h∘h is undefined")
    m = linear_matrix_of(h)
    idem = m @ m == m
    defect = linear_part(h, h.constant)
    fixed = defect.is_zero()
    return ReproVerdict(idem and fixed, idem, fixed, defect)


def image_of(h: AffineGenerator) -> AffineSolutionSet:
    """``{h(Y)}`` as ``C0 + span(independent columns of M)``."""
    m = linear_matrix_of(h)
    f = h.field
    rows = [list(r) for r in m.data]
    pivots = _eliminate(rows, f, m.cols)
    p, q = h.constant.shape
    basis = tuple(unvec_values([r[c] for r in m.data], p, q, f) for c in pivots)
    return AffineSolutionSet(True, p, q, f, h.constant, basis)


def identity_term(n_rows: int, n_cols: int, field, sign: int = 1) -> LinearTerm:
    return LinearTerm(Matrix.identity(n_rows, field), Matrix.identity(n_cols, field), sign)

