"""Exact scalar fields: the rationals and prime fields GF(p).

Matrices store raw values (``Fraction`` for Q, ``int`` residues for GF(p))
and route arithmetic through a :class:`FieldSpec`. :class:`ExactScalar`
wraps a single value together with its field for standalone scalar work.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import DivisionByZero, FieldMismatch, NotEnumerable, ValidationError

Value = Union[int, Fraction]

_MAX_PRIME = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "Q" or "GF"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValidationError("the rational field takes no modulus")
        elif self.kind == "GF":
            if self.p is None or not 2 <= self.p <= _MAX_PRIME or not _is_prime(self.p):
                raise ValidationError(f"GF(p) needs a prime 2 <= p <= 2^31, got {self.p}")
        else:
            raise ValidationError(f"unknown field kind {self.kind!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "GF"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"

    # -- raw value arithmetic -------------------------------------------------

    @property
    def zero(self) -> Value:
        return Fraction(0) if self.kind == "Q" else 0

    @property
    def one(self) -> Value:
        return Fraction(1) if self.kind == "Q" else 1

    def reduce(self, x) -> Value:
        """Bring an integer or fraction expression into canonical form."""
        if self.kind == "Q":
            return x if type(x) is Fraction else Fraction(x)
        if type(x) is Fraction:
            if x.denominator == 1:
                return x.numerator % self.p
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return x % self.p

    def add(self, a: Value, b: Value) -> Value:
        return self.reduce(a + b)

    def sub(self, a: Value, b: Value) -> Value:
        return self.reduce(a - b)

    def mul(self, a: Value, b: Value) -> Value:
        return self.reduce(a * b)

    def neg(self, a: Value) -> Value:
        return self.reduce(-a)

    def inv(self, a: Value) -> Value:
        if not a:
            raise DivisionByZero(f"division by zero in {self}")
        if self.kind == "Q":
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a: Value, b: Value) -> Value:
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator[Value]:
        """All field elements, zero first. Only finite fields are enumerable."""
        if self.kind == "Q":
            raise NotEnumerable("the rational field is infinite")
        return iter(range(self.p))

    # -- text conversion -------------------------------------------------------

    def parse(self, text) -> Value:
        """Parse an entry given as an int or a string ``"a"`` / ``"a/b"``."""
        if isinstance(text, bool):
            raise ValueError(f"not a field entry: {text!r}")
        if isinstance(text, int):
            return self.reduce(text)
        if not isinstance(text, str):
            raise ValueError(f"not a field entry: {text!r}")
        m = _ENTRY.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"malformed entry {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.reduce(num)
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        if self.kind == "GF" and den % self.p == 0:
            raise ValueError(f"denominator of {text!r} vanishes in {self}")
        return self.reduce(Fraction(num, den))

    def format(self, x: Value) -> str:
        return str(x)


_ENTRY = re.compile(r"([+-]?\d+)(?:\s*/\s*(\d+))?")

QQ = FieldSpec("Q")


def GF(p: int) -> FieldSpec:
    return FieldSpec("GF", p)


def parse_field(text: str) -> FieldSpec:
    """Accept ``Q``, ``GF(p)`` or ``GFp``."""
    s = text.strip().replace(" ", "")
    if s in ("Q", "QQ"):
        return QQ
    m = re.fullmatch(r"GF\(?(\d+)\)?", s, re.IGNORECASE)
    if m is None:
        raise ValidationError(f"unknown field {text!r}")
    return GF(int(m.group(1)))


@dataclass(frozen=True)
class ExactScalar:
    """An element of a specific exact field."""

    value: Value
    field: FieldSpec

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.reduce(self.value))

    def _check(self, other):
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} and {other.field}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else ExactScalar(self.field.add(self.value, o.value), self.field)

    def __sub__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else ExactScalar(self.field.sub(self.value, o.value), self.field)

    def __mul__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else ExactScalar(self.field.mul(self.value, o.value), self.field)

    def __truediv__(self, other):
        o = self._check(other)
        return o if o is NotImplemented else ExactScalar(self.field.div(self.value, o.value), self.field)

    def __neg__(self):
        return ExactScalar(self.field.neg(self.value), self.field)

    def __bool__(self):
        return bool(self.value)

    def __str__(self):
        return self.field.format(self.value)


def scalar_arith(a: ExactScalar, b: ExactScalar, op: str) -> ExactScalar:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    try:
        fn = ops[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    if not isinstance(b, ExactScalar):
        raise TypeError("scalar_arith expects two ExactScalar operands")
    return fn(b)


def enumerate_field(spec: FieldSpec) -> list[ExactScalar]:
    return [ExactScalar(v, spec) for v in spec.elements()]
