"""Exact scalar arithmetic over the rationals and over GF(p), p an odd prime.

Raw values are ``Fraction`` for the rationals and ``int`` residues in
``range(p)`` for prime fields.  ``FieldScalar`` wraps a raw value together with
its field; the matrix layer works on raw values directly for speed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import FieldError, FieldMismatch, MalformedScalar

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^\d+$")


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for k in range(3, math.isqrt(n) + 1, 2):
        if n % k == 0:
            return False
    return True


@dataclass(frozen=True, eq=False)
class FieldDescriptor:
    """Either the rationals (``p == 0``) or GF(p) for an odd prime p."""

    p: int = 0

    def __eq__(self, other):
        return self is other or (isinstance(other, FieldDescriptor) and self.p == other.p)

    def __hash__(self):
        return hash(("field", self.p))

    def __post_init__(self):
        if self.p != 0:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise FieldError(f"{self.p} is not prime")
            if self.p == 2:
                raise FieldError("characteristic 2 is not supported")

    # descriptors

    @property
    def is_rational(self):
        return self.p == 0

    @property
    def characteristic(self):
        return self.p

    def __str__(self):
        return "Q" if self.p == 0 else f"p={self.p}"

    def __repr__(self):
        return "Rationals" if self.p == 0 else f"PrimeField({self.p})"

    # raw-level helpers used by the matrix layer

    def norm(self, v):
        if self.p:
            return v % self.p
        return v if isinstance(v, Fraction) else Fraction(v)

    def raw_inv(self, v):
        if self.p:
            if v % self.p == 0:
                raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
            return pow(v, -1, self.p)
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / v

    @property
    def raw_zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def raw_one(self):
        return 1 if self.p else Fraction(1)

    def raw(self, value):
        """Coerce an int, Fraction, string or FieldScalar to a raw value."""
        if value.__class__ is FieldScalar and value.field is self:
            return value.value
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise FieldMismatch(f"scalar from {value.field!r} used in {self!r}")
            return value.value
        if isinstance(value, str):
            return self.parse(value).value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.p if self.p else Fraction(value)
        if isinstance(value, Fraction):
            if self.p:
                num = value.numerator % self.p
                den = value.denominator % self.p
                if den == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.p}")
                return num * pow(den, -1, self.p) % self.p
            return value
        raise FieldError(f"cannot coerce {value!r} into {self!r}")

    # scalar-level API

    def __call__(self, value):
        if value.__class__ is FieldScalar and value.field is self:
            return value
        if isinstance(value, FieldScalar) and value.field == self:
            return value
        return FieldScalar(self, self.raw(value))

    @property
    def zero(self):
        return FieldScalar(self, self.raw_zero)

    @property
    def one(self):
        return FieldScalar(self, self.raw_one)

    def elements(self):
        """All elements of a prime field, in residue order."""
        if not self.p:
            raise FieldError("the rationals are infinite")
        return [FieldScalar(self, k) for k in range(self.p)]

    def parse(self, text):
        if not isinstance(text, str):
            raise MalformedScalar(f"expected a string, got {text!r}")
        t = text.strip()
        if self.p:
            if not _INT_RE.match(t) or int(t) >= self.p:
                raise MalformedScalar(f"{text!r} is not a residue mod {self.p}")
            return FieldScalar(self, int(t))
        if not _RAT_RE.match(t):
            raise MalformedScalar(f"{text!r} is not a rational")
        v = Fraction(t)  # raises ZeroDivisionError on n/0
        return FieldScalar(self, v)

    def render(self, x):
        return str(self(x).value)


Rationals = FieldDescriptor(0)


@lru_cache(maxsize=None)
def PrimeField(p):
    return FieldDescriptor(p)


def parse_field(text):
    """Parse ``"Q"`` or ``"p=13"``."""
    t = text.strip()
    if t == "Q":
        return Rationals
    m = re.match(r"^p=(\d+)$", t)
    if not m:
        raise FieldError(f"unrecognised field {text!r}")
    return PrimeField(int(m.group(1)))


def characteristic(field):
    return field.p


class FieldScalar:
    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if other.__class__ is FieldScalar and other.field is self.field:
            return other.value
        if isinstance(other, FieldScalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        return self.field.raw(other)

    def _make(self, v):
        p = self.field.p
        return FieldScalar(self.field, v % p if p else v)

    def __add__(self, other):
        return self._make(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._make(self.value - self._other(other))

    def __rsub__(self, other):
        return self._make(self._other(other) - self.value)

    def __mul__(self, other):
        return self._make(self.value * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._make(self.value * self.field.raw_inv(self._other(other)))

    def __rtruediv__(self, other):
        return self._make(self._other(other) * self.field.raw_inv(self.value))

    def __neg__(self):
        return self._make(-self.value)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        p = self.field.p
        if p:
            return FieldScalar(self.field, pow(self.value, k, p))
        return FieldScalar(self.field, self.value ** k)

    def inverse(self):
        return FieldScalar(self.field, self.field.raw_inv(self.value))

    def __eq__(self, other):
        if other.__class__ is FieldScalar:
            return self.value == other.value and self.field == other.field
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field.raw(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __bool__(self):
        return self.value != 0

    def is_zero(self):
        return self.value == 0

    def sort_key(self):
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.field!r}({self.value})"


def sort_scalars(xs):
    return sorted(xs, key=lambda s: s.value)


@lru_cache(maxsize=64)
def _sqrt_table(p):
    table = {}
    for r in range(p):
        table.setdefault(r * r % p, []).append(r)
    return table


def _raw_square_roots(field, v):
    if field.p:
        return list(_sqrt_table(field.p).get(v, []))
    if v < 0:
        return []
    n, d = v.numerator, v.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return []
    r = Fraction(rn, rd)
    return [r] if r == 0 else [-r, r]


def square_roots(x):
    """All square roots of ``x`` in its field, in ascending canonical order."""
    return [FieldScalar(x.field, r) for r in _raw_square_roots(x.field, x.value)]


def is_square(x):
    return bool(_raw_square_roots(x.field, x.value))
