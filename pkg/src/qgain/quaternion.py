"""Exact quaternion arithmetic over the rationals.

Coefficients are Python rationals: ``int`` when integral, otherwise a
``fractions.Fraction`` in lowest terms.  Both compare equal across types, so
``Quaternion(1, 0, 0, 0) == Quaternion(Fraction(1), 0, 0, 0)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational as _RationalABC
from typing import NamedTuple, Union

Rational = Union[int, Fraction]


def as_rational(x) -> Rational:
    """Coerce ``x`` to an exact rational, collapsing integral fractions to int."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, _RationalABC):
        return as_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return as_rational(Fraction(x))
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Quaternion:
    """q = a0 + a1 i + a2 j + a3 k with exact rational coefficients."""

    __slots__ = ("a0", "a1", "a2", "a3")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        object.__setattr__(self, "a0", as_rational(a0))
        object.__setattr__(self, "a1", as_rational(a1))
        object.__setattr__(self, "a2", as_rational(a2))
        object.__setattr__(self, "a3", as_rational(a3))

    @classmethod
    def _raw(cls, a0, a1, a2, a3):
        # trusted constructor: coefficients already normalized
        q = object.__new__(cls)
        object.__setattr__(q, "a0", a0)
        object.__setattr__(q, "a1", a1)
        object.__setattr__(q, "a2", a2)
        object.__setattr__(q, "a3", a3)
        return q

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def coeffs(self) -> tuple:
        return (self.a0, self.a1, self.a2, self.a3)

    def __iter__(self):
        return iter(self.coeffs())

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.a0 == other.a0 and self.a1 == other.a1
                    and self.a2 == other.a2 and self.a3 == other.a3)
        if isinstance(other, (int, Fraction)):
            return self.a0 == other and not (self.a1 or self.a2 or self.a3)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs())

    def __bool__(self):
        return bool(self.a0 or self.a1 or self.a2 or self.a3)

    def __repr__(self):
        return f"Quaternion({format_quaternion(self)})"

    def __str__(self):
        terms = []
        for c, unit in zip(self.coeffs(), ("", "i", "j", "k")):
            if c == 0:
                continue
            mag = abs(c)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append((" - " if c < 0 else " + ") + body)
        return "".join(terms) or "0"

    def __neg__(self):
        return type(self)._raw(-self.a0, -self.a1, -self.a2, -self.a3)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.a0 + other.a0, self.a1 + other.a1,
                          self.a2 + other.a2, self.a3 + other.a3)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Quaternion(self.a0 - other.a0, self.a1 - other.a1,
                          self.a2 - other.a2, self.a3 - other.a3)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return multiply(other, self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("quaternion division by zero")
            f = Fraction(other)
            return Quaternion(self.a0 / f, self.a1 / f, self.a2 / f, self.a3 / f)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return conjugate(self)


def _coerce(x):
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, Fraction)):
        return Quaternion(x)
    return NotImplemented


def _n(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


class UnitQuaternion(Quaternion):
    """A quaternion with a0^2 + a1^2 + a2^2 + a3^2 == 1 exactly."""

    __slots__ = ()

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        super().__init__(a0, a1, a2, a3)
        if norm_squared(self) != 1:
            raise ValueError(f"not a unit quaternion: {format_quaternion(self)}")

    @classmethod
    def of(cls, q: Quaternion) -> "UnitQuaternion":
        if isinstance(q, UnitQuaternion):
            return q
        return cls(q.a0, q.a1, q.a2, q.a3)

    @property
    def value(self) -> Quaternion:
        return Quaternion._raw(self.a0, self.a1, self.a2, self.a3)


def _split(q: Quaternion):
    # integer numerators over one common denominator
    den = 1
    for x in (q.a0, q.a1, q.a2, q.a3):
        if type(x) is not int:
            den = lcm(den, x.denominator)
    if den == 1:
        return q.a0, q.a1, q.a2, q.a3, 1
    return (int(q.a0 * den), int(q.a1 * den), int(q.a2 * den), int(q.a3 * den), den)


def _ratio(num: int, den: int) -> Rational:
    if den == 1:
        return num
    g = gcd(num, den)
    if g == den:
        return num // den
    return Fraction(num // g, den // g)


def multiply(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product with ij = k, jk = i, ki = j; units stay units."""
    a0, a1, a2, a3, da = _split(p)
    b0, b1, b2, b3, db = _split(q)
    d = da * db
    cls = UnitQuaternion if (type(p) is UnitQuaternion and type(q) is UnitQuaternion) else Quaternion
    return cls._raw(
        _ratio(a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3, d),
        _ratio(a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2, d),
        _ratio(a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1, d),
        _ratio(a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0, d),
    )


def conjugate(q: Quaternion) -> Quaternion:
    return type(q)._raw(q.a0, -q.a1, -q.a2, -q.a3)


def norm_squared(q: Quaternion) -> Rational:
    a0, a1, a2, a3, d = _split(q)
    return _ratio(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3, d * d)


def inverse(q: Quaternion) -> Quaternion:
    n = norm_squared(q)
    if n == 0:
        raise ZeroDivisionError("zero quaternion has no inverse")
    if n == 1:
        return conjugate(q)
    n = Fraction(n)
    return Quaternion(q.a0 / n, -q.a1 / n, -q.a2 / n, -q.a3 / n)


def real_part(q: Quaternion) -> Rational:
    return q.a0


def imag_part(q: Quaternion) -> Quaternion:
    return Quaternion._raw(0, q.a1, q.a2, q.a3)


def is_real(q: Quaternion) -> bool:
    return not (q.a1 or q.a2 or q.a3)


def rational_unit_from_vector(x, y, z) -> UnitQuaternion:
    """Exact unit ((1 - s) + 2x i + 2y j + 2z k) / (1 + s), s = x^2 + y^2 + z^2.

    Inverse stereographic projection; unit because (1 - s)^2 + 4s = (1 + s)^2.
    """
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    s = x * x + y * y + z * z
    d = 1 + s
    return UnitQuaternion._raw(_n((1 - s) / d), _n(2 * x / d), _n(2 * y / d), _n(2 * z / d))


class ComplexPair(NamedTuple):
    """q = z + w j with z = a0 + a1 i and w = a2 + a3 i, each stored as (re, im)."""

    z: tuple
    w: tuple


def to_complex_pair(q: Quaternion) -> ComplexPair:
    return ComplexPair((q.a0, q.a1), (q.a2, q.a3))


def from_complex_pair(pair: ComplexPair) -> Quaternion:
    (z_re, z_im), (w_re, w_im) = pair
    return Quaternion(z_re, z_im, w_re, w_im)


ZERO = Quaternion._raw(0, 0, 0, 0)
ONE = UnitQuaternion._raw(1, 0, 0, 0)
I = UnitQuaternion._raw(0, 1, 0, 0)
J = UnitQuaternion._raw(0, 0, 1, 0)
K = UnitQuaternion._raw(0, 0, 0, 1)

# Index order shared with the compiled kernel: 1, -1, i, -i, j, -j, k, -k.
Q8 = (ONE, -ONE, I, -I, J, -J, K, -K)
Q8_SYMBOLS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def q8_index(q: Quaternion) -> int:
    """Position of ``q`` in :data:`Q8`, or -1 when ``q`` is not a Lipschitz unit."""
    try:
        return Q8.index(q)
    except ValueError:
        return -1


def format_rational(x: Rational) -> str:
    x = as_rational(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def format_quaternion(q: Quaternion) -> str:
    """Render as ``"a0 a1 a2 a3"`` with integer or ``p/q`` coefficients."""
    return " ".join(format_rational(c) for c in q.coeffs())


def parse_rational(token: str, allow_decimal: bool = False) -> Rational:
    token = token.strip()
    if not token:
        raise ValueError("empty coefficient")
    if "/" in token:
        num, _, den = token.partition("/")
        if not _is_int(num) or not _is_int(den) or den.lstrip("+").startswith("-"):
            raise ValueError(f"malformed rational {token!r}")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return as_rational(Fraction(int(num), int(den)))
    if _is_int(token):
        return int(token)
    if allow_decimal:
        try:
            return as_rational(Fraction(token))
        except ValueError:
            pass
        raise ValueError(f"malformed decimal {token!r}")
    raise ValueError(f"expected integer or p/q, got {token!r}")


def _is_int(s: str) -> bool:
    s = s.strip()
    if s[:1] in "+-":
        s = s[1:]
    return s.isdigit()


def parse_quaternion(text: str, allow_decimal: bool = False) -> Quaternion:
    parts = text.split()
    if len(parts) != 4:
        raise ValueError(f"expected 4 coefficients, got {len(parts)}")
    return Quaternion(*(parse_rational(p, allow_decimal) for p in parts))
