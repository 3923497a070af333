"""Gaussian rational scalars: exact complex numbers a + b*i with rational a, b.

This is the base field for the whole library.  Structure constants of the
algebras carry explicit factors of i and every claim we verify is an exact
identity, so there is no floating-point mode anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class GaussianRational:
    """Element of Q(i), stored as a pair of fractions (re, im).

    Instances are immutable.  Fractions are normalized by construction
    (lowest terms, positive denominator), which keeps the type's invariants
    for free.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "GaussianRational":
        return _ZERO

    @staticmethod
    def one() -> "GaussianRational":
        return _ONE

    @staticmethod
    def i() -> "GaussianRational":
        return _I

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:  # fast path: both real
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if c == 0 and d == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        if b == 0 and d == 0:
            return GaussianRational(a / c)
        n = c * c + d * d
        return GaussianRational((a * c + b * d) / n, (b * c - a * d) / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """|z|^2 = z * conj(z); always a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- formatting ------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        return format_gaussian(self)


def _format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    """Render as "a/b+c/d*i", omitting zero parts ("0" if both vanish)."""
    re, im = z.re, z.im
    if im == 0:
        return _format_fraction(re)
    if im == 1:
        im_part = "i"
    elif im == -1:
        im_part = "-i"
    else:
        im_part = f"{_format_fraction(im)}*i"
    if re == 0:
        return im_part
    sep = "" if im < 0 else "+"
    return f"{_format_fraction(re)}{sep}{im_part}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" as an exact rational.  Floats are rejected."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse the serialization "a/b+c/d*i" (either part optional)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar string")
    # split into signed atoms
    atoms = []
    start = 0
    for k, ch in enumerate(s):
        if ch in "+-" and k > 0 and s[k - 1] not in "+-/*":
            atoms.append(s[start:k])
            start = k
    atoms.append(s[start:])
    re = Fraction(0)
    im = Fraction(0)
    for atom in atoms:
        if atom in ("i", "+i"):
            im += 1
        elif atom == "-i":
            im -= 1
        elif atom.endswith("*i"):
            im += parse_rational(atom[:-2])
        elif atom.endswith("i"):
            im += parse_rational(atom[:-1])
        else:
            re += parse_rational(atom)
    return GaussianRational(re, im)


_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)
_I = GaussianRational(0, 1)

ZERO = _ZERO
ONE = _ONE
I = _I
