"""Exact arithmetic over the quadratic field Q(sqrt 5).

Elements are stored as a + b*sqrt5 with rational a, b on the basis
{1, sqrt5}.  Every predicate (sign, ordering, equality) reduces to
integer comparisons, so nothing here touches floating point.  Decimal
rendering is correctly rounded (round-half-even) and is computed from
scaled integer square roots of 5.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def _as_fraction(value: int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class GoldenExt:
    """Immutable element a + b*sqrt5 of Q(sqrt 5)."""

    __slots__ = ("a", "b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GoldenExt is immutable")

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "GoldenExt":
        """Field conjugate a - b*sqrt5."""
        return GoldenExt(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a**2 - 5 b**2 (rational, multiplicative)."""
        return self.a * self.a - 5 * self.b * self.b

    def sign(self) -> int:
        """Exact sign of the real value, -1/0/+1, by integer case analysis."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a**2 against 5 b**2; sqrt5 is irrational,
        # so equality cannot occur here
        if a > 0:
            return 1 if a * a > 5 * b * b else -1
        return 1 if 5 * b * b > a * a else -1

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: object) -> "GoldenExt | None":
        if isinstance(value, GoldenExt):
            return value
        if isinstance(value, (int, Fraction)):
            return GoldenExt(value)
        return None

    def __add__(self, other: object) -> "GoldenExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GoldenExt(self.a + rhs.a, self.b + rhs.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> "GoldenExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GoldenExt(self.a - rhs.a, self.b - rhs.b)

    def __rsub__(self, other: object) -> "GoldenExt":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> "GoldenExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return GoldenExt(
            self.a * rhs.a + 5 * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GoldenExt":
        """Multiplicative inverse conj(x)/norm(x)."""
        n = self.norm()
        if n == 0:
            # norm vanishes only at zero: a**2 = 5 b**2 has no rational
            # solution with b != 0
            raise ZeroDivisionError("division by zero in Q(sqrt 5)")
        return GoldenExt(self.a / n, -self.b / n)

    def __truediv__(self, other: object) -> "GoldenExt":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inverse()

    def __rtruediv__(self, other: object) -> "GoldenExt":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs * self.inverse()

    def __pow__(self, exponent: int) -> "GoldenExt":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GoldenExt(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __neg__(self) -> "GoldenExt":
        return GoldenExt(-self.a, -self.b)

    def __pos__(self) -> "GoldenExt":
        return self

    def __abs__(self) -> "GoldenExt":
        return -self if self.sign() < 0 else self

    # -- predicates --------------------------------------------------------

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self.a == rhs.a and self.b == rhs.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() < 0

    def __le__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() <= 0

    def __gt__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() > 0

    def __ge__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return (self - rhs).sign() >= 0

    def __repr__(self) -> str:
        return f"GoldenExt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        mag = abs(self.b)
        tail = "sqrt5" if mag == 1 else f"{mag}*sqrt5"
        if self.a == 0:
            return tail if self.b > 0 else f"-{tail}"
        joiner = "+" if self.b > 0 else "-"
        return f"{self.a} {joiner} {tail}"


ZERO = GoldenExt(0)
ONE = GoldenExt(1)
SQRT5 = GoldenExt(0, 1)
PHI = GoldenExt(Fraction(1, 2), Fraction(1, 2))


def golden_conj(x: GoldenExt) -> GoldenExt:
    return x.conjugate()


def golden_norm(x: GoldenExt) -> Fraction:
    return x.norm()


def golden_cmp(x: GoldenExt, y: GoldenExt | int | Fraction) -> int:
    """Exact three-way comparison of real values: -1, 0, or +1."""
    rhs = GoldenExt._coerce(y)
    if rhs is None:
        raise TypeError(f"cannot compare GoldenExt with {type(y).__name__}")
    return (x - rhs).sign()


def sqrt5_enclosure(digits: int) -> tuple[Fraction, Fraction]:
    """Certified lo <= sqrt5 <= hi with width exactly 10**-digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10 ** digits
    root = math.isqrt(5 * scale * scale)
    return Fraction(root, scale), Fraction(root + 1, scale)


def _decimal_magnitude(r: Fraction) -> int:
    # number of digits of |r| before the decimal point, never negative
    return max(0, len(str(abs(r.numerator))) - len(str(r.denominator)) + 1)


def _enclose(x: GoldenExt, digits: int) -> tuple[Fraction, Fraction]:
    lo5, hi5 = sqrt5_enclosure(digits)
    if x.b > 0:
        return x.a + x.b * lo5, x.a + x.b * hi5
    return x.a + x.b * hi5, x.a + x.b * lo5


def rational_enclosure(x: GoldenExt, rel_digits: int = 12) -> tuple[Fraction, Fraction]:
    """Certified rational lo <= x <= hi.

    For x != 0 the returned width is at most |x| * 10**-rel_digits and
    both endpoints share the sign of x.  Precision adapts by doubling,
    so heavy cancellation between a and b*sqrt5 is handled.
    """
    if x.b == 0:
        return x.a, x.a
    digits = _decimal_magnitude(x.b) + rel_digits + 4
    eps = Fraction(1, 10 ** rel_digits)
    while True:
        lo, hi = _enclose(x, digits)
        if lo > 0 or hi < 0:
            tight = min(abs(lo), abs(hi))
            if hi - lo <= tight * eps:
                return lo, hi
        digits *= 2


def upper_bound_abs(x: GoldenExt, rel_digits: int = 12) -> Fraction:
    """Certified rational bound with |x| <= result <= |x|(1 + 10**-rel_digits)."""
    if x.sign() == 0:
        return Fraction(0)
    lo, hi = rational_enclosure(x, rel_digits)
    return max(abs(lo), abs(hi))


def _format_scaled(scaled: int, digits: int) -> str:
    mark = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10 ** digits)
    return f"{mark}{whole}.{frac:0{digits}d}"


def golden_to_decimal(x: GoldenExt, digits: int) -> str:
    """Render x with `digits` fractional digits, correctly rounded.

    Rounding is round-half-even.  Rational values round exactly; for
    b != 0 the value is irrational so ties cannot occur, and the guard
    precision (10 digits initially) doubles until both ends of a sqrt5
    enclosure round identically.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scale = 10 ** digits
    if x.b == 0:
        # Fraction.__round__ is round-half-even
        return _format_scaled(round(x.a * scale), digits)
    guard = 10
    while True:
        prec = digits + guard + _decimal_magnitude(x.b)
        lo, hi = _enclose(x, prec)
        rounded_lo = round(lo * scale)
        rounded_hi = round(hi * scale)
        if rounded_lo == rounded_hi:
            return _format_scaled(rounded_lo, digits)
        guard *= 2
