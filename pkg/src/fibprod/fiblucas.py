"""Fibonacci and Lucas numbers by fast doubling, and exact powers of phi.

Negative indices follow the standard reflections F(-n) = (-1)**(n+1) F(n)
and L(-n) = (-1)**n L(n).  All entry points enforce a configurable index
cap so a malformed request cannot demand a gigantic computation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .exactnum import GoldenExt

INDEX_CAP = 10 ** 6


class IndexCapError(ValueError):
    """Requested index magnitude exceeds the configured cap."""


class FibPair(NamedTuple):
    index: int
    f_n: int
    f_n_plus_1: int


def _check_cap(n: int, cap: int) -> None:
    if abs(n) > cap:
        raise IndexCapError(f"index {n} exceeds the cap {cap}")


def _pair_nonneg(n: int) -> tuple[int, int]:
    # (F(n), F(n+1)) via F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2
    f, g = 0, 1
    for shift in range(n.bit_length() - 1, -1, -1):
        doubled = f * (2 * g - f)
        doubled_next = f * f + g * g
        if (n >> shift) & 1:
            f, g = doubled_next, doubled + doubled_next
        else:
            f, g = doubled, doubled_next
    return f, g


def fib(n: int, *, cap: int = INDEX_CAP) -> int:
    """F(n) for any integer n."""
    _check_cap(n, cap)
    if n >= 0:
        return _pair_nonneg(n)[0]
    mag = _pair_nonneg(-n)[0]
    return mag if n % 2 == 1 else -mag


def fib_pair(n: int, *, cap: int = INDEX_CAP) -> FibPair:
    """Adjacent pair (F(n), F(n+1)) for any integer n."""
    _check_cap(n, cap)
    if n >= 0:
        f, g = _pair_nonneg(n)
        return FibPair(n, f, g)
    return FibPair(n, fib(n, cap=cap), fib(n + 1, cap=cap))


def lucas(n: int, *, cap: int = INDEX_CAP) -> int:
    """L(n) = 2 F(n+1) - F(n), one doubling pass."""
    _check_cap(n, cap)
    if n >= 0:
        f, g = _pair_nonneg(n)
        return 2 * g - f
    mag = lucas(-n, cap=cap)
    return mag if n % 2 == 0 else -mag


def phi_power(n: int, *, cap: int = INDEX_CAP) -> GoldenExt:
    """phi**n = (L(n) + F(n) sqrt5) / 2, exact for any integer n."""
    _check_cap(n, cap)
    if n >= 0:
        f, g = _pair_nonneg(n)
        lucas_n = 2 * g - f
    else:
        f, lucas_n = fib(n, cap=cap), lucas(n, cap=cap)
    return GoldenExt(Fraction(lucas_n, 2), Fraction(f, 2))
