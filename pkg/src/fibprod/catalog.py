"""Catalog of eighteen Fibonacci/Lucas infinite product identities.

Each identity states

    prod_{k>=1} (X_k + s_k C) / (X_k - s_k C) = R

where X_k and C are Fibonacci or Lucas numbers (one family scales C or
X_k by sqrt5), the indices are linear in k and in the shape parameters
n, q, and s_k is 1 throughout (plain) or (-1)**(k-1) (alternating).

Every term equals a shifted factor g built from powers of phi:

    g(j) = (phi**e(j) + 1) / (phi**e(j) - 1),
    e(j) = 2 p j          (even-shift family)
    e(j) = p (2 j - 1)    (odd-shift family)

with p, m affine in n, q; the k-th term is g(k)**(s_k) paired against
g(k+m)**(-s_k), which is what makes truncations telescope exactly.  The
descriptor exposes exact terms, the closed form R, the boundary factor
B(N) with P_N = R * B(N)**sigma(N), and a certified tail-decay model.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactnum import SQRT5, GoldenExt
from .fiblucas import fib, lucas, phi_power

EVEN_SHIFT = "even-shift"
ODD_SHIFT = "odd-shift"

FIB = "F"
LUCAS = "L"
SQRT5_FIB = "sqrt5*F"

VALIDATED_MAX = 8


@dataclass(frozen=True)
class Params:
    """Shape parameters; the certified range is 1 <= n, q <= VALIDATED_MAX."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 1:
            raise ValueError("n and q must be >= 1")
        if self.n > VALIDATED_MAX or self.q > VALIDATED_MAX:
            warnings.warn(
                f"n={self.n}, q={self.q} exceeds the validated range "
                f"1..{VALIDATED_MAX}; arithmetic stays exact but indices "
                "and runtimes grow quickly",
                RuntimeWarning,
                stacklevel=3,
            )


@dataclass(frozen=True)
class TailModel:
    """Decay certificate: C = c exactly and X_k >= phi**(alpha k + beta)."""

    c: GoldenExt
    alpha: int
    beta: int
    x_lower: str


def _seq_value(kind: str, index: int) -> GoldenExt:
    if kind == FIB:
        return GoldenExt(fib(index))
    if kind == LUCAS:
        return GoldenExt(lucas(index))
    if kind == SQRT5_FIB:
        return GoldenExt(0, fib(index))
    raise ValueError(f"unknown sequence kind {kind!r}")


def _affine_str(coeffs: tuple[int, int], var: str) -> str:
    mul, add = coeffs
    head = var if mul == 1 else f"{mul}{var}"
    return head if add == 0 else f"{head}{add:+d}"


@dataclass(frozen=True)
class IdentityDescriptor:
    ident: str
    theorem: int
    family: str
    alternating: bool
    p_coeffs: tuple[int, int]
    m_coeffs: tuple[int, int]
    x_kind: str
    c_kind: str
    rhs_fn: Callable[[int, int], GoldenExt]
    lhs_display: str
    rhs_display: str

    def p_of(self, n: int) -> int:
        return self.p_coeffs[0] * n + self.p_coeffs[1]

    def m_of(self, q: int) -> int:
        return self.m_coeffs[0] * q + self.m_coeffs[1]

    @property
    def p_map(self) -> str:
        return _affine_str(self.p_coeffs, "n")

    @property
    def m_map(self) -> str:
        return _affine_str(self.m_coeffs, "q")

    def exponent(self, n: int, j: int) -> int:
        """Shift exponent e(j) of the family."""
        p = self.p_of(n)
        return 2 * p * j if self.family == EVEN_SHIFT else p * (2 * j - 1)

    def c_index(self, params: Params) -> int:
        return self.p_of(params.n) * self.m_of(params.q)

    def x_index(self, params: Params, k: int) -> int:
        return self.exponent(params.n, k) + self.c_index(params)

    def term_sign(self, k: int) -> int:
        return -1 if self.alternating and k % 2 == 0 else 1

    def term(self, params: Params, k: int) -> GoldenExt:
        """Exact k-th factor (X_k + s_k C) / (X_k - s_k C), k >= 1."""
        if k < 1:
            raise ValueError("k must be >= 1")
        x = _seq_value(self.x_kind, self.x_index(params, k))
        c = _seq_value(self.c_kind, self.c_index(params))
        if self.term_sign(k) < 0:
            c = -c
        numerator = x + c
        denominator = x - c
        if denominator.sign() <= 0:
            raise ArithmeticError(
                f"{self.ident}: term denominator not positive at k={k}; "
                "index ordering invariant violated"
            )
        return numerator / denominator

    def rhs(self, params: Params) -> GoldenExt:
        """Closed-form value R of the full product."""
        return self.rhs_fn(params.n, params.q)

    def shift_value(self, params: Params, j: int) -> GoldenExt:
        """g(j) = (phi**e(j) + 1) / (phi**e(j) - 1)."""
        power = phi_power(self.exponent(params.n, j))
        return (power + 1) / (power - 1)

    def sigma(self, big_n: int) -> int:
        """Exponent of B(N) in P_N = R * B(N)**sigma."""
        if not self.alternating:
            return 1
        return 1 if big_n % 2 == 1 else -1

    def boundary(self, params: Params, big_n: int) -> GoldenExt:
        """Exact boundary factor B(N), N >= 0.

        Plain families:  B(N) = prod_{k=1..m} g(k+N)**(-1).
        Alternating:     B(N) = prod_{k=1..m} g(k+N)**((-1)**(k-1)),
        and B(0) equals R itself, consistent with P_0 = 1.
        """
        if big_n < 0:
            raise ValueError("N must be >= 0")
        m = self.m_of(params.q)
        out = GoldenExt(1)
        for k in range(1, m + 1):
            g = self.shift_value(params, k + big_n)
            if self.alternating and k % 2 == 1:
                out = out * g
            else:
                out = out / g
        return out

    def tail(self, params: Params) -> TailModel:
        """Tail-decay certificate for truncation error bounds.

        Uses F(j) >= phi**(j-2), L(j) >= phi**(j-1), sqrt5 F(j) >= phi**(j-1)
        for j >= 1; the index of X_k is alpha*k + intercept.
        """
        p = self.p_of(params.n)
        m = self.m_of(params.q)
        alpha = 2 * p
        intercept = p * m if self.family == EVEN_SHIFT else p * (m - 1)
        beta = intercept - 2 if self.x_kind == FIB else intercept - 1
        c = _seq_value(self.c_kind, p * m)
        x_lower = (
            f"{self.x_kind}({alpha}k{intercept:+d}) >= phi^({alpha}k{beta:+d})"
        )
        return TailModel(c=c, alpha=alpha, beta=beta, x_lower=x_lower)


# -- closed forms ----------------------------------------------------------
# Each builder is the finite product form of R; empty ranges (q = 1) are
# deliberate and evaluate to 1.

def _sqrt5_pow(e: int) -> GoldenExt:
    if e % 2 == 0:
        return GoldenExt(Fraction(5) ** (e // 2))
    return GoldenExt(0, Fraction(5) ** ((e - 1) // 2))


def _rhs_t11(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = (2 * k - 1) * (2 * n - 1)
        r *= Fraction(fib(i), lucas(i))
    for k in range(1, q):
        i = 2 * k * (2 * n - 1)
        r *= Fraction(lucas(i), fib(i))
    return SQRT5 * r


def _rhs_t12(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, 2 * q):
        i = 2 * n * k
        r *= Fraction(lucas(i), fib(i))
    return _sqrt5_pow(1 - 2 * q) * r


def _rhs_t13(n: int, q: int) -> GoldenExt:
    r = Fraction(1, 5) ** q
    for k in range(1, 2 * q + 1):
        i = 2 * n * k
        r *= Fraction(lucas(i), fib(i))
    return GoldenExt(r)


def _rhs_t14(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        odd = (2 * n - 1) * (2 * k - 1)
        even = (2 * n - 1) * 2 * k
        r *= Fraction(fib(odd) * lucas(even), lucas(odd) * fib(even))
    return GoldenExt(r)


def _rhs_t21(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = 2 * n * (2 * k - 1)
        r *= Fraction(lucas(i), fib(i))
    return _sqrt5_pow(-q) * r


def _rhs_t22(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = (2 * n - 1) * (2 * k - 1)
        r *= Fraction(fib(i), lucas(i))
    return _sqrt5_pow(q) * r


def _rhs_t23(n: int, q: int) -> GoldenExt:
    out = GoldenExt(1)
    for k in range(1, 2 * q + 1):
        i = (2 * n - 1) * (2 * k - 1)
        out = out * GoldenExt(2, fib(i)) / lucas(i)
    return out


def _rhs_t24(n: int, q: int) -> GoldenExt:
    out = GoldenExt(1)
    for k in range(1, 2 * q):
        i = (2 * n - 1) * (2 * k - 1)
        out = out * GoldenExt(2, fib(i)) / lucas(i)
    return out


def _rhs_t31(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        odd = 2 * n * (2 * k - 1)
        even = 4 * n * k
        r *= Fraction(lucas(odd) * fib(even), fib(odd) * lucas(even))
    return GoldenExt(r)


def _rhs_t32(n: int, q: int) -> GoldenExt:
    r = Fraction(5) ** q
    for k in range(1, q + 1):
        odd = (2 * n - 1) * (2 * k - 1)
        even = (2 * n - 1) * 2 * k
        r *= Fraction(fib(odd) * fib(even), lucas(odd) * lucas(even))
    return GoldenExt(r)


def _rhs_t33(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = 2 * n * (2 * k - 1)
        r *= Fraction(lucas(i), fib(i))
    for k in range(1, q):
        i = 4 * n * k
        r *= Fraction(fib(i), lucas(i))
    return _sqrt5_pow(-1) * r


def _rhs_t34(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, 2 * q):
        i = (2 * n - 1) * k
        r *= Fraction(fib(i), lucas(i))
    return _sqrt5_pow(2 * q - 1) * r


def _rhs_t41(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        lo = 2 * n * (4 * k - 3)
        hi = 2 * n * (4 * k - 1)
        r *= Fraction(lucas(lo) * fib(hi), fib(lo) * lucas(hi))
    return GoldenExt(r)


def _rhs_t42(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        lo = (2 * n - 1) * (4 * k - 3)
        hi = (2 * n - 1) * (4 * k - 1)
        r *= Fraction(fib(lo) * lucas(hi), lucas(lo) * fib(hi))
    return GoldenExt(r)


def _rhs_t43(n: int, q: int) -> GoldenExt:
    out = GoldenExt(1)
    for k in range(1, q + 1):
        lo = (2 * n - 1) * (4 * k - 3)
        hi = (2 * n - 1) * (4 * k - 1)
        out = out * (GoldenExt(2, fib(lo)) * lucas(hi))
        out = out / (GoldenExt(2, fib(hi)) * lucas(lo))
    return out


def _rhs_t44(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = 2 * n * (4 * k - 3)
        r *= Fraction(lucas(i), fib(i))
    for k in range(1, q):
        i = 2 * n * (4 * k - 1)
        r *= Fraction(fib(i), lucas(i))
    return _sqrt5_pow(-1) * r


def _rhs_t45(n: int, q: int) -> GoldenExt:
    r = Fraction(1)
    for k in range(1, q + 1):
        i = (2 * n - 1) * (4 * k - 3)
        r *= Fraction(fib(i), lucas(i))
    for k in range(1, q):
        i = (2 * n - 1) * (4 * k - 1)
        r *= Fraction(lucas(i), fib(i))
    return SQRT5 * r


def _rhs_t46(n: int, q: int) -> GoldenExt:
    out = GoldenExt(1)
    for k in range(1, q + 1):
        i = (2 * n - 1) * (4 * k - 3)
        out = out * GoldenExt(2, fib(i)) / lucas(i)
    for k in range(1, q):
        i = (2 * n - 1) * (4 * k - 1)
        out = out * lucas(i) / GoldenExt(2, fib(i))
    return out


def _descriptors() -> tuple[IdentityDescriptor, ...]:
    rows = (
        IdentityDescriptor(
            "T1.1", 1, EVEN_SHIFT, False, (2, -1), (2, -1), LUCAS, LUCAS,
            _rhs_t11,
            "prod_{k>=1} (L_{(2n-1)(2k+2q-1)} + L_{(2n-1)(2q-1)})"
            " / (L_{(2n-1)(2k+2q-1)} - L_{(2n-1)(2q-1)})",
            "sqrt5 * prod_{k=1}^{q} F_{(2k-1)(2n-1)}/L_{(2k-1)(2n-1)}"
            " * prod_{k=1}^{q-1} L_{2k(2n-1)}/F_{2k(2n-1)}",
        ),
        IdentityDescriptor(
            "T1.2", 1, EVEN_SHIFT, False, (2, 0), (2, -1), FIB, FIB,
            _rhs_t12,
            "prod_{k>=1} (F_{2n(2k+2q-1)} + F_{2n(2q-1)})"
            " / (F_{2n(2k+2q-1)} - F_{2n(2q-1)})",
            "sqrt5^{-(2q-1)} * prod_{k=1}^{2q-1} L_{2nk}/F_{2nk}",
        ),
        IdentityDescriptor(
            "T1.3", 1, EVEN_SHIFT, False, (2, 0), (2, 0), FIB, FIB,
            _rhs_t13,
            "prod_{k>=1} (F_{4n(k+q)} + F_{4nq}) / (F_{4n(k+q)} - F_{4nq})",
            "5^{-q} * prod_{k=1}^{2q} L_{2nk}/F_{2nk}",
        ),
        IdentityDescriptor(
            "T1.4", 1, EVEN_SHIFT, False, (2, -1), (2, 0), FIB, FIB,
            _rhs_t14,
            "prod_{k>=1} (F_{2(2n-1)(k+q)} + F_{2q(2n-1)})"
            " / (F_{2(2n-1)(k+q)} - F_{2q(2n-1)})",
            "prod_{k=1}^{q} F_{(2n-1)(2k-1)} L_{2k(2n-1)}"
            " / (L_{(2n-1)(2k-1)} F_{2k(2n-1)})",
        ),
        IdentityDescriptor(
            "T2.1", 2, ODD_SHIFT, False, (4, 0), (1, 0), FIB, FIB,
            _rhs_t21,
            "prod_{k>=1} (F_{4n(2k+q-1)} + F_{4nq}) / (F_{4n(2k+q-1)} - F_{4nq})",
            "sqrt5^{-q} * prod_{k=1}^{q} L_{2n(2k-1)}/F_{2n(2k-1)}",
        ),
        IdentityDescriptor(
            "T2.2", 2, ODD_SHIFT, False, (4, -2), (1, 0), FIB, FIB,
            _rhs_t22,
            "prod_{k>=1} (F_{2(2n-1)(2k+q-1)} + F_{2q(2n-1)})"
            " / (F_{2(2n-1)(2k+q-1)} - F_{2q(2n-1)})",
            "sqrt5^{q} * prod_{k=1}^{q} F_{(2n-1)(2k-1)}/L_{(2n-1)(2k-1)}",
        ),
        IdentityDescriptor(
            "T2.3", 2, ODD_SHIFT, False, (2, -1), (2, 0), LUCAS, SQRT5_FIB,
            _rhs_t23,
            "prod_{k>=1} (L_{(2n-1)(2k+2q-1)} + sqrt5 F_{2q(2n-1)})"
            " / (L_{(2n-1)(2k+2q-1)} - sqrt5 F_{2q(2n-1)})",
            "prod_{k=1}^{2q} (F_{(2n-1)(2k-1)} sqrt5 + 2) / L_{(2n-1)(2k-1)}",
        ),
        IdentityDescriptor(
            "T2.4", 2, ODD_SHIFT, False, (2, -1), (2, -1), SQRT5_FIB, LUCAS,
            _rhs_t24,
            "prod_{k>=1} (sqrt5 F_{2(2n-1)(k+q-1)} + L_{(2n-1)(2q-1)})"
            " / (sqrt5 F_{2(2n-1)(k+q-1)} - L_{(2n-1)(2q-1)})",
            "prod_{k=1}^{2q-1} (F_{(2n-1)(2k-1)} sqrt5 + 2) / L_{(2n-1)(2k-1)}",
        ),
        IdentityDescriptor(
            "T3.1", 3, EVEN_SHIFT, True, (2, 0), (2, 0), FIB, FIB,
            _rhs_t31,
            "prod_{k>=1} (F_{4n(k+q)} + (-1)^{k-1} F_{4nq})"
            " / (F_{4n(k+q)} - (-1)^{k-1} F_{4nq})",
            "prod_{k=1}^{q} L_{2n(2k-1)} F_{4nk} / (F_{2n(2k-1)} L_{4nk})",
        ),
        IdentityDescriptor(
            "T3.2", 3, EVEN_SHIFT, True, (2, -1), (2, 0), FIB, FIB,
            _rhs_t32,
            "prod_{k>=1} (F_{2(2n-1)(k+q)} + (-1)^{k-1} F_{2q(2n-1)})"
            " / (F_{2(2n-1)(k+q)} - (-1)^{k-1} F_{2q(2n-1)})",
            "5^{q} * prod_{k=1}^{q} F_{(2n-1)(2k-1)} F_{(2n-1)2k}"
            " / (L_{(2n-1)(2k-1)} L_{(2n-1)2k})",
        ),
        IdentityDescriptor(
            "T3.3", 3, EVEN_SHIFT, True, (2, 0), (2, -1), LUCAS, LUCAS,
            _rhs_t33,
            "prod_{k>=1} (L_{2n(2k+2q-1)} + (-1)^{k-1} L_{2n(2q-1)})"
            " / (L_{2n(2k+2q-1)} - (-1)^{k-1} L_{2n(2q-1)})",
            "sqrt5^{-1} * prod_{k=1}^{q} L_{2n(2k-1)}/F_{2n(2k-1)}"
            " * prod_{k=1}^{q-1} F_{4nk}/L_{4nk}",
        ),
        IdentityDescriptor(
            "T3.4", 3, EVEN_SHIFT, True, (2, -1), (2, -1), FIB, FIB,
            _rhs_t34,
            "prod_{k>=1} (F_{(2n-1)(2k+2q-1)} + (-1)^{k-1} F_{(2n-1)(2q-1)})"
            " / (F_{(2n-1)(2k+2q-1)} - (-1)^{k-1} F_{(2n-1)(2q-1)})",
            "sqrt5^{2q-1} * prod_{k=1}^{2q-1} F_{(2n-1)k}/L_{(2n-1)k}",
        ),
        IdentityDescriptor(
            "T4.1", 4, ODD_SHIFT, True, (4, 0), (2, 0), FIB, FIB,
            _rhs_t41,
            "prod_{k>=1} (F_{4n(2k+2q-1)} + (-1)^{k-1} F_{8nq})"
            " / (F_{4n(2k+2q-1)} - (-1)^{k-1} F_{8nq})",
            "prod_{k=1}^{q} L_{2n(4k-3)} F_{2n(4k-1)} / (F_{2n(4k-3)} L_{2n(4k-1)})",
        ),
        IdentityDescriptor(
            "T4.2", 4, ODD_SHIFT, True, (4, -2), (2, 0), FIB, FIB,
            _rhs_t42,
            "prod_{k>=1} (F_{2(2n-1)(2k+2q-1)} + (-1)^{k-1} F_{4q(2n-1)})"
            " / (F_{2(2n-1)(2k+2q-1)} - (-1)^{k-1} F_{4q(2n-1)})",
            "prod_{k=1}^{q} F_{(2n-1)(4k-3)} L_{(2n-1)(4k-1)}"
            " / (L_{(2n-1)(4k-3)} F_{(2n-1)(4k-1)})",
        ),
        IdentityDescriptor(
            "T4.3", 4, ODD_SHIFT, True, (2, -1), (2, 0), LUCAS, SQRT5_FIB,
            _rhs_t43,
            "prod_{k>=1} (L_{(2n-1)(2k+2q-1)} + (-1)^{k-1} sqrt5 F_{2q(2n-1)})"
            " / (L_{(2n-1)(2k+2q-1)} - (-1)^{k-1} sqrt5 F_{2q(2n-1)})",
            "prod_{k=1}^{q} (F_{(2n-1)(4k-3)} sqrt5 + 2) L_{(2n-1)(4k-1)}"
            " / ((F_{(2n-1)(4k-1)} sqrt5 + 2) L_{(2n-1)(4k-3)})",
        ),
        IdentityDescriptor(
            "T4.4", 4, ODD_SHIFT, True, (4, 0), (2, -1), LUCAS, LUCAS,
            _rhs_t44,
            "prod_{k>=1} (L_{8n(k+q-1)} + (-1)^{k-1} L_{4n(2q-1)})"
            " / (L_{8n(k+q-1)} - (-1)^{k-1} L_{4n(2q-1)})",
            "sqrt5^{-1} * prod_{k=1}^{q} L_{2n(4k-3)}/F_{2n(4k-3)}"
            " * prod_{k=1}^{q-1} F_{2n(4k-1)}/L_{2n(4k-1)}",
        ),
        IdentityDescriptor(
            "T4.5", 4, ODD_SHIFT, True, (4, -2), (2, -1), LUCAS, LUCAS,
            _rhs_t45,
            "prod_{k>=1} (L_{4(2n-1)(k+q-1)} + (-1)^{k-1} L_{(4n-2)(2q-1)})"
            " / (L_{4(2n-1)(k+q-1)} - (-1)^{k-1} L_{(4n-2)(2q-1)})",
            "sqrt5 * prod_{k=1}^{q} F_{(2n-1)(4k-3)}/L_{(2n-1)(4k-3)}"
            " * prod_{k=1}^{q-1} L_{(2n-1)(4k-1)}/F_{(2n-1)(4k-1)}",
        ),
        IdentityDescriptor(
            "T4.6", 4, ODD_SHIFT, True, (2, -1), (2, -1), LUCAS, SQRT5_FIB,
            _rhs_t46,
            "prod_{k>=1} (L_{2(2n-1)(k+q-1)} + (-1)^{k-1} sqrt5 F_{(2n-1)(2q-1)})"
            " / (L_{2(2n-1)(k+q-1)} - (-1)^{k-1} sqrt5 F_{(2n-1)(2q-1)})",
            "prod_{k=1}^{q} (F_{(2n-1)(4k-3)} sqrt5 + 2) / L_{(2n-1)(4k-3)}"
            " * prod_{k=1}^{q-1} L_{(2n-1)(4k-1)} / (F_{(2n-1)(4k-1)} sqrt5 + 2)",
        ),
    )
    return rows


_CATALOG = _descriptors()
_BY_ID = {d.ident: d for d in _CATALOG}


def list_identities() -> tuple[IdentityDescriptor, ...]:
    """All descriptors in stable order T1.1 .. T4.6."""
    return _CATALOG


def get_identity(ident: str) -> IdentityDescriptor:
    try:
        return _BY_ID[ident]
    except KeyError:
        raise KeyError(
            f"unknown identity {ident!r}; valid ids: {', '.join(_BY_ID)}"
        ) from None


def lhs_term(ident: str, params: Params, k: int) -> GoldenExt:
    return get_identity(ident).term(params, k)


def rhs_closed_form(ident: str, params: Params) -> GoldenExt:
    return get_identity(ident).rhs(params)


def boundary_factor(ident: str, params: Params, big_n: int) -> GoldenExt:
    return get_identity(ident).boundary(params, big_n)


def tail_model(ident: str, params: Params) -> TailModel:
    return get_identity(ident).tail(params)


def catalog_metadata() -> list[dict]:
    """Catalog as plain JSON-ready records, stable order."""
    return [
        {
            "id": d.ident,
            "theorem": d.theorem,
            "family": d.family,
            "alternating": d.alternating,
            "p_map": d.p_map,
            "m_map": d.m_map,
            "x_kind": d.x_kind,
            "c_kind": d.c_kind,
            "lhs": d.lhs_display,
            "rhs": d.rhs_display,
        }
        for d in _CATALOG
    ]


def catalog_json() -> str:
    return json.dumps(catalog_metadata(), indent=2)
