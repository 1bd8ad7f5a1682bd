import random
from fractions import Fraction

import pytest

from fibprod.exactnum import PHI, SQRT5, GoldenExt, golden_conj
from fibprod.fiblucas import (
    INDEX_CAP,
    FibPair,
    IndexCapError,
    fib,
    fib_pair,
    lucas,
    phi_power,
)


def naive_fib(n):
    if n < 0:
        mag = naive_fib(-n)
        return mag if n % 2 == 1 else -mag
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def naive_lucas(n):
    if n < 0:
        mag = naive_lucas(-n)
        return mag if n % 2 == 0 else -mag
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_fib_examples():
    assert [fib(k) for k in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fib(-9) == 34
    assert fib(-10) == -55
    assert fib(100) == 354224848179261915075


def test_lucas_examples():
    assert [lucas(k) for k in range(11)] == [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
    assert lucas(-9) == -76
    assert lucas(-10) == 123


def test_fast_doubling_matches_naive():
    for n in range(-500, 501):
        assert fib(n) == naive_fib(n)
        assert lucas(n) == naive_lucas(n)


def test_fib_pair_structure():
    pair = fib_pair(10)
    assert pair == FibPair(10, 55, 89)
    assert pair.f_n_plus_1 == pair.f_n + fib(9)
    for n in (-7, -1, 0, 1, 13, 40):
        a = fib_pair(n)
        b = fib_pair(n + 1)
        assert b.f_n == a.f_n_plus_1
        assert a.f_n + a.f_n_plus_1 == b.f_n_plus_1


def test_cassini_on_samples():
    for n in (1, 2, 5, 17, 64, 201):
        assert fib(n - 1) * fib(n + 1) - fib(n) ** 2 == (-1) ** n


def test_doubling_identities():
    # F(2n) = F(n) L(n);  L(2n) = L(n)^2 - 2(-1)^n = 5 F(n)^2 + 2(-1)^n;
    # 5 F(n)^2 - L(n)^2 = 4 (-1)^(n+1)
    for n in range(1, 301):
        unit = (-1) ** n
        assert fib(2 * n) == fib(n) * lucas(n)
        assert lucas(2 * n) - 2 * unit == 5 * fib(n) ** 2
        assert lucas(2 * n) + 2 * unit == lucas(n) ** 2
        assert 5 * fib(n) ** 2 - lucas(n) ** 2 == 4 * (-1) ** (n + 1)


def test_phi_power_examples():
    assert phi_power(0) == GoldenExt(1)
    assert phi_power(1) == PHI
    assert phi_power(-1) == GoldenExt(Fraction(-1, 2), Fraction(1, 2))
    assert phi_power(10) == GoldenExt(Fraction(123, 2), Fraction(55, 2))


def test_phi_power_is_true_power():
    # independent route: square-and-multiply in the field
    for n in range(-50, 201):
        assert phi_power(n) == PHI ** n


def test_phi_power_homomorphism():
    rng = random.Random(5)
    for _ in range(200):
        a = rng.randint(-50, 200)
        b = rng.randint(-50, 200)
        assert phi_power(a + b) == phi_power(a) * phi_power(b)


def test_conjugate_power():
    # conj(phi)**n = (-1)**n phi**-n
    for n in range(-50, 201):
        expected = phi_power(-n) if n % 2 == 0 else -phi_power(-n)
        assert golden_conj(phi_power(n)) == expected


def test_parity_split():
    # phi**n + phi**-n and phi**n - phi**-n split into L and sqrt5 F by parity
    for n in range(-50, 201):
        total = phi_power(n) + phi_power(-n)
        difference = phi_power(n) - phi_power(-n)
        if n % 2 == 0:
            assert total == GoldenExt(lucas(n))
            assert difference == GoldenExt(0, fib(n))
        else:
            assert total == GoldenExt(0, fib(n))
            assert difference == GoldenExt(lucas(n))


def test_growth_lower_bounds():
    # F(j) >= phi**(j-2) and L(j) >= phi**(j-1), the tail-model premises
    for j in range(1, 301):
        assert GoldenExt(fib(j)) >= phi_power(j - 2)
        assert GoldenExt(lucas(j)) >= phi_power(j - 1)
        assert SQRT5 * fib(j) >= phi_power(j - 1)


def test_index_cap():
    with pytest.raises(IndexCapError):
        fib(INDEX_CAP + 1)
    with pytest.raises(IndexCapError):
        fib(-(INDEX_CAP + 1))
    with pytest.raises(IndexCapError):
        lucas(31, cap=30)
    with pytest.raises(IndexCapError):
        phi_power(-31, cap=30)
    with pytest.raises(IndexCapError):
        fib_pair(31, cap=30)
    assert fib(30, cap=30) == 832040
    assert isinstance(IndexCapError("x"), ValueError)
