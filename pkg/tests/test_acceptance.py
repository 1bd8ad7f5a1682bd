"""End-to-end acceptance gate.

Each criterion prints a single PASS/FAIL line (visible under `pytest -s`)
and fails the whole run if its checks do not hold.
"""

import functools
import random
import time
from fractions import Fraction
from math import isqrt

from fibprod import (
    GoldenExt,
    PHI,
    Params,
    fib,
    fib_pair,
    golden_cmp,
    golden_conj,
    golden_to_decimal,
    list_identities,
    lucas,
    partial_product,
    phi_power,
    rhs_closed_form,
    special_evaluations,
    tail_bound,
    verify_exact,
    verify_limit,
)


def criterion(number, description):
    def wrap(fn):
        @functools.wraps(fn)
        def inner():
            try:
                fn()
            except BaseException:
                print(f"FAIL criterion {number}: {description}")
                raise
            print(f"PASS criterion {number}: {description}")
        return inner
    return wrap


@criterion(1, "limit verification T1.4 n=q=1 N=40 certified below 1e-12 in <1s")
def test_deviation_within_tolerance():
    start = time.monotonic()
    report = verify_limit("T1.4", Params(1, 1), 40)
    elapsed = time.monotonic() - start
    assert report.rhs == GoldenExt(3)
    assert report.passed
    assert report.deviation_bound <= Fraction(1, 10 ** 12)
    assert report.deviation_bound <= report.tail_bound
    assert elapsed < 1.0


@criterion(2, "five special evaluations hit their closed forms within 1e-10")
def test_special_points():
    expected = {
        "T1.4": GoldenExt(3),
        "T2.3": GoldenExt(Fraction(7, 2), Fraction(3, 2)),
        "T2.4": GoldenExt(2, 1),
        "T4.3": GoldenExt(Fraction(3, 2), Fraction(1, 2)),
        "T4.6": GoldenExt(2, 1),
    }
    reports = special_evaluations()
    assert [r.ident for r in reports] == sorted(expected)
    for report in reports:
        assert report.passed, report.ident
        assert report.rhs == expected[report.ident]
        assert report.deviation_bound <= Fraction(1, 10 ** 10)


@criterion(3, "exact telescoping grid, 18 identities x n,q in 1..3 x N in 0..25")
def test_exact_grid():
    start = time.monotonic()
    checked = 0
    for desc in list_identities():
        for n in (1, 2, 3):
            for q in (1, 2, 3):
                params = Params(n, q)
                for big_n in range(26):
                    report = verify_exact(desc.ident, params, big_n)
                    assert report.passed, (desc.ident, n, q, big_n)
                    assert report.deviation_bound == 0
                    checked += 1
    elapsed = time.monotonic() - start
    assert checked == 18 * 9 * 26
    assert elapsed < 60.0


@criterion(4, "limit grid at N=50 passes with tail bounds below 1e-6")
def test_limit_grid():
    for desc in list_identities():
        for n in (1, 2):
            for q in (1, 2):
                report = verify_limit(desc.ident, Params(n, q), 50)
                assert report.passed, (desc.ident, n, q)
                assert report.tail_bound <= Fraction(1, 10 ** 6)
                assert report.deviation_bound <= report.tail_bound


@criterion(5, "field axioms and Fibonacci/Lucas recurrences hold on seeded sweeps")
def test_arithmetic_properties():
    rng = random.Random(90210)

    def draw():
        return GoldenExt(
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
            Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
        )

    for _ in range(1000):
        x, y, z = draw(), draw(), draw()
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + GoldenExt(0) == x and x * GoldenExt(1) == x
        assert x - x == GoldenExt(0)
        if x != GoldenExt(0):
            assert x * x.inverse() == GoldenExt(1)
        assert golden_conj(x * y) == golden_conj(x) * golden_conj(y)

    memo = {0: 0, 1: 1}
    for j in range(2, 502):
        memo[j] = memo[j - 1] + memo[j - 2]
    for n in range(-500, 501):
        reference = memo[abs(n)]
        if n < 0 and n % 2 == 0:
            reference = -reference
        assert fib(n) == reference
        assert lucas(n) == fib(n - 1) + fib(n + 1)

    for n in range(1, 301):
        f_n, f_next = fib_pair(n)[1:]
        assert fib(2 * n) == f_n * (2 * f_next - f_n)
        assert fib(2 * n + 1) == f_n ** 2 + f_next ** 2
        assert lucas(2 * n) == lucas(n) ** 2 - 2 * (-1) ** n

    for _ in range(200):
        a, b = rng.randint(-50, 200), rng.randint(-50, 200)
        assert phi_power(a + b) == phi_power(a) * phi_power(b)
    for n in range(-50, 201):
        assert phi_power(n) == PHI ** n
        expected = phi_power(-n) if n % 2 == 0 else -phi_power(-n)
        assert golden_conj(phi_power(n)) == expected


@criterion(6, "tail bound dominates the true gap to a doubled truncation depth")
def test_tail_bound_sound():
    for big_n in (10, 20, 40):
        bound = tail_bound("T1.4", Params(1, 1), big_n)
        near = partial_product("T1.4", Params(1, 1), big_n)
        far = partial_product("T1.4", Params(1, 1), 2 * big_n)
        gap = abs(far / near - GoldenExt(1))
        assert golden_cmp(gap, GoldenExt(bound)) <= 0


@criterion(7, "50-digit rendering of phi matches an independent isqrt oracle")
def test_decimal_rendering():
    rendered = golden_to_decimal(PHI, 50)
    s = isqrt(5 * 10 ** 120)
    lo = Fraction(10 ** 60 + s, 2 * 10 ** 10)
    hi = Fraction(10 ** 60 + s + 1, 2 * 10 ** 10)
    assert round(lo) == round(hi)
    scaled = str(round(lo))
    assert rendered == scaled[0] + "." + scaled[1:]
    assert rendered == (
        "1.61803398874989484820458683436563811772030917980576"
    )
    assert rhs_closed_form("T1.1", Params(1, 1)) == GoldenExt(0, 1)
    assert golden_to_decimal(GoldenExt(0, 1), 50) == (
        "2.23606797749978969640917366873127623544061835961153"
    )
