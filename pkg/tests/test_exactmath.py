import random
from decimal import Decimal, getcontext
from math import gcd as mgcd

import pytest
from hypothesis import given, strategies as st

from unicusp.exactmath import (
    Semigroup, Surd, ceil_ratio, divisors, fib, fib_signed, floor_ratio, gcd, lucas,
    semigroup_contains, semigroup_count_upto, surd_sign,
)


@pytest.mark.parametrize("u,v,g", [(3, 22, 1), (0, 7, 7), (12, 18, 6)])
def test_gcd_examples(u, v, g):
    assert gcd(u, v) == g


@pytest.mark.parametrize("j,f", [(0, 0), (1, 1), (6, 8), (10, 55)])
def test_fib_examples(j, f):
    assert fib(j) == f


def test_fib_matches_iteration():
    a, b = 0, 1
    for j in range(300):
        assert fib(j) == a
        a, b = b, a + b


def test_fib_rejects_negative():
    with pytest.raises(ValueError):
        fib(-1)


def test_fib_signed_and_lucas():
    for n in range(1, 40):
        assert fib_signed(-n) == (-1) ** (n + 1) * fib(n)
    assert [lucas(j) for j in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]


def test_fibonacci_identities_up_to_90():
    for j in range(2, 91):
        assert 3 * fib(j) == fib(j - 2) + fib(j + 2)
        assert fib(j) ** 2 == (-1) ** (j + 1) + fib(j - 1) * fib(j + 1)


@pytest.mark.parametrize("p,q,s", [(1, 0, 1), (-7, 3, -1), (-4, 2, 1), (0, 0, 0), (0, -1, -1), (9, -4, 1)])
def test_surd_sign_examples(p, q, s):
    assert surd_sign(Surd(p, q)) == s


def test_surd_sign_against_high_precision_decimal():
    getcontext().prec = 100
    root5 = Decimal(5).sqrt()
    rng = random.Random(20261015)
    for _ in range(1000):
        p = rng.randint(-10 ** 12, 10 ** 12)
        q = rng.randint(-10 ** 12, 10 ** 12)
        v = Decimal(p) + Decimal(q) * root5
        assert surd_sign(Surd(p, q)) == (v > 0) - (v < 0)


@given(st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6),
       st.integers(-10 ** 6, 10 ** 6), st.integers(-10 ** 6, 10 ** 6))
def test_surd_ring_laws(p, q, r, s):
    x, y = Surd(p, q), Surd(r, s)
    assert (x * y).norm() == x.norm() * y.norm()
    assert surd_sign(x * y) == surd_sign(x) * surd_sign(y)
    assert (x - y) + y == x
    assert surd_sign(x.conjugate() * x) == (0 if x == Surd(0, 0) else (1 if x.norm() > 0 else -1))


def test_surd_halve():
    assert Surd(4, 2).halve() == Surd(2, 1)
    with pytest.raises(ArithmeticError):
        Surd(3, 1).halve()


def test_floor_ceil_examples():
    assert floor_ratio(22, 8) == 2
    assert ceil_ratio(-2, 8) == 0
    assert floor_ratio(-5, 3) == -2
    assert ceil_ratio(-5, 3) == -1
    assert floor_ratio(5, -3) == -2
    with pytest.raises(ZeroDivisionError):
        floor_ratio(1, 0)


@given(st.integers(-10 ** 9, 10 ** 9), st.integers(1, 10 ** 6))
def test_floor_ceil_bracket(n, d):
    f, c = floor_ratio(n, d), ceil_ratio(n, d)
    assert f * d <= n < (f + 1) * d
    assert (c - 1) * d < n <= c * d


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    for n in range(1, 300):
        assert divisors(n) == [k for k in range(1, n + 1) if n % k == 0]


def test_semigroup_examples():
    g = Semigroup(3, 22)
    assert semigroup_contains(g, 22)
    assert not semigroup_contains(g, 41)
    assert not semigroup_contains(g, 5)
    assert g.frobenius == 41
    assert semigroup_count_upto(g, 24) == 10
    assert semigroup_count_upto(Semigroup(4, 7), 0) == 1
    assert semigroup_count_upto(Semigroup(2, 3), 6) == 6


def test_semigroup_rejects_bad_generators():
    with pytest.raises(ValueError):
        Semigroup(4, 6)
    with pytest.raises(ValueError):
        Semigroup(0, 3)


def _brute_members(a, b, N):
    return {i * a + j * b for i in range(N // a + 1) for j in range(N // b + 1) if i * a + j * b <= N}


def test_semigroup_against_brute_force():
    for a in range(2, 20):
        for b in range(a + 1, 51):
            if mgcd(a, b) != 1:
                continue
            g = Semigroup(a, b)
            N = 3 * a * b
            members = _brute_members(a, b, N)
            assert all((n in g) == (n in members) for n in range(-2, N + 1))
            for M in (0, a, b, a * b, N):
                assert semigroup_count_upto(g, M) == sum(1 for n in members if n <= M)


@given(st.integers(2, 60), st.integers(2, 200), st.integers(0, 5000))
def test_semigroup_symmetry(a, b, n):
    # n in G xor F - n in G, for 0 <= n <= F
    if mgcd(a, b) != 1 or a == b:
        return
    g = Semigroup(min(a, b), max(a, b))
    F = g.frobenius
    if 0 <= n <= F:
        assert (n in g) != ((F - n) in g)
    if n > F:
        assert n in g
