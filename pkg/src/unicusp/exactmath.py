"""Exact integer, rational, quadratic-surd and numerical-semigroup primitives.

Nothing in this package touches floating point; every comparison that
involves sqrt(5) goes through :func:`surd_sign`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Semigroup",
    "Surd",
    "ceil_ratio",
    "divisors",
    "fib",
    "fib_signed",
    "floor_ratio",
    "gcd",
    "lucas",
    "semigroup_contains",
    "semigroup_count_upto",
    "surd_sign",
]


def gcd(u: int, v: int) -> int:
    return math.gcd(u, v)


def fib(j: int) -> int:
    """j-th Fibonacci number, fib(0) = 0, fib(1) = 1 (fast doubling)."""
    if j < 0:
        raise ValueError(f"fib index must be non-negative, got {j}")
    return _fib_pair(j)[0]


def _fib_pair(n: int) -> tuple[int, int]:
    # (F(n), F(n+1))
    if n == 0:
        return 0, 1
    f, g = _fib_pair(n >> 1)
    c = f * (2 * g - f)
    e = f * f + g * g
    if n & 1:
        return e, c + e
    return c, e


def fib_signed(j: int) -> int:
    """Fibonacci numbers extended to negative indices, F(-n) = (-1)^(n+1) F(n)."""
    if j >= 0:
        return fib(j)
    n = -j
    return fib(n) if n % 2 == 1 else -fib(n)


def lucas(j: int) -> int:
    """Lucas number L_j = F(j-1) + F(j+1)."""
    return fib_signed(j - 1) + fib_signed(j + 1)


def floor_ratio(n: int, d: int) -> int:
    if d == 0:
        raise ZeroDivisionError("floor_ratio with zero denominator")
    if d < 0:
        n, d = -n, -d
    return n // d


def ceil_ratio(n: int, d: int) -> int:
    if d == 0:
        raise ZeroDivisionError("ceil_ratio with zero denominator")
    if d < 0:
        n, d = -n, -d
    return -((-n) // d)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n > 0 by trial division."""
    if n <= 0:
        raise ValueError(f"divisors needs a positive integer, got {n}")
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


@dataclass(frozen=True)
class Surd:
    """The number p + q*sqrt(5) with integer p, q."""

    p: int
    q: int

    def __add__(self, other: Surd) -> Surd:
        return Surd(self.p + other.p, self.q + other.q)

    def __neg__(self) -> Surd:
        return Surd(-self.p, -self.q)

    def __sub__(self, other: Surd) -> Surd:
        return self + (-other)

    def __mul__(self, other: Surd | int) -> Surd:
        if isinstance(other, int):
            return Surd(self.p * other, self.q * other)
        return Surd(self.p * other.p + 5 * self.q * other.q,
                    self.p * other.q + self.q * other.p)

    __rmul__ = __mul__

    def conjugate(self) -> Surd:
        return Surd(self.p, -self.q)

    def norm(self) -> int:
        return self.p * self.p - 5 * self.q * self.q

    def halve(self) -> Surd:
        """Divide by 2; raises if either component is odd."""
        if self.p % 2 or self.q % 2:
            raise ArithmeticError(f"{self} is not divisible by 2 in Z[sqrt5]")
        return Surd(self.p // 2, self.q // 2)

    def sign(self) -> int:
        return surd_sign(self)


def surd_sign(s: Surd) -> int:
    """Sign of p + q*sqrt(5), decided by integer squaring."""
    p, q = s.p, s.q
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    # opposite signs: the term with the larger square wins (never equal, sqrt5 irrational)
    return sp if p * p > 5 * q * q else sq


class Semigroup:
    """Numerical semigroup <a, b> with gcd(a, b) = 1.

    Membership uses the Apery set with respect to ``a``: for each residue r
    mod a, the smallest element of the semigroup congruent to r is k*b with
    k*b = r (mod a), 0 <= k < a.
    """

    __slots__ = ("a", "b", "_apery")

    def __init__(self, a: int, b: int):
        if a <= 0 or b <= 0:
            raise ValueError(f"generators must be positive, got ({a}, {b})")
        if math.gcd(a, b) != 1:
            raise ValueError(f"generators must be coprime, got ({a}, {b})")
        self.a = a
        self.b = b
        self._apery = _apery_set(a, b)

    def __repr__(self) -> str:
        return f"Semigroup({self.a}, {self.b})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Semigroup) and (self.a, self.b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    @property
    def frobenius(self) -> int:
        return self.a * self.b - self.a - self.b

    def __contains__(self, n: int) -> bool:
        return semigroup_contains(self, n)


@lru_cache(maxsize=4096)
def _apery_set(a: int, b: int) -> tuple[int, ...]:
    w = [0] * a
    for k in range(a):
        w[(k * b) % a] = k * b
    return tuple(w)


def semigroup_contains(g: Semigroup, n: int) -> bool:
    if n < 0:
        return False
    return n >= g._apery[n % g.a]


def semigroup_count_upto(g: Semigroup, N: int) -> int:
    """Cardinality of the semigroup intersected with [0, N]."""
    if N < 0:
        return 0
    a = g.a
    total = 0
    for w in g._apery:
        if w <= N:
            total += (N - w) // a + 1
    return total
