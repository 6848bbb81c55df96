"""Solutions of x^2 - 5y^2 = -4, the Markov-type equation m^2 + n^2 = 3mn - 1,
and generators for the realizable families.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .candidates import CandidateTriple, FamilyKind, genus_valid
from .exactmath import fib, fib_signed


@dataclass(frozen=True, order=True)
class PellSolution:
    x: int
    y: int

    def __post_init__(self):
        if self.x * self.x - 5 * self.y * self.y != -4:
            raise ValueError(f"({self.x}, {self.y}) does not solve x^2 - 5y^2 = -4")


class PellForm(str, enum.Enum):
    A = "A"  # (F(6j+2) + F(6j), F(6j+1))
    B = "B"  # (F(6j) + F(6j-2), F(6j-1))
    C = "C"  # (F(6j+2) + F(6j), -F(6j+1))
    D = "D"  # (F(6j) + F(6j-2), -F(6j-1))
    NONE = "NONE"


@dataclass(frozen=True)
class FamilyDecomposition:
    family: PellForm
    j: int | None = None
    sign: int | None = None  # overall sign in front of the closed form
    note: str = ""


@dataclass(frozen=True)
class MarkovSolution:
    omega: int
    v: int

    def __post_init__(self):
        w, v = self.omega, self.v
        if w * w + v * v != 3 * w * v - 1:
            raise ValueError(f"({w}, {v}) does not solve w^2 + v^2 = 3wv - 1")


def pell_orbit() -> Iterator[PellSolution]:
    """Positive solutions in increasing order: multiply by (3 + sqrt5)/2 from (1, 1)."""
    x, y = 1, 1
    while True:
        yield PellSolution(x, y)
        x, y = (3 * x + 5 * y) // 2, (x + 3 * y) // 2


def pell_enumerate(ymax: int) -> list[PellSolution]:
    if ymax < 1:
        raise ValueError(f"ymax must be >= 1, got {ymax}")
    out = []
    for s in pell_orbit():
        if s.y > ymax:
            break
        out.append(s)
    return out


def pell_bruteforce(ymax: int) -> list[PellSolution]:
    """Scan 1 <= y <= ymax for perfect squares 5y^2 - 4 (independent check of the orbit)."""
    out = []
    for y in range(1, ymax + 1):
        n = 5 * y * y - 4
        r = isqrt(n)
        if r * r == n:
            out.append(PellSolution(r, y))
    return out


def _closed_form(form: PellForm, j: int) -> tuple[int, int]:
    if form in (PellForm.A, PellForm.C):
        x, y = fib_signed(6 * j + 2) + fib_signed(6 * j), fib_signed(6 * j + 1)
    else:
        x, y = fib_signed(6 * j) + fib_signed(6 * j - 2), fib_signed(6 * j - 1)
    if form in (PellForm.C, PellForm.D):
        y = -y
    return x, y


def decompose(s: PellSolution) -> FamilyDecomposition:
    """Match a solution against the four closed forms, j >= 0, up to overall sign.

    A solution that fits none of them is reported as NONE, never forced.
    """
    target = max(abs(s.x), abs(s.y))
    j = 0
    while True:
        smallest = None
        for form in (PellForm.A, PellForm.B, PellForm.C, PellForm.D):
            x, y = _closed_form(form, j)
            for sign in (1, -1):
                if (sign * x, sign * y) == (s.x, s.y):
                    return FamilyDecomposition(form, j, sign)
            size = min(abs(x), abs(y))
            smallest = size if smallest is None else min(smallest, size)
        if smallest > target:
            break
        j += 1
    return FamilyDecomposition(
        PellForm.NONE,
        note=f"({s.x}, {s.y}) solves x^2 - 5y^2 = -4 but matches none of the forms A-D",
    )


def lucas_fibonacci_index(s: PellSolution) -> int | None:
    """Odd j with (x, y) = (F(j-1) + F(j+1), F(j)) for a positive solution, else None."""
    j = 1
    while fib(j) < s.y:
        j += 1
    if fib(j) == s.y and j % 2 == 1 and s.x == fib(j - 1) + fib(j + 1):
        return j
    if s.y == 1 and s.x == 1:
        return 1
    return None


def pell_to_markov(s: PellSolution) -> MarkovSolution:
    if (s.x + 3 * s.y) % 2:
        raise ArithmeticError(f"parity invariant broken for {s}")
    return MarkovSolution((s.x + 3 * s.y) // 2, s.y)


def _markov_bruteforce(bound: int) -> list[tuple[int, int]]:
    # m^2 - 3n m + n^2 + 1 = 0 has the smaller root (3n - sqrt(5n^2 - 4))/2
    out = []
    for n in range(1, bound + 1):
        disc = 5 * n * n - 4
        r = isqrt(disc)
        if r * r != disc or (3 * n - r) % 2:
            continue
        m = (3 * n - r) // 2
        if 0 < m < n:
            out.append((m, n))
    return out


def solve_markov_bruteforce(bound: int) -> list[tuple[int, int]]:
    """All 0 < m < n <= bound with m^2 + n^2 = 3mn - 1."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return _markov_bruteforce(bound)


def solve_markov_wv_bruteforce(bound: int) -> list[MarkovSolution]:
    """All solutions of w^2 + v^2 = 3wv - 1 with 0 < v < w <= bound, as (w, v)."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [MarkovSolution(n, m) for m, n in _markov_bruteforce(bound)]


def _odd_indices(start: int) -> Iterator[int]:
    j = start
    while True:
        yield j
        j += 2


def family_generate(kind: FamilyKind | str, limit: int) -> list[CandidateTriple]:
    """Members of one realizable family with degree d <= limit."""
    kind = FamilyKind(kind.lower() if isinstance(kind, str) else kind)
    out: list[CandidateTriple] = []
    if kind is FamilyKind.A:
        out = [CandidateTriple(d, d - 1, d) for d in range(3, limit + 1)]
    elif kind is FamilyKind.B:
        out = [CandidateTriple(d, d // 2, 2 * d - 1) for d in range(4, limit + 1, 2)]
    elif kind is FamilyKind.C:
        for j in _odd_indices(5):
            d = fib(j - 1) ** 2 + 1
            if d > limit:
                break
            out.append(CandidateTriple(d, fib(j - 2) ** 2, fib(j) ** 2))
    elif kind is FamilyKind.D:
        for j in _odd_indices(5):
            d = fib(j)
            if d > limit:
                break
            out.append(CandidateTriple(d, fib(j - 2), fib(j + 2)))
    elif kind is FamilyKind.E:
        out = [CandidateTriple(8, 3, 22)] if limit >= 8 else []
    elif kind is FamilyKind.F:
        out = [CandidateTriple(16, 6, 43)] if limit >= 16 else []
    for t in out:
        assert genus_valid(t.d, t.a, t.b), t
    return out
