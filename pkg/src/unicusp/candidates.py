"""Candidate data (d, a, b), derived invariants and the known realizable families."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, isqrt

from .exactmath import divisors, fib


class Kappa(str, enum.Enum):
    NEG_INFINITY = "-inf"
    TWO = "2"


class FamilyKind(str, enum.Enum):
    A = "a"  # (d-1, d)
    B = "b"  # (d/2, 2d-1), d even
    C = "c"  # (F(j-2)^2, F(j)^2), d = F(j-1)^2 + 1, j odd >= 5
    D = "d"  # (F(j-2), F(j+2)), d = F(j), j odd >= 5
    E = "e"  # (8, 3, 22)
    F = "f"  # (16, 6, 43)


@dataclass(frozen=True, order=True)
class CandidateTriple:
    d: int
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.d},{self.a},{self.b})"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d, self.a, self.b)

    @property
    def cbar2(self) -> int:
        return self.d * self.d - self.a * self.b

    @property
    def x(self) -> int:
        return 3 * self.d - 8 * self.a


@dataclass(frozen=True)
class DerivedInvariants:
    cbar2: int
    x: int
    kappa_class: Kappa


@dataclass(frozen=True)
class FamilyTag:
    kind: FamilyKind
    parameter: int | None = None  # d for (a)/(b), Fibonacci index j for (c)/(d)

    def __str__(self) -> str:
        if self.parameter is None:
            return f"family {self.kind.value}"
        name = "d" if self.kind in (FamilyKind.A, FamilyKind.B) else "j"
        return f"family {self.kind.value}, {name}={self.parameter}"


class GenusError(ValueError):
    """Raised when a triple violates the genus formula where it is required."""


def _as_triple(t) -> CandidateTriple:
    if isinstance(t, CandidateTriple):
        return t
    d, a, b = t
    return CandidateTriple(d, a, b)


def genus_valid(d: int, a: int, b: int) -> bool:
    if d < 3 or not 1 < a < b:
        return False
    return (a - 1) * (b - 1) == (d - 1) * (d - 2) and gcd(a, b) == 1


def kappa_from_cbar2(cbar2: int) -> Kappa:
    return Kappa.NEG_INFINITY if cbar2 > -2 else Kappa.TWO


def derive(t) -> DerivedInvariants:
    """Self-intersection, x = 3d - 8a and the log-Kodaira class of a genus-valid triple.

    Both lines of the system a + b = 3d - 1 - C^2, ab = d^2 - C^2 are
    checked against the single value C^2 = d^2 - ab.
    """
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    cbar2 = d * d - a * b
    if a + b != 3 * d - 1 - cbar2:
        raise GenusError(f"{t}: a+b = {a + b} but 3d-1-C^2 = {3 * d - 1 - cbar2}")
    return DerivedInvariants(cbar2=cbar2, x=3 * d - 8 * a, kappa_class=kappa_from_cbar2(cbar2))


def enumerate_candidates(d: int) -> list[CandidateTriple]:
    """All genus-valid (d, a, b) for one degree, sorted by a."""
    if d < 3:
        raise ValueError(f"degree must be >= 3, got {d}")
    m = (d - 1) * (d - 2)
    out = []
    for u in divisors(m):
        v = m // u
        if u >= v:
            break
        a, b = u + 1, v + 1
        if gcd(a, b) == 1:
            out.append(CandidateTriple(d, a, b))
    return out


def _fib_index(n: int) -> int | None:
    """Index j >= 2 with F(j) = n, or None."""
    if n < 1:
        return None
    j, f = 2, 1
    while f < n:
        j += 1
        f = fib(j)
    return j if f == n else None


def family_match(t) -> FamilyTag | None:
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    if (a, b) == (d - 1, d) and d >= 3:
        return FamilyTag(FamilyKind.A, d)
    if d % 2 == 0 and d >= 4 and (a, b) == (d // 2, 2 * d - 1):
        return FamilyTag(FamilyKind.B, d)
    if (d, a, b) == (8, 3, 22):
        return FamilyTag(FamilyKind.E)
    if (d, a, b) == (16, 6, 43):
        return FamilyTag(FamilyKind.F)
    # (d): d = F(j), a = F(j-2), b = F(j+2)
    j = _fib_index(d)
    if j is not None and j >= 5 and j % 2 == 1 and (a, b) == (fib(j - 2), fib(j + 2)):
        return FamilyTag(FamilyKind.D, j)
    # (c): a = F(j-2)^2, b = F(j)^2, d = F(j-1)^2 + 1
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        j = _fib_index(rb)
        if (j is not None and j >= 5 and j % 2 == 1
                and ra == fib(j - 2) and d == fib(j - 1) ** 2 + 1):
            return FamilyTag(FamilyKind.C, j)
    return None
