"""The x = 3d - 8a equation, its case-by-case solution, and the nodal-cubic Cremona transform.

For a genus-valid triple write x = 3d - 8a.  Eliminating b and d from the
genus formula gives

    -9 C^2 (a - 1) = x^2 + 7ax + a^2 + 9a,

so reducing mod a - 1 forces a - 1 | (x + 2)(x + 5), and d = (x + 8a)/3
forces 3 | a - x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .candidates import CandidateTriple, _as_triple, genus_valid
from .exactmath import divisors

X_RANGE = range(0, 6)
MINUS_CBAR2_RANGE = range(2, 8)


def cbar2_equation_identity(t) -> bool:
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    cbar2 = d * d - a * b
    x = 3 * d - 8 * a
    return -9 * cbar2 * (a - 1) == x * x + 7 * a * x + a * a + 9 * a


@dataclass(frozen=True)
class CaseCandidate:
    a: int
    reason: str  # "integral" or why it was rejected
    d: int | None = None
    b: int | None = None
    cbar2: int | None = None

    @property
    def triple(self) -> CandidateTriple | None:
        if self.reason != "integral":
            return None
        return CandidateTriple(self.d, self.a, self.b)


@dataclass
class CaseAnalysis:
    x: int
    divisor_bound: int  # a - 1 must divide this
    solutions: list[CandidateTriple] = field(default_factory=list)
    examined: list[CaseCandidate] = field(default_factory=list)

    @property
    def rejected(self) -> list[CaseCandidate]:
        return [c for c in self.examined if c.reason != "integral"]


def solve_cbar2_equation(x: int) -> CaseAnalysis:
    """All genus-valid triples with 3d - 8a = x and 2 <= -C^2 <= 7.

    Candidates for a come from the divisors of (x + 2)(x + 5) and the
    congruence a = x (mod 3); every candidate examined is kept with the
    reason it was accepted or rejected.
    """
    if x not in X_RANGE:
        raise ValueError(f"x must lie in [0, 5], got {x}")
    n = (x + 2) * (x + 5)
    case = CaseAnalysis(x, n)
    for u in divisors(n):
        a = u + 1
        if (a - x) % 3:
            continue
        rhs = x * x + 7 * a * x + a * a + 9 * a
        if rhs % (9 * (a - 1)):
            case.examined.append(CaseCandidate(a, "C^2 not integral"))
            continue
        cbar2 = -rhs // (9 * (a - 1))
        d = (x + 8 * a) // 3
        b = 3 * d - 1 - cbar2 - a
        if -cbar2 not in MINUS_CBAR2_RANGE:
            case.examined.append(CaseCandidate(a, f"-C^2 = {-cbar2} outside [2, 7]", d, b, cbar2))
            continue
        if a * b != d * d - cbar2:
            case.examined.append(CaseCandidate(a, "b not integral", d, b, cbar2))
            continue
        if gcd(a, b) != 1:
            case.examined.append(CaseCandidate(a, f"gcd(a,b) = {gcd(a, b)}", d, b, cbar2))
            continue
        assert genus_valid(d, a, b), (d, a, b)
        case.examined.append(CaseCandidate(a, "integral", d, b, cbar2))
        case.solutions.append(CandidateTriple(d, a, b))
    case.solutions.sort()
    return case


@dataclass(frozen=True)
class CremonaImage:
    d_prime: int
    pair: tuple[int, int]  # sorted image Puiseux pair (from b - 7a and a)
    x: int
    smooth_germ: bool  # b - 7a == 1
    delta_second: int  # delta invariant of the second singular point, (7x^2 - 7x)/2

    def mu_second(self, r: int) -> int:
        """Milnor number of the second point with r branches (x >= 1)."""
        return 7 * self.x * self.x - 7 * self.x - r + 1

    @property
    def image_triple(self) -> CandidateTriple | None:
        if self.smooth_germ:
            return None
        return CandidateTriple(self.d_prime, *self.pair)


class CremonaPreconditionError(ValueError):
    pass


def cremona_applicable(t) -> str | None:
    """None if the transform applies to t, else the reason it does not."""
    t = _as_triple(t)
    if not genus_valid(t.d, t.a, t.b):
        return "not genus-valid"
    if t.cbar2 > -2:
        return "C^2 > -2"
    if t.d >= 3 * t.a:
        return "d >= 3a"
    if t.x < 0:
        return "3d < 8a"
    if t.b <= 7 * t.a:
        return "b <= 7a"
    return None


def cremona_image(t) -> CremonaImage:
    t = _as_triple(t)
    reason = cremona_applicable(t)
    if reason is not None:
        raise CremonaPreconditionError(f"{t}: {reason}")
    x = t.x
    d_prime = 8 * t.d - 21 * t.a
    assert 3 * d_prime == 8 * x + t.a
    e = t.b - 7 * t.a
    pair = (min(e, t.a), max(e, t.a))
    return CremonaImage(d_prime, pair, x, e == 1, (7 * x * x - 7 * x) // 2)


def cremona_reduce_and_test(t) -> dict | None:
    """Eliminate t through its unicuspidal Cremona image, if that is possible.

    Only x = 1 is conclusive: then the second image point is smooth and the
    image is a rational unicuspidal curve of degree d'.  Returns evidence
    (the image and the filter that kills it) or None.
    """
    from .obstructions import FULL, Status, run_pipeline

    img = cremona_image(t)
    if img.x != 1 or img.smooth_germ:
        return None
    it = img.image_triple
    if not genus_valid(it.d, it.a, it.b):
        return None
    verdict = run_pipeline(it, FULL)
    if verdict.status is not Status.ELIMINATED:
        return None
    return {
        "image": list(it.as_tuple()),
        "image_eliminated_by": verdict.eliminated_by.filter_id,
        "image_citation": verdict.eliminated_by.citation,
        "path": f"cremona->{it}->{verdict.eliminated_by.filter_id}",
    }
