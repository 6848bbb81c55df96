"""Obstruction filters for candidate triples and the classification pipeline.

Every filter takes a :class:`CandidateTriple` (plus, optionally, its
:class:`DerivedInvariants`) and returns a :class:`FilterVerdict`.  Filters
never require genus validity so they can be unit tested on synthetic input;
:func:`run_pipeline` does.

Spectrum conventions: the spectrum of x^a + y^b is the set
{i/a + j/b : 1 <= i <= a-1, 1 <= j <= b-1} inside (0, 2) and the reference
singularity x^d + y^d has the multiset {(i+j)/d : 1 <= i, j <= d-1}.  All
interval counts use open intervals.
"""

from __future__ import annotations

import enum
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .candidates import (
    CandidateTriple,
    DerivedInvariants,
    FamilyTag,
    GenusError,
    Kappa,
    _as_triple,
    family_match,
    genus_valid,
    kappa_from_cbar2,
)
from .exactmath import Semigroup, Surd, ceil_ratio, floor_ratio, gcd, semigroup_count_upto, surd_sign


class FilterId(str, enum.Enum):
    TRIVIAL_BOUND = "trivial_bound"
    DUAL_CURVE_BOUND = "dual_curve_bound"
    MATSUOKA_SAKAI = "matsuoka_sakai"
    A_LT_D_LT_B = "a_lt_d_lt_b"
    CBAR2_AT_MOST_MINUS2 = "cbar2_at_most_minus2"
    THREE_D_GE_EIGHT_A = "three_d_ge_eight_a"
    OREVKOV_A = "orevkov_a"
    OREVKOV_B = "orevkov_b"
    OREVKOV_B_B_BOUND = "orevkov_b_b_bound"
    OREVKOV_C = "orevkov_c"
    SS_D_MINUS_1 = "ss_d_minus_1"
    SS_D_MINUS_2 = "ss_d_minus_2"
    SS_D_MINUS_3 = "ss_d_minus_3"
    SS_D_MINUS_4 = "ss_d_minus_4"
    SS_4 = "ss_4"
    SS_BRUTE = "ss"  # parametrised: "ss:<l>" or "ss:d-<k>"
    SPECTRUM_FULL = "spectrum_semicontinuity_full"
    SEMIGROUP_DENSITY = "semigroup_density"
    CREMONA = "cremona_reduction"
    RECORDED_FACT = "recorded_fact"


CITATIONS = {
    FilterId.TRIVIAL_BOUND: "trivial bound: b >= d, and b = d forces (a,b) = (d-1,d)",
    FilterId.DUAL_CURVE_BOUND: "dual curve bound: b > d implies d >= 2a",
    FilterId.MATSUOKA_SAKAI: "Matsuoka-Sakai inequality: d < 3a",
    FilterId.A_LT_D_LT_B: "search domain: a < d < b",
    FilterId.CBAR2_AT_MOST_MINUS2: "search domain: -C^2 >= 2",
    FilterId.THREE_D_GE_EIGHT_A: "semigroup density at l=3 with d < 3a: 3d >= 8a when C^2 <= -2",
    FilterId.OREVKOV_A: "Orevkov inequality (a): kappa = -inf implies d < alpha*a",
    FilterId.OREVKOV_B: "Orevkov inequality (b): kappa = 2 implies d < alpha*(a+1) - beta",
    FilterId.OREVKOV_B_B_BOUND: "Orevkov (b) with genus formula: b < alpha(d-1)(d-2)/(d-2alpha+beta) + 1",
    FilterId.OREVKOV_C: "Orevkov inequality (c): kappa = 2 implies -C^2 <= -2 + a/b + b/a",
    FilterId.SS_D_MINUS_1: "spectrum semicontinuity SS_{d-1}: floor(b/d) + ceil(C^2/d) <= 2",
    FilterId.SS_D_MINUS_2: "spectrum semicontinuity SS_{d-2}: floor(2b/d) + ceil(2C^2/d) <= 5",
    FilterId.SS_D_MINUS_3: "spectrum semicontinuity SS_{d-3}: floor(3b/d) + floor(3b/d - b/a) + ceil(3C^2/d) <= 8",
    FilterId.SS_D_MINUS_4: "spectrum semicontinuity SS_{d-4} (3d >= 8a): floor(4b/d) + floor(4b/d - b/a) + ceil(4C^2/d) <= 13",
    FilterId.SS_4: "spectrum semicontinuity SS_4 (b > d): min(3a, b) >= d + 1 + (d-4)C^2/d",
    FilterId.SS_BRUTE: "spectrum semicontinuity SS_l: #{i/a + j/b < l/d} <= (l-2)(l-1)/2",
    FilterId.SPECTRUM_FULL: "spectrum semicontinuity on every interval (l/d, l/d + 1), -d < l < d",
    FilterId.SEMIGROUP_DENSITY: "semigroup density: #(Gamma cap [0, ld]) >= (l+1)(l+2)/2 for 0 <= l < d",
    FilterId.CREMONA: "nodal-cubic Cremona transform: image curve of degree 8d-21a must exist",
    FilterId.RECORDED_FACT: "recorded geometric fact (not recomputed)",
}

# (11,4,31): its Cremona image (4,3,4) exists, but the configuration of that
# quartic with the image nodal cubic is impossible; shown by an explicit
# coordinate computation that this package does not redo.
RECORDED_FACTS: dict[tuple[int, int, int], str] = {
    (11, 4, 31): (
        "recorded geometric fact: the Cremona image quartic (4,3,4) cannot meet the image "
        "nodal cubic as required (explicit coordinate elimination, not recomputed)"
    ),
}


@dataclass(frozen=True)
class FilterVerdict:
    filter_id: str
    passed: bool
    citation: str
    witness: dict[str, Any] | None = None
    applicable: bool = True

    def __post_init__(self):
        if not self.citation:
            raise ValueError("citation must be nonempty")
        if not self.passed and self.witness is None:
            raise ValueError(f"{self.filter_id}: failing verdict needs a witness")


@dataclass(frozen=True)
class SpectrumCount:
    c: Fraction  # lower endpoint of the open interval (c, c+1)
    count_candidate: int
    count_reference: int


class PreconditionError(ValueError):
    """A closed form was requested outside the range where it is equivalent to SS_l."""


def _verdict(fid: FilterId, passed: bool, witness=None, applicable=True, citation=None) -> FilterVerdict:
    return FilterVerdict(fid.value, passed, citation or CITATIONS[fid], witness, applicable)


def _vacuous(fid: FilterId, reason: str) -> FilterVerdict:
    return _verdict(fid, True, {"not_applicable": reason}, applicable=False)


def _inv(t: CandidateTriple, inv: DerivedInvariants | None) -> DerivedInvariants:
    if inv is not None:
        return inv
    cbar2 = t.d * t.d - t.a * t.b
    return DerivedInvariants(cbar2, 3 * t.d - 8 * t.a, kappa_from_cbar2(cbar2))


# -- integer bounds ----------------------------------------------------------

def trivial_bound(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    if b < d:
        return _verdict(FilterId.TRIVIAL_BOUND, False, {"reason": "b < d", "b": b, "d": d})
    if b == d and a != d - 1:
        return _verdict(FilterId.TRIVIAL_BOUND, False, {"reason": "b = d but a != d-1", "a": a})
    return _verdict(FilterId.TRIVIAL_BOUND, True)


def dual_curve_bound(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    if t.b > t.d and t.d < 2 * t.a:
        return _verdict(FilterId.DUAL_CURVE_BOUND, False, {"d": t.d, "2a": 2 * t.a})
    return _verdict(FilterId.DUAL_CURVE_BOUND, True)


def matsuoka_sakai(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    if t.d >= 3 * t.a:
        return _verdict(FilterId.MATSUOKA_SAKAI, False, {"d": t.d, "3a": 3 * t.a})
    return _verdict(FilterId.MATSUOKA_SAKAI, True)


def a_lt_d_lt_b(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    if not t.a < t.d < t.b:
        return _verdict(FilterId.A_LT_D_LT_B, False, {"a": t.a, "d": t.d, "b": t.b})
    return _verdict(FilterId.A_LT_D_LT_B, True)


def cbar2_at_most_minus2(t, inv=None) -> FilterVerdict:
    inv = _inv(_as_triple(t), inv)
    if inv.cbar2 > -2:
        return _verdict(FilterId.CBAR2_AT_MOST_MINUS2, False, {"cbar2": inv.cbar2})
    return _verdict(FilterId.CBAR2_AT_MOST_MINUS2, True)


def three_d_ge_eight_a(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.cbar2 > -2:
        return _vacuous(FilterId.THREE_D_GE_EIGHT_A, "C^2 > -2")
    if inv.x < 0:
        return _verdict(FilterId.THREE_D_GE_EIGHT_A, False, {"x": inv.x})
    return _verdict(FilterId.THREE_D_GE_EIGHT_A, True)


# -- Orevkov inequalities, decided in Z[sqrt5] --------------------------------

def orevkov_a(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.kappa_class is not Kappa.NEG_INFINITY:
        return _vacuous(FilterId.OREVKOV_A, "kappa = 2")
    # d < (3 + sqrt5) a / 2  <=>  (2d - 3a) - a sqrt5 < 0
    s = Surd(2 * t.d - 3 * t.a, -t.a)
    if surd_sign(s) >= 0:
        return _verdict(FilterId.OREVKOV_A, False, {"2d-3a": s.p, "a": t.a})
    return _verdict(FilterId.OREVKOV_A, True)


def orevkov_b(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.kappa_class is not Kappa.TWO:
        return _vacuous(FilterId.OREVKOV_B, "kappa = -inf")
    # alpha(a+1) - beta = 3(a+1)/2 + sqrt5 (5a+3)/10
    s = Surd(10 * t.d - 15 * (t.a + 1), -(5 * t.a + 3))
    if surd_sign(s) >= 0:
        return _verdict(FilterId.OREVKOV_B, False, {"10d-15(a+1)": s.p, "5a+3": 5 * t.a + 3})
    return _verdict(FilterId.OREVKOV_B, True)


def orevkov_b_b_bound(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.kappa_class is not Kappa.TWO:
        return _vacuous(FilterId.OREVKOV_B_B_BOUND, "kappa = -inf")
    d, b = t.d, t.b
    m = (d - 1) * (d - 2)
    # times 10: d - 2alpha + beta -> 10(d-3) - 8 sqrt5,  alpha -> 15 + 5 sqrt5
    den = Surd(10 * (d - 3), -8)
    lhs = den * (b - 1)
    rhs = Surd(15 * m, 5 * m)
    diff = surd_sign(rhs - lhs)  # sign of alpha*m - (b-1)*den
    ok = diff > 0 if surd_sign(den) > 0 else diff < 0
    if not ok:
        return _verdict(FilterId.OREVKOV_B_B_BOUND, False, {"b": b, "d": d})
    return _verdict(FilterId.OREVKOV_B_B_BOUND, True)


def orevkov_c(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.kappa_class is not Kappa.TWO:
        return _vacuous(FilterId.OREVKOV_C, "kappa = -inf")
    lhs = (t.a - t.b) ** 2
    rhs = -inv.cbar2 * t.a * t.b
    if lhs < rhs:
        return _verdict(FilterId.OREVKOV_C, False, {"(a-b)^2": lhs, "-C^2*ab": rhs})
    return _verdict(FilterId.OREVKOV_C, True)


# -- spectrum semicontinuity -------------------------------------------------

def ss_l_count(t, l: int) -> int:
    """#{(i, j) : i, j >= 1, i/a + j/b < l/d}, counted column by column."""
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    lab = l * a * b
    ad, bd = a * d, b * d
    total = 0
    i = 1
    while i * bd + ad < lab:
        total += (lab - i * bd - 1) // ad
        i += 1
    return total


def ss_l_bruteforce(t, l: int) -> tuple[SpectrumCount, FilterVerdict]:
    t = _as_triple(t)
    if not 2 <= l <= t.d:
        raise ValueError(f"l must satisfy 2 <= l <= d = {t.d}, got {l}")
    count = ss_l_count(t, l)
    bound = (l - 2) * (l - 1) // 2
    sc = SpectrumCount(Fraction(l, t.d) - 1, count, bound)
    witness = {"l": l, "count": count, "bound": bound}
    fid = f"ss:{l}"
    return sc, FilterVerdict(fid, count <= bound, CITATIONS[FilterId.SS_BRUTE], witness)


SS_CLOSED_FORMS = ("d-1", "d-2", "d-3", "d-4", "4")


def ss_closed_form(t, which: str, inv=None) -> FilterVerdict:
    """Closed floor/ceiling form of SS_l for l in {d-1, d-2, d-3, d-4, 4}."""
    t = _as_triple(t)
    inv = _inv(t, inv)
    d, a, b = t.d, t.a, t.b
    c = inv.cbar2
    if which == "d-1":
        fid = FilterId.SS_D_MINUS_1
        lhs = floor_ratio(b, d) + ceil_ratio(c, d)
        bound = 2
    elif which == "d-2":
        fid = FilterId.SS_D_MINUS_2
        lhs = floor_ratio(2 * b, d) + ceil_ratio(2 * c, d)
        bound = 5
    elif which == "d-3":
        fid = FilterId.SS_D_MINUS_3
        lhs = floor_ratio(3 * b, d) + floor_ratio(3 * a * b - b * d, a * d) + ceil_ratio(3 * c, d)
        bound = 8
    elif which == "d-4":
        fid = FilterId.SS_D_MINUS_4
        if 3 * d < 8 * a:
            raise PreconditionError(f"{t}: SS_(d-4) closed form needs 3d >= 8a")
        lhs = floor_ratio(4 * b, d) + floor_ratio(4 * a * b - b * d, a * d) + ceil_ratio(4 * c, d)
        bound = 13
    elif which == "4":
        fid = FilterId.SS_4
        if b <= d:
            raise PreconditionError(f"{t}: SS_4 closed form needs b > d")
        lhs = d * (d + 1) + (d - 4) * c
        rhs = d * min(3 * a, b)
        if rhs < lhs:
            return _verdict(fid, False, {"d*min(3a,b)": rhs, "d(d+1)+(d-4)C^2": lhs})
        return _verdict(fid, True)
    else:
        raise ValueError(f"unknown closed form {which!r}; expected one of {SS_CLOSED_FORMS}")
    if lhs > bound:
        return _verdict(fid, False, {"lhs": lhs, "bound": bound})
    return _verdict(fid, True, {"lhs": lhs, "bound": bound})


def ss_l_for(t, which: str) -> int:
    """The l that a closed form name refers to for this triple."""
    t = _as_triple(t)
    return 4 if which == "4" else t.d - int(which[2:])


def spectrum_numerators(a: int, b: int) -> list[int]:
    """Sorted numerators i*b + j*a of the spectrum over the common denominator ab."""
    vals = sorted(i * b + j * a for i in range(1, a) for j in range(1, b))
    if gcd(a, b) == 1:
        # coprime exponents give pairwise distinct spectral numbers
        assert all(vals[k] < vals[k + 1] for k in range(len(vals) - 1)), (a, b)
    return vals


def reference_count(d: int, lo: int, hi: int) -> int:
    """Reference spectrum multiplicities (i+j)/d with lo < i+j < hi."""
    total = 0
    for k in range(max(lo + 1, 2), min(hi, 2 * d - 1)):
        total += min(k - 1, 2 * d - 1 - k)
    return total


def spectrum_counts(t) -> list[SpectrumCount]:
    """Candidate and reference counts on (l/d, l/d + 1) for every -d < l < d."""
    t = _as_triple(t)
    d, a, b = t.d, t.a, t.b
    ab = a * b
    scaled = [d * n for n in spectrum_numerators(a, b)]
    out = []
    for l in range(-d + 1, d):
        lo = bisect_right(scaled, l * ab)
        hi = bisect_left(scaled, (l + d) * ab)
        out.append(SpectrumCount(Fraction(l, d), hi - lo, reference_count(d, l, l + d)))
    return out


def spectrum_semicontinuity_full(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    for sc in spectrum_counts(t):
        if sc.count_candidate > sc.count_reference:
            l = sc.c.numerator * t.d // sc.c.denominator
            return _verdict(FilterId.SPECTRUM_FULL, False, {
                "l": l,
                "interval": f"({sc.c}, {sc.c + 1})",
                "count_candidate": sc.count_candidate,
                "count_reference": sc.count_reference,
            })
    return _verdict(FilterId.SPECTRUM_FULL, True)


# -- semigroup ---------------------------------------------------------------

def semigroup_density(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    if gcd(t.a, t.b) != 1:
        return _verdict(FilterId.SEMIGROUP_DENSITY, False, {"reason": "gcd(a,b) != 1"})
    g = Semigroup(t.a, t.b)
    for l in range(t.d):
        count = semigroup_count_upto(g, l * t.d)
        need = (l + 1) * (l + 2) // 2
        if count < need:
            return _verdict(FilterId.SEMIGROUP_DENSITY, False, {"l": l, "count": count, "required": need})
    return _verdict(FilterId.SEMIGROUP_DENSITY, True)


def positive_cbar2_check(t, inv=None) -> bool:
    """For C^2 > 0 the pair must be (d-1, d) or (d/2, 2d-1)."""
    t = _as_triple(t)
    inv = _inv(t, inv)
    if inv.cbar2 <= 0:
        raise ValueError(f"{t}: positive self-intersection required, got {inv.cbar2}")
    d, a, b = t.d, t.a, t.b
    return (a, b) == (d - 1, d) or (2 * a == d and b == 2 * d - 1)


# -- Cremona and recorded facts ----------------------------------------------

def cremona_filter(t, inv=None) -> FilterVerdict:
    from .diophantine import cremona_applicable, cremona_reduce_and_test

    t = _as_triple(t)
    reason = cremona_applicable(t)
    if reason is not None:
        return _vacuous(FilterId.CREMONA, reason)
    evidence = cremona_reduce_and_test(t)
    if evidence is None:
        return _verdict(FilterId.CREMONA, True, {"inconclusive": True, "x": t.x})
    return _verdict(FilterId.CREMONA, False, evidence)


def recorded_fact(t, inv=None) -> FilterVerdict:
    t = _as_triple(t)
    note = RECORDED_FACTS.get(t.as_tuple())
    if note is None:
        return _verdict(FilterId.RECORDED_FACT, True)
    return _verdict(FilterId.RECORDED_FACT, False, {"fact": t.as_tuple()}, citation=note)


# -- filter sets and the pipeline --------------------------------------------

def _closed(which: str, fid: FilterId) -> Callable[..., FilterVerdict]:
    def run(t, inv=None):
        t = _as_triple(t)
        if which == "d-4" and 3 * t.d < 8 * t.a:
            return _vacuous(fid, "3d < 8a")
        if which == "4" and t.b <= t.d:
            return _vacuous(fid, "b <= d")
        if ss_l_for(t, which) < 2:
            return _vacuous(fid, "l < 2")
        return ss_closed_form(t, which, inv)
    return run


# documented evaluation order: integer bounds, closed-form SS, brute SS and
# the full spectrum, semigroup density, Cremona reduction, recorded facts
FILTERS: dict[str, Callable[..., FilterVerdict]] = {
    FilterId.TRIVIAL_BOUND.value: trivial_bound,
    FilterId.DUAL_CURVE_BOUND.value: dual_curve_bound,
    FilterId.MATSUOKA_SAKAI.value: matsuoka_sakai,
    FilterId.A_LT_D_LT_B.value: a_lt_d_lt_b,
    FilterId.CBAR2_AT_MOST_MINUS2.value: cbar2_at_most_minus2,
    FilterId.THREE_D_GE_EIGHT_A.value: three_d_ge_eight_a,
    FilterId.OREVKOV_A.value: orevkov_a,
    FilterId.OREVKOV_B.value: orevkov_b,
    FilterId.OREVKOV_B_B_BOUND.value: orevkov_b_b_bound,
    FilterId.OREVKOV_C.value: orevkov_c,
    FilterId.SS_D_MINUS_1.value: _closed("d-1", FilterId.SS_D_MINUS_1),
    FilterId.SS_D_MINUS_2.value: _closed("d-2", FilterId.SS_D_MINUS_2),
    FilterId.SS_D_MINUS_3.value: _closed("d-3", FilterId.SS_D_MINUS_3),
    FilterId.SS_D_MINUS_4.value: _closed("d-4", FilterId.SS_D_MINUS_4),
    FilterId.SS_4.value: _closed("4", FilterId.SS_4),
    FilterId.SS_BRUTE.value: None,  # placeholder fixing the position of "ss:<l>" entries
    FilterId.SPECTRUM_FULL.value: spectrum_semicontinuity_full,
    FilterId.SEMIGROUP_DENSITY.value: semigroup_density,
    FilterId.CREMONA.value: cremona_filter,
    FilterId.RECORDED_FACT.value: recorded_fact,
}
_ORDER = {name: k for k, name in enumerate(FILTERS)}


def _ss_brute_filter(spec: str) -> Callable[..., FilterVerdict]:
    arg = spec.split(":", 1)[1].replace(" ", "")

    def resolve(d: int) -> int:
        if arg.startswith("d-"):
            return d - int(arg[2:])
        if arg == "d":
            return d
        return int(arg)

    def run(t, inv=None):
        t = _as_triple(t)
        l = resolve(t.d)
        if not 2 <= l <= t.d:
            return FilterVerdict(f"ss:{arg}", True, CITATIONS[FilterId.SS_BRUTE],
                                 {"not_applicable": f"l = {l} outside [2, d]"}, applicable=False)
        return ss_l_bruteforce(t, l)[1]

    return run


def _sort_key(spec: str) -> tuple[int, str]:
    if spec.startswith("ss:"):
        return (_ORDER[FilterId.SS_BRUTE.value], spec)
    return (_ORDER[spec], "")


BOUNDED_SEARCH_FILTERS = (
    "a_lt_d_lt_b", "matsuoka_sakai", "three_d_ge_eight_a", "cbar2_at_most_minus2",
    "orevkov_c", "orevkov_b_b_bound", "orevkov_b",
    "ss_d_minus_1", "ss_d_minus_2", "ss_d_minus_3", "ss_d_minus_4", "ss_4",
)
FULL_FILTERS = (
    "trivial_bound", "dual_curve_bound", "matsuoka_sakai", "three_d_ge_eight_a",
    "orevkov_a", "orevkov_b", "orevkov_b_b_bound", "orevkov_c",
    "ss_d_minus_1", "ss_d_minus_2", "ss_d_minus_3", "ss_d_minus_4", "ss_4",
    "spectrum_semicontinuity_full", "semigroup_density", "cremona_reduction", "recorded_fact",
)
PRESETS = {"BOUNDED_SEARCH": BOUNDED_SEARCH_FILTERS, "FULL": FULL_FILTERS}


@dataclass(frozen=True)
class FilterSet:
    name: str
    filters: tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> FilterSet:
        """A preset name (BOUNDED_SEARCH, FULL) or a comma-separated list of filter ids."""
        key = text.strip()
        if key.upper() in PRESETS:
            return cls(key.upper(), PRESETS[key.upper()])
        items = tuple(s.strip() for s in key.split(",") if s.strip())
        if not items:
            raise ValueError("empty filter list")
        for s in items:
            if s.startswith("ss:"):
                continue
            if s not in FILTERS or FILTERS[s] is None:
                raise ValueError(f"unknown filter {s!r}; known: {', '.join(k for k in FILTERS if FILTERS[k])}")
        return cls("custom", items)

    def ordered(self) -> list[str]:
        return sorted(dict.fromkeys(self.filters), key=_sort_key)

    def callables(self) -> list[tuple[str, Callable[..., FilterVerdict]]]:
        out = []
        for spec in self.ordered():
            fn = _ss_brute_filter(spec) if spec.startswith("ss:") else FILTERS[spec]
            out.append((spec, fn))
        return out


BOUNDED_SEARCH = FilterSet("BOUNDED_SEARCH", BOUNDED_SEARCH_FILTERS)
FULL = FilterSet("FULL", FULL_FILTERS)


class Status(str, enum.Enum):
    REALIZABLE_KNOWN = "REALIZABLE_KNOWN"
    ELIMINATED = "ELIMINATED"
    ELIMINATED_BY_RECORDED_FACT = "ELIMINATED_BY_RECORDED_FACT"
    SURVIVOR_UNKNOWN = "SURVIVOR_UNKNOWN"
    NOT_GENUS_VALID = "NOT_GENUS_VALID"


@dataclass
class ClassificationVerdict:
    triple: CandidateTriple
    status: Status
    eliminated_by: FilterVerdict | None = None
    family: FamilyTag | None = None
    trace: list[FilterVerdict] = field(default_factory=list)

    @property
    def survives(self) -> bool:
        return self.status in (Status.REALIZABLE_KNOWN, Status.SURVIVOR_UNKNOWN)

    def __str__(self) -> str:
        if self.eliminated_by is not None:
            return f"{self.status.value}({self.eliminated_by.filter_id})"
        if self.family is not None:
            return f"{self.status.value}({self.family})"
        return self.status.value


def run_pipeline(t, config: FilterSet = FULL, full_trace: bool = False) -> ClassificationVerdict:
    """Apply the configured filters in the documented order.

    The first failing filter decides the verdict.  With ``full_trace`` every
    filter is still evaluated and recorded.
    """
    t = _as_triple(t)
    if not genus_valid(t.d, t.a, t.b):
        raise GenusError(f"{t} does not satisfy the genus formula with gcd(a,b) = 1")
    from .candidates import derive

    inv = derive(t)
    trace: list[FilterVerdict] = []
    first_fail: FilterVerdict | None = None
    for _, fn in config.callables():
        v = fn(t, inv)
        trace.append(v)
        if not v.passed and first_fail is None:
            first_fail = v
            if not full_trace:
                break
    family = family_match(t)
    if first_fail is not None:
        status = (Status.ELIMINATED_BY_RECORDED_FACT
                  if first_fail.filter_id == FilterId.RECORDED_FACT.value else Status.ELIMINATED)
        return ClassificationVerdict(t, status, first_fail, family, trace)
    if family is not None:
        return ClassificationVerdict(t, Status.REALIZABLE_KNOWN, None, family, trace)
    return ClassificationVerdict(t, Status.SURVIVOR_UNKNOWN, None, None, trace)
