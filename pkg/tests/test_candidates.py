from math import gcd

import pytest

from unicusp.candidates import (
    CandidateTriple, FamilyKind, GenusError, Kappa, derive, enumerate_candidates, family_match, genus_valid,
)
from unicusp.diophantine import cbar2_equation_identity


@pytest.mark.parametrize("t,ok", [((8, 3, 22), True), ((5, 3, 7), True), ((4, 2, 3), False),
                                  ((2, 2, 3), False), ((14, 5, 40), False)])
def test_genus_valid(t, ok):
    assert genus_valid(*t) is ok


def test_derive_examples():
    inv = derive(CandidateTriple(8, 3, 22))
    assert (inv.cbar2, inv.x, inv.kappa_class) == (-2, 0, Kappa.TWO)
    inv = derive((11, 4, 31))
    assert (inv.cbar2, inv.x) == (-3, 1)
    assert derive((4, 3, 4)).kappa_class is Kappa.NEG_INFINITY
    assert derive((10, 4, 25)).kappa_class is Kappa.NEG_INFINITY
    assert derive((5, 2, 13)).kappa_class is Kappa.NEG_INFINITY  # C^2 = -1


def test_derive_rejects_genus_violation():
    with pytest.raises(GenusError):
        derive((7, 5, 6))


@pytest.mark.parametrize("d,pairs", [(3, [(2, 3)]), (4, [(2, 7), (3, 4)]), (5, [(2, 13), (3, 7), (4, 5)])])
def test_enumerate_examples(d, pairs):
    assert [(t.a, t.b) for t in enumerate_candidates(d)] == pairs


def test_degree_five_includes_fibonacci_member():
    # (2,13) divides 12 too and is the first member of family d
    assert CandidateTriple(5, 2, 13) in enumerate_candidates(5)
    assert family_match((5, 2, 13)).kind is FamilyKind.D


def test_enumerate_matches_brute_force():
    for d in range(3, 61):
        m = (d - 1) * (d - 2)
        brute = [(a, b) for a in range(2, m + 2) for b in range(a + 1, m + 2)
                 if (a - 1) * (b - 1) == m and gcd(a, b) == 1]
        assert [(t.a, t.b) for t in enumerate_candidates(d)] == brute


def test_system_two_holds_for_enumerated():
    for d in range(3, 200):
        for t in enumerate_candidates(d):
            c = t.cbar2
            assert t.a + t.b == 3 * d - 1 - c
            assert t.a * t.b == d * d - c
            assert cbar2_equation_identity(t)


@pytest.mark.parametrize("t,kind,param", [
    ((13, 5, 34), FamilyKind.D, 7), ((34, 13, 89), FamilyKind.D, 9),
    ((10, 4, 25), FamilyKind.C, 5), ((65, 25, 169), FamilyKind.C, 7),
    ((16, 6, 43), FamilyKind.F, None), ((8, 3, 22), FamilyKind.E, None),
    ((7, 6, 7), FamilyKind.A, 7), ((6, 3, 11), FamilyKind.B, 6),
])
def test_family_match(t, kind, param):
    tag = family_match(t)
    assert tag.kind is kind and tag.parameter == param


def test_family_match_none():
    assert family_match((17, 6, 49)) is None
    assert family_match((5, 3, 7)) is None


def test_triple_str():
    assert str(CandidateTriple(8, 3, 22)) == "(8,3,22)"
    assert str(family_match((13, 5, 34))) == "family d, j=7"
