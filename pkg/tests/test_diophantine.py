import pytest

from unicusp.candidates import CandidateTriple, enumerate_candidates
from unicusp.diophantine import (
    CremonaPreconditionError, cremona_applicable, cremona_image, cremona_reduce_and_test,
    cbar2_equation_identity, solve_cbar2_equation,
)
from unicusp.obstructions import matsuoka_sakai


def test_cbar2_equation_identity_sweep():
    for d in range(3, 150):
        for t in enumerate_candidates(d):
            assert cbar2_equation_identity(t)


def _kept(x):
    return [t.as_tuple() for t in solve_cbar2_equation(x).solutions if matsuoka_sakai(t).passed]


@pytest.mark.parametrize("x,expected", [
    (0, [(8, 3, 22), (16, 6, 43)]),
    (1, [(11, 4, 31), (19, 7, 52)]),
    (2, [(22, 8, 61), (78, 29, 210)]),
    (3, [(17, 6, 49), (25, 9, 70), (57, 21, 155)]),
    (4, [(20, 7, 58), (28, 10, 79)]),
])
def test_case_lists(x, expected):
    assert _kept(x) == expected


def test_x5_only_coprime_solution_survives():
    # (31,11,88) solves the equation in integers but gcd(11,88) = 11
    assert _kept(5) == [(23, 8, 67)]
    by_a = {c.a: c for c in solve_cbar2_equation(5).examined}
    assert (by_a[11].d, by_a[11].b, by_a[11].reason) == (31, 88, "gcd(a,b) = 11")


def test_x2_a5_rejected():
    c = {c.a: c for c in solve_cbar2_equation(2).examined}[5]
    assert c.reason == "gcd(a,b) = 5"
    assert (c.d, c.b, c.cbar2) == (14, 40, -4)


def test_extra_small_solutions_fail_matsuoka_sakai():
    assert (6, 2, 21) in [t.as_tuple() for t in solve_cbar2_equation(2).solutions]
    assert (9, 3, 29) in [t.as_tuple() for t in solve_cbar2_equation(3).solutions]
    assert not matsuoka_sakai(CandidateTriple(6, 2, 21)).passed


def test_solver_finds_every_small_case():
    # every genus-valid triple with -7 <= C^2 <= -2 and 0 <= x <= 5 up to d = 400 is found by the solver
    found = {t.as_tuple() for x in range(6) for t in solve_cbar2_equation(x).solutions}
    for d in range(3, 401):
        for t in enumerate_candidates(d):
            if -7 <= t.cbar2 <= -2 and 0 <= t.x <= 5:
                assert t.as_tuple() in found


def test_cremona_examples():
    img = cremona_image(CandidateTriple(19, 7, 52))
    assert (img.d_prime, img.pair, img.x) == (5, (3, 7), 1)
    img = cremona_image(CandidateTriple(11, 4, 31))
    assert (img.d_prime, img.pair) == (4, (3, 4))
    img = cremona_image(CandidateTriple(8, 3, 22))
    assert img.d_prime == 1 and img.smooth_germ and img.image_triple is None


def test_cremona_reduce():
    ev = cremona_reduce_and_test(CandidateTriple(19, 7, 52))
    assert ev["image"] == [5, 3, 7] and ev["image_eliminated_by"] == "dual_curve_bound"
    assert cremona_reduce_and_test(CandidateTriple(11, 4, 31)) is None
    assert cremona_reduce_and_test(CandidateTriple(8, 3, 22)) is None


def test_cremona_preconditions():
    assert cremona_applicable((5, 3, 7)) == "C^2 > -2"
    assert cremona_applicable((4, 2, 3)) == "not genus-valid"
    with pytest.raises(CremonaPreconditionError):
        cremona_image(CandidateTriple(10, 4, 25))


def test_cremona_degree_identity_sweep():
    for d in range(3, 200):
        for t in enumerate_candidates(d):
            if cremona_applicable(t) is None:
                img = cremona_image(t)
                assert 3 * img.d_prime == 8 * img.x + t.a
                assert img.delta_second == img.x * (7 * img.x - 7) // 2
