import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplex_gauss.cf1d import (
    FAREY_A,
    FAREY_B,
    FAREY_V,
    NonUnimodularError,
    approx_interval,
    cf_expand,
    convergent_matrices,
    convergents,
    farey_step,
    gauss_step,
    lattice_triangle_check,
    quad_periodicity,
    rate_bounds_check,
)
from simplex_gauss.exactnum import NumberField, floor
from simplex_gauss.projective import det


def test_generator_determinants():
    assert abs(det(FAREY_A)) == 1 and abs(det(FAREY_B)) == 1 and abs(det(FAREY_V)) == 1


def test_farey_and_gauss_steps():
    assert farey_step(Fraction(1, 2)) == (1, "A")
    assert farey_step(Fraction(2, 3)) == (Fraction(1, 2), "B")
    assert gauss_step(Fraction(3, 10)) == (Fraction(1, 3), 3)
    assert gauss_step(Fraction(1, 3)) == (0, 3)
    assert gauss_step(Fraction(0)) == (0, None)
    with pytest.raises(ValueError):
        gauss_step(Fraction(3, 2))


def test_gauss_step_is_farey_acceleration():
    # k - 1 A-steps then one B-step
    for x in (Fraction(7, 30), Fraction(5, 13), Fraction(2, 3)):
        g, k = gauss_step(x)
        y = x
        for _ in range(k - 1):
            y, br = farey_step(y)
            assert br == "A"
        y, br = farey_step(y)
        assert br == "B" and y == g


def test_rational_expansion_and_convergents():
    cf = cf_expand(Fraction(43, 157))
    assert cf.status == "finite"
    p, q = convergents(cf)[-1]
    assert Fraction(p, q) == Fraction(43, 157)


@given(st.fractions(min_value=0, max_value=1, max_denominator=10 ** 6).filter(lambda x: 0 < x))
def test_expansion_round_trip(x):
    cf = cf_expand(x)
    p, q = convergents(cf)[-1]
    assert Fraction(p, q) == x
    assert all(t >= 1 for t in cf.terms)


def test_quadratic_expansions(golden_field, sqrt2_field):
    assert quad_periodicity(golden_field.gen) == ([], [1])
    assert quad_periodicity(sqrt2_field.gen) == ([], [2])
    K = NumberField([-2, 0, 1], (1, 2))
    assert quad_periodicity(K.gen - 1) == ([], [2])
    K7 = NumberField([-7, 0, 1], (2, 3))
    x = K7.gen - 2
    assert quad_periodicity(x) == ([], [1, 1, 1, 4])
    with pytest.raises(ValueError):
        quad_periodicity(K7.const(Fraction(1, 2)))


def test_truncated_status(golden_field):
    cf = cf_expand(golden_field.gen, 10)
    assert cf.status == "truncated" and cf.terms == (1,) * 10


def test_convergent_matrices_match_recurrence():
    terms = [2, 1, 3, 5, 1, 2]
    conv = convergents(terms)
    for n in range(1, len(terms) + 1):
        M = convergent_matrices(terms, n)
        assert (M[0][1], M[1][1]) == conv[n]
        assert (M[0][0], M[1][0]) == conv[n - 1]
        assert abs(det(M)) == 1


def test_approx_intervals_contain_point_and_nest():
    x = Fraction(355, 1133)
    terms = cf_expand(x).terms
    prev = None
    for n in range(1, len(terms)):
        S = approx_interval(terms, n)
        ends = sorted(Fraction(S[0][j], S[1][j]) for j in range(2))
        assert ends[0] <= x <= ends[1]
        if prev:
            assert prev[0] <= ends[0] and ends[1] <= prev[1]
        prev = ends


def test_lattice_triangles():
    rng = random.Random(3)
    for _ in range(30):
        terms = [rng.randint(1, 9) for _ in range(rng.randint(1, 10))]
        for n in range(1, len(terms) + 1):
            assert lattice_triangle_check(approx_interval(terms, n))
    with pytest.raises(NonUnimodularError):
        lattice_triangle_check(((2, 1), (1, 3)))


def test_fat_triangle_has_extra_points():
    # det 1 is required; a det-2 triangle is rejected before scanning
    with pytest.raises(NonUnimodularError):
        lattice_triangle_check(((2, 0), (0, 1)))


def test_rate_bounds(golden_field, cube_field):
    for x in (golden_field.gen, cube_field.gen):
        cf = cf_expand(x, 30)
        for n in range(1, 29):
            assert rate_bounds_check(x, n, cf)
    with pytest.raises(ValueError):
        rate_bounds_check(Fraction(1, 3), 1)


def test_floor_of_shifted_root():
    K = NumberField([-2, 0, 1], (1, 2))
    assert floor(K.gen * 10) == 14
