import random
from fractions import Fraction as F

import pytest

from simplex_gauss import canonicalize, point
from simplex_gauss.gaussnd import (
    Symbol,
    classify_by_iteration,
    classify_piece,
    monkemeyer_matrices,
    monkemeyer_step,
    on_piece_boundary,
    return_step,
    return_step_iterated,
    symbol_inverse,
    symbol_matrix,
)
from simplex_gauss.gaussnd.system import a_steps, check_dets, symbol_from_a_steps, translation_matrix
from simplex_gauss.projective import identity, mat_mul, mat_pow


def test_low_dimensional_generators():
    one = monkemeyer_matrices(1)
    assert one.A == ((1, 0), (-1, 1))
    assert one.B == ((-1, 1), (1, 0))
    assert one.V == ((0, 1), (1, 1))
    two = monkemeyer_matrices(2)
    assert two.A == ((1, 0, 0), (1, -1, 0), (0, -1, 1))
    assert two.B == ((0, -1, 1), (1, -1, 0), (1, 0, 0))


@pytest.mark.parametrize("n", range(1, 9))
def test_generators_unimodular(n):
    assert all(abs(d) == 1 for d in check_dets(monkemeyer_matrices(n)))


def test_dimension_limits():
    with pytest.raises(ValueError):
        monkemeyer_matrices(0)
    with pytest.raises(ValueError):
        monkemeyer_matrices(9)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_power_of_a_is_translation(n):
    sys = monkemeyer_matrices(n)
    assert mat_pow(sys.A, n) == translation_matrix(n, 1)
    assert mat_pow(sys.A, 3 * n) == translation_matrix(n, 3)


def test_symbol_exponent_law():
    assert [a_steps(2, Symbol(f, 3)) for f in "AB"] == [5, 4]
    assert [a_steps(3, Symbol(f, 2)) for f in "ABC"] == [5, 4, 3]
    for n in (2, 3, 4):
        for k in range(40):
            assert a_steps(n, symbol_from_a_steps(n, k)) == k


def test_symbol_matrices_are_products():
    sys = monkemeyer_matrices(3)
    for sym in (Symbol("A", 2), Symbol("B", 1), Symbol("C", 4)):
        M = mat_mul(sys.B, mat_pow(sys.A, a_steps(3, sym)))
        assert symbol_matrix(sys, sym) == M
        assert mat_mul(M, symbol_inverse(sys, sym)) == identity(4)


def test_symbol_parsing():
    assert Symbol.parse("B12") == Symbol("B", 12)
    assert Symbol.from_json(Symbol("C", 2).to_json()) == Symbol("C", 2)
    with pytest.raises(ValueError):
        Symbol.parse("Z1")


def test_farey_level_steps(plane):
    img, br = monkemeyer_step(plane, point(F(1, 3), F(1, 4), 1))
    assert br == "A" and img.affine() == (F(4, 9), F(1, 9))
    img, br = monkemeyer_step(plane, point(F(3, 4), F(1, 2), 1))
    assert br == "B" and img.affine() == (F(2, 3), F(1, 3))
    with pytest.raises(ValueError):
        monkemeyer_step(plane, point(F(1, 4), F(1, 2), 1))


def test_piece_classification(plane, cube_field):
    a = cube_field.gen
    assert classify_piece(plane, point(a, a * a, 1)) == Symbol("A", 3)
    assert classify_piece(plane, point(F(1, 2), F(1, 2), 1)) == Symbol("B", 2)
    assert classify_piece(plane, point(F(2, 3), F(1, 3), 1)) == Symbol("A", 1)
    # frontal edge x = 1 lies in B1
    assert classify_piece(plane, point(1, F(1, 2), 1)) == Symbol("B", 1)
    assert on_piece_boundary(plane, point(F(2, 3), F(1, 3), 1))
    assert not on_piece_boundary(plane, point(a, a * a, 1))


def test_return_step_examples(plane, space, cube_field):
    img, sym = return_step(plane, point(F(1, 3), F(1, 4), 1))
    assert sym == Symbol("B", 3) and img.affine() == (F(1, 4), F(1, 4))
    img, sym = return_step(plane, point(F(2, 3), F(1, 3), 1))
    assert sym == Symbol("A", 1) and img.affine() == (F(1, 2), F(1, 2))
    a = cube_field.gen
    img, sym = return_step(plane, point(a, a * a, 1))
    assert sym == Symbol("A", 3)
    assert img == canonicalize(point(1 - 3 * a, a * a, a))
    # edge rule G(1, x, 0) = (1 - x, 1 - x, 1 - x)
    for x in (F(1, 2), F(2, 7), F(5, 6)):
        img, sym = return_step(space, point(1, x, 0, 1))
        assert img.affine() == (1 - x, 1 - x, 1 - x)
    zero = point(0, 0, 1)
    assert return_step(plane, zero) == (canonicalize(zero), None)


@pytest.mark.parametrize("n", [2, 3])
def test_closed_form_agrees_with_iteration(n):
    rng = random.Random(n)
    sys = monkemeyer_matrices(n)
    checked = 0
    while checked < 400:
        den = rng.randint(2, 80)
        xs = sorted((rng.randint(0, den) for _ in range(n)), reverse=True)
        p = point(*xs, den)
        if p.is_zero_vertex() or on_piece_boundary(sys, p):
            continue
        assert return_step(sys, p) == return_step_iterated(sys, p)
        assert classify_piece(sys, p) == classify_by_iteration(sys, p)
        checked += 1


def test_generic_dimension_uses_iteration():
    sys = monkemeyer_matrices(4)
    assert not sys.closed_form
    p = point(F(9, 10), F(7, 10), F(1, 2), F(1, 5), 1)
    img, sym = return_step(sys, p)
    assert sym.family in "ABCD"
    assert img == canonicalize(img)
