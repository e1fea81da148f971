import random
from fractions import Fraction as F

import pytest

from simplex_gauss.gaussnd import Symbol, monkemeyer_matrices, orbit, return_step, symbol_matrix
from simplex_gauss.gaussnd.faces import (
    face_point,
    facet_subshift_check,
    run_face_automaton,
    streak_rewrite,
)
from simplex_gauss.gaussnd.groups import (
    S_MATRIX,
    T_MATRIX,
    embed,
    is_signed_permutation,
    random_word,
    s_from_generators,
    search_words,
    t_from_generators,
    word_matrix,
)
from simplex_gauss.projective import canonicalize, identity, int_inverse, mat_mul


def syms(text):
    return [Symbol.parse(t) for t in text.split()]


def test_face_classification_examples():
    assert facet_subshift_check(syms("A2 B1 A3 C2 B1")) == "face-AB"
    assert facet_subshift_check(syms("A5 A1 A2")) == "edge-A"
    assert facet_subshift_check(syms("B1 B2")) == "face-BC"
    assert facet_subshift_check(syms("B1 B2 B2")) == "interior-consistent"
    assert facet_subshift_check(syms("C1 C2 C3")) == "face-FR-start"
    assert run_face_automaton(syms("A1 C2 A4 B1"), "AC")
    assert not run_face_automaton(syms("C1"), "AB")


@pytest.mark.parametrize("face", ["AB", "AC", "BC"])
def test_face_orbits_follow_automaton(space, face):
    rng = random.Random(face)
    for _ in range(20):
        den = rng.randint(3, 60)
        a = rng.randint(2, den - 1)
        p = face_point(face, F(a, den), F(rng.randint(1, a - 1), den))
        res = orbit(space, p, 50)
        assert run_face_automaton(res.symbols[:-1] if res.itinerary.status == "reached_zero"
                                  else res.symbols, face)


def test_frontal_face_maps_to_bc(space):
    for x, y in ((F(1, 2), F(1, 3)), (F(5, 7), F(2, 7)), (F(9, 10), F(1, 10))):
        img, sym = return_step(space, face_point("FR", x, y))
        assert sym == Symbol("C", 1)
        assert img == canonicalize(face_point("BC", 1 - y, x - y))


def test_streak_rewrite_templates():
    rw = streak_rewrite(syms("A2 B3"))
    (w,) = rw.words
    assert (w.p, w.q, w.r, w.s, w.n) == (1, 2, 0, 1, 3)
    assert w.inverse_matrix() == ((1, 0, -1, 3), (0, 0, -1, 1), (0, 1, -1, 0), (2, 0, -2, 7))
    assert w.inverse_matrix() == w.product_matrix()
    (w,) = streak_rewrite(syms("B1")).words
    assert (w.p, w.q) == (0, 1)
    (w,) = streak_rewrite(syms("A1 C2")).words
    assert (w.p, w.q, w.r, w.s) == (1, 1, 0, 1)
    assert w.inverse_matrix() == w.product_matrix()


def test_streak_templates_on_random_words():
    rng = random.Random(5)
    for _ in range(200):
        streak = " ".join(f"A{rng.randint(1, 6)}" for _ in range(rng.randint(0, 5)))
        text = f"{streak} {rng.choice('BC')}{rng.randint(1, 6)}".strip()
        (w,) = streak_rewrite(syms(text)).words
        assert w.inverse_matrix() == w.product_matrix()


def test_streak_rewrite_rejects_repeats():
    with pytest.raises(ValueError):
        streak_rewrite(syms("A1 B1 A2 B2"))
    rw = streak_rewrite(syms("A1 B1 C2 A3"))
    assert len(rw.words) == 2 and rw.tail == (3,)


def test_sl2_identities():
    assert t_from_generators() == T_MATRIX
    assert s_from_generators() == S_MATRIX


@pytest.mark.parametrize("n", [2, 3])
def test_embedding_is_homomorphism(n):
    rng = random.Random(n)
    for _ in range(50):
        X, Y = word_matrix(random_word(rng, 8)), word_matrix(random_word(rng, 8))
        assert embed(mat_mul(X, Y), n) == mat_mul(embed(X, n), embed(Y, n))
    assert embed(((1, 0), (0, 1)), n) == identity(n + 1)
    one, big = monkemeyer_matrices(1), monkemeyer_matrices(n)
    for k in range(1, 8):
        assert embed(symbol_matrix(one, Symbol("A", k)), n) == symbol_matrix(big, Symbol("A", k))


def test_embedding_layout():
    assert embed(((1, 2), (3, 4)), 2) == ((1, 0, 2), (0, 1, 0), (3, 0, 4))


def test_word_matrix_inverse_letters():
    M = word_matrix("AaBb", 2)
    assert M == identity(3)
    assert word_matrix("a", 2) == int_inverse(monkemeyer_matrices(2).A)


def test_permutation_search_finds_a_swap():
    swap = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    found = search_words(2, lambda M: M == swap, 10)
    assert found is not None
    word, M = found
    assert word_matrix(word, 2) == swap
    assert is_signed_permutation(M)
    assert not is_signed_permutation(((1, 1), (0, 1)))
