from fractions import Fraction

from simplex_gauss import _poly as P


def test_divmod_reconstructs():
    a = P.poly([3, -2, 0, 5, 1])
    b = P.poly([1, 1, 2])
    q, r = P.divmod_(a, b)
    assert P.add(P.mul(q, b), r) == a
    assert P.degree(r) < P.degree(b)


def test_gcd_and_xgcd():
    a = P.mul(P.poly([-1, 1]), P.poly([2, 0, 1]))
    b = P.mul(P.poly([-1, 1]), P.poly([3, 1]))
    g = P.gcd_(a, b)
    assert g == P.monic(P.poly([-1, 1]))
    g2, s, t = P.xgcd(a, b)
    assert P.add(P.mul(s, a), P.mul(t, b)) == g2


def test_sturm_counts_roots():
    f = P.poly([-1, 3, 3, 1])  # root 2**(1/3) - 1
    assert P.sturm_count(f, 0, 1) == 1
    assert P.sturm_count(f, Fraction(1, 4), Fraction(1, 3)) == 1
    assert P.sturm_count(f, Fraction(1, 3), 1) == 0
    g = P.poly([-2, 0, 1])
    assert P.sturm_count(g, -2, 2) == 2


def test_tarski_query_sign_at_root():
    f = P.poly([-2, 0, 1])  # sqrt2 on (1, 2)
    # sign of x - 1 at sqrt2 is +1, sign of x - 3/2 is -1
    assert P.tarski_query(P.poly([-1, 1]), f, 1, 2) == 1
    assert P.tarski_query(P.poly([Fraction(-3, 2), 1]), f, 1, 2) == -1


def test_evaluate_and_derivative():
    f = P.poly([1, 2, 3])
    assert P.evaluate(f, 2) == 17
    assert P.derivative(f) == P.poly([2, 6])
