"""Dense univariate polynomials over Q.

A polynomial is a tuple of ``Fraction`` coefficients in ascending degree
order with no trailing zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from math import gcd


def poly(coeffs):
    """Normalize an iterable of rationals into a trimmed coefficient tuple."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f):
    return len(f) - 1


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return poly(out)


def neg(f):
    return tuple(-c for c in f)


def sub(f, g):
    return add(f, neg(g))


def mul(f, g):
    if not f or not g:
        return ()
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return poly(out)


def scale(f, c):
    c = Fraction(c)
    if c == 0:
        return ()
    return tuple(a * c for a in f)


def divmod_(f, g):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lead = g[-1]
    q = [Fraction(0)] * max(len(f) - dg, 0)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = r[i + dg] / lead
        q[i] = c
        if c:
            for j, b in enumerate(g):
                r[i + j] -= c * b
    return poly(q), poly(r[:dg])


def rem(f, g):
    return divmod_(f, g)[1]


def monic(f):
    return scale(f, 1 / f[-1]) if f else ()


def gcd_(f, g):
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def xgcd(f, g):
    """Return (d, s, t) with s*f + t*g = d = monic gcd(f, g)."""
    r0, r1 = f, g
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lead = r0[-1]
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def derivative(f):
    return poly(i * c for i, c in enumerate(f) if i)


def evaluate(f, x):
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def sign(x):
    return (x > 0) - (x < 0)


def primitive_int(f):
    """Positive rational multiple of ``f`` with coprime integer coefficients."""
    if not f:
        return ()
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return tuple(c // g for c in ints)


def signed_remainder_sequence(f, g):
    seq = [f, g]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return [s for s in seq if s]


def sign_variations(seq, x):
    signs = [sign(evaluate(s, x)) for s in seq]
    signs = [s for s in signs if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f, lo, hi):
    """Number of distinct real roots of squarefree ``f`` in (lo, hi].

    Neither endpoint may be a root.
    """
    seq = signed_remainder_sequence(f, derivative(f))
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def tarski_query(q, f, lo, hi):
    """Sum of sign(q(x)) over the real roots x of ``f`` in (lo, hi).

    Requires f(lo) != 0 and f(hi) != 0.
    """
    seq = signed_remainder_sequence(f, mul(derivative(f), q))
    return sign_variations(seq, lo) - sign_variations(seq, hi)
