"""One-dimensional Farey and Gauss maps, continued fractions and convergents.

Points of [0, 1] are exact scalars: ``Fraction`` or an ``NFElement``
(typically a quadratic irrational).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, gcd

from . import _poly
from ._lattice import hull_lattice_scan
from .exactnum import NFElement, as_fraction, enclosure, floor, sign
from .projective import det, mat_mul

__all__ = [
    "CFExpansion",
    "NonUnimodularError",
    "farey_step",
    "gauss_step",
    "cf_expand",
    "convergents",
    "convergent_matrices",
    "approx_interval",
    "quad_periodicity",
    "lattice_triangle_check",
    "rate_bounds_check",
    "FAREY_A",
    "FAREY_B",
    "FAREY_V",
]

FAREY_A = ((1, 0), (-1, 1))
FAREY_B = ((-1, 1), (1, 0))
FAREY_V = ((0, 1), (1, 1))


class NonUnimodularError(ValueError):
    pass


def _scalar(x):
    if isinstance(x, NFElement):
        return x.coeffs[0] if x.is_rational() else x
    return as_fraction(x)


def _check_unit(x):
    if sign(x) < 0 or sign(x - 1) > 0:
        raise ValueError(f"{x} is outside [0, 1]")


def farey_step(x):
    """One Farey step; the midpoint 1/2 takes branch A."""
    x = _scalar(x)
    _check_unit(x)
    if sign(2 * x - 1) <= 0:
        return x / (1 - x), "A"
    return (1 - x) / x, "B"


def gauss_step(x):
    """Return (G(x), k) with 1/(k+1) < x <= 1/k; zero maps to (0, None)."""
    x = _scalar(x)
    _check_unit(x)
    if sign(x) == 0:
        return x, None
    inv = 1 / x
    k = floor(inv)
    return inv - k, k


@dataclass(frozen=True)
class CFExpansion:
    """Partial quotients a1, a2, ... of a point of [0, 1]."""

    terms: tuple
    status: str = "finite"  # or "truncated"

    def __post_init__(self):
        if self.status not in ("finite", "truncated"):
            raise ValueError(f"bad status {self.status!r}")
        if any(int(t) < 1 for t in self.terms):
            raise ValueError("partial quotients must be positive")

    def __len__(self):
        return len(self.terms)

    def to_json(self):
        return {"terms": list(self.terms), "status": self.status}


def cf_expand(x, max_terms=64):
    terms = []
    x = _scalar(x)
    _check_unit(x)
    while sign(x) != 0:
        if len(terms) >= max_terms:
            return CFExpansion(tuple(terms), "truncated")
        x, k = gauss_step(x)
        terms.append(k)
    return CFExpansion(tuple(terms), "finite")


def _terms(cf):
    return tuple(cf.terms) if isinstance(cf, CFExpansion) else tuple(cf)


def convergents(cf):
    """List of (p_k, q_k) for k = 0..len, starting with 0/1."""
    p0, q0, p1, q1 = 1, 0, 0, 1
    out = [(0, 1)]
    for a in _terms(cf):
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        out.append((p1, q1))
    return out


def convergent_matrices(cf, n):
    """Product of the inverse branch matrices [[0,1],[1,a_k]] for k <= n."""
    terms = _terms(cf)
    if not 0 <= n <= len(terms):
        raise ValueError(f"n={n} outside 0..{len(terms)}")
    M = ((1, 0), (0, 1))
    for a in terms[:n]:
        M = mat_mul(M, ((0, 1), (1, a)))
    return M


def approx_interval(cf, n):
    """Columns (p_n, q_n) and the mediant (p_n + p_{n-1}, q_n + q_{n-1})."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return mat_mul(convergent_matrices(cf, n), FAREY_V)


def _own_quadratic(x):
    """Integer (a, b, c) with a x^2 + b x + c = 0 for a quadratic field element."""
    K = x.field
    c0, c1, c2 = (Fraction(v) for v in K.minpoly)
    r, s = x.coeffs
    a = c2
    b = -2 * c2 * r + c1 * s
    c = c2 * r * r - c1 * s * r + c0 * s * s
    return _poly.primitive_int(_poly.poly([c, b, a]))[::-1]


def quad_periodicity(x, cap=None):
    """Minimal preperiod and period of the expansion of a quadratic irrational."""
    if not isinstance(x, NFElement) or x.field.degree != 2:
        raise ValueError("expected an element of a quadratic field")
    if x.is_rational():
        raise ValueError("rational input has a finite expansion")
    _check_unit(x)
    if cap is None:
        a, b, _ = _own_quadratic(x)
        _, hi = enclosure(abs(2 * a * x + b), Fraction(1, 8))
        bound = abs(a) + ceil(hi)
        cap = 10 * 2 * (2 * bound + 1) ** 2
    seen = {}
    symbols = []
    while x.coeffs not in seen:
        if len(symbols) > cap:
            raise RuntimeError("orbit exceeded the finiteness bound")
        seen[x.coeffs] = len(symbols)
        x, k = gauss_step(x)
        symbols.append(k)
    start = seen[x.coeffs]
    return symbols[:start], symbols[start:]


def lattice_triangle_check(S, scan_bound=1000):
    """Scan hull{0, columns of S} for lattice points; True iff only vertices.

    Also confirms area 1/2 and Pick's formula on the scanned counts.
    """
    d = det(S)
    if abs(d) != 1:
        raise NonUnimodularError(f"determinant {d} is not +-1")
    found, expected = hull_lattice_scan(S, scan_bound)
    if found != expected:
        return False
    (x1, x2), (y1, y2) = S[0], S[1]
    c1, c2 = (x1, y1), (x2, y2)
    area = Fraction(abs(x1 * y2 - x2 * y1), 2)
    boundary = gcd(*c1) + gcd(*c2) + gcd(c1[0] - c2[0], c1[1] - c2[1])
    interior = 0  # only vertices were found
    return area == Fraction(1, 2) and area == interior + Fraction(boundary, 2) - 1


def rate_bounds_check(x, n, cf=None):
    """Exact check of the convergent error bounds at index n."""
    x = _scalar(x)
    if not isinstance(x, NFElement):
        raise ValueError("rational input: convergents terminate")
    if n < 1:
        raise ValueError("n must be at least 1")
    if cf is None:
        cf = cf_expand(x, n + 1)
    terms = _terms(cf)
    if len(terms) < n + 1:
        raise ValueError("not enough partial quotients")
    conv = convergents(terms[: n + 1])
    p, q = conv[n]
    q1 = conv[n + 1][1]
    err = abs(x - Fraction(p, q))
    bounds = [
        Fraction(1, 2 * q1 * q1),
        Fraction(1, q * (q + q1)),
        err,
        Fraction(1, q * q1),
        Fraction(1, q * q),
    ]
    return all(sign(hi - lo) > 0 for lo, hi in zip(bounds, bounds[1:]))
