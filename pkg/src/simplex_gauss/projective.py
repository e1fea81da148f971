"""Homogeneous points, integer matrices and simplexes given by vertex columns.

Matrices are tuples of row tuples of Python ints.  Points are
:class:`ProjPoint` columns whose coordinates are all ``Fraction`` or all
``NFElement`` over one field.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactnum import NFElement, as_fraction, format_poly, sign

__all__ = [
    "ProjPoint",
    "point",
    "canonicalize",
    "apply_matrix",
    "mat",
    "mat_mul",
    "mat_vec",
    "mat_pow",
    "identity",
    "det",
    "inverse",
    "int_inverse",
    "adjugate",
    "transpose",
    "columns",
    "from_columns",
    "barycentric",
    "simplex_contains",
    "unimodular_check",
    "matrix_to_json",
    "matrix_from_json",
]


@dataclass(frozen=True)
class ProjPoint:
    """A point of projective n-space as a column of n+1 exact scalars."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("a projective point needs at least two coordinates")
        if all(sign(c) == 0 for c in self.coords):
            raise ValueError("the zero vector is not a projective point")

    @property
    def dim(self):
        return len(self.coords) - 1

    @property
    def field(self):
        c = self.coords[0]
        return c.field if isinstance(c, NFElement) else None

    def affine(self):
        """Affine coordinates (all but the last, divided by the last)."""
        w = self.coords[-1]
        if sign(w) == 0:
            raise ValueError("point at infinity has no affine coordinates")
        return tuple(c / w for c in self.coords[:-1])

    def is_zero_vertex(self):
        return all(sign(c) == 0 for c in self.coords[:-1])

    def to_json(self):
        return [scalar_to_str(c) for c in self.coords]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


def scalar_to_str(c):
    if isinstance(c, NFElement):
        return format_poly(c.coeffs)
    return str(c)


def point(*coords, field=None, affine=False):
    """Build a point from ints, Fractions, strings or field elements.

    With ``affine=True`` a trailing coordinate 1 is appended.
    """
    if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
        coords = tuple(coords[0])
    vals = []
    for c in coords:
        if isinstance(c, NFElement):
            vals.append(c)
        else:
            vals.append(as_fraction(c))
    if affine:
        vals.append(Fraction(1))
    if field is None:
        field = next((c.field for c in vals if isinstance(c, NFElement)), None)
    if field is not None:
        vals = [c if isinstance(c, NFElement) else field.const(c) for c in vals]
    return ProjPoint(tuple(vals))


def canonicalize(p):
    """Canonical representative of the projective class of ``p``.

    Rational points become coprime integer columns whose last nonzero entry is
    positive; field points are divided by their last nonzero entry.
    """
    coords = p.coords
    if isinstance(coords[0], NFElement):
        last = next(c for c in reversed(coords) if not c.is_zero())
        if last == 1:
            return p
        inv = 1 / last
        return ProjPoint(tuple(c * inv for c in coords))
    fr = [as_fraction(c) for c in coords]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    last = next(c for c in reversed(ints) if c)
    if last < 0:
        g = -g
    return ProjPoint(tuple(Fraction(c // g) for c in ints))


# ---------------------------------------------------------------------------
# integer matrices


def mat(rows):
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity(size):
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def transpose(M):
    return tuple(zip(*M))


def columns(M):
    return [tuple(col) for col in zip(*M)]


def from_columns(cols):
    return tuple(zip(*cols))


def mat_mul(M, N):
    Nt = tuple(zip(*N))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Nt) for row in M)


def mat_vec(M, v):
    out = []
    for row in M:
        acc = 0
        for a, x in zip(row, v):
            if a:
                acc = acc + a * x if a != 1 else acc + x
        out.append(acc)
    return tuple(out)


def mat_pow(M, k):
    if k < 0:
        return mat_pow(int_inverse(M), -k)
    result = identity(len(M))
    base = M
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det(M):
    """Exact determinant of an integer matrix (Bareiss elimination)."""
    A = [list(r) for r in M]
    n = len(A)
    s = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            s = -s
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return s * A[n - 1][n - 1]


def inverse(M):
    """Exact inverse with Fraction entries (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(r[n:]) for r in A)


def adjugate(M):
    d = det(M)
    if d == 0:
        # cofactor route for singular input
        n = len(M)
        def minor(i, j):
            return [[M[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
        return tuple(tuple((-1) ** (i + j) * det(minor(j, i)) for j in range(n))
                     for i in range(n))
    inv = inverse(M)
    return tuple(tuple(int(x * d) for x in r) for r in inv)


def int_inverse(M):
    """Inverse of a unimodular integer matrix, as an integer matrix."""
    inv = inverse(M)
    if any(x.denominator != 1 for r in inv for x in r):
        raise ValueError("matrix is not unimodular")
    return tuple(tuple(int(x) for x in r) for r in inv)


def unimodular_check(M):
    """Exact determinant; callers assert ``abs(result) == 1`` where needed."""
    return det(M)


def apply_matrix(M, p):
    if len(M) != len(p.coords):
        raise ValueError("dimension mismatch")
    v = mat_vec(M, p.coords)
    if all(sign(c) == 0 for c in v):
        raise ValueError("matrix sends the point to the zero vector")
    return canonicalize(ProjPoint(v))


# ---------------------------------------------------------------------------
# simplex membership


def barycentric(S, p):
    """Coefficients c with S c = p, each vertex scaled to positive last entry.

    The point is scaled to a positive last coordinate as well, so membership in
    the closed simplex is ``all(c >= 0)``.
    """
    if det(S) == 0:
        raise ValueError("singular simplex")
    coords = p.coords
    w = coords[-1]
    ws = sign(w)
    if ws == 0:
        raise ValueError("point is not affine")
    inv = inverse(S)
    cols = columns(S)
    out = []
    for i, row in enumerate(inv):
        acc = 0
        for a, x in zip(row, coords):
            if a:
                acc = acc + a * x
        vs = 1 if cols[i][-1] > 0 else (-1 if cols[i][-1] < 0 else 1)
        out.append(acc * (vs * ws))
    return out


def simplex_contains(S, p, boundary="closed"):
    """Exact membership test of ``p`` in the simplex with vertex columns ``S``.

    ``boundary`` is 'closed', 'open', or a sequence of booleans; entry i says
    whether the face opposite vertex i belongs to the simplex.
    """
    c = barycentric(S, p)
    n = len(c)
    if boundary == "closed":
        keep = [True] * n
    elif boundary == "open":
        keep = [False] * n
    else:
        keep = list(boundary)
        if len(keep) != n:
            raise ValueError("per-face policy needs one flag per vertex")
    for ci, closed in zip(c, keep):
        s = sign(ci)
        if s < 0 or (s == 0 and not closed):
            return False
    return True


def matrix_to_json(M):
    return [[str(x) for x in row] for row in M]


def matrix_from_json(data):
    return tuple(tuple(int(x) for x in row) for row in data)
