"""Generator matrices, the two-branch map and its first-return map.

Points are homogeneous columns (x1, ..., xn, w) in the base simplex
V = {w >= x1 >= ... >= xn >= 0}.  The two-branch map applies ``A`` when
x1 + xn <= w and ``B`` otherwise.  Its first return to the B-region is
G = B A^k, where k counts the A-steps taken first; the pieces of G carry
symbols ``A_m``, ``B_m``, ``C_m``, ...
"""

from dataclasses import dataclass
from functools import lru_cache
from string import ascii_uppercase

from ..exactnum import floor, sign
from ..projective import (
    apply_matrix,
    canonicalize,
    det,
    int_inverse,
    mat_mul,
    mat_pow,
    mat_vec,
)

__all__ = [
    "MAX_DIM",
    "MapSystem",
    "Symbol",
    "monkemeyer_matrices",
    "monkemeyer_step",
    "in_base_simplex",
    "classify_piece",
    "classify_by_iteration",
    "on_piece_boundary",
    "return_step",
    "return_step_iterated",
    "symbol_matrix",
    "symbol_inverse",
    "a_steps",
    "symbol_from_a_steps",
    "translation_matrix",
    "check_dets",
]

MAX_DIM = 8


@dataclass(frozen=True, order=True)
class Symbol:
    """Piece label: family letter and index k >= 1 (``A3``, ``B1``, ...)."""

    family: str
    k: int

    def __post_init__(self):
        if len(self.family) != 1 or self.family not in ascii_uppercase[:MAX_DIM] or self.k < 1:
            raise ValueError(f"invalid symbol {self.family}{self.k}")

    @property
    def family_index(self):
        return ascii_uppercase.index(self.family)

    def __str__(self):
        return f"{self.family}{self.k}"

    def to_json(self):
        return {"family": self.family, "k": self.k}

    @classmethod
    def from_json(cls, data):
        return cls(data["family"], int(data["k"]))

    @classmethod
    def parse(cls, text):
        text = text.strip()
        return cls(text[0].upper(), int(text[1:]))


@dataclass(frozen=True)
class MapSystem:
    """Matrices of the n-dimensional two-branch map."""

    n: int
    A: tuple
    B: tuple
    V: tuple

    @property
    def size(self):
        return self.n + 1

    @property
    def families(self):
        return ascii_uppercase[: self.n]

    @property
    def closed_form(self):
        return self.n <= 3

    def __repr__(self):
        return f"MapSystem(n={self.n})"


def _e(size, i):
    return [int(j == i) for j in range(size)]


@lru_cache(maxsize=None)
def monkemeyer_matrices(n, max_dim=MAX_DIM):
    if not 1 <= n <= max_dim:
        raise ValueError(f"dimension {n} outside 1..{max_dim}")
    size = n + 1
    last_x = n - 1
    middle = []
    for i in range(1, n):
        row = _e(size, i - 1)
        row[last_x] -= 1
        middle.append(row)
    top_b = _e(size, n)
    top_b[last_x] -= 1
    A = [_e(size, 0)] + middle + [top_b]
    B = [top_b] + middle + [_e(size, 0)]
    V = [[int(i < j) for j in range(size)] for i in range(n)] + [[1] * size]
    as_mat = lambda m: tuple(tuple(r) for r in m)
    return MapSystem(n, as_mat(A), as_mat(B), as_mat(V))


# ---------------------------------------------------------------------------
# symbols and their matrices


def a_steps(n, sym):
    """Number of A-steps preceding the B-step for the given symbol."""
    return n * sym.k - 1 - sym.family_index


def symbol_from_a_steps(n, k):
    return Symbol(ascii_uppercase[n - 1 - k % n], k // n + 1)


@lru_cache(maxsize=4096)
def _symbol_matrix(n, family, k):
    sys = monkemeyer_matrices(n)
    sym = Symbol(family, k)
    if sym.family_index >= n:
        raise ValueError(f"family {family} does not exist in dimension {n}")
    return mat_mul(sys.B, mat_pow(sys.A, a_steps(n, sym)))


def symbol_matrix(sys, sym):
    """Matrix B A^(n k - 1 - f) of a piece, f the family index."""
    return _symbol_matrix(sys.n, sym.family, sym.k)


@lru_cache(maxsize=4096)
def _symbol_inverse(n, family, k):
    return int_inverse(_symbol_matrix(n, family, k))


def symbol_inverse(sys, sym):
    return _symbol_inverse(sys.n, sym.family, sym.k)


# ---------------------------------------------------------------------------
# the two-branch map


def in_base_simplex(p):
    c = canonicalize(p).coords
    if sign(c[-1]) <= 0 or sign(c[-2]) < 0:
        return False
    chain = (c[-1],) + c[:-1]
    return all(sign(a - b) >= 0 for a, b in zip(chain, chain[1:]))


def _canonical_in_v(p):
    q = canonicalize(p)
    if not in_base_simplex(q):
        raise ValueError(f"point {q.to_json()} is outside the base simplex")
    return q


def monkemeyer_step(sys, p):
    """One step of the two-branch map; ties x1 + xn = w take branch A."""
    q = _canonical_in_v(p)
    c = q.coords
    if sign(c[0] + c[-2] - c[-1]) <= 0:
        return apply_matrix(sys.A, q), "A"
    return apply_matrix(sys.B, q), "B"


def _count_a_steps(sys, c, limit):
    """A-steps taken from canonical coords ``c`` before branch B fires."""
    A = sys.A
    k = 0
    while sign(c[0] + c[-2] - c[-1]) <= 0:
        c = mat_vec(A, c)
        k += 1
        if k > limit:
            raise RuntimeError("no B-step within the iteration limit")
    return k


def classify_by_iteration(sys, p, limit=10**6):
    q = _canonical_in_v(p)
    if q.is_zero_vertex():
        raise ValueError("the zero vertex lies in no piece")
    return symbol_from_a_steps(sys.n, _count_a_steps(sys, q.coords, limit))


def _closed_form(sys, c):
    """Symbol and boundary flag from exact inequalities (n <= 3)."""
    n = sys.n
    x1, w = c[0], c[-1]
    m = floor(w / x1)
    t = w - m * x1
    boundary = sign(t) == 0
    family = "A"
    if n >= 2:
        y = c[1]
        sy = sign(y - t)
        boundary = boundary or sy == 0
        if n == 3:
            z = c[2]
            sz = sign(z - t)
            boundary = boundary or sz == 0
            if sz > 0:
                family = "C"
            elif sy > 0:
                family = "B"
        elif sy > 0:
            family = "B"
    return Symbol(family, m), boundary


def classify_piece(sys, p):
    """Symbol of the piece containing ``p`` (ties resolved toward A).

    Uses exact inequalities for n <= 3 and iteration of the two-branch map
    otherwise.
    """
    q = _canonical_in_v(p)
    if q.is_zero_vertex():
        raise ValueError("the zero vertex lies in no piece")
    if sys.closed_form:
        return _closed_form(sys, q.coords)[0]
    return classify_by_iteration(sys, q)


def on_piece_boundary(sys, p):
    """True when one of the deciding inequalities is an equality."""
    q = _canonical_in_v(p)
    if q.is_zero_vertex():
        return True
    if sys.closed_form:
        return _closed_form(sys, q.coords)[1]
    # generic n: a tie in any branch test along the way
    c = q.coords
    while True:
        s = sign(c[0] + c[-2] - c[-1])
        if s == 0:
            return True
        if s > 0:
            return False
        c = mat_vec(sys.A, c)


def return_step(sys, p, with_boundary=False):
    """Apply the first-return map: returns (image, symbol).

    The zero vertex is fixed and reported with symbol None.
    """
    q = _canonical_in_v(p)
    if q.is_zero_vertex():
        return (q, None, True) if with_boundary else (q, None)
    if sys.closed_form:
        sym, boundary = _closed_form(sys, q.coords)
    else:
        sym = classify_by_iteration(sys, q)
        boundary = on_piece_boundary(sys, q) if with_boundary else False
    image = apply_matrix(symbol_matrix(sys, sym), q)
    return (image, sym, boundary) if with_boundary else (image, sym)


def return_step_iterated(sys, p, limit=10**6):
    """First return computed by stepping the two-branch map until B fires."""
    q = _canonical_in_v(p)
    if q.is_zero_vertex():
        return q, None
    k = 0
    while True:
        q, branch = monkemeyer_step(sys, q)
        if branch == "B":
            return q, symbol_from_a_steps(sys.n, k)
        k += 1
        if k > limit:
            raise RuntimeError("no B-step within the iteration limit")


def translation_matrix(n, m=1):
    """A^(n m): subtracts m times x1 from w."""
    size = n + 1
    rows = [list(r) for r in (tuple(int(i == j) for j in range(size)) for i in range(size))]
    rows[n][0] = -m
    return tuple(tuple(r) for r in rows)


def check_dets(sys):
    return det(sys.A), det(sys.B), det(sys.V)
