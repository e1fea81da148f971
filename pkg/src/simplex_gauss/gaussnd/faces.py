"""Face dynamics of the 3-dimensional return map.

Itineraries of points on the faces AB, AC, BC and FR of the tetrahedron
follow small automata on the family letters.  Starting on AB or AC the
orbit alternates between those two faces, switching on B (from AB) or C
(from AC) and staying put on A.  BC is left after one step, to AB on B and
to AC on C; the frontal face FR lies in the piece C1 and maps into BC.
"""

from dataclasses import dataclass

from ..cf1d import convergents
from ..projective import identity, mat_mul, point
from .system import Symbol, monkemeyer_matrices, symbol_inverse

__all__ = [
    "FACE_MOVES",
    "run_face_automaton",
    "facet_subshift_check",
    "BreveWord",
    "StreakRewrite",
    "streak_rewrite",
    "face_point",
]

# node -> {family letter: next node}
FACE_MOVES = {
    "AB": {"A": "AB", "B": "AC"},
    "AC": {"A": "AC", "C": "AB"},
    "BC": {"B": "AB", "C": "AC"},
}


def _letters(symbols):
    return [s.family if isinstance(s, Symbol) else Symbol.parse(s).family for s in symbols]


def run_face_automaton(symbols, start):
    """True if the symbol sequence is a path from node ``start``."""
    node = start
    for letter in _letters(symbols):
        node = FACE_MOVES[node].get(letter)
        if node is None:
            return False
    return True


def facet_subshift_check(symbols, dim=3):
    """Classify a 3-dimensional itinerary prefix by the face automata.

    Returns one of 'edge-A', 'face-AB', 'face-AC', 'face-BC',
    'face-FR-start' or 'interior-consistent' (no face path fits).
    """
    if dim != 3:
        raise ValueError("face automata are defined for dimension 3")
    symbols = [s if isinstance(s, Symbol) else Symbol.parse(s) for s in symbols]
    letters = _letters(symbols)
    if all(c == "A" for c in letters):
        return "edge-A"
    if run_face_automaton(symbols, "AB"):
        return "face-AB"
    if run_face_automaton(symbols, "AC"):
        return "face-AC"
    if run_face_automaton(symbols, "BC"):
        return "face-BC"
    if symbols[0] == Symbol("C", 1) and run_face_automaton(symbols[1:], "BC"):
        return "face-FR-start"
    return "interior-consistent"


def face_point(face, x, y):
    """Homogeneous point of a face from parameters 0 < y < x < 1."""
    if face == "AB":
        return point(x, y, 0, 1)
    if face == "AC":
        return point(x, y, y, 1)
    if face == "BC":
        return point(x, x, y, 1)
    if face == "FR":
        return point(1, x, y, 1)
    raise ValueError(f"unknown face {face!r}")


@dataclass(frozen=True)
class BreveWord:
    """An A-streak with continued fraction p/q (predecessor r/s) closed by B_n or C_n."""

    kind: str  # 'B' or 'C'
    p: int
    q: int
    r: int
    s: int
    n: int
    streak: tuple = ()

    def inverse_matrix(self):
        p, q, r, s, n = self.p, self.q, self.r, self.s, self.n
        if self.kind == "B":
            return (
                (p, 0, -p, r + n * p),
                (0, 0, -1, 1),
                (0, 1, -1, 0),
                (q, 0, -q, s + n * q),
            )
        return (
            (p, -p, 0, r + n * p),
            (0, -1, 1, 1),
            (0, -1, 0, 1),
            (q, -q, 0, s + n * q),
        )

    def symbols(self):
        return tuple(Symbol("A", a) for a in self.streak) + (Symbol(self.kind, self.n),)

    def product_matrix(self):
        """The same inverse matrix, as a product of inverse symbol matrices."""
        sys = monkemeyer_matrices(3)
        M = identity(4)
        for sym in self.symbols():
            M = mat_mul(M, symbol_inverse(sys, sym))
        return M

    def __str__(self):
        return f"{self.kind}~[{self.p}/{self.q}],{self.n}"

    def to_json(self):
        return {"kind": self.kind, "p": self.p, "q": self.q, "r": self.r,
                "s": self.s, "n": self.n, "streak": list(self.streak)}


@dataclass(frozen=True)
class StreakRewrite:
    words: tuple
    tail: tuple = ()  # indices of a trailing A-streak, if any


def streak_rewrite(symbols, dim=3):
    """Group each A-streak with the B or C symbol that closes it.

    The closing letters must alternate between B and C as on the AB/AC
    automaton; otherwise ValueError is raised.
    """
    if dim != 3:
        raise ValueError("streak rewriting is defined for dimension 3")
    words = []
    streak = []
    for sym in symbols:
        sym = sym if isinstance(sym, Symbol) else Symbol.parse(sym)
        if sym.family == "A":
            streak.append(sym.k)
            continue
        if sym.family not in "BC":
            raise ValueError(f"unexpected symbol {sym}")
        if words and words[-1].kind == sym.family:
            raise ValueError("closing symbols must alternate between B and C")
        conv = convergents(streak)
        (r, s), (p, q) = ((1, 0), conv[0]) if not streak else (conv[-2], conv[-1])
        words.append(BreveWord(sym.family, p, q, r, s, sym.k, tuple(streak)))
        streak = []
    return StreakRewrite(tuple(words), tuple(streak))
