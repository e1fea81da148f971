"""Words in the generators A, B and the embedding of 2x2 matrices.

The 1-dimensional generators produce the classical S and T of SL(2, Z).
Any 2x2 integer matrix embeds into dimension n by acting on the first and
last coordinates and fixing the middle ones.
"""

import random
from collections import deque

from ..projective import identity, int_inverse, mat_mul
from .system import monkemeyer_matrices

__all__ = [
    "S_MATRIX",
    "T_MATRIX",
    "t_from_generators",
    "s_from_generators",
    "embed",
    "word_matrix",
    "random_word",
    "search_words",
    "is_signed_permutation",
]

S_MATRIX = ((0, -1), (1, 0))
T_MATRIX = ((1, 1), (0, 1))


def t_from_generators():
    """T = B A^-1 B^-1 from the 1-dimensional generators."""
    sys = monkemeyer_matrices(1)
    return mat_mul(mat_mul(sys.B, int_inverse(sys.A)), int_inverse(sys.B))


def s_from_generators():
    """S = (T A T)^-1."""
    sys = monkemeyer_matrices(1)
    T = t_from_generators()
    return int_inverse(mat_mul(mat_mul(T, sys.A), T))


def embed(M, n=2):
    """[[a, b], [c, d]] acting on coordinates 0 and n of an (n+1)-column."""
    (a, b), (c, d) = M
    rows = [list(r) for r in identity(n + 1)]
    rows[0][0], rows[0][n], rows[n][0], rows[n][n] = a, b, c, d
    return tuple(tuple(r) for r in rows)


def _generators(n):
    sys = monkemeyer_matrices(n)
    return {
        "A": sys.A,
        "a": int_inverse(sys.A),
        "B": sys.B,
        "b": int_inverse(sys.B),
    }


def word_matrix(word, n=1):
    """Product of generators; lower case letters are inverses."""
    gens = _generators(n)
    M = identity(n + 1)
    for ch in word:
        M = mat_mul(M, gens[ch])
    return M


def random_word(rng, length):
    return "".join(rng.choice("AaBb") for _ in range(length))


def is_signed_permutation(M):
    size = len(M)
    for row in M:
        if sum(1 for x in row if x) != 1 or all(abs(x) != 1 for x in row if x):
            return False
    return all(sum(1 for r in M if r[j]) == 1 for j in range(size))


def search_words(n, predicate, max_length=8, limit=200000):
    """Breadth-first search over reduced words; returns (word, matrix) or None.

    Distinct matrices are visited once, so the search covers the ball of the
    given radius in the Cayley graph.
    """
    gens = _generators(n)
    inverse_of = {"A": "a", "a": "A", "B": "b", "b": "B"}
    start = identity(n + 1)
    seen = {start}
    queue = deque([("", start)])
    visited = 0
    while queue:
        word, M = queue.popleft()
        if word and predicate(M):
            return word, M
        visited += 1
        if visited > limit or len(word) >= max_length:
            continue
        for ch, G in gens.items():
            if word and inverse_of[ch] == word[-1]:
                continue
            N = mat_mul(M, G)
            if N not in seen:
                seen.add(N)
                queue.append((word + ch, N))
    return None
