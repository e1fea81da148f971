"""Multidimensional two-branch maps and their first-return Gauss maps."""

from .faces import (
    BreveWord,
    StreakRewrite,
    face_point,
    facet_subshift_check,
    run_face_automaton,
    streak_rewrite,
)
from .groups import embed, s_from_generators, search_words, t_from_generators, word_matrix
from .orbit import (
    Itinerary,
    OrbitResult,
    approx_matrices,
    approx_simplexes,
    is_nested,
    itinerary,
    orbit,
    orbit_nf,
)
from .system import (
    MapSystem,
    Symbol,
    a_steps,
    classify_by_iteration,
    classify_piece,
    in_base_simplex,
    monkemeyer_matrices,
    monkemeyer_step,
    on_piece_boundary,
    return_step,
    return_step_iterated,
    symbol_from_a_steps,
    symbol_inverse,
    symbol_matrix,
    translation_matrix,
)
