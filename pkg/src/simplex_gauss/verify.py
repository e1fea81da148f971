"""Named verification suites shared by the command line and the tests."""

import random
import time
from fractions import Fraction

from . import _poly
from .analysis import VerificationReport, best_approx_verify, conjecture_harness
from .cf1d import (
    NonUnimodularError,
    approx_interval,
    cf_expand,
    gauss_step,
    lattice_triangle_check,
    rate_bounds_check,
)
from .exactnum import NumberField, floor
from .gaussnd.faces import face_point, facet_subshift_check
from .gaussnd.groups import (
    S_MATRIX,
    T_MATRIX,
    embed,
    random_word,
    s_from_generators,
    t_from_generators,
    word_matrix,
)
from .gaussnd.orbit import approx_simplexes, orbit
from .gaussnd.system import (
    Symbol,
    monkemeyer_matrices,
    on_piece_boundary,
    return_step,
    return_step_iterated,
    symbol_matrix,
)
from .projective import canonicalize, det, mat_mul, point

__all__ = [
    "SUITES",
    "run_suite",
    "random_prefix",
    "random_quadratic",
    "random_rational_point",
    "independent_quadratic_point",
    "unit_root_interval",
]


def random_prefix(rng, dim, length, max_k=4):
    fams = "ABC"[:dim]
    return [Symbol(rng.choice(fams), rng.randint(1, max_k)) for _ in range(length)]


def random_rational_point(rng, dim, max_den):
    den = rng.randint(1, max_den)
    xs = sorted((rng.randint(0, den) for _ in range(dim)), reverse=True)
    return point(*xs, den)


def unit_root_interval(minpoly):
    """The interval (0, 1) when it isolates a root of ``minpoly``."""
    f = _poly.poly(minpoly)
    if _poly.evaluate(f, 0) != 0 and _poly.evaluate(f, 1) != 0 and _poly.sturm_count(f, 0, 1) == 1:
        return (0, 1)
    raise ValueError("give --root-interval: (0, 1) does not isolate a single root")


def random_quadratic(rng, max_d=200):
    """frac(r + s sqrt(d)) for a random nonsquare d and small rationals r, s."""
    while True:
        d = rng.randint(2, max_d)
        root = int(d ** 0.5)
        if root * root != d:
            break
    K = NumberField([-d, 0, 1], (root, root + 1), check_irreducible=False)
    s = Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice((1, -1))
    r = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
    x = K.gen * s + r
    return x - floor(x)


_BIQUADRATIC = None


def _biquadratic():
    # Q(sqrt2, sqrt3) generated by a = sqrt2 + sqrt3
    global _BIQUADRATIC
    if _BIQUADRATIC is None:
        K = NumberField([1, 0, -10, 0, 1], (3, 4), check_irreducible=False)
        a = K.gen
        sqrt2 = (a ** 3 - 9 * a) / 2
        sqrt3 = (11 * a - a ** 3) / 2
        _BIQUADRATIC = (K, sqrt2, sqrt3, sqrt2 * sqrt3)
    return _BIQUADRATIC


def independent_quadratic_point(rng):
    """Interior point (x, y, z) whose coordinates and 1 are Q-independent.

    x, y, z are fractional parts of rational multiples of sqrt2, sqrt3, sqrt6.
    """
    K, *roots = _biquadratic()
    vals = []
    for root in roots:
        c = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        v = root * c
        vals.append(v - floor(v))
    vals.sort(reverse=True)
    return point(*vals, K.const(1))


# ---------------------------------------------------------------------------
# suites


def suite_rational_zero(rep, dim=2, max_den=20, max_steps=500, **_):
    ev = conjecture_harness("rational-zero", dim=dim, max_den=max_den, max_steps=max_steps)
    rep.total, rep.failures, rep.stats = ev.total, ev.failures, ev.stats


def suite_best_approx(rep, dim=2, samples=100, seed=0, max_len=None, max_k=4,
                      scan_bound=1000, **_):
    rng = random.Random(seed)
    sys = monkemeyer_matrices(dim)
    max_len = max_len or (12 if dim == 1 else 10)
    agree = 0
    for _ in range(samples):
        prefix = random_prefix(rng, dim, rng.randint(1, max_len), max_k)
        label = [str(s) for s in prefix]
        rep.total += 1
        sims = approx_simplexes(sys, prefix)
        bad = [i for i, S in enumerate(sims, 1) if abs(det(S)) != 1]
        if bad:
            rep.fail(label, f"non-unimodular simplex at depth {bad[0]}")
            continue
        sub = best_approx_verify(sims[-1], scan_bound)
        if sub.passed:
            agree += 1
        for f in sub.failures:
            rep.fail(label, f["detail"])
    rep.stats = {"dual_method_agreement": f"{agree}/{rep.total}"}


def suite_rate_bounds(rep, quad=(-1, 2, 1), root_interval=None, n=20, **_):
    K = NumberField(list(quad), root_interval or unit_root_interval(quad))
    x = K.gen
    cf = cf_expand(x, n + 1)
    for k in range(1, n + 1):
        rep.total += 1
        if not rate_bounds_check(x, k, cf):
            rep.fail({"minpoly": list(quad), "n": k}, "bound chain violated")


def suite_lattice_pick(rep, samples=100, seed=0, max_len=12, max_k=9, scan_bound=1000, **_):
    rng = random.Random(seed)
    for _ in range(samples):
        terms = [rng.randint(1, max_k) for _ in range(rng.randint(1, max_len))]
        for n in range(1, len(terms) + 1):
            rep.total += 1
            S = approx_interval(terms, n)
            try:
                ok = lattice_triangle_check(S, scan_bound)
            except NonUnimodularError as e:
                rep.fail({"terms": terms, "n": n}, str(e))
                continue
            if not ok:
                rep.fail({"terms": terms, "n": n}, "extra lattice point or Pick mismatch")


def suite_group_identities(rep, samples=100, seed=0, word_length=8, **_):
    rep.total += 2
    if t_from_generators() != T_MATRIX:
        rep.fail("T = B A^-1 B^-1", str(t_from_generators()))
    if s_from_generators() != S_MATRIX:
        rep.fail("S = (T A T)^-1", str(s_from_generators()))
    rng = random.Random(seed)
    for dim in (2, 3):
        for _ in range(samples):
            u, v = random_word(rng, word_length), random_word(rng, word_length)
            X, Y = word_matrix(u), word_matrix(v)
            rep.total += 1
            if embed(mat_mul(X, Y), dim) != mat_mul(embed(X, dim), embed(Y, dim)):
                rep.fail({"dim": dim, "words": [u, v]}, "embedding is not multiplicative")
        one, big = monkemeyer_matrices(1), monkemeyer_matrices(dim)
        for k in range(1, 21):
            rep.total += 1
            if embed(symbol_matrix(one, Symbol("A", k)), dim) != symbol_matrix(big, Symbol("A", k)):
                rep.fail({"dim": dim, "k": k}, "embedding does not carry A_k to A_k")


def suite_first_return_equiv(rep, dim=2, samples=1000, seed=0, max_den=60, **_):
    rng = random.Random(seed)
    sys = monkemeyer_matrices(dim)
    skipped = 0
    while rep.total < samples:
        p = random_rational_point(rng, dim, max_den)
        if p.is_zero_vertex() or on_piece_boundary(sys, p):
            skipped += 1
            continue
        rep.total += 1
        closed = return_step(sys, p)
        iterated = return_step_iterated(sys, p)
        if closed != iterated:
            rep.fail(p.to_json(), f"closed form {closed} vs iteration {iterated}")
    rep.stats = {"boundary_points_skipped": skipped}


def suite_subshift_face(rep, samples=200, interior_samples=200, steps=50, seed=0,
                        max_den=60, **_):
    ev = conjecture_harness("subshift-face", samples=samples, steps=steps, seed=seed,
                            max_den=max_den)
    rep.total, rep.failures = ev.total, list(ev.failures)
    stats = {"face_classes": ev.stats["classes"]}
    rng = random.Random(seed + 1)
    sys = monkemeyer_matrices(3)
    interior = {}
    for _ in range(interior_samples):
        p = independent_quadratic_point(rng)
        rep.total += 1
        res = orbit(sys, p, steps)
        cls = facet_subshift_check(res.symbols)
        interior[cls] = interior.get(cls, 0) + 1
        if cls != "interior-consistent":
            rep.fail(p.to_json(), f"interior point classified {cls}")
    stats["interior_classes"] = interior
    rep.stats = stats


def suite_edge_1d(rep, samples=100, seed=0, max_den=200, **_):
    rng = random.Random(seed)
    sys2, sys3 = monkemeyer_matrices(2), monkemeyer_matrices(3)
    for _ in range(samples):
        den = rng.randint(2, max_den)
        x = Fraction(rng.randint(1, den), den)
        gx, _k = gauss_step(x)
        for label, p in (("diagonal", point(x, x, 1)), ("base", point(x, 0, 1))):
            rep.total += 1
            img, _sym = return_step(sys2, p)
            if img.affine() != (gx, 0):
                rep.fail({"edge": label, "x": str(x)}, f"image {img.to_json()}")
        a = rng.randint(2, den - 1) if den > 2 else 2
        if den > 2:
            fx, fy = Fraction(a, den), Fraction(rng.randint(1, a - 1), den)
            rep.total += 1
            img, sym = return_step(sys3, face_point("FR", fx, fy))
            want = canonicalize(face_point("BC", 1 - fy, fx - fy))
            if img != want or sym != Symbol("C", 1):
                rep.fail({"face": "FR", "x": str(fx), "y": str(fy)}, f"got {img.to_json()} {sym}")


SUITES = {
    "rational-zero": suite_rational_zero,
    "best-approx": suite_best_approx,
    "rate-bounds": suite_rate_bounds,
    "lattice-pick": suite_lattice_pick,
    "group-identities": suite_group_identities,
    "first-return-equiv": suite_first_return_equiv,
    "subshift-face": suite_subshift_face,
    "edge-1d": suite_edge_1d,
}


def run_suite(name, **params):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    rep = VerificationReport(name)
    t0 = time.perf_counter()
    SUITES[name](rep, **params)
    rep.wall_time = time.perf_counter() - t0
    return rep
