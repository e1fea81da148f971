"""Lyapunov estimates, approximation-rate tables and verification sweeps."""

import csv
import io
import random
import time
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from mpmath import iv
from mpmath.libmp import to_rational

from ._lattice import hull_lattice_scan
from .cf1d import NonUnimodularError, cf_expand, convergents, gauss_step
from .exactnum import NFElement, decimal_string, enclosure, sign
from .gaussnd.faces import face_point, facet_subshift_check
from .gaussnd.orbit import approx_simplexes, orbit
from .gaussnd.system import monkemeyer_matrices
from .projective import ProjPoint, canonicalize, columns, det, inverse, mat_vec

__all__ = [
    "LyapunovEstimate",
    "lyapunov_estimate",
    "GammaValue",
    "RateTable",
    "gamma_rates",
    "VerificationReport",
    "best_approx_verify",
    "conjecture_harness",
    "rational_points",
]

LYAPUNOV_DIGITS = 30
GAMMA_DIGITS = 50


# ---------------------------------------------------------------------------
# Lyapunov exponent


@dataclass
class LyapunovEstimate:
    value: Decimal
    N: int
    method: str
    tail: list  # (k, estimate) over the trailing window
    running_max: Decimal

    def to_json(self):
        return {
            "value": str(self.value),
            "N": self.N,
            "method": self.method,
            "tail": [[k, str(v)] for k, v in self.tail],
            "running_max": str(self.running_max),
            "digits": LYAPUNOV_DIGITS,
        }


def _ln(x, prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        return Decimal(x).ln()


def _ln_fraction(x, prec):
    with localcontext() as ctx:
        ctx.prec = prec + 10
        return (Decimal(x.numerator) / Decimal(x.denominator)).ln()


def lyapunov_estimate(source, N, method="denominator", window=10, digits=LYAPUNOV_DIGITS):
    """Finite-N Lyapunov estimate from an expansion or an exact irrational.

    'denominator': (2/N) log q_N from the exact convergent denominator.
    'derivative':  (1/N) sum of -2 log x_j along the Gauss orbit (needs a point).
    """
    if N < 1:
        raise ValueError("N must be positive")
    if method == "denominator":
        if isinstance(source, (Fraction, int, NFElement)):
            cf = cf_expand(source, N)
        else:
            cf = source
        terms = tuple(cf.terms if hasattr(cf, "terms") else cf)
        if len(terms) < N:
            raise ValueError("rational input: the expansion ends before N terms")
        qs = [q for _, q in convergents(terms[:N])]

        def est(k):
            with localcontext() as ctx:
                ctx.prec = digits + 10
                return 2 * _ln(qs[k], digits) / k
    elif method == "derivative":
        if not isinstance(source, NFElement) or source.is_rational():
            raise ValueError("the derivative method needs an exact irrational point")
        logs = []
        x = source
        for _ in range(N):
            lo, hi = enclosure(x, Fraction(1, 10 ** (digits + 15)))
            logs.append(_ln_fraction((lo + hi) / 2, digits))
            x, k = gauss_step(x)
            if k is None:
                raise ValueError("orbit reached zero")
        prefix = [Decimal(0)]
        with localcontext() as ctx:
            ctx.prec = digits + 10
            for v in logs:
                prefix.append(prefix[-1] + v)

        def est(k):
            with localcontext() as ctx:
                ctx.prec = digits + 10
                return -2 * prefix[k] / k
    else:
        raise ValueError(f"unknown method {method!r}")
    with localcontext() as ctx:
        ctx.prec = digits
        tail = [(k, +est(k)) for k in range(max(1, N - window + 1), N + 1)]
    value = tail[-1][1]
    return LyapunovEstimate(value, N, method, tail, max(v for _, v in tail))


# ---------------------------------------------------------------------------
# approximation rates


def _iv_from(lo, hi):
    a = iv.mpf(lo.numerator) / lo.denominator
    b = iv.mpf(hi.numerator) / hi.denominator
    return iv.mpf([a.a, b.b])


def _exact(raw):
    p, q = to_rational(raw)
    return Fraction(int(p), int(q))


@dataclass(frozen=True)
class GammaValue:
    """Rigorous enclosure [lower, upper] of a rate value (None when infinite)."""

    lower: Fraction = None
    upper: Fraction = None

    @property
    def infinite(self):
        return self.lower is None

    def render(self, digits=20):
        if self.infinite:
            return "inf"
        mid = (self.lower + self.upper) / 2
        return decimal_string(mid, digits)

    def bounds(self, digits=GAMMA_DIGITS):
        if self.infinite:
            return "inf", "inf"
        return (decimal_string(self.lower, digits, "down"),
                decimal_string(self.upper, digits, "up"))

    def strictly_inside(self, a, b):
        return not self.infinite and self.lower > a and self.upper < b


@dataclass
class RateTable:
    rows: list  # (n, (GammaValue, ...))
    precision: int = GAMMA_DIGITS

    def column(self, i):
        return [g[i] for _, g in self.rows]

    def to_csv(self, digits=20):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        width = len(self.rows[0][1]) if self.rows else 3
        w.writerow(["n"] + [f"gamma{i + 1}" for i in range(width)])
        for n, gs in self.rows:
            w.writerow([n] + [g.render(digits) for g in gs])
        return buf.getvalue()

    def summary(self, digits=6):
        out = {}
        width = len(self.rows[0][1]) if self.rows else 0
        for i in range(width):
            finite = [g for g in self.column(i) if not g.infinite]
            key = f"gamma{i + 1}"
            if not finite:
                out[key] = {"min": "inf", "max": "inf"}
                continue
            out[key] = {
                "min": decimal_string(min(g.lower for g in finite), digits, "down"),
                "max": decimal_string(max(g.upper for g in finite), digits, "up"),
                "infinite": sum(1 for g in self.column(i) if g.infinite),
            }
        return out


def _gamma(err, r, prec):
    """Enclosure of -log(err) / log(r) with err an exact positive scalar."""
    if r == 1:
        return GammaValue()
    width = Fraction(1, 2**16)
    lo, hi = enclosure(err, width)
    while lo <= 0:
        width /= 2**64
        lo, hi = enclosure(err, width)
    # relative width far below the working precision
    lo, hi = enclosure(err, lo / 10 ** (prec + 10))
    old = iv.prec
    try:
        iv.dps = prec + 10
        g = -iv.log(_iv_from(lo, hi)) / iv.log(iv.mpf(r))
        return GammaValue(_exact(g._mpi_[0]), _exact(g._mpi_[1]))
    finally:
        iv.prec = old


def gamma_rates(sys, p, N, start=1, precision=GAMMA_DIGITS, max_steps=None):
    """Rates of the columns of the approximating simplexes, n = start..N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    if sys.n != 2:
        raise ValueError("rate tables are defined for dimension 2")
    p = canonicalize(p)
    res = orbit(sys, p, max_steps or N)
    if res.itinerary.status == "reached_zero":
        raise ValueError("rational point: the itinerary terminates")
    syms = list(res.symbols)
    if len(syms) < N:
        # a periodic orbit keeps repeating its period
        it = res.itinerary
        while len(syms) < N:
            syms.extend(it.period)
    x, y = p.affine()
    rows = []
    for n, S in enumerate(approx_simplexes(sys, syms[:N]), start=1):
        if n < start:
            continue
        gs = []
        for cx, cy, r in columns(S):
            if r == 0:
                raise ValueError("simplex column at infinity")
            err = abs(x - Fraction(cx, r)) + abs(y - Fraction(cy, r))
            if sign(err) == 0:
                raise ValueError("point coincides with a simplex vertex")
            gs.append(_gamma(err, r, precision))
        rows.append((n, tuple(gs)))
    return RateTable(rows, precision)


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class VerificationReport:
    suite: str
    total: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    kind: str = "verification"  # or "evidence" for conjecture sweeps
    stats: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def fail(self, inp, detail):
        self.failures.append({"input": inp, "detail": detail})

    def to_json(self, include_time=False):
        out = {"suite": self.suite, "total": self.total, "failures": self.failures}
        out["kind"] = self.kind
        out["result"] = ("pass" if self.passed else "fail") if self.kind == "verification" \
            else ("evidence: no counterexample" if self.passed else "evidence: counterexample candidates")
        if self.stats:
            out["stats"] = self.stats
        if include_time:
            out["wall_time"] = round(self.wall_time, 6)
        return out


def best_approx_verify(S, scan_bound=50):
    """Two independent checks that hull{0, columns} has no extra lattice points.

    (a) the exact inverse is integral, so lattice points have integral
        barycentric coordinates, which in the hull forces 0 or a vertex;
    (b) a brute-force scan of the box clipped to ``scan_bound``.
    """
    t0 = time.perf_counter()
    d = det(S)
    if abs(d) != 1:
        raise NonUnimodularError(f"determinant {d} is not +-1")
    rep = VerificationReport("best-approx")
    rep.total = 1
    inv = inverse(S)
    integral = all(x.denominator == 1 for r in inv for x in r)
    size = len(S)
    # integral barycentric vectors c >= 0 with sum <= 1
    cands = [tuple([0] * size)] + [tuple(int(i == j) for j in range(size)) for i in range(size)]
    predicted = set()
    for c in cands:
        v = mat_vec(S, c)
        if all(-scan_bound <= x <= scan_bound for x in v):
            predicted.add(v)
    found, expected = hull_lattice_scan(S, scan_bound)
    if not integral:
        rep.fail(_mat_str(S), "inverse is not integral")
    if found != len(predicted) or expected != len(predicted):
        rep.fail(_mat_str(S), f"scan found {found} lattice points, predicted {len(predicted)}")
    rep.stats = {"lattice_points": found, "predicted": len(predicted)}
    rep.wall_time = time.perf_counter() - t0
    return rep


def _mat_str(M):
    return [[str(x) for x in r] for r in M]


# ---------------------------------------------------------------------------
# conjecture sweeps


def rational_points(dim, max_den):
    """Distinct canonical rational points of the base simplex, denominators <= max_den."""
    seen = set()

    def rec(prefix, upper, den):
        if len(prefix) == dim:
            p = canonicalize(ProjPoint(tuple(Fraction(c) for c in prefix) + (Fraction(den),)))
            if p.coords not in seen:
                seen.add(p.coords)
                yield p
            return
        for c in range(upper, -1, -1):
            yield from rec(prefix + [c], c, den)

    for den in range(1, max_den + 1):
        yield from rec([], den, den)


def _state_json(p):
    return p.to_json()


def _harness_rational_zero(rep, dim=2, max_den=20, max_steps=500, **_):
    sys = monkemeyer_matrices(dim)
    longest = 0
    for p in rational_points(dim, max_den):
        rep.total += 1
        res = orbit(sys, p, max_steps)
        if res.itinerary.status != "reached_zero":
            rep.fail(_state_json(p), f"status {res.itinerary.status}")
            continue
        longest = max(longest, len(res.symbols))
        for a, b in zip(res.states, res.states[1:]):
            x1, w = a.coords[0], a.coords[-1]
            if x1 < w and not b.coords[-1] < w:
                rep.fail(_state_json(p), f"last entry did not decrease at {a.to_json()}")
                break
    rep.stats = {"max_steps_to_zero": longest}


def _on_edge(p):
    c = p.coords
    n = len(c) - 1
    zeros = sum(1 for x in c[:-1] if sign(x) == 0)
    return zeros >= n - 1 and n >= 2


def _harness_rational_dependence(rep, points=(), dim=2, max_steps=60, **_):
    sys = monkemeyer_matrices(dim)
    hits = []
    for p in points:
        rep.total += 1
        res = orbit(sys, p, max_steps)
        hit = next((i for i, s in enumerate(res.states) if _on_edge(s)), None)
        if hit is None:
            rep.fail(_state_json(p), f"no edge reached in {max_steps} steps")
            continue
        hits.append({
            "point": _state_json(p),
            "edge_step": hit,
            "edge_state": res.states[hit].to_json(),
            "status_after": res.itinerary.status,
            "non_periodic_flag": res.itinerary.status == "ongoing",
        })
    rep.stats = {"edge_hits": hits}


def _harness_periodic(rep, points=(), dim=2, max_steps=200, **_):
    sys = monkemeyer_matrices(dim)
    found = []
    for p in points:
        rep.total += 1
        res = orbit(sys, p, max_steps)
        it = res.itinerary
        if it.status != "periodic":
            rep.fail(_state_json(p), f"status {it.status} after {len(it)} steps")
            continue
        found.append({"point": _state_json(p), "preperiod": len(it.preperiod),
                      "period": len(it.period)})
    rep.stats = {"periodic": found}


def _harness_subshift(rep, samples=50, steps=50, seed=0, max_den=60, **_):
    sys = monkemeyer_matrices(3)
    rng = random.Random(seed)
    counts = {}
    for _ in range(samples):
        face = rng.choice(("AB", "AC", "BC"))
        den = rng.randint(3, max_den)
        a = rng.randint(2, den - 1)
        x, y = Fraction(a, den), Fraction(rng.randint(1, a - 1), den)
        p = face_point(face, x, y)
        rep.total += 1
        res = orbit(sys, p, steps)
        cls = facet_subshift_check(res.symbols) if res.symbols else "edge-A"
        counts[cls] = counts.get(cls, 0) + 1
        if cls == "interior-consistent":
            rep.fail(_state_json(p), f"face {face} itinerary {[str(s) for s in res.symbols]}")
    rep.stats = {"classes": counts}


HARNESSES = {
    "rational-zero": _harness_rational_zero,
    "rational-dependence-facet": _harness_rational_dependence,
    "periodic-number-field": _harness_periodic,
    "subshift-face": _harness_subshift,
}


def conjecture_harness(name, **params):
    """Run an instance sweep; the report is evidence, never a proof."""
    if name not in HARNESSES:
        raise ValueError(f"unknown suite {name!r}")
    rep = VerificationReport(name, kind="evidence")
    t0 = time.perf_counter()
    HARNESSES[name](rep, **params)
    rep.wall_time = time.perf_counter() - t0
    return rep
