"""Orbits and itineraries of the first-return map, approximating simplexes."""

from dataclasses import dataclass, field

from ..projective import ProjPoint, canonicalize, columns, mat_mul, simplex_contains
from .system import Symbol, return_step, symbol_inverse

__all__ = [
    "Itinerary",
    "OrbitResult",
    "orbit",
    "itinerary",
    "orbit_nf",
    "approx_matrices",
    "approx_simplexes",
    "is_nested",
]


@dataclass(frozen=True)
class Itinerary:
    """Symbols of an orbit with a status: ongoing, reached_zero or periodic."""

    symbols: tuple
    status: str = "ongoing"
    preperiod: tuple = ()
    period: tuple = ()
    dim: int = 2

    def __post_init__(self):
        if self.status not in ("ongoing", "reached_zero", "periodic"):
            raise ValueError(f"unknown status {self.status!r}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def labels(self):
        return [str(s) for s in self.symbols]

    def to_json(self):
        out = {
            "dim": self.dim,
            "symbols": [s.to_json() for s in self.symbols],
            "status": self.status,
        }
        if self.status == "periodic":
            out["preperiod"] = [s.to_json() for s in self.preperiod]
            out["period"] = [s.to_json() for s in self.period]
        return out

    @classmethod
    def from_json(cls, data):
        syms = tuple(Symbol.from_json(s) for s in data["symbols"])
        pre = tuple(Symbol.from_json(s) for s in data.get("preperiod", []))
        per = tuple(Symbol.from_json(s) for s in data.get("period", []))
        return cls(syms, data["status"], pre, per, data.get("dim", 2))


@dataclass
class OrbitResult:
    states: list  # canonical states; states[i + 1] is the image of states[i]
    symbols: list
    boundary: list  # one flag per step
    itinerary: Itinerary = field(default=None)


def orbit(sys, p, max_steps=100):
    """Iterate the first-return map with exact revisit detection."""
    q = canonicalize(p)
    states = [q]
    symbols = []
    flags = []
    seen = {q.coords: 0}
    status = "ongoing"
    pre = per = ()
    if q.is_zero_vertex():
        status = "reached_zero"
    else:
        for _ in range(max_steps):
            q, sym, b = return_step(sys, q, with_boundary=True)
            states.append(q)
            symbols.append(sym)
            flags.append(b)
            if q.is_zero_vertex():
                status = "reached_zero"
                break
            if q.coords in seen:
                i = seen[q.coords]
                status = "periodic"
                pre, per = tuple(symbols[:i]), tuple(symbols[i:])
                break
            seen[q.coords] = len(states) - 1
    it = Itinerary(tuple(symbols), status, pre, per, sys.n)
    return OrbitResult(states, symbols, flags, it)


def itinerary(sys, p, max_steps=100):
    return orbit(sys, p, max_steps).itinerary


def orbit_nf(sys, p, max_steps=100):
    """Orbit of a point with coordinates in one number field."""
    if p.field is None:
        raise ValueError("expected number-field coordinates")
    res = orbit(sys, p, max_steps)
    return res.itinerary, res.states


def approx_matrices(sys, prefix):
    """Partial products of the inverse symbol matrices."""
    size = sys.n + 1
    M = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    out = []
    for sym in prefix:
        M = mat_mul(M, symbol_inverse(sys, sym))
        out.append(M)
    return out


def approx_simplexes(sys, prefix):
    """Vertex matrices I_k V of the approximating simplexes, k = 1..len."""
    if not prefix:
        raise ValueError("empty itinerary prefix")
    return [mat_mul(M, sys.V) for M in approx_matrices(sys, prefix)]


def is_nested(outer, inner):
    """Closed containment of the simplex ``inner`` in ``outer``."""
    return all(simplex_contains(outer, ProjPoint(tuple(c))) for c in columns(inner))
