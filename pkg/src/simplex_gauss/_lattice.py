"""Brute-force lattice point counting in hull{0, columns of S}.

The hull is scanned slice by slice: all but the last coordinate range over a
numpy grid, and for each grid point the admissible interval of the last
coordinate is solved for exactly with integer floor division.
"""

import numpy as np

from .projective import adjugate, columns, det

_INT64_SAFE = 2**62


def hull_lattice_scan(S, bound):
    """Count lattice points of the closed hull of 0 and the columns of ``S``.

    Only points in the box [-bound, bound]^d are considered.  Returns
    ``(found, expected)`` where ``expected`` is the number of hull vertices
    inside the box; a unimodular hull has ``found == expected``.
    """
    d = det(S)
    if d == 0:
        raise ValueError("degenerate simplex")
    size = len(S)
    adj = adjugate(S)
    sgn = 1 if d > 0 else -1
    # barycentric c = adj v / det; constraints c_i >= 0 and sum c_i <= 1,
    # written as rows r with r . v + off >= 0
    rows = [tuple(sgn * x for x in r) for r in adj]
    total = tuple(-sum(col) for col in zip(*rows))
    constraints = [(r, 0) for r in rows] + [(total, abs(d))]

    verts = [tuple(0 for _ in range(size))] + columns(S)
    lo = [max(-bound, min(v[i] for v in verts)) for i in range(size)]
    hi = [min(bound, max(v[i] for v in verts)) for i in range(size)]
    expected = sum(1 for v in verts if all(lo[i] <= v[i] <= hi[i] for i in range(size)))
    if any(l > h for l, h in zip(lo, hi)):
        return 0, expected

    biggest = max(abs(x) for r, off in constraints for x in r + (off,))
    dtype = np.int64 if biggest * (size + 1) * (bound + 1) < _INT64_SAFE else object

    axes = [np.arange(lo[i], hi[i] + 1, dtype=np.int64).astype(dtype) for i in range(size - 1)]
    if axes:
        grids = np.meshgrid(*axes, indexing="ij")
        grids = [g.ravel() for g in grids]
        npts = grids[0].shape[0]
    else:
        grids = []
        npts = 1
    zlo = np.full(npts, lo[-1], dtype=dtype)
    zhi = np.full(npts, hi[-1], dtype=dtype)
    ok = np.ones(npts, dtype=bool)
    for r, off in constraints:
        alpha = np.full(npts, off, dtype=dtype)
        for coef, g in zip(r[:-1], grids):
            if coef:
                alpha = alpha + coef * g
        beta = r[-1]
        if beta > 0:
            # beta z >= -alpha  ->  z >= ceil(-alpha / beta)
            zlo = np.maximum(zlo, -((alpha) // beta))
        elif beta < 0:
            # z <= floor(alpha / -beta)
            zhi = np.minimum(zhi, alpha // (-beta))
        else:
            ok &= alpha >= 0
    counts = np.where(ok, zhi - zlo + 1, 0)
    counts = np.where(counts > 0, counts, 0)
    return int(counts.sum()), expected
