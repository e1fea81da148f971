"""Walk the 2-D first-return map on (a, a^2) with a = 2**(1/3) - 1.

Prints each exact state, its decimal view and the symbol of the piece
it lands in, then the preperiod/period split found by exact revisit.
"""

from simplex_gauss import NumberField, point
from simplex_gauss.exactnum import decimal_string, format_poly
from simplex_gauss.gaussnd import monkemeyer_matrices, orbit

K = NumberField([-1, 3, 3, 1], (0, 1))
a = K.gen
res = orbit(monkemeyer_matrices(2), point(a, a * a, 1), 100)

for k, state in enumerate(res.states):
    x, y = state.affine()
    sym = res.symbols[k] if k < len(res.symbols) else ""
    print(f"{k:2d}  ({decimal_string(x, 6)}, {decimal_string(y, 6)})  {sym!s:4}"
          f"  x = {format_poly(x.coeffs)}")

it = res.itinerary
print("status:", it.status)
print("preperiod:", " ".join(map(str, it.preperiod)))
print("period:   ", " ".join(map(str, it.period)))
