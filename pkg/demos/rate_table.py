"""Approximation rates of the B1 fixed point (lam, lam / (1 + lam)).

lam is the real root of t^3 + t^2 - 1.  Writes gamma.csv next to this
script and prints the min/max of each column with directed rounding.
"""

from pathlib import Path

from simplex_gauss import NumberField, point
from simplex_gauss.analysis import gamma_rates
from simplex_gauss.gaussnd import monkemeyer_matrices

K = NumberField([-1, 0, 1, 1], (0, 1))
lam = K.gen
table = gamma_rates(monkemeyer_matrices(2), point(lam, lam / (1 + lam), 1), 50, start=2)

out = Path(__file__).with_name("gamma.csv")
out.write_text(table.to_csv(12))
print(f"wrote {out}")
for name, stats in table.summary().items():
    print(name, stats)
