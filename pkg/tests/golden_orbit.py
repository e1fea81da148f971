"""Hand-transcribed orbit of (a, a^2, 1) with a = 2**(1/3) - 1.

STATES[k] is the homogeneous column of G^k as three ascending coefficient
lists in a; ALTERNATE holds the same states written in a different but
projectively equal form.  PRINTED are the decimal approximations of the
affine coordinates exactly as displayed (mixed truncation and rounding).
"""

STATES = {
    1: ([1, -3, 0], [0, 0, 1], [0, 1, 0]),
    2: ([0, 1, -1], [1, -3, -1], [1, -3, 0]),
    3: ([0, 0, 1], [-1, 4, 0], [0, 1, -1]),
    4: ([0, 1, -3], [-1, 4, 0], [0, 0, 1]),
    5: ([1, -4, 1], [1, -3, -3], [0, 1, -3]),
    6: ([-2, 8, -1], [0, -1, 4], [1, -4, 1]),
    7: ([-2, 7, 3], [3, -11, -2], [2, -7, -2]),
    8: ([1, -3, -3], [-5, 18, 5], [-2, 7, 3]),
    9: ([-2, 7, 3], [-3, 10, 6], [0, 0, 1]),
    10: ([7, -24, -11], [1, -3, -3], [-2, 7, 3]),
    11: ([1, -3, -3], [-3, 10, 6], [-3, 10, 7]),
    12: ([1, -3, 0], [0, 1, -1], [0, 1, 0]),
    13: ([0, 0, 1], [1, -4, 1], [1, -3, 0]),
    14: ([0, 1, -3], [-1, 4, 0], [0, 0, 1]),
}

ALTERNATE = {
    6: ([2, -7, -2], [-1, 4, 0], [-1, 4, 1]),
    8: ([0, 0, 1], [3, -10, -5], [1, -3, -2]),
    10: ([-3, 10, 7], [0, 0, 1], [1, -3, -2]),
    11: ([0, 1, 0], [0, 0, 1], [1, 0, 1]),
}

PRINTED = {
    0: ("0.25992", "0.06755"),
    1: ("0.84732", "0.25992"),
    2: ("0.87343", "0.69324"),
    3: ("0.351207", "0.206299"),
    4: ("0.847322", "0.587401"),
    5: ("0.486945", "0.306756"),
    6: ("0.423661", "0.370039"),
    7: ("0.486944", "0.126567"),
    8: ("0.793701", "0.740079"),
    9: ("0.327480", "0.067558"),
    10: ("0.847322", "0.793701"),
    11: ("0.243472", "0.0632835"),
    12: ("0.847322", "0.740079"),
    13: ("0.306755", "0.126567"),
    14: ("0.847322", "0.587401"),
}

PREPERIOD = ["A3", "B1", "B1", "A2"]
PERIOD = ["B1", "B2", "B2", "B2", "B1", "B3", "B1", "B4", "B1", "B3"]
