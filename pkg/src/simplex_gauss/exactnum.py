"""Exact scalars: rationals and real algebraic number fields Q(a).

Rationals are plain :class:`fractions.Fraction` values (always reduced, with
positive denominator).  A :class:`NumberField` is given by an integer
polynomial (ascending coefficients) together with a rational interval that
isolates one of its real roots; its elements are :class:`NFElement` residues
of degree below the field degree.

Signs of field elements are decided by interval evaluation over a shrinking
enclosure of the root.  When the enclosure budget is exhausted the sign is
settled exactly with a Sturm-Tarski query, so comparisons never rely on an
epsilon.
"""

import warnings
from fractions import Fraction
from math import floor as _floor

from . import _poly

__all__ = [
    "NumberField",
    "NFElement",
    "NumberFieldError",
    "FieldMismatchError",
    "ReducibleMinpolyError",
    "as_fraction",
    "nf_arith",
    "nf_inv",
    "nf_sign",
    "nf_compare",
    "sign",
    "floor",
    "enclosure",
    "decimal_string",
    "format_poly",
]

DEFAULT_MAX_DEGREE = 8
DEFAULT_MAX_BISECTIONS = 256


class NumberFieldError(ValueError):
    """Invalid minimal polynomial or isolating interval."""


class FieldMismatchError(ValueError):
    """Operands live in different number fields."""


class ReducibleMinpolyError(ArithmeticError):
    """A nonzero residue vanished at the root: the minpoly is reducible."""


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not a rational scalar: {x!r}")


class NumberField:
    """The real field Q(a) where a is the unique root of ``minpoly`` in (lo, hi).

    >>> K = NumberField([-1, 3, 3, 1], (0, 1))   # a = 2**(1/3) - 1
    >>> a = K.gen
    >>> a * a * a
    NFElement(1 - 3*a - 3*a^2)
    """

    __slots__ = (
        "minpoly", "degree", "interval", "max_bisections", "irreducible",
        "_f", "_fprime_seq", "_reduction", "_lo", "_hi", "_sign_lo", "_depth",
    )

    def __init__(self, minpoly, root_interval, *, max_degree=DEFAULT_MAX_DEGREE,
                 max_bisections=DEFAULT_MAX_BISECTIONS, check_irreducible=True):
        coeffs = [int(c) for c in minpoly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise NumberFieldError("minimal polynomial must have degree >= 1")
        d = len(coeffs) - 1
        if d > max_degree:
            raise NumberFieldError(f"degree {d} exceeds configured maximum {max_degree}")
        f = _poly.poly(coeffs)
        if _poly.degree(_poly.gcd_(f, _poly.derivative(f))) > 0:
            raise NumberFieldError("minimal polynomial is not squarefree")
        lo, hi = (as_fraction(v) for v in root_interval)
        if not lo < hi:
            raise NumberFieldError("isolating interval must satisfy lo < hi")
        f_lo, f_hi = _poly.evaluate(f, lo), _poly.evaluate(f, hi)
        if f_lo == 0 or f_hi == 0:
            raise NumberFieldError("interval endpoints must not be roots")
        count = _poly.sturm_count(f, lo, hi)
        if count != 1:
            raise NumberFieldError(f"interval ({lo}, {hi}) contains {count} roots, expected 1")

        self.minpoly = tuple(coeffs)
        self.degree = d
        self.interval = (lo, hi)
        self.max_bisections = max_bisections
        self._f = f
        self._lo, self._hi = lo, hi
        self._sign_lo = _poly.sign(f_lo)
        self._depth = 0
        # residues of x^d .. x^(2d-2), for folding products
        monic = _poly.monic(f)
        table = []
        cur = [-c for c in monic[:d]]
        for _ in range(max(d - 1, 0)):
            table.append(tuple(cur))
            # multiply by x and reduce
            top = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, monic[:d])]
        self._reduction = table
        self.irreducible = None
        if check_irreducible and d > 1:
            self.irreducible = _is_irreducible(coeffs)
            if not self.irreducible:
                warnings.warn(
                    "minimal polynomial is reducible over Q; sign decisions may fail "
                    "with ReducibleMinpolyError", stacklevel=2)

    # construction helpers -------------------------------------------------
    @property
    def gen(self):
        if self.degree == 1:
            return NFElement(self, (self.root_if_rational(),))
        return NFElement(self, tuple(Fraction(int(i == 1)) for i in range(self.degree)))

    def root_if_rational(self):
        if self.degree != 1:
            return None
        c0, c1 = self.minpoly
        return Fraction(-c0, c1)

    def element(self, coeffs):
        """Residue of the polynomial with the given ascending coefficients."""
        c = [as_fraction(x) for x in coeffs]
        if self.degree == 1:
            # Q itself: evaluate at the rational root
            r = self.root_if_rational()
            return NFElement(self, (_poly.evaluate(_poly.poly(c), r),))
        return NFElement(self, self._reduce(c))

    def __call__(self, coeffs):
        return self.element(coeffs)

    def const(self, x):
        x = as_fraction(x)
        return NFElement(self, (x,) + (Fraction(0),) * (self.degree - 1))

    # arithmetic support ---------------------------------------------------
    def _reduce(self, c):
        d = self.degree
        c = list(c) + [Fraction(0)] * max(0, d - len(c))
        if len(c) > 2 * d - 1:
            r = _poly.rem(_poly.poly(c), self._f)
            return tuple(r) + (Fraction(0),) * (d - len(r))
        low = c[:d]
        for k, top in enumerate(c[d:]):
            if top:
                for i, t in enumerate(self._reduction[k]):
                    low[i] += top * t
        return tuple(low)

    def _mul(self, a, b):
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self._reduce(prod)

    # root enclosure ------------------------------------------------------
    def root_enclosure(self):
        return self._lo, self._hi

    def refine(self, steps=1):
        """Bisect the cached root enclosure ``steps`` times."""
        f = self._f
        lo, hi = self._lo, self._hi
        for _ in range(steps):
            if lo == hi:
                break
            mid = (lo + hi) / 2
            s = _poly.sign(_poly.evaluate(f, mid))
            if s == 0:
                lo = hi = mid
            elif s == self._sign_lo:
                lo = mid
            else:
                hi = mid
        self._lo, self._hi = lo, hi
        self._depth += steps

    def refine_to(self, width):
        width = Fraction(width)
        while self._hi - self._lo > width:
            self.refine(8)

    # identity ------------------------------------------------------------
    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        if self.minpoly != other.minpoly:
            return False
        lo = max(self.interval[0], other.interval[0])
        hi = min(self.interval[1], other.interval[1])
        return lo < hi and _poly.sturm_count(self._f, lo, hi) == 1

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        lo, hi = self.interval
        return f"NumberField(minpoly={list(self.minpoly)}, root_interval=({lo}, {hi}))"

    def to_json(self):
        lo, hi = self.interval
        return {"minpoly": list(self.minpoly), "root_interval": [str(lo), str(hi)]}

    @classmethod
    def from_json(cls, data):
        return cls(data["minpoly"], tuple(data["root_interval"]))


def _is_irreducible(coeffs):
    from sympy import Poly, symbols

    x = symbols("x")
    return Poly(list(reversed(coeffs)), x, domain="QQ").is_irreducible


class NFElement:
    """An element of a :class:`NumberField`, stored as its reduced residue."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("NFElement is immutable")

    # promotion -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError("elements belong to different number fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.const(other)
        return None

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __bool__(self):
        return not self.is_zero()

    # ring operations -----------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return NFElement(self.field, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * nf_inv(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * nf_inv(self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return nf_inv(self) ** (-k)
        result = self.field.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self):
        return -self if nf_sign(self) < 0 else self

    # comparisons ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field and other.field != self.field:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.minpoly, self.coeffs))

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return nf_sign(self - o)

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    # conversions ---------------------------------------------------------
    def __float__(self):
        lo, hi = enclosure(self, Fraction(1, 2**60))
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"NFElement({format_poly(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def to_json(self):
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, field, data):
        return field.element([Fraction(s) for s in data])


# ---------------------------------------------------------------------------
# operations


def _same_field(a, b):
    if a.field is not b.field and a.field != b.field:
        raise FieldMismatchError("elements belong to different number fields")


def nf_arith(op, a, b):
    """Apply ``op`` in {'add', 'sub', 'mul'} to two elements of one field."""
    _same_field(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def nf_inv(a):
    """Multiplicative inverse via the extended Euclidean algorithm over Q."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero")
    K = a.field
    if a.is_rational():
        return K.const(1 / a.coeffs[0])
    g, s, _ = _poly.xgcd(_poly.poly(a.coeffs), K._f)
    if _poly.degree(g) != 0:
        # a shares a factor with a reducible minpoly
        if nf_sign(a) == 0:
            raise ZeroDivisionError("element vanishes at the root")
        raise ReducibleMinpolyError("element is a zero divisor modulo the minpoly")
    return K.element(s)


def _interval_sign(K, coeffs):
    """Sign of the residue over the current root enclosure, or None."""
    ints = _poly.primitive_int(_poly.poly(coeffs))
    if not ints:
        return 0
    lo, hi = K._lo, K._hi
    if lo == hi:
        return _poly.sign(_poly.evaluate(_poly.poly(ints), lo))
    D = lo.denominator * hi.denominator
    a = lo.numerator * hi.denominator
    b = hi.numerator * lo.denominator
    d = len(ints) - 1
    l = u = ints[d]
    Dp = 1
    for i in range(d - 1, -1, -1):
        Dp *= D
        p1, p2, p3, p4 = l * a, l * b, u * a, u * b
        c = ints[i] * Dp
        l = min(p1, p2, p3, p4) + c
        u = max(p1, p2, p3, p4) + c
    if l > 0:
        return 1
    if u < 0:
        return -1
    return None


def nf_sign(a):
    """Sign (-1, 0, +1) of the real number a(alpha)."""
    if isinstance(a, (int, Fraction)):
        return _poly.sign(a)
    if a.is_zero():
        return 0
    if a.is_rational():
        return _poly.sign(a.coeffs[0])
    K = a.field
    s = _interval_sign(K, a.coeffs)
    if s is not None:
        return s
    budget = K.max_bisections
    while budget > 0:
        step = min(8, budget)
        K.refine(step)
        budget -= step
        s = _interval_sign(K, a.coeffs)
        if s is not None:
            return s
    # exact fallback; only a reducible minpoly can make this zero
    s = _poly.tarski_query(_poly.poly(a.coeffs), K._f, K._lo, K._hi)
    if s == 0:
        raise ReducibleMinpolyError(
            "nonzero residue vanishes at the root: reducible minpoly suspected")
    return s


def nf_compare(a, b):
    if isinstance(a, NFElement) and isinstance(b, NFElement):
        _same_field(a, b)
    return nf_sign(a - b)


# ---------------------------------------------------------------------------
# generic scalar helpers (Fraction | int | NFElement)


def sign(x):
    if isinstance(x, NFElement):
        return nf_sign(x)
    return _poly.sign(x)


def enclosure(x, width):
    """Rational interval [lo, hi] containing x with hi - lo <= width."""
    width = Fraction(width)
    if not isinstance(x, NFElement):
        x = as_fraction(x)
        return x, x
    if x.is_rational():
        return x.coeffs[0], x.coeffs[0]
    K = x.field
    f = _poly.poly(x.coeffs)
    while True:
        lo_r, hi_r = K._lo, K._hi
        if lo_r == hi_r:
            v = _poly.evaluate(f, lo_r)
            return v, v
        lo, hi = _value_bounds(f, lo_r, hi_r)
        if hi - lo <= width:
            return lo, hi
        K.refine(8)


def _value_bounds(f, lo, hi):
    l = u = f[-1]
    for c in reversed(f[:-1]):
        products = (l * lo, l * hi, u * lo, u * hi)
        l = min(products) + c
        u = max(products) + c
    return l, u


def floor(x):
    """Exact floor of a rational or number-field scalar."""
    if not isinstance(x, NFElement):
        return _floor(as_fraction(x))
    if x.is_rational():
        return _floor(x.coeffs[0])
    lo, hi = enclosure(x, Fraction(1, 4))
    m = _floor((lo + hi) / 2)
    while True:
        if nf_sign(x - m) < 0:
            m -= 1
        elif nf_sign(x - (m + 1)) >= 0:
            m += 1
        else:
            return m


def decimal_string(x, digits, mode="nearest"):
    """Render x with ``digits`` digits after the point.

    ``mode`` is 'down' (toward -inf), 'up' (toward +inf) or 'nearest'
    (ties away from zero); the result is exact, never an float artefact.
    """
    scale = 10 ** digits
    if mode == "down":
        n = floor(x * scale)
    elif mode == "up":
        n = -floor(-x * scale)
    elif mode == "nearest":
        twice = floor(x * (2 * scale))
        n = (twice + 1) // 2
        if sign(x) < 0 and twice % 2 == 1 and sign(x * (2 * scale) - twice) == 0:
            n -= 1
    else:
        raise ValueError(f"unknown rounding mode {mode!r}")
    neg = n < 0
    n = abs(n)
    whole, frac = divmod(n, scale)
    s = str(whole) if digits == 0 else f"{whole}.{frac:0{digits}d}"
    return "-" + s if neg else s


def format_poly(coeffs, var="a"):
    """Human readable polynomial, ascending order: ``1 - 3*a + a^2``."""
    terms = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out
