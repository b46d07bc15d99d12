"""Certified real enclosures.

Arb balls from python-flint do the outward-rounded arithmetic. ``RealInterval``
adds the pieces the rest of the package leans on: explicit endpoints,
three-valued comparisons and a per-value working precision, so that no caller
depends on whatever the global flint context happens to hold.
"""

from contextlib import contextmanager
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from flint import arb, ctx, fmpq


@contextmanager
def working_precision(bits):
    old = ctx.prec
    ctx.prec = max(int(bits), 2)
    try:
        yield
    finally:
        ctx.prec = old


def _exact_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(Decimal(value.strip()))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def to_arb(value):
    """Ball enclosing ``value`` at the current flint precision."""
    if isinstance(value, RealInterval):
        return value.ball
    if isinstance(value, arb):
        return value
    q = _exact_fraction(value)
    if q.denominator == 1:
        return arb(q.numerator)
    return arb(fmpq(q.numerator, q.denominator))


def arb_to_fraction(a):
    """Exact rational value of an exact (zero radius) ball."""
    man, exp = a.man_exp()
    man, exp = int(man), int(exp)
    return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)


@dataclass(frozen=True)
class RealInterval:
    """Closed interval [lo, hi] carried as an Arb ball."""

    ball: arb
    prec: int = 256

    @classmethod
    def exact(cls, value, prec=256):
        with working_precision(prec):
            return cls(to_arb(value), prec)

    @classmethod
    def from_endpoints(cls, lo, hi, prec=256):
        with working_precision(prec + 16):
            a, b = to_arb(lo).lower(), to_arb(hi).upper()
            if a > b:
                raise ValueError("lower endpoint exceeds upper endpoint")
            mid = (a + b) / 2
            rad = (b - a) / 2
            ball = arb(mid.mid(), (rad + mid.rad()).upper())
        return cls(ball, prec)

    # endpoints and size

    @property
    def lo(self):
        with working_precision(self.prec + 64):
            return self.ball.lower()

    @property
    def hi(self):
        with working_precision(self.prec + 64):
            return self.ball.upper()

    @property
    def mid(self):
        return self.ball.mid()

    @property
    def width(self):
        """Upper bound on hi - lo, as a float."""
        with working_precision(64):
            return float((2 * self.ball.rad()).upper())

    def lo_fraction(self):
        return arb_to_fraction(self.lo)

    def hi_fraction(self):
        return arb_to_fraction(self.hi)

    def __float__(self):
        return float(self.ball.mid())

    # arithmetic

    def _lift(self, other):
        if isinstance(other, RealInterval):
            return other.ball, max(self.prec, other.prec)
        return to_arb(other), self.prec

    def _binary(self, other, op):
        with working_precision(self.prec if not isinstance(other, RealInterval)
                               else max(self.prec, other.prec)):
            b, prec = self._lift(other)
            return RealInterval(op(self.ball, b), prec)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a)

    def __neg__(self):
        return RealInterval(-self.ball, self.prec)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("only integer powers are supported")
        with working_precision(self.prec):
            return RealInterval(self.ball ** k, self.prec)

    def log(self):
        with working_precision(self.prec):
            return RealInterval(self.ball.log(), self.prec)

    # three-valued order: True, False or None when the enclosures overlap

    def lt(self, other):
        with working_precision(self.prec):
            b, _ = self._lift(other)
            if self.ball < b:
                return True
            if self.ball >= b:
                return False
            return None

    def gt(self, other):
        with working_precision(self.prec):
            b, _ = self._lift(other)
            if self.ball > b:
                return True
            if self.ball <= b:
                return False
            return None

    def le(self, other):
        r = self.gt(other)
        return None if r is None else not r

    def ge(self, other):
        r = self.lt(other)
        return None if r is None else not r

    def contains(self, value):
        if isinstance(value, (RealInterval, arb)):
            with working_precision(self.prec):
                return self.ball.contains(to_arb(value))
        q = _exact_fraction(value)
        return self.lo_fraction() <= q <= self.hi_fraction()

    def overlaps(self, other):
        return self.ball.overlaps(other.ball)

    def disjoint(self, other):
        return not self.overlaps(other)

    def decimal(self, places=5):
        """Both endpoints rounded half-to-even, or None when they disagree."""
        with localcontext() as dctx:
            dctx.prec = 80
            ends = [round(Decimal(q.numerator) / Decimal(q.denominator), places)
                    for q in (self.lo_fraction(), self.hi_fraction())]
        return ends[0] if ends[0] == ends[1] else None

    def __str__(self):
        with working_precision(self.prec):
            return self.ball.str(radius=True)

    def __repr__(self):
        return f"RealInterval({self.ball.str(20, radius=True)})"
