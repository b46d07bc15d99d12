"""Certified roots of 1 = sum c_i y^i with nonnegative coefficients.

Every base in the package is the reciprocal of such a root: the cubic
definitions of the golden-ratio type bases, the Thue-Morse series, and the
value identity pi_beta(s) = 1 of an eventually periodic expansion. On (0, 1)
the left side is increasing and convex in y = 1/x, so Newton iteration started
to the right of the root converges monotonically. The result is only trusted
after the sign of G = sum - 1 has been certified on both sides.
"""

from flint import arb

from .errors import IsolationFailed
from .interval import RealInterval, working_precision


def horner(coeffs, y):
    """sum_{i>=1} coeffs[i-1] y^i and its derivative."""
    acc = arb(0)
    dacc = arb(0)
    for c in reversed(coeffs):
        dacc = dacc * y + acc
        acc = acc * y + c
    # acc = sum c_i y^(i-1); shift by one power of y
    return acc * y, acc + dacc * y


def periodic_value(pre, per, y):
    """Value and derivative of sum s_i y^i for s = pre per per ..., exact closed form."""
    p, q = len(pre), len(per)
    a, da = horner(pre, y)
    b, db = horner(per, y)
    yp = y ** p
    yq = y ** q
    denom = 1 - yq
    tail = yp * b / denom
    dyp = p * y ** (p - 1) if p else arb(0)
    dyq = q * y ** (q - 1)
    dtail = (dyp * b + yp * db) / denom + yp * b * dyq / denom ** 2
    return a + tail, da + dtail


class UnitSeries:
    """G(y) = sum c_i y^i - 1 for the sequence of coefficients of an eventually periodic word."""

    def __init__(self, pre, per):
        self.pre = tuple(pre)
        self.per = tuple(per)

    def __call__(self, y):
        v, dv = periodic_value(self.pre, self.per, y)
        return v - 1, dv


class TruncatedSeries:
    """G(y) for an infinite coefficient stream, truncated with a rigorous tail ball.

    ``coeff(n)`` returns the first n coefficients; every coefficient is at most cmax.
    The truncation length starts at 3*64 and doubles until the tail bound is
    below 2^-(bits+8) at the largest y of interest.
    """

    def __init__(self, coeff, cmax, y_max, bits, start=192):
        self.cmax = cmax
        K = start
        with working_precision(64):
            ym = arb(y_max).upper()
            target = arb(2) ** (-(bits + 8))
            while True:
                bound = cmax * ym ** (K + 1) / (1 - ym)
                if bound < target:
                    break
                K *= 2
        self.K = K
        self.coeffs = tuple(coeff(K))

    def __call__(self, y):
        s, ds = horner(self.coeffs, y)
        bound = (self.cmax * y ** (self.K + 1) / (1 - y)).upper()
        tail = arb(bound / 2, bound / 2)
        return s - 1 + tail, ds


def _certified_sign(G, y):
    g = G(arb(y))[0]
    if g > 0:
        return 1
    if g < 0:
        return -1
    return 0


def unit_root(G, y_lo, y_hi, bits, samples=8):
    """Enclosure of the unique y in (y_lo, y_hi) with G(y) = 0, returned as beta = 1/y.

    G must be increasing; this is sanity-checked at ``samples`` interior points.
    """
    with working_precision(bits + 32):
        y_lo, y_hi = arb(y_lo), arb(y_hi)
        if _certified_sign(G, y_lo) != -1 or _certified_sign(G, y_hi) != 1:
            raise IsolationFailed("no certified sign change across the bracket")
        prev = None
        for k in range(1, samples + 1):
            y = y_lo + (y_hi - y_lo) * k / (samples + 1)
            g = G(y)[0]
            if prev is not None and g < prev:
                raise IsolationFailed("function is not increasing on the bracket")
            prev = g
        y = y_hi.mid()
        step_floor = arb(2) ** (-(bits + 4))
        for _ in range(400):
            g, dg = G(arb(y))
            step = (g.mid() / dg.mid()).mid()
            y_new = (y - step).mid()
            if y_new <= y_lo:
                y_new = ((y + y_lo) / 2).mid()
            y = y_new
            if abs(step) < step_floor:
                break
        eps = arb(2) ** (-bits)
        for _ in range(bits):
            lo, hi = (y - eps).mid(), (y + eps).mid()
            if _certified_sign(G, lo) == -1 and _certified_sign(G, hi) == 1:
                ball = 1 / arb(y, eps)
                return RealInterval(ball, bits), (lo, hi)
            eps *= 4
        raise IsolationFailed("could not certify the Newton estimate")
