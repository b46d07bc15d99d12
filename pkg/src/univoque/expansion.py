"""One-dimensional beta-expansions over the digits {0, ..., M}."""

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Optional

from flint import arb

from .config import DEFAULT
from .errors import NotAdmissible, PrecisionExhausted, Undecidable, IsolationFailed
from .interval import RealInterval, to_arb, working_precision
from .roots import UnitSeries, unit_root
from .symbolic import EPSequence, Order, lex_compare


@dataclass(frozen=True)
class Beta:
    """A base beta in (1, M+1] with a certified enclosure.

    ``exact`` is set for rational bases, ``delta`` when the quasi-greedy
    expansion of 1 is known to be eventually periodic. ``refiner(bits)``
    recomputes the enclosure at a higher precision.
    """

    value: RealInterval
    M: int
    exact: Optional[Fraction] = None
    delta: Optional[EPSequence] = None
    label: str = ""
    refiner: Optional[Callable[[int], "Beta"]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.value.gt(1) is not True:
            raise ValueError(f"beta must exceed 1, got {self.value}")
        if self.value.le(self.M + 1) is not True:
            raise ValueError(f"beta must not exceed M+1={self.M + 1}, got {self.value}")

    @classmethod
    def from_value(cls, value, M, bits=None):
        """A rational base given as int, Fraction, decimal string or float."""
        bits = bits or DEFAULT.precision_bits
        q = Fraction(value) if not isinstance(value, str) else Fraction(value.strip())
        return cls(RealInterval.exact(q, bits), M, exact=q, label=str(value))

    @property
    def bits(self):
        return self.value.prec

    @property
    def is_integer(self):
        return self.exact is not None and self.exact.denominator == 1

    def refined(self, bits):
        if self.exact is not None:
            return replace(self, value=RealInterval.exact(self.exact, bits))
        if self.refiner is None:
            raise PrecisionExhausted(f"no way to refine {self.label or self.value}")
        return self.refiner(bits)

    def lt(self, other):
        if self.exact is not None and getattr(other, "exact", None) is not None:
            return self.exact < other.exact
        return self.value.lt(other.value if isinstance(other, Beta) else other)

    def gt(self, other):
        if self.exact is not None and getattr(other, "exact", None) is not None:
            return self.exact > other.exact
        return self.value.gt(other.value if isinstance(other, Beta) else other)

    def __float__(self):
        return float(self.exact) if self.exact is not None else float(self.value)

    def __str__(self):
        if self.exact is not None:
            if self.exact.denominator == 1:
                return str(self.exact.numerator)
            return self.label or str(self.exact)
        return str(self.value)


def with_escalation(beta, fn, cap=None):
    """Run fn(beta), doubling the precision of beta on Undecidable until the cap."""
    cap = cap or DEFAULT.max_precision_bits
    while True:
        try:
            return fn(beta)
        except Undecidable:
            bits = 2 * beta.bits
            if bits > cap:
                raise PrecisionExhausted(f"undecided at {beta.bits} bits")
            beta = beta.refined(bits)


def separate(a, b, cap=None):
    """Refine two bases until their enclosures are disjoint; returns (a, b, a < b)."""
    cap = cap or DEFAULT.max_precision_bits
    while True:
        r = a.lt(b)
        if r is not None and a.value.disjoint(b.value) or (a.exact is not None and b.exact is not None):
            return a, b, r
        bits = 2 * max(a.bits, b.bits)
        if bits > cap:
            raise PrecisionExhausted(f"could not separate {a.label} and {b.label} within {cap} bits")
        a, b = a.refined(bits), b.refined(bits)


# value of a sequence

def pi_eval(s, beta, depth=None):
    """Enclosure of sum s_i / beta^i.

    A finite word is summed exactly. An EPSequence is summed over ``depth``
    terms and the remainder is bounded by M beta_lo^-depth / (beta_lo - 1).
    """
    M = beta.M
    with working_precision(beta.bits + 16):
        b = beta.value.ball
        y = 1 / b
        if isinstance(s, EPSequence):
            depth = depth or max(64, beta.bits)
            word = s.prefix(depth)
        else:
            word = tuple(s)
        acc = arb(0)
        for c in reversed(word):
            acc = (acc + c) * y
        if isinstance(s, EPSequence):
            blo = b.lower()
            tail = (M * blo ** (-len(word)) / (blo - 1)).upper()
            acc = acc + arb(tail / 2, tail / 2)
        return RealInterval(acc, beta.bits)


# quasi-greedy expansions

def _digit_interval(y, M, position):
    """d = min(M, ceil(y) - 1) for a ball y, or Undecidable."""
    if y > M:
        return M
    k = int(y.lower().floor().unique_fmpz())
    if y > k and y < k + 1:
        return min(M, k)
    raise Undecidable(f"cannot place beta*x relative to the integers at digit {position}",
                      position)


def _quasi_greedy_exact(q, x, M, n):
    digits = []
    for _ in range(n):
        y = q * x
        d = min(M, math.ceil(y) - 1)
        digits.append(d)
        x = y - d
    return tuple(digits)


def _quasi_greedy_ball(b, x, M, n):
    digits = []
    for k in range(n):
        y = b * x
        d = _digit_interval(y, M, k)
        digits.append(d)
        x = y - d
    return tuple(digits)


def quasi_greedy_x(x, beta, n):
    """First n digits of the quasi-greedy expansion of x in (0, 1]."""
    if beta.exact is not None and not isinstance(x, RealInterval):
        xq = Fraction(x)
        if not 0 < xq <= 1:
            raise ValueError("x must lie in (0, 1]")
        return _quasi_greedy_exact(beta.exact, xq, beta.M, n)

    def run(bt):
        with working_precision(bt.bits):
            return _quasi_greedy_ball(bt.value.ball, to_arb(x), bt.M, n)
    return with_escalation(beta, run)


def quasi_greedy_one(beta, n):
    """First n digits of delta(beta)."""
    if beta.delta is not None:
        return beta.delta.prefix(n)
    if beta.exact is not None:
        return _quasi_greedy_exact(beta.exact, Fraction(1), beta.M, n)

    def run(bt):
        with working_precision(bt.bits):
            return _quasi_greedy_ball(bt.value.ball, arb(1), bt.M, n)
    return with_escalation(beta, run)


# admissibility and the inverse map

def is_admissible_delta(s, M=None):
    """0^inf < sigma^n(s) <= s for every n >= 0."""
    if M is not None and any(not 0 <= c <= M for c in s.pre + s.per):
        return False
    if s.per == (0,):
        return False
    return all(lex_compare(t, s) is not Order.GREATER for _, t in s.tails())


def delta_inverse(s, M, tol=None, bits=None, verify=True):
    """The unique beta in (1, M+1] with delta(beta) = s."""
    if not is_admissible_delta(s, M):
        raise NotAdmissible(f"{s} is not a quasi-greedy expansion over 0..{M}")
    if s == EPSequence((), (M,)):
        return Beta(RealInterval.exact(M + 1, bits or DEFAULT.precision_bits), M,
                    exact=Fraction(M + 1), delta=s, label=f"delta^-1({s})")
    tol = tol or DEFAULT.tol
    bits = max(bits or DEFAULT.precision_bits, int(-math.log2(tol)) + 16)
    G = UnitSeries(s.pre, s.per)
    y_lo = Fraction(1, M + 1)
    y_hi = Fraction(1, 2) + y_lo / 2
    with working_precision(bits + 32):
        # push the upper end toward 1 until the series exceeds 1
        k = 2
        while not G(to_arb(y_hi))[0] > 0:
            y_hi = 1 - Fraction(1, 2**k)
            k += 1
            if k > bits:
                raise IsolationFailed("series never exceeds 1 on (0, 1)")
        value, _ = unit_root(G, to_arb(y_lo), to_arb(y_hi), bits)
    beta = Beta(value, M, delta=s, label=f"delta^-1({s})",
                refiner=lambda b: delta_inverse(s, M, tol=tol, bits=b, verify=False))
    if verify:
        _verify_endpoints(beta, s)
    return beta


def _verify_endpoints(beta, s):
    """Independent check: delta(lo) < s < delta(hi) wherever the prefixes already differ."""
    L = len(s.pre) + 4 * len(s.per) + 16
    target = s.prefix(L)
    M = beta.M
    for q, want in ((beta.value.lo_fraction(), Order.LESS), (beta.value.hi_fraction(), Order.GREATER)):
        if q > M + 1:
            continue
        got = _quasi_greedy_exact(q, Fraction(1), M, L)
        if got != target and (Order.LESS if got < target else Order.GREATER) is not want:
            raise IsolationFailed(f"enclosure endpoint {float(q)} disagrees with {s}")
