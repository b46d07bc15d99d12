"""The critical bases beta_G(M) and beta_c(M), their ladders, and the similarity dimension."""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from flint import arb, arf, fmpz_poly

from .config import DEFAULT
from .errors import IsolationFailed
from .expansion import Beta, delta_inverse
from .interval import RealInterval, to_arb, working_precision
from .roots import TruncatedSeries, UnitSeries, unit_root
from .symbolic import EPSequence
from .tm import TMFamily, delta_hat_ladder, delta_ladder


def _bits_for(tol, bits):
    return max(bits or DEFAULT.precision_bits, int(-math.log2(tol or DEFAULT.tol)) + 16)


def _bracket(M):
    """(lo, hi) bracket for beta_c, and for beta_G when M is not a multiple of 3.

    The lower end sits 1/16 above the integer so that y = 1/x stays below 1,
    where the series and its tail bounds are finite.
    """
    N, r = divmod(M - 1, 3)
    lo, hi = (N + 2, N + 3) if r == 2 else (N + 1, N + 2)
    return Fraction(16 * lo + 1, 16), hi


def golden_coefficients(M):
    """Coefficients c with 1 = c_1/x + c_2/x^2 + c_3/x^3 equivalent to the defining cubic."""
    N, r = divmod(M - 1, 3)
    if r == 0:
        return (N + 1, N, N + 1)
    if r == 1:
        return (N + 1, N + 1, N + 1)
    return None


@lru_cache(maxsize=None)
def beta_G(M, tol=None, bits=None):
    """Generalised golden ratio; exactly N+2 when M = 3N+3."""
    N, r = divmod(M - 1, 3)
    family = TMFamily.for_M(M)
    delta = EPSequence.periodic(family.tower(0).t[0] if r < 2 else (N + 1,))
    bits = _bits_for(tol, bits)
    if r == 2:
        return Beta(RealInterval.exact(N + 2, bits), M, exact=Fraction(N + 2), delta=delta,
                    label=f"beta_G({M})")
    lo, hi = _bracket(M)
    G = UnitSeries(golden_coefficients(M), (0,))
    with working_precision(bits + 32):
        value, _ = unit_root(G, 1 / to_arb(hi), 1 / to_arb(lo), bits)
    return Beta(value, M, delta=delta, label=f"beta_G({M})",
                refiner=lambda b: beta_G(M, bits=b))


def tm_coefficients(M, n):
    return TMFamily.for_M(M).prefix(n)


@lru_cache(maxsize=None)
def beta_c(M, tol=None, bits=None):
    """Generalised Komornik-Loreti constant: root of the Thue-Morse series equation."""
    bits = _bits_for(tol, bits)
    lo, hi = _bracket(M)
    N = (M - 1) // 3
    with working_precision(bits + 32):
        y_lo, y_hi = 1 / to_arb(hi), 1 / to_arb(lo)
        G = TruncatedSeries(lambda n: tm_coefficients(M, n), N + 2, y_hi, bits)
        value, _ = unit_root(G, y_lo, y_hi, bits)
    return Beta(value, M, label=f"beta_c({M})", refiner=lambda b: beta_c(M, bits=b))


@lru_cache(maxsize=None)
def beta_ladder(M, n, tol=None, bits=None):
    """beta_n with delta(beta_n) = t_n^infinity; beta_0 = beta_G."""
    return delta_inverse(delta_ladder(TMFamily.for_M(M), n), M, tol=tol, bits=bits)


@lru_cache(maxsize=None)
def beta_hat(M, k, tol=None, bits=None):
    """hat beta_k with delta(hat beta_k) = t_k^+ phi(t_k)^infinity."""
    return delta_inverse(delta_hat_ladder(TMFamily.for_M(M), k), M, tol=tol, bits=bits)


def beta_n_ladder(M, n_max, tol=None, bits=None):
    return [beta_ladder(M, n, tol, bits) for n in range(n_max + 1)]


def beta_hat_ladder(M, k_max, tol=None, bits=None):
    first = TMFamily.for_M(M).first_level
    return [beta_hat(M, k, tol, bits) for k in range(first, k_max + 1)]


@dataclass(frozen=True)
class CriticalBases:
    M: int
    beta_G: Beta
    beta_c: Beta

    @property
    def residue(self):
        return TMFamily.for_M(self.M)


def critical_bases(M, tol=None, bits=None):
    return CriticalBases(M, beta_G(M, tol, bits), beta_c(M, tol, bits))


@dataclass(frozen=True)
class TableRow:
    M: int
    beta_G: Beta
    beta_c: Beta

    def values(self, places=5):
        return (self.beta_G.value.decimal(places), self.beta_c.value.decimal(places))

    def as_csv_fields(self, places=5):
        g, c = self.values(places)
        return [self.M, f"{g:.{places}f}", f"{c:.{places}f}",
                f"{self.beta_G.value.width:.3e}", f"{self.beta_c.value.width:.3e}"]

    def as_json(self, places=5):
        g, c = self.values(places)
        return {
            "M": self.M,
            "beta_G": f"{g:.{places}f}",
            "beta_c": f"{c:.{places}f}",
            "beta_G_exact": self.beta_G.is_integer,
            "beta_G_interval": [str(self.beta_G.value.lo_fraction().__float__()),
                                str(self.beta_G.value.hi_fraction().__float__())],
            "beta_c_interval": [str(self.beta_c.value.lo_fraction().__float__()),
                                str(self.beta_c.value.hi_fraction().__float__())],
            "width_G": self.beta_G.value.width,
            "width_c": self.beta_c.value.width,
        }


def critical_table(M_lo, M_hi, tol=None, bits=None, threads=1):
    if M_lo > M_hi:
        raise ValueError("M_lo must not exceed M_hi")
    Ms = range(M_lo, M_hi + 1)
    if threads and threads > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(threads) as pool:
            pairs = list(pool.map(_row_values, Ms, [tol] * len(Ms), [bits] * len(Ms)))
        return [TableRow(M, _rebuild(g, M), _rebuild(c, M)) for M, (g, c) in zip(Ms, pairs)]
    return [TableRow(M, beta_G(M, tol, bits), beta_c(M, tol, bits)) for M in Ms]


def _row_values(M, tol, bits):
    g, c = beta_G(M, tol, bits), beta_c(M, tol, bits)
    # arb balls and refiner closures do not pickle; ship midpoint and radius instead
    return tuple((b.value.ball.mid().man_exp(), b.value.ball.rad().man_exp(), b.value.prec,
                  b.exact, b.delta, b.label) for b in (g, c))


def _rebuild(packed, M):
    mid, rad, prec, exact, delta, label = packed
    with working_precision(prec):
        ball = arb(arf(mid), arf(rad))
    return Beta(RealInterval(ball, prec), M, exact=exact, delta=delta, label=label)


@dataclass(frozen=True)
class PerronReport:
    M: int
    dominant: RealInterval
    others: tuple
    max_other_modulus: float
    certified: bool


def certify_perron(M, bits=128):
    """Isolate all roots of the defining cubic and certify the real one dominates."""
    N, r = divmod(M - 1, 3)
    if r == 2:
        value = RealInterval.exact(N + 2, bits)
        return PerronReport(M, value, (), 0.0, True)
    c1, c2, c3 = golden_coefficients(M)
    poly = fmpz_poly([-c3, -c2, -c1, 1])
    with working_precision(bits):
        roots = poly.complex_roots()
        real = [z for z, _ in roots if z.imag.contains(0) and z.real > 1]
        if len(real) != 1:
            raise IsolationFailed(f"expected one real root above 1, found {len(real)}")
        dom = real[0].real
        others = [z for z, _ in roots if not (z.imag.contains(0) and z.real > 1)]
        mods = [abs(z) for z in others]
        margin = dom - max(m.upper() for m in mods)
        certified = bool(margin > 0)
        return PerronReport(M, RealInterval(dom, bits), tuple(str(z) for z in others),
                            float(max(m.upper() for m in mods)), certified)


def similarity_dimension(M, beta):
    """(log(M+1) + log(M+2) - log 2) / log beta."""
    with working_precision(beta.bits + 16):
        num = arb(M + 1).log() + arb(M + 2).log() - arb(2).log()
        return RealInterval(num / beta.value.ball.log(), beta.bits)
