"""The intrinsic univoque set: lexicographic membership, coding counts, regimes and difference tails.

A digit sequence (d_i) lies in the intrinsic univoque set for beta iff, in
each of its three rows, the tail after every position n >= 1 whose symbol is
below M is lexicographically smaller than delta(beta). For eventually
periodic inputs only finitely many (symbol, tail) states occur, so the
verdict is absolute whenever delta(beta) is known exactly or differs from
each tail within the computed prefix.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .config import DEFAULT
from .critical import beta_G, beta_c
from .errors import DepthExceeded, PrecisionExhausted, Undecidable
from .expansion import Beta, pi_eval, quasi_greedy_one, separate
from .interval import working_precision
from .symbolic import Digit, EPSequence, Order, lex_compare, omega, rows_of, theta_sequence
from .tm import TMFamily


@dataclass(frozen=True)
class MembershipVerdict:
    status: str
    position: Optional[int] = None
    row: Optional[int] = None
    depth: Optional[int] = None
    witnesses: tuple = ()

    @property
    def is_member(self):
        return self.status == "Member"

    def to_json(self):
        out = {"status": self.status}
        if self.position is not None:
            out["position"] = self.position
            out["row"] = self.row
        if self.depth is not None:
            out["depth"] = self.depth
        out["transcript"] = [dict(w) for w in self.witnesses]
        return out


class _DeltaPrefix:
    """delta(beta) digits computed on demand, in doubling chunks."""

    def __init__(self, beta):
        self.beta = beta
        self.digits = ()

    def get(self, n):
        if n > len(self.digits):
            self.digits = quasi_greedy_one(self.beta, max(n, 2 * len(self.digits)))
        return self.digits[:n]


def _compare_tail(tail, beta, delta_prefix, max_len):
    """Order of an eventually periodic integer tail against delta(beta)."""
    if beta.delta is not None:
        return lex_compare(tail, beta.delta), None
    n = max(64, 4 * (len(tail.pre) + len(tail.per)))
    while n <= max_len:
        u, v = tail.prefix(n), delta_prefix.get(n)
        if u != v:
            return (Order.LESS if u < v else Order.GREATER), n
        n *= 2
    raise Undecidable(f"tail {tail} agrees with delta(beta) on {max_len} symbols")


def check_membership(s, beta, depth=None):
    """Membership of a digit sequence in the intrinsic univoque set for beta.

    ``s`` is an EPSequence of Digits (absolute verdict) or a finite digit word
    (verdict VerifiedToDepth on the positions whose tails fit inside the word).
    """
    if isinstance(s, EPSequence):
        return _check_ep(s, beta, depth or DEFAULT.stream_depth * 8)
    return _check_stream(tuple(s), beta, depth or len(s))


def _check_ep(s, beta, max_len):
    M = beta.M
    rows = rows_of(s)
    delta_prefix = _DeltaPrefix(beta)
    witnesses = []
    for k in range(len(s.pre) + len(s.per)):
        for r in range(3):
            sym = rows[r][k]
            if sym >= M:
                continue
            tail = rows[r].shift(k + 1)
            order, used = _compare_tail(tail, beta, delta_prefix, max_len)
            w = {"position": k + 1, "row": r + 1, "symbol": sym, "tail": str(tail),
                 "order": order.name}
            if used is not None:
                w["prefix_length"] = used
            witnesses.append(tuple(w.items()))
            if order is not Order.LESS:
                return MembershipVerdict("NonMember", k + 1, r + 1, witnesses=tuple(witnesses))
    return MembershipVerdict("Member", witnesses=tuple(witnesses))


def _check_stream(word, beta, depth):
    M = beta.M
    rows = rows_of(word)
    n = min(depth, len(word))
    delta = quasi_greedy_one(beta, n)
    witnesses = []
    for k in range(n - 1):
        for r in range(3):
            if rows[r][k] >= M:
                continue
            tail = rows[r][k + 1:n]
            ref = delta[:len(tail)]
            if tail > ref:
                witnesses.append(tuple({"position": k + 1, "row": r + 1, "order": "GREATER"}.items()))
                return MembershipVerdict("NonMember", k + 1, r + 1, witnesses=tuple(witnesses))
    return MembershipVerdict("VerifiedToDepth", depth=n, witnesses=tuple(witnesses))


# exceptional digits

def exceptional_digits(N):
    M = 3 * N + 1
    return {Digit(N + 1, N + 1, M), Digit(N - 1, N + 1, M), Digit(N + 1, N - 1, M)}


def exceptional_digit_count(s, N):
    """Positions of pre + per carrying a digit of the exceptional set (M = 3N+1, N >= 1)."""
    if N < 1:
        raise ValueError("the exceptional set needs N >= 1")
    bad = exceptional_digits(N)
    return sum(d in bad for d in s.pre + s.per)


# coding multiplicity

@dataclass(frozen=True)
class CodingCount:
    depth: int
    counts: tuple
    samples: tuple
    separated: bool

    @property
    def count(self):
        return self.counts[-1]

    def to_json(self):
        from .symbolic import format_word
        return {"depth": self.depth, "count": self.count, "counts": list(self.counts),
                "samples": [format_word(w) for w in self.samples], "separated": self.separated}


def point_of(s, beta, depth=None):
    """Pi_beta of a digit sequence: (pi(first row), pi(second row))."""
    r1, r2, _ = rows_of(s)
    return pi_eval(r1, beta, depth), pi_eval(r2, beta, depth)


def count_codings(x, beta, M=None, depth=16, samples=4, cap=None):
    """Branch-and-bound count of digit prefixes of length ``depth`` that can code x.

    The prefix d_1..d_k survives while beta^k (x - Pi(d_1..d_k)) may still lie in
    the closed hull. Enclosure slack can only keep extra prefixes alive, so a
    count of 1 certifies uniqueness up to the depth; a larger count is
    reported with ``separated`` telling whether two survivors have
    remainders certainly in the hull interior (genuine distinct continuations).
    """
    M = M or beta.M
    cap = cap or DEFAULT.depth_caps["count-codings"]
    if depth > cap:
        raise DepthExceeded(f"depth {depth} exceeds the cap {cap}")
    digits = omega(M)
    with working_precision(max(beta.bits, 128)):
        b = beta.value.ball
        leg = M / (b - 1)
        frontier = [((), x[0].ball, x[1].ball)]
        counts = []
        for _ in range(depth):
            nxt = []
            for word, px, py in frontier:
                for d in digits:
                    rx, ry = b * px - d.i, b * py - d.j
                    if rx < 0 or ry < 0 or rx + ry > leg:
                        continue
                    nxt.append((word + (d,), rx, ry))
            frontier = nxt
            counts.append(len(frontier))
        interior = [w for w, rx, ry in frontier if rx > 0 and ry > 0 and rx + ry < leg]
    return CodingCount(depth, tuple(counts), tuple(w for w, _, _ in frontier[:samples]),
                       len(interior) >= 2)


# regimes

class Regime(str, Enum):
    FINITE3 = "Finite3"
    COUNTABLY_INFINITE = "CountablyInfinite"
    UNCOUNTABLE_ZERO_DIM = "UncountableZeroDim"
    POSITIVE_DIM = "PositiveDim"
    UNDECIDED = "UndecidedNearBoundary"


@dataclass(frozen=True)
class RegimeReport:
    M: int
    beta: Beta
    regime: Regime
    note: str = ""

    def to_json(self):
        return {"M": self.M, "beta": str(self.beta), "regime": self.regime.value, "note": self.note}


def classify_regime(M, beta, cap=None):
    note = "applies to the intrinsic univoque set only" if M == 1 else ""
    g, c = beta_G(M), beta_c(M)
    try:
        if g.exact is not None and beta.exact is not None:
            below_g = beta.exact <= g.exact
        else:
            _, _, below_g = separate(beta, g, cap)
        if below_g:
            return RegimeReport(M, beta, Regime.FINITE3, note)
        _, _, below_c = separate(beta, c, cap)
    except PrecisionExhausted:
        return RegimeReport(M, beta, Regime.UNDECIDED, note)
    regime = Regime.COUNTABLY_INFINITE if below_c else Regime.POSITIVE_DIM
    return RegimeReport(M, beta, regime, note)


# difference sets between consecutive ladder bases

@dataclass(frozen=True)
class DifferenceTail:
    n: int
    rotation: int
    substituted: bool
    sequence: EPSequence

    @property
    def label(self):
        core = "Phi(a_n)" if self.substituted else "a_n"
        return f"theta^{self.rotation}({core}^inf)" if self.rotation else f"{core}^inf"


def difference_tail_enumerate(M, n):
    """Tails that sequences of U(beta_{n+1}) minus U(beta_n) must end in."""
    if n > DEFAULT.depth_caps["ladder"]:
        raise DepthExceeded(f"level {n} exceeds the ladder cap")
    family = TMFamily.for_M(M)
    a = family.tower(n).a[n]
    cores = [(False, EPSequence.periodic(a))]
    if len(a) % 3 == 0:
        cores.append((True, EPSequence.periodic(family.Phi(a))))
    seen = {}
    for substituted, core in cores:
        for j in range(3):
            seq = theta_sequence(core, j)
            seen.setdefault(seq, DifferenceTail(n, j, substituted, seq))
    return list(seen.values())


def pattern_sequence(M, exponents, tail_level=None):
    """a_{i_1}^{j_1} a_{i_2}^{j_2} ... for increasing levels, closed by a periodic tail.

    ``exponents`` maps each level (increasing) to its repetition count; the
    last listed level (or ``tail_level``) repeats forever.
    """
    family = TMFamily.for_M(M)
    levels = sorted(exponents)
    top = tail_level if tail_level is not None else levels[-1]
    tower = family.tower(max(levels + [top]))
    head = ()
    for lv in levels:
        head += tower.a[lv] * exponents[lv]
    return EPSequence(head, tower.a[top])
