"""Digits of Omega_M, the rotation theta, row views and eventually periodic sequences."""

from dataclasses import dataclass
from enum import IntEnum
from math import lcm
from typing import NamedTuple


class Digit(NamedTuple):
    """The digit alpha_ij = (i, j) of Omega_m. The complement is derived, never stored."""

    i: int
    j: int
    m: int

    @property
    def complement(self):
        return self.m - self.i - self.j

    def triple(self):
        return self.i, self.j, self.complement

    def __str__(self):
        return f"{self.i},{self.j}"


def digit(i, j, m):
    if i < 0 or j < 0 or i + j > m:
        raise ValueError(f"({i},{j}) is not a digit of Omega_{m}")
    return Digit(i, j, m)


def omega(m):
    """All digits of Omega_m, ordered by first then second coordinate."""
    return [Digit(i, j, m) for i in range(m + 1) for j in range(m + 1 - i)]


def theta(d):
    return Digit(d.complement, d.i, d.m)


def theta_apply(d, k=1):
    for _ in range(k % 3):
        d = theta(d)
    return d


def theta_word(word, k=1):
    return tuple(theta_apply(d, k) for d in word)


def word_rows(word):
    """The three integer rows (first coordinates, second coordinates, complements)."""
    return (tuple(d.i for d in word),
            tuple(d.j for d in word),
            tuple(d.complement for d in word))


def word_from_rows(r1, r2, m):
    return tuple(digit(a, b, m) for a, b in zip(r1, r2))


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _primitive_root(word):
    """Shortest u with word = u^k, via the prefix-function."""
    n = len(word)
    fail = [0] * n
    k = 0
    for q in range(1, n):
        while k and word[q] != word[k]:
            k = fail[k - 1]
        if word[q] == word[k]:
            k += 1
        fail[q] = k
    p = n - fail[-1]
    return word[:p] if n % p == 0 else word


@dataclass(frozen=True)
class EPSequence:
    """The eventually periodic sequence pre per per per ...

    Symbols are ints (integer sequences) or Digits (digit sequences). The
    stored form is canonical: primitive period, shortest preperiod. Two
    sequences are equal as infinite words iff their dataclasses compare equal.
    """

    pre: tuple
    per: tuple

    def __post_init__(self):
        pre, per = tuple(self.pre), tuple(self.per)
        if not per:
            raise ValueError("period must be nonempty")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            per = per[-1:] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)

    @classmethod
    def periodic(cls, word):
        return cls((), tuple(word))

    def __getitem__(self, k):
        if k < len(self.pre):
            return self.pre[k]
        return self.per[(k - len(self.pre)) % len(self.per)]

    def prefix(self, n):
        if n <= len(self.pre):
            return self.pre[:n]
        rest = n - len(self.pre)
        reps = -(-rest // len(self.per))
        return self.pre + (self.per * reps)[:rest]

    def shift(self, k=1):
        if k <= len(self.pre):
            return EPSequence(self.pre[k:], self.per)
        r = (k - len(self.pre)) % len(self.per)
        return EPSequence((), self.per[r:] + self.per[:r])

    def tails(self):
        """Every distinct shift sigma^k(self), k >= 0, paired with its first index k."""
        return [(k, self.shift(k)) for k in range(len(self.pre) + len(self.per))]

    def map(self, f):
        return EPSequence(tuple(f(x) for x in self.pre), tuple(f(x) for x in self.per))

    def prepend(self, word):
        return EPSequence(tuple(word) + self.pre, self.per)

    @property
    def is_periodic(self):
        return not self.pre

    def horizon(self, other):
        return len(self.pre) + len(other.pre) + 2 * lcm(len(self.per), len(other.per))

    def compare(self, other):
        return lex_compare(self, other)

    def __lt__(self, other):
        return lex_compare(self, other) is Order.LESS

    def __le__(self, other):
        return lex_compare(self, other) is not Order.GREATER

    def __gt__(self, other):
        return lex_compare(self, other) is Order.GREATER

    def __ge__(self, other):
        return lex_compare(self, other) is not Order.LESS

    def __str__(self):
        return format_sequence(self)


def lex_compare(a, b):
    """Lexicographic order of two eventually periodic integer sequences."""
    if a == b:
        return Order.EQUAL
    n = a.horizon(b)
    pa, pb = a.prefix(n), b.prefix(n)
    if pa == pb:
        # cannot happen for canonical inputs; kept as a guard
        return Order.EQUAL
    return Order.LESS if pa < pb else Order.GREATER


def compare_words(u, v):
    """Compare finite words of equal length."""
    return Order.EQUAL if u == v else (Order.LESS if u < v else Order.GREATER)


def rows_of(s):
    """Rows of a digit word or of a digit EPSequence."""
    if isinstance(s, EPSequence):
        pre, per = word_rows(s.pre), word_rows(s.per)
        return tuple(EPSequence(pre[r], per[r]) for r in range(3))
    return word_rows(s)


def theta_sequence(s, k=1):
    return s.map(lambda d: theta_apply(d, k))


def reflect(s, m):
    """Pointwise m-complement of an integer sequence or word."""
    def flip(x):
        if not 0 <= x <= m:
            raise ValueError(f"symbol {x} exceeds {m}")
        return m - x
    if isinstance(s, EPSequence):
        return s.map(flip)
    return tuple(flip(x) for x in s)


# text format

def _format_word(word):
    if not word:
        return ""
    if isinstance(word[0], Digit):
        return ";".join(str(d) for d in word)
    if all(0 <= x <= 9 for x in word):
        return "".join(str(x) for x in word)
    return ",".join(str(x) for x in word)


def format_sequence(s):
    return f"{_format_word(s.pre)} | {_format_word(s.per)}".strip()


def format_word(word):
    return _format_word(tuple(word))


def parse_word(text, m=None):
    """Parse "1,0;0,1" as digits of Omega_m when m is given, else "2121" or "2,1,10" as integers."""
    text = text.strip()
    if not text:
        return ()
    if m is not None:
        out = []
        for pair in text.split(";"):
            i, j = (int(v) for v in pair.split(","))
            out.append(digit(i, j, m))
        return tuple(out)
    if "," in text:
        return tuple(int(v) for v in text.split(","))
    return tuple(int(c) for c in text if not c.isspace())


def parse_sequence(text, m=None):
    """Parse "PRE | PER". Without a bar the whole text is the period."""
    if "|" in text:
        pre, per = text.split("|", 1)
    else:
        pre, per = "", text
    return EPSequence(parse_word(pre, m), parse_word(per, m))
