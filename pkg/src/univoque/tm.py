"""Thue-Morse type sequences, their block substitutions and block towers.

For M = 3N+1, 3N+2, 3N+3 the quasi-greedy expansion of 1 in the critical base
is lambda, gamma or eta. Each family comes with an involutive substitution on
four 3-blocks of integers (phi) and on four 3-blocks of digits (Phi), and with
a doubling tower t_{n+1} = t_n^+ phi(t_n^+) whose first row reproduces the
integer tower.
"""

from dataclasses import dataclass
from functools import cached_property

from .symbolic import Digit, EPSequence, compare_words, Order, word_rows


def tau(i):
    return bin(i).count("1") & 1


def tau_prefix(n):
    return tuple(tau(i) for i in range(n))


@dataclass(frozen=True)
class TMFamily:
    """kind 1, 2, 3 stands for M = 3N+1 (lambda), 3N+2 (gamma), 3N+3 (eta)."""

    kind: int
    N: int

    def __post_init__(self):
        if self.kind not in (1, 2, 3) or self.N < 0:
            raise ValueError(f"no family for kind={self.kind}, N={self.N}")

    @classmethod
    def for_M(cls, M):
        if M < 1:
            raise ValueError("M must be positive")
        N, r = divmod(M - 1, 3)
        return cls(r + 1, N)

    @property
    def M(self):
        return 3 * self.N + self.kind

    @property
    def name(self):
        return {1: "lambda", 2: "gamma", 3: "eta"}[self.kind]

    # the sequences

    def _block(self, k, conjugate):
        """Symbols 3k+1, 3k+2, 3k+3 (1-based) of the family sequence."""
        N = self.N
        if self.kind == 3:
            t0, t1 = tau(k), tau(k + 1)
            if conjugate:
                t0, t1 = 1 - t0, 1 - t1
            return (N + 2 - 2 * t0, N + t0, N + 1 + t1)
        a, b = tau(2 * k + 1), tau(2 * k + 2)
        if conjugate:
            a, b = 1 - a, 1 - b
        return (N + a, N + (self.kind == 2), N + b)

    def prefix(self, n, conjugate=False):
        out = []
        k = 0
        while len(out) < n:
            out.extend(self._block(k, conjugate))
            k += 1
        return tuple(out[:n])

    # substitutions

    @cached_property
    def phi_table(self):
        N = self.N
        if self.kind == 1:
            pairs = [((N + 1, N, N + 1), (N, N, N)),
                     ((N + 1, N, N), (N, N, N + 1))]
        elif self.kind == 2:
            pairs = [((N + 1, N + 1, N + 1), (N, N + 1, N)),
                     ((N + 1, N + 1, N), (N, N + 1, N + 1))]
        else:
            pairs = [((N + 2, N, N + 2), (N, N + 1, N + 1)),
                     ((N + 2, N, N + 1), (N, N + 1, N + 2))]
        return _involution(pairs)

    @cached_property
    def Phi_table(self):
        N, M = self.N, self.M

        def a(i, j):
            return Digit(i, j, M)

        if self.kind == 1:
            pairs = [((a(N + 1, N), a(N, N + 1), a(N + 1, N)), (a(N, N), a(N, N + 1), a(N, N))),
                     ((a(N + 1, N), a(N, N + 1), a(N, N)), (a(N, N), a(N, N + 1), a(N + 1, N)))]
        elif self.kind == 2:
            pairs = [((a(N + 1, N + 1), a(N + 1, N), a(N, N + 1)),
                      (a(N, N + 1), a(N + 1, N), a(N + 1, N + 1))),
                     ((a(N + 1, N + 1), a(N + 1, N), a(N + 1, N + 1)),
                      (a(N, N + 1), a(N + 1, N), a(N, N + 1)))]
        else:
            pairs = [((a(N + 2, N + 1), a(N, N + 2), a(N + 2, N)),
                      (a(N, N + 1), a(N + 1, N + 2), a(N + 1, N))),
                     ((a(N + 2, N + 1), a(N, N + 2), a(N + 1, N)),
                      (a(N, N + 1), a(N + 1, N + 2), a(N + 2, N)))]
        return _involution(pairs)

    def phi(self, word):
        return _blockwise(self.phi_table, word)

    def Phi(self, word):
        return _blockwise(self.Phi_table, word)

    def substitution_apply(self, word, level="integer"):
        return self.phi(word) if level == "integer" else self.Phi(word)

    # plus operation on the designated last symbol

    @property
    def last_digit(self):
        N, M = self.N, self.M
        return {1: Digit(N, N, M), 2: Digit(N, N + 1, M), 3: Digit(N + 1, N, M)}[self.kind]

    @property
    def last_digit_plus(self):
        d = self.last_digit
        return Digit(d.i + 1, d.j, d.m)

    def plus(self, word):
        """w^+ : raise the last symbol (integer word) or swap the designated last digit."""
        word = tuple(word)
        if not word:
            raise ValueError("empty word")
        if isinstance(word[-1], Digit):
            if word[-1] != self.last_digit:
                raise ValueError(f"last digit {word[-1]} is not {self.last_digit}")
            return word[:-1] + (self.last_digit_plus,)
        return word[:-1] + (word[-1] + 1,)

    def minus(self, word):
        word = tuple(word)
        if isinstance(word[-1], Digit):
            if word[-1] != self.last_digit_plus:
                raise ValueError(f"last digit {word[-1]} is not {self.last_digit_plus}")
            return word[:-1] + (self.last_digit,)
        return word[:-1] + (word[-1] - 1,)

    # towers

    def tower(self, n_max):
        return BlockTower.build(self, n_max)

    @property
    def first_level(self):
        """Lowest tower index with a 3-block factorisation (0, except 1 for eta)."""
        return 1 if self.kind == 3 else 0


def _involution(pairs):
    table = {}
    for u, v in pairs:
        table[u] = v
        table[v] = u
    return table


def _blockwise(table, word):
    word = tuple(word)
    if len(word) % 3:
        raise ValueError("word length is not a multiple of 3")
    out = []
    for k in range(0, len(word), 3):
        block = word[k:k + 3]
        if block not in table:
            raise ValueError(f"block {block} is not in the substitution's domain")
        out.extend(table[block])
    return tuple(out)


@dataclass(frozen=True)
class BlockTower:
    """t[n] (integer blocks) and a[n] (digit blocks) for n = 0..n_max."""

    family: TMFamily
    t: tuple
    a: tuple

    @classmethod
    def build(cls, family, n_max):
        N, M = family.N, family.M
        if family.kind == 1:
            t = [(N + 1, N, N)]
            a = [(Digit(N + 1, N, M), Digit(N, N + 1, M), Digit(N, N, M))]
        elif family.kind == 2:
            t = [(N + 1, N + 1, N)]
            a = [(Digit(N + 1, N + 1, M), Digit(N + 1, N, M), Digit(N, N + 1, M))]
        else:
            t = [(N + 1,), (N + 2, N, N + 1)]
            a = [(Digit(N + 1, N + 1, M),),
                 (Digit(N + 2, N + 1, M), Digit(N, N + 2, M), Digit(N + 1, N, M))]
        while len(t) <= n_max:
            tp, ap = family.plus(t[-1]), family.plus(a[-1])
            t.append(tp + family.phi(tp))
            a.append(ap + family.Phi(ap))
        return cls(family, tuple(t[:n_max + 1]), tuple(a[:n_max + 1]))

    def __len__(self):
        return len(self.t)

    def rows(self, n):
        return word_rows(self.a[n])

    def to_json(self):
        from .symbolic import format_word
        return {
            "family": self.family.name,
            "N": self.family.N,
            "levels": [{"n": n, "t": format_word(self.t[n]),
                        "a_rows": [format_word(r) for r in self.rows(n)]}
                       for n in range(len(self.t))],
        }


def tower_block(M, n):
    """Integer block t_n / u_n / v_n for the family of M."""
    return TMFamily.for_M(M).tower(n).t[n]


def digit_block(M, n):
    return TMFamily.for_M(M).tower(n).a[n]


@dataclass(frozen=True)
class InequalityReport:
    family: TMFamily
    n: int
    checked: int
    counterexample: tuple | None = None

    @property
    def passed(self):
        return self.counterexample is None


def verify_tm_inequalities(family, n):
    """Exhaustive check of the two chains of inequalities for all 0 <= i < 3*2^n.

        hat[:L-i] < fam[i:L] <= fam[:L-i]   and   hat[:L-i] <= hat[i:L] < fam[:L-i]
    """
    L = 3 * 2**n
    fam = family.prefix(L)
    hat = family.prefix(L, conjugate=True)
    checks = (
        ("hat < shifted fam", lambda i: compare_words(hat[:L - i], fam[i:]) is Order.LESS),
        ("shifted fam <= fam", lambda i: compare_words(fam[i:], fam[:L - i]) is not Order.GREATER),
        ("hat <= shifted hat", lambda i: compare_words(hat[:L - i], hat[i:]) is not Order.GREATER),
        ("shifted hat < fam", lambda i: compare_words(hat[i:], fam[:L - i]) is Order.LESS),
    )
    count = 0
    for i in range(L):
        for label, ok in checks:
            count += 1
            if not ok(i):
                return InequalityReport(family, n, count, (i, label))
    return InequalityReport(family, n, count)


def delta_ladder(family, n):
    """delta(beta_n) = t_n^infinity."""
    return EPSequence.periodic(family.tower(n).t[n])


def delta_hat_ladder(family, k):
    """delta(hat beta_k) = t_k^+ phi(t_k)^infinity, defined from the first 3-block level on."""
    if k < family.first_level:
        raise ValueError(f"the {family.name} hat ladder starts at k={family.first_level}")
    t = family.tower(k).t[k]
    return EPSequence(family.plus(t), family.phi(t))
