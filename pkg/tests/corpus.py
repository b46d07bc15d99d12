"""Shared sequence corpora and helpers for the membership and acceptance tests."""

import random

from univoque.expansion import Beta
from univoque.symbolic import Digit, EPSequence, omega, theta_sequence
from univoque.tm import TMFamily

SEED = 20240601


def oracle_corpus(size=50, seed=SEED):
    """Eventually periodic sequences over Omega_1 with period at most 6.

    The structured part covers the theta-orbits of the sequences the theory
    singles out; the rest is seeded random.
    """
    F = TMFamily.for_M(1)
    T = F.tower(1)
    zero, ten = Digit(0, 0, 1), Digit(1, 0, 1)
    base = [EPSequence.periodic(T.a[0]), EPSequence.periodic(F.Phi(T.a[0])),
            EPSequence.periodic(T.a[1]), EPSequence.periodic((zero,)),
            EPSequence((ten, ten), T.a[0])]
    seqs = [theta_sequence(s, j) for s in base for j in range(3)]
    rng = random.Random(seed)
    O = omega(1)
    while len(seqs) < size:
        s = EPSequence(tuple(rng.choice(O) for _ in range(rng.randint(0, 3))),
                       tuple(rng.choice(O) for _ in range(rng.randint(1, 6))))
        if s not in seqs:
            seqs.append(s)
    return seqs


def midpoint_beta(a, b):
    """A rational base strictly between two disjoint enclosures a < b."""
    q = (a.value.hi_fraction() + b.value.lo_fraction()) / 2
    return Beta.from_value(q, a.M)


CONTEXTS = lambda M: [(), (Digit(0, 0, M),), (Digit(0, 0, M),) * 2, (Digit(M, 0, M),)]
