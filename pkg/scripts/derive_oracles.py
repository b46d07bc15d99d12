"""Independent reference values for the critical bases, printed as Python literals.

Nothing from the package is imported. Coefficient sequences are rebuilt from
their closed-form definitions (Thue-Morse parity) and each base is solved with
mpmath.findroot at 50 digits. The output is what tests/oracle_values.py freezes.

    python scripts/derive_oracles.py > /tmp/oracles.txt
"""

import mpmath as mp

mp.mp.dps = 50


def tau(i):
    return bin(i).count("1") & 1


def family(M, blocks, conjugate=False):
    """The quasi-greedy expansion of 1 at beta_c(M), block by block."""
    N, r = divmod(M - 1, 3)
    out = []
    for k in range(blocks):
        if r == 2:
            t0, t1 = tau(k), tau(k + 1)
            if conjugate:
                t0, t1 = 1 - t0, 1 - t1
            out += [N + 2 - 2 * t0, N + t0, N + 1 + t1]
        else:
            a, b = tau(2 * k + 1), tau(2 * k + 2)
            if conjugate:
                a, b = 1 - a, 1 - b
            out += [N + a, N + r, N + b]
    return out


def solve(pre, per, lo, hi):
    """x with sum pre_i x^-i + x^-|pre| sum per_i x^-i / (1 - x^-|per|) = 1."""
    def f(x):
        y = 1 / x
        a = mp.fsum(c * y ** (k + 1) for k, c in enumerate(pre))
        if not per:
            return a - 1
        b = mp.fsum(c * y ** (k + 1) for k, c in enumerate(per))
        return a + y ** len(pre) * b / (1 - y ** len(per)) - 1
    return mp.findroot(f, (lo, hi), solver="illinois")


def main():
    G, C = {}, {}
    for M in range(1, 13):
        N, r = divmod(M - 1, 3)
        if r == 2:
            G[M] = mp.mpf(N + 2)
        else:
            # delta(beta_G) = ((N+1) (N+r) N)^infinity for r = 0, 1
            G[M] = solve([], [N + 1, N + r, N], N + 1 + mp.mpf(1) / 16, N + 2)
        lo, hi = (N + 2, N + 3) if r == 2 else (N + 1, N + 2)
        C[M] = solve(family(M, 700), [], lo + mp.mpf(1) / 16, hi)
    print("BETA_G =", {M: str(int(v)) if v == int(v) else mp.nstr(v, 20) for M, v in G.items()})
    print("BETA_C =", {M: mp.nstr(v, 20) for M, v in C.items()})

    lam = family(1, 200)
    ladder = {}
    for n in range(5):
        t = lam[:3 * 2**n]
        t = t[:-1] + [t[-1] - 1]  # t_n: the family block with its last symbol lowered
        ladder[n] = mp.nstr(solve([], t, 1.2, 2), 20)
    print("BETA_N_1 =", ladder)

    hats = {}
    for M, levels in ((1, 4), (2, 3)):
        seq = family(M, 400)
        for k in range(levels):
            L = 3 * 2**k
            hats[(M, k)] = mp.nstr(solve(seq[:L], seq[L:2 * L], 1.2, 3), 20)
    print("BETA_HAT =", hats)


if __name__ == "__main__":
    main()
