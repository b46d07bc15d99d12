"""The squeeze beta_0 < ... < beta_n < beta_c < hat beta_n < ... < hat beta_0 for one M.

    python scripts/ladders.py --m 2 --n 6
"""

import argparse

from univoque.critical import beta_c, beta_hat, beta_n_ladder
from univoque.symbolic import format_sequence
from univoque.tm import TMFamily


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=1)
    ap.add_argument("--n", type=int, default=6)
    args = ap.parse_args()

    first = TMFamily.for_M(args.m).first_level
    c = beta_c(args.m)
    rows = [(f"beta_{n}", b) for n, b in enumerate(beta_n_ladder(args.m, args.n))]
    rows.append(("beta_c", c))
    rows += [(f"hat beta_{k}", beta_hat(args.m, k + first)) for k in range(args.n, -1, -1)]
    for name, b in rows:
        gap = float(b.value.mid - c.value.mid)
        delta = format_sequence(b.delta) if b.delta is not None else "(aperiodic)"
        if len(delta) > 60:
            delta = delta[:57] + "..."
        print(f"{name:>12}  {b.value.decimal(18)}  {gap:+.3e}  {delta}")


if __name__ == "__main__":
    main()
