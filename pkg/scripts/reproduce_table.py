"""Critical-base table with certified enclosures, side by side with the printed values.

    python scripts/reproduce_table.py --to 12
"""

import argparse
import sys
import time

sys.path.insert(0, "tests")
from oracle_values import PRINTED_TABLE_C, PRINTED_TABLE_G  # noqa: E402

from univoque.critical import critical_table  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--from", dest="lo", type=int, default=1)
    ap.add_argument("--to", dest="hi", type=int, default=10)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    t = time.perf_counter()
    rows = critical_table(args.lo, args.hi, threads=args.threads)
    print(f"{'M':>3} {'beta_G':>9} {'printed':>9} {'beta_c':>9} {'printed':>9}  widths")
    for r in rows:
        M, g, c, wg, wc = r.as_csv_fields()
        pg = PRINTED_TABLE_G[M - 1] if M <= 10 else "-"
        pc = PRINTED_TABLE_C[M - 1] if M <= 10 else "-"
        flag = "  <- differs" if pc not in ("-", c) or pg not in ("-", g) else ""
        print(f"{M:>3} {g:>9} {pg:>9} {c:>9} {pc:>9}  {wg} {wc}{flag}")
    print(f"{len(rows)} rows in {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
