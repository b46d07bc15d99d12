"""First-generation SVGs for the three figure configurations and a survivor-grid PGM.

    python scripts/render_figures.py --out figures/
"""

import argparse
import json
import os
from fractions import Fraction

from univoque.expansion import Beta
from univoque.geometry import overlap_triangles, render_first_generation, survivor_grid

CASES = [(4, Fraction(4)), (2, Fraction(5, 2)), (3, Fraction(3))]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--resolution", type=int, default=256)
    ap.add_argument("--iterations", type=int, default=32)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)

    for M, q in CASES:
        beta = Beta.from_value(q, M)
        name = os.path.join(args.out, f"first_generation_M{M}_beta{float(q):g}.svg")
        render_first_generation(beta, M, out=name)
        print(f"{name}: {len(overlap_triangles(beta, M))} overlap triangles")

    for b in (1.45, 1.6, 1.8):
        g = survivor_grid(b, 1, args.resolution, args.iterations, threads=args.threads)
        name = os.path.join(args.out, f"survivors_M1_beta{b}.pgm")
        with open(name, "wb") as fh:
            fh.write(g.to_pgm())
        print(name, json.dumps(g.to_json()))


if __name__ == "__main__":
    main()
