"""univoque command line.

Every subcommand prints JSON on stdout (critical-table defaults to CSV).
Exit status: 0 on success, 2 when a comparison stays undecided or precision
runs out, 1 on usage and input errors.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .config import Config
from .errors import (IsolationFailed, PrecisionExhausted, Undecidable, UnivoqueError)
from .symbolic import format_sequence, format_word, parse_sequence, parse_word

UNDECIDED_ERRORS = (Undecidable, PrecisionExhausted, IsolationFailed)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# input helpers

def parse_beta(text, M, bits):
    """A decimal or fraction string, or one of: golden, G, c."""
    from .critical import beta_c, beta_G
    from .expansion import Beta
    from .sft import golden_ratio
    key = text.strip()
    if key.lower() in ("golden", "phi"):
        if M != 1:
            raise UsageError("the golden ratio base is only offered for M = 1")
        return golden_ratio(bits)
    if key in ("G", "beta_G"):
        return beta_G(M, bits=bits)
    if key in ("c", "beta_c"):
        return beta_c(M, bits=bits)
    try:
        Fraction(key)
    except ValueError:
        raise UsageError(f"cannot read beta from {text!r}")
    return Beta.from_value(key, M, bits)


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required")


def _interval_json(v, places=12):
    d = v.decimal(places)
    return {"lo": str(float(v.lo)), "hi": str(float(v.hi)), "width": v.width,
            "decimal": None if d is None else f"{d:.{places}f}"}


def _beta_json(b, places=12):
    out = {"label": b.label, "value": _interval_json(b.value, places)}
    if b.exact is not None:
        out["exact"] = str(b.exact)
    if b.delta is not None:
        out["delta"] = format_sequence(b.delta)
    return out


# subcommands

def cmd_critical_table(args, cfg):
    from .critical import critical_table
    rows = critical_table(args.from_, args.to, tol=args.tol, bits=cfg.precision_bits,
                          threads=args.threads)
    if args.json:
        return [r.as_json() for r in rows], 0
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["M", "beta_G", "beta_c", "width_G", "width_c"])
    for r in rows:
        w.writerow(r.as_csv_fields())
    return buf.getvalue(), 0


def cmd_beta_g(args, cfg):
    from .critical import beta_G, certify_perron
    _need(args, "m")
    b = beta_G(args.m, tol=args.tol, bits=cfg.precision_bits)
    perron = certify_perron(args.m)
    out = {"M": args.m, "beta_G": _beta_json(b),
           "perron": {"certified": perron.certified, "max_other_modulus": perron.max_other_modulus}}
    return out, 0


def cmd_beta_c(args, cfg):
    from .critical import beta_c
    _need(args, "m")
    b = beta_c(args.m, tol=args.tol, bits=cfg.precision_bits)
    return {"M": args.m, "beta_c": _beta_json(b)}, 0


def cmd_beta_ladder(args, cfg):
    from .critical import beta_hat_ladder, beta_n_ladder
    from .tm import TMFamily
    _need(args, "m")
    n = 4 if args.n is None else args.n
    first = TMFamily.for_M(args.m).first_level
    plain = beta_n_ladder(args.m, n, args.tol, cfg.precision_bits)
    hats = beta_hat_ladder(args.m, n, args.tol, cfg.precision_bits)
    return {"M": args.m,
            "beta_n": [dict(n=k, **_beta_json(b)) for k, b in enumerate(plain)],
            "beta_hat": [dict(k=first + k, **_beta_json(b)) for k, b in enumerate(hats)]}, 0


def cmd_delta(args, cfg):
    from .expansion import quasi_greedy_one
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    n = args.n or 32
    digits = quasi_greedy_one(beta, n)
    out = {"M": args.m, "beta": args.beta, "n": n, "digits": format_word(digits)}
    if beta.delta is not None:
        out["sequence"] = format_sequence(beta.delta)
    return out, 0


def cmd_delta_inverse(args, cfg):
    from .expansion import delta_inverse
    _need(args, "m", "seq")
    s = parse_sequence(args.seq)
    b = delta_inverse(s, args.m, tol=args.tol, bits=cfg.precision_bits)
    return {"M": args.m, "sequence": format_sequence(s), "beta": _beta_json(b)}, 0


def cmd_check(args, cfg):
    from .membership import check_membership
    _need(args, "m", "beta", "seq")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    if "|" in args.seq:
        s = parse_sequence(args.seq, args.m)
    else:
        s = parse_word(args.seq, args.m)
    v = check_membership(s, beta, args.depth)
    return v.to_json(), 0


def cmd_count_codings(args, cfg):
    from .interval import RealInterval
    from .membership import count_codings, point_of
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    if args.seq:
        point = point_of(parse_sequence(args.seq, args.m), beta)
    elif args.x:
        x, y = (Fraction(v) for v in args.x.split(","))
        point = (RealInterval.exact(x, beta.bits), RealInterval.exact(y, beta.bits))
    else:
        raise UsageError("give --seq or --x")
    c = count_codings(point, beta, depth=args.depth or 16)
    return c.to_json(), 0


def cmd_classify(args, cfg):
    from .membership import Regime, classify_regime
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    r = classify_regime(args.m, beta)
    return r.to_json(), (2 if r.regime is Regime.UNDECIDED else 0)


def cmd_tails(args, cfg):
    from .membership import difference_tail_enumerate
    _need(args, "m")
    n = 0 if args.n is None else args.n
    tails = difference_tail_enumerate(args.m, n)
    return {"M": args.m, "n": n,
            "tails": [{"label": t.label, "sequence": format_sequence(t.sequence)} for t in tails]}, 0


def cmd_sft_dim(args, cfg):
    from .sft import build_Xk_graph, dim_bounds, smallest_level
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    k = args.k if args.k is not None else smallest_level(args.m, beta)
    if k is None:
        raise UsageError("no SFT level below the ladder cap fits under this beta")
    out = dim_bounds(args.m, k, beta).to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(build_Xk_graph(args.m, k).to_dot())
        out["dot"] = args.out
    return out, 0


def cmd_multinacci_dim(args, cfg):
    from .sft import MULTINACCI_MATRIX, multinacci_dimension, spectral_radius
    beta = parse_beta(args.beta or "golden", 1, cfg.precision_bits)
    dim = multinacci_dimension(beta)
    r = spectral_radius(MULTINACCI_MATRIX, args.tol)
    d5 = dim.decimal(5)
    return {"beta": args.beta or "golden", "spectral_radius": _interval_json(r),
            "dimension": _interval_json(dim),
            "dimension_5": None if d5 is None else f"{d5:.5f}"}, 0


def cmd_verify_lemmas(args, cfg):
    from .critical import certify_perron
    from .tm import TMFamily, verify_tm_inequalities
    _need(args, "m")
    n = 4 if args.n is None else args.n
    family = TMFamily.for_M(args.m)
    reports = [verify_tm_inequalities(family, k) for k in range(n + 1)]
    perron = certify_perron(args.m)
    ok = all(r.passed for r in reports) and perron.certified
    return {"M": args.m, "family": family.name,
            "inequalities": [{"n": r.n, "checked": r.checked, "passed": r.passed,
                              "counterexample": r.counterexample} for r in reports],
            "perron_certified": perron.certified, "passed": ok}, (0 if ok else 1)


def cmd_render(args, cfg):
    from .geometry import overlap_triangles, render_first_generation
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    svg = render_first_generation(beta, args.m, out=args.out)
    if args.out is None or args.svg:
        return svg, 0
    return {"out": args.out, "pieces": (args.m + 1) * (args.m + 2) // 2,
            "overlap_triangles": len(overlap_triangles(beta, args.m))}, 0


def cmd_survivor_grid(args, cfg):
    from .geometry import survivor_grid
    _need(args, "m", "beta")
    beta = parse_beta(args.beta, args.m, cfg.precision_bits)
    g = survivor_grid(beta, args.m, args.resolution, args.iterations, threads=args.threads)
    out = g.to_json()
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(g.to_pgm())
        out["pgm"] = args.out
    return out, 0


COMMANDS = {
    "critical-table": (cmd_critical_table, "beta_G and beta_c for a range of M"),
    "beta-g": (cmd_beta_g, "generalised golden ratio with Perron certificate"),
    "beta-c": (cmd_beta_c, "generalised Komornik-Loreti constant"),
    "beta-ladder": (cmd_beta_ladder, "beta_n and hat beta_k ladders"),
    "delta": (cmd_delta, "quasi-greedy expansion of 1"),
    "delta-inverse": (cmd_delta_inverse, "the base whose quasi-greedy expansion is --seq"),
    "check": (cmd_check, "membership in the intrinsic univoque set"),
    "count-codings": (cmd_count_codings, "branch-and-bound count of codings"),
    "classify": (cmd_classify, "phase of beta relative to beta_G and beta_c"),
    "tails": (cmd_tails, "tails of the difference set at ladder level n"),
    "sft-dim": (cmd_sft_dim, "dimension bounds from the subshift X_k"),
    "multinacci-dim": (cmd_multinacci_dim, "dimension at the golden ratio"),
    "verify-lemmas": (cmd_verify_lemmas, "Thue-Morse inequalities and Perron dominance"),
    "render": (cmd_render, "SVG of the first generation and overlap"),
    "survivor-grid": (cmd_survivor_grid, "escape times of the expanding map on a grid"),
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--beta")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--depth", type=int)
    common.add_argument("--seq")
    common.add_argument("--x", help="point as 'x,y' (fractions or decimals)")
    common.add_argument("--tol", type=float)
    common.add_argument("--precision-bits", type=int)
    common.add_argument("--csv", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("--svg", action="store_true")
    common.add_argument("--out")
    common.add_argument("--threads", type=int, default=1)
    parser = _Parser(prog="univoque", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "critical-table":
            p.add_argument("--from", dest="from_", type=int, default=1)
            p.add_argument("--to", type=int, default=10)
        if name == "survivor-grid":
            p.add_argument("--resolution", type=int, default=256)
            p.add_argument("--iterations", type=int, default=32)
    return parser


def _write(payload, stream):
    if isinstance(payload, str):
        stream.write(payload)
    else:
        stream.write(json.dumps(payload) + "\n")


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        overrides = {}
        if args.precision_bits is not None:
            overrides["precision_bits"] = args.precision_bits
        if args.tol is not None:
            overrides["tol"] = args.tol
        try:
            cfg = Config.from_env(**overrides)
        except ValueError as e:
            raise UsageError(str(e))
        args.tol = cfg.tol
        handler = COMMANDS[args.command][0]
        payload, code = handler(args, cfg)
    except UsageError as e:
        print(f"univoque: {e}", file=stderr)
        return 1
    except UNDECIDED_ERRORS as e:
        print(f"univoque: undecided: {e}", file=stderr)
        return 2
    except (UnivoqueError, ValueError) as e:
        print(f"univoque: {e}", file=stderr)
        return 1
    _write(payload, stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
