"""Planar picture: the IFS maps, the hull, the overlap region and the expanding map with a hole.

With h = 1/beta and L = M/(beta(beta-1)) the first-generation piece for
d = (i, j) is the right isosceles triangle

    T_d = {x >= i h, y >= j h, x + y <= (i+j) h + L}.

Two pieces T_c, T_d meet in the triangle with corner (max i, max j) h and
hypotenuse at min(i_c+j_c, i_d+j_d) h + L, so the overlap region is a union of
such corner triangles and never needs general polygon clipping.

Rational bases are handled with exact Fractions; other bases use arb balls,
and any sign that straddles zero is reported as undecided.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations

import numpy as np
from flint import arb

from .config import DEFAULT
from .errors import DepthExceeded
from .interval import RealInterval, to_arb, working_precision
from .symbolic import omega


def _scalars(beta):
    """(h, L, leg) as Fractions for rational beta, arb balls otherwise."""
    if beta.exact is not None:
        b = beta.exact
        return 1 / b, beta.M / (b * (b - 1)), beta.M / (b - 1)
    with working_precision(beta.bits):
        b = beta.value.ball
        return 1 / b, beta.M / (b * (b - 1)), beta.M / (b - 1)


def _sign(v):
    """-1, 0, 1, or None when an enclosure contains zero but is not exactly zero."""
    if isinstance(v, RealInterval):
        v = v.ball
    if isinstance(v, arb):
        if v > 0:
            return 1
        if v < 0:
            return -1
        return 0 if v.is_exact() and v == 0 else None
    return (v > 0) - (v < 0)


def _coerce(v, like):
    """Bring a coordinate into the number type of ``like`` (arb beats Fraction)."""
    if isinstance(v, RealInterval):
        return v.ball
    if isinstance(like, arb) and isinstance(v, Fraction):
        return to_arb(v)
    return v


def _as_float(v):
    if isinstance(v, RealInterval):
        return float(v)
    if isinstance(v, arb):
        return float(v.mid())
    return float(v)


@dataclass(frozen=True)
class Point2:
    """A planar point; coordinates are Fractions (exact) or RealIntervals/arb balls."""

    x: object
    y: object

    def floats(self):
        return _as_float(self.x), _as_float(self.y)


@dataclass(frozen=True)
class Triangle:
    """The right isosceles triangle {x >= x0, y >= y0, x + y <= x0 + y0 + leg}."""

    x0: object
    y0: object
    leg: object

    @property
    def vertices(self):
        return (Point2(self.x0, self.y0), Point2(self.x0 + self.leg, self.y0),
                Point2(self.x0, self.y0 + self.leg))

    @property
    def degenerate(self):
        return _sign(self.leg) != 1

    def margins(self, p):
        """Signed slacks of the three defining inequalities at p."""
        x, y = _coerce(p.x, self.leg), _coerce(p.y, self.leg)
        s = self.x0 + self.y0 + self.leg
        return (x - self.x0, y - self.y0, s - x - y)

    def locate(self, p):
        """'in' (interior), 'edge' (on the boundary or undecided), 'out'."""
        signs = [_sign(m) for m in self.margins(p)]
        if any(s == -1 for s in signs):
            return "out"
        if all(s == 1 for s in signs):
            return "in"
        return "edge"

    def contains(self, p):
        return self.locate(p) != "out"

    def floats(self):
        x0, y0, leg = _as_float(self.x0), _as_float(self.y0), _as_float(self.leg)
        return [(x0, y0), (x0 + leg, y0), (x0, y0 + leg)]


def hull(beta, M=None):
    M = M or beta.M
    _, _, leg = _scalars(beta)
    return Triangle(0 * leg, 0 * leg, leg)


def apply_f(d, p, beta):
    """f_d(p) = (p + d) / beta."""
    if beta.exact is not None and all(isinstance(c, (int, Fraction)) for c in (p.x, p.y)):
        b = beta.exact
        return Point2((p.x + d.i) / b, (p.y + d.j) / b)
    with working_precision(beta.bits):
        b = beta.value.ball
        x = p.x.ball if isinstance(p.x, RealInterval) else p.x
        y = p.y.ball if isinstance(p.y, RealInterval) else p.y
        return Point2((x + d.i) / b, (y + d.j) / b)


def sub_triangle(d, beta):
    h, L, _ = _scalars(beta)
    return Triangle(d.i * h, d.j * h, L)


def sub_triangles(beta, M=None):
    M = M or beta.M
    return {d: sub_triangle(d, beta) for d in omega(M)}


@dataclass(frozen=True)
class OverlapTriangle:
    corner: tuple  # (I, J) in units of h
    hyp: int  # hypotenuse at hyp * h + L
    pairs: tuple
    triangle: Triangle


def overlap_triangles(beta, M=None):
    """Maximal positive-area triangles f_c(Delta) cap f_d(Delta), c != d, by the closed form.

    Each pairwise intersection is keyed by its corner (I, J) and hypotenuse
    index S; intersections contained in another one are absorbed.
    """
    M = M or beta.M
    h, L, _ = _scalars(beta)
    keys = {}
    for c, d in combinations(omega(M), 2):
        I, J = max(c.i, d.i), max(c.j, d.j)
        S = min(c.i + c.j, d.i + d.j)
        leg = (S - I - J) * h + L
        if _sign(leg) == 1:
            keys.setdefault((I, J, S), []).append((c, d))
    maximal = [k for k in keys
               if not any(o != k and o[0] <= k[0] and o[1] <= k[1] and o[2] >= k[2] for o in keys)]
    out = []
    for I, J, S in sorted(maximal):
        leg = (S - I - J) * h + L
        out.append(OverlapTriangle((I, J), S, tuple(keys[(I, J, S)]), Triangle(I * h, J * h, leg)))
    return out


class Location(str, Enum):
    INSIDE = "Inside"
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary/Undecided"


def in_overlap(p, beta, M=None):
    """Inside when p is interior to two pieces, Outside when at most one piece can hold it."""
    M = M or beta.M
    places = [t.locate(p) for t in sub_triangles(beta, M).values()]
    if places.count("in") >= 2:
        return Location.INSIDE
    if sum(s != "out" for s in places) <= 1:
        return Location.OUTSIDE
    return Location.BOUNDARY


def expanding_step(p, beta, M=None):
    """T(p) = f_d^{-1}(p) for the unique piece holding p; None if p is in zero or several pieces."""
    M = M or beta.M
    holders = [d for d, t in sub_triangles(beta, M).items() if t.contains(p)]
    if len(holders) != 1:
        return None
    d = holders[0]
    if beta.exact is not None and isinstance(p.x, (int, Fraction)):
        b = beta.exact
        return d, Point2(b * p.x - d.i, b * p.y - d.j)
    with working_precision(beta.bits):
        b = beta.value.ball
        x = p.x.ball if isinstance(p.x, RealInterval) else p.x
        y = p.y.ball if isinstance(p.y, RealInterval) else p.y
        return d, Point2(b * x - d.i, b * y - d.j)


def s_equals_hull(beta, M=None):
    """S = Delta iff beta <= (M+2)/2; None if the enclosure straddles the threshold."""
    M = M or beta.M
    t = Fraction(M + 2, 2)
    if beta.exact is not None:
        return beta.exact <= t
    return beta.value.le(t)


# survivor grid

class Cell(int, Enum):
    OUTSIDE_HULL = 0
    SURVIVES = 1
    DEAD = 2
    OUTSIDE_GASKET = 3


@dataclass(frozen=True)
class SurvivorGrid:
    beta: float
    M: int
    resolution: int
    iterations: int
    status: np.ndarray  # Cell codes, row 0 at the top (largest y)
    steps: np.ndarray  # iterations survived

    def count(self, cell=Cell.SURVIVES):
        return int((self.status == cell).sum())

    @property
    def in_hull(self):
        return int((self.status != Cell.OUTSIDE_HULL).sum())

    @property
    def fraction(self):
        return self.count() / max(1, self.in_hull)

    def to_pgm(self):
        header = f"P5\n{self.resolution} {self.resolution}\n{max(1, self.iterations)}\n".encode()
        return header + self.steps.astype(np.uint8).tobytes()

    def to_json(self):
        return {"beta": self.beta, "M": self.M, "resolution": self.resolution,
                "iterations": self.iterations, "in_hull": self.in_hull,
                "survivors": self.count(), "dead": self.count(Cell.DEAD),
                "outside_gasket": self.count(Cell.OUTSIDE_GASKET), "fraction": self.fraction}


def survival_steps(xs, ys, beta, M, iterations):
    """Vectorised orbit of points under the expanding map with hole O.

    Returns (status, steps). A point is Dead once it is inside two pieces by
    more than the floating-point error of its orbit so far; when it is
    ambiguously near a piece boundary it follows the piece it is deepest in.
    """
    b = float(beta)
    h = 1 / b
    L = M / (b * (b - 1))
    digits = omega(M)
    di = np.array([d.i for d in digits], dtype=float)
    dj = np.array([d.j for d in digits], dtype=float)
    x = np.array(xs, dtype=float)
    y = np.array(ys, dtype=float)
    n = x.size
    status = np.full(n, Cell.SURVIVES, dtype=np.int8)
    steps = np.zeros(n, dtype=np.int32)
    alive = np.ones(n, dtype=bool)
    scale = M / (b - 1)
    for k in range(iterations):
        slack = 64 * np.finfo(float).eps * scale * b**k
        xa, ya = x[alive][:, None], y[alive][:, None]
        m = np.minimum(np.minimum(xa - di * h, ya - dj * h), (di + dj) * h + L - xa - ya)
        robust = (m > slack).sum(axis=1)
        idx = np.flatnonzero(alive)
        dead = robust >= 2
        hole = m.max(axis=1) < -slack
        status[idx[dead]] = Cell.DEAD
        status[idx[hole]] = Cell.OUTSIDE_GASKET
        steps[idx[dead | hole]] = k
        go = ~(dead | hole)
        branch = m[go].argmax(axis=1)
        gi = idx[go]
        x[gi] = b * x[gi] - di[branch]
        y[gi] = b * y[gi] - dj[branch]
        alive[idx[~go]] = False
        if not alive.any():
            break
    steps[alive] = iterations
    return status, steps


def _grid_rows(args):
    beta, M, res, iterations, rows = args
    leg = M / (beta - 1)
    w = leg / res
    out_s, out_n = [], []
    for r in rows:
        y = leg - (r + 0.5) * w
        xs = (np.arange(res) + 0.5) * w
        inside = xs + y < leg - 1e-12 * leg
        status = np.full(res, Cell.OUTSIDE_HULL, dtype=np.int8)
        steps = np.zeros(res, dtype=np.int32)
        s, n = survival_steps(xs[inside], np.full(inside.sum(), y), beta, M, iterations)
        status[inside], steps[inside] = s, n
        out_s.append(status)
        out_n.append(steps)
    return out_s, out_n


def survivor_grid(beta, M=None, resolution=256, iterations=32, threads=1):
    """Cell-centre escape times of the expanding map on the hull."""
    M = M or beta.M
    if resolution > DEFAULT.depth_caps["survivor-resolution"]:
        raise DepthExceeded(f"resolution {resolution} above the cap")
    if iterations > DEFAULT.depth_caps["survivor-iterations"]:
        raise DepthExceeded(f"iterations {iterations} above the cap")
    b = float(beta)
    rows = list(range(resolution))
    if threads and threads > 1:
        chunks = [rows[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(threads) as pool:
            parts = list(pool.map(_grid_rows, [(b, M, resolution, iterations, c) for c in chunks]))
        status = np.zeros((resolution, resolution), dtype=np.int8)
        steps = np.zeros((resolution, resolution), dtype=np.int32)
        for c, (s, n) in zip(chunks, parts):
            status[c], steps[c] = np.array(s), np.array(n)
    else:
        s, n = _grid_rows((b, M, resolution, iterations, rows))
        status, steps = np.array(s), np.array(n)
    return SurvivorGrid(b, M, resolution, iterations, status, steps)


# SVG

LIGHT = "#cccccc"
DARK = "#999999"


def _poly(points, scale, size, fill, cls):
    pts = " ".join(f"{x * scale + 40:.3f},{size - 40 - y * scale:.3f}" for x, y in points)
    return f'<polygon class="{cls}" points="{pts}" fill="{fill}" stroke="black" stroke-width="0.6"/>'


def render_first_generation(beta, M=None, out=None, size=480):
    """SVG of the hull, the first-generation pieces (light) and the overlap triangles (dark)."""
    M = M or beta.M
    H = hull(beta, M)
    leg = _as_float(H.leg)
    scale = (size - 80) / leg
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>first generation, M={M}, beta={beta}</title>",
    ]
    for d, t in sub_triangles(beta, M).items():
        parts.append(_poly(t.floats(), scale, size, LIGHT, "piece"))
    for o in overlap_triangles(beta, M):
        parts.append(_poly(o.triangle.floats(), scale, size, DARK, "overlap"))
    parts.append(_poly(H.floats(), scale, size, "none", "hull"))
    h = 1 / float(beta)
    base = size - 40
    for i in range(M + 1):
        x = i * h * scale + 40
        parts.append(f'<text x="{x:.3f}" y="{base + 16}" font-size="10" text-anchor="middle">'
                     f"{i}/β</text>")
    parts.append(f'<text x="{leg * scale + 40:.3f}" y="{base + 30}" font-size="10" '
                 f'text-anchor="middle">{M}/(β-1)</text>')
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if out is not None:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
