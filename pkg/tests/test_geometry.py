import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from univoque.critical import beta_G
from univoque.expansion import Beta, pi_eval
from univoque.geometry import (Cell, Location, Point2, apply_f, expanding_step, hull,
                               in_overlap, overlap_triangles, render_first_generation,
                               s_equals_hull, sub_triangles, survival_steps, survivor_grid)
from univoque.symbolic import Digit, EPSequence, rows_of
from univoque.tm import TMFamily

shapely = pytest.importorskip("shapely")
from shapely.geometry import Polygon  # noqa: E402
from shapely.ops import unary_union  # noqa: E402


def B(q, M):
    return Beta.from_value(q, M)


@pytest.mark.parametrize("M,q,leg", [(4, 4, Fraction(4, 3)), (1, 2, 1), (2, Fraction(5, 2), Fraction(4, 3))])
def test_hull_leg(M, q, leg):
    H = hull(B(q, M), M)
    assert H.leg == leg and (H.x0, H.y0) == (0, 0)


def test_fixed_points():
    beta = B("1.7", 2)
    assert apply_f(Digit(0, 0, 2), Point2(0, 0), beta) == Point2(0, 0)
    corner = Point2(hull(beta).leg, Fraction(0))
    assert apply_f(Digit(2, 0, 2), corner, beta) == corner


def test_composition_converges_to_projection():
    beta = B("1.52", 1)
    a0 = TMFamily.for_M(1).tower(0).a[0]
    word = (a0 * 14)[:40]
    p = Point2(Fraction(0), Fraction(0))
    for d in reversed(word):
        p = apply_f(d, p, beta)
    s = EPSequence.periodic(a0)
    r1, r2, _ = rows_of(s)
    for coord, row in ((p.x, r1), (p.y, r2)):
        ref = pi_eval(row, beta)
        assert abs(float(coord) - float(ref)) < 1e-6


def _shapely(t):
    return Polygon(t.floats())


@pytest.mark.parametrize("M,q", [(4, 4), (2, Fraction(5, 2)), (3, 3), (1, Fraction(7, 5)),
                                 (2, Fraction(9, 5)), (5, Fraction(13, 4)), (6, 4)])
def test_overlap_closed_form_vs_clipping(M, q):
    beta = B(q, M)
    pieces = sub_triangles(beta, M)
    clipped = [_shapely(pieces[c]).intersection(_shapely(pieces[d]))
               for c, d in combinations(pieces, 2)]
    clipped = [g for g in clipped if g.area > 1e-12]
    ours = [_shapely(o.triangle) for o in overlap_triangles(beta, M)]
    U, V = unary_union(clipped), unary_union(ours)
    assert U.symmetric_difference(V).area < 1e-9
    # every closed-form triangle is itself a pairwise intersection
    for g in ours:
        assert any(g.symmetric_difference(c).area < 1e-9 for c in clipped)


@pytest.mark.parametrize("M,q,light,dark", [(4, 4, 15, 18), (2, Fraction(5, 2), 6, 7), (3, 3, 10, 12)])
def test_figure_census(M, q, light, dark):
    beta = B(q, M)
    assert len(sub_triangles(beta, M)) == light
    assert len(overlap_triangles(beta, M)) == dark
    svg = render_first_generation(beta, M)
    assert svg.count('class="piece"') == light
    assert svg.count('class="overlap"') == dark
    assert "#cccccc" in svg and "#999999" in svg


def test_render_deterministic(tmp_path):
    out = tmp_path / "g.svg"
    a = render_first_generation(B(4, 4), 4, out=str(out))
    assert out.read_text() == a == render_first_generation(B(4, 4), 4)


@pytest.mark.parametrize("M", range(1, 7))
def test_counting_identity(M):
    assert len(sub_triangles(B(Fraction(M + 3, 2), M), M)) == (M + 1) * (M + 2) // 2


def test_in_overlap_examples():
    beta = B("1.4", 1)
    assert in_overlap(Point2(Fraction(0), Fraction(0)), beta) is Location.OUTSIDE
    P = sub_triangles(beta)
    c1 = [sum(v) / 3 for v in zip(*[(p.x, p.y) for p in P[Digit(1, 0, 1)].vertices])]
    c2 = [sum(v) / 3 for v in zip(*[(p.x, p.y) for p in P[Digit(0, 1, 1)].vertices])]
    mid = Point2((c1[0] + c2[0]) / 2, (c1[1] + c2[1]) / 2)
    assert in_overlap(mid, beta) is Location.INSIDE


@pytest.mark.parametrize("M", [1, 2, 3])
def test_touching_case_has_no_overlap(M):
    beta = B(M + 1, M)
    assert overlap_triangles(beta, M) == []
    rng = random.Random(7)
    for _ in range(300):
        x, y = Fraction(rng.randrange(10**4), 10**4), Fraction(rng.randrange(10**4), 10**4)
        if x + y < 1:
            p = Point2(x * hull(beta).leg, y * hull(beta).leg)
            assert in_overlap(p, beta) is not Location.INSIDE
    # contact points of neighbouring pieces are boundary
    assert in_overlap(Point2(Fraction(1, M + 1), Fraction(0)), beta) is Location.BOUNDARY


def test_in_overlap_ball_base():
    beta = beta_G(1)
    assert in_overlap(Point2(Fraction(0), Fraction(0)), beta) is Location.OUTSIDE


def test_branch_uniqueness_off_overlap():
    rng = random.Random(20240601)
    for M, q in ((1, Fraction(8, 5)), (2, Fraction(19, 10)), (4, Fraction(31, 10))):
        beta = B(q, M)
        H = hull(beta)
        checked = 0
        while checked < 10**4 // 3 + 1:
            x = Fraction(rng.randrange(10**6), 10**6) * H.leg
            y = Fraction(rng.randrange(10**6), 10**6) * H.leg
            p = Point2(x, y)
            holders = [d for d, t in sub_triangles(beta).items() if t.contains(p)]
            if len(holders) != 1 or in_overlap(p, beta) is not Location.OUTSIDE:
                continue
            d, img = expanding_step(p, beta)
            assert d == holders[0]
            assert H.contains(img)
            checked += 1


def test_s_equals_hull():
    assert s_equals_hull(B("1.4", 1)) is True
    assert s_equals_hull(B("1.6", 1)) is False
    assert s_equals_hull(B(3, 4)) is True


@pytest.mark.parametrize("M", [1, 2, 4])
def test_s_equals_hull_sweep(M):
    t = Fraction(M + 2, 2)
    vals = [s_equals_hull(B(t + Fraction(k, 10**4), M)) for k in range(-20, 21)]
    flips = sum(a != b for a, b in zip(vals, vals[1:]))
    assert flips == 1 and vals[20] is True and vals[21] is False


def test_corners_survive():
    for M, q in ((1, 1.6), (2, 2.2), (4, 3.5)):
        leg = M / (q - 1)
        status, steps = survival_steps([0, leg, 0], [0, 0, leg], q, M, 64)
        assert list(status) == [Cell.SURVIVES] * 3
        assert list(steps) == [64] * 3


def test_grid_below_beta_G():
    for res in (64, 128):
        g = survivor_grid(1.45, 1, resolution=res, iterations=32)
        assert g.count() == 0
        assert g.count(Cell.DEAD) > 0


def test_grid_above_beta_c():
    fr = [survivor_grid(1.8, 1, resolution=r, iterations=32).fraction for r in (64, 128)]
    assert all(f > 0 for f in fr)


def test_grid_threads_and_pgm():
    a = survivor_grid(1.6, 1, resolution=48, iterations=20)
    b = survivor_grid(1.6, 1, resolution=48, iterations=20, threads=2)
    assert np.array_equal(a.status, b.status) and np.array_equal(a.steps, b.steps)
    pgm = a.to_pgm()
    assert pgm.startswith(b"P5\n48 48\n20\n") and len(pgm) == len(b"P5\n48 48\n20\n") + 48 * 48
    j = a.to_json()
    assert j["in_hull"] == j["survivors"] + j["dead"] + j["outside_gasket"]


@given(st.integers(1, 6), st.fractions(0, 1).filter(lambda u: 0 < u < 1))
def test_overlap_count_formula(M, u):
    """For (M+2)/2 < beta < M+1 every overlap key is (a, b, a+b-1), giving
    (M+1)(M+2)/2 + M - 1 maximal triangles: 18, 7 and 12 for the three figures."""
    lo, hi = Fraction(M + 2, 2), Fraction(M + 1)
    beta = B(lo + u * (hi - lo), M)
    assert len(overlap_triangles(beta, M)) == (M + 1) * (M + 2) // 2 + M - 1
