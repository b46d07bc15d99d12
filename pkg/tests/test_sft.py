import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import midpoint_beta
from univoque.critical import beta_c
from univoque.errors import BetaTooSmall, DepthExceeded, NotIrreducible
from univoque.expansion import Beta
from univoque.membership import check_membership
from univoque.sft import (MULTINACCI_MATRIX, build_Xk_graph, collatz_wielandt, dim_bounds,
                          forbidden_adjacency, golden_ratio, hat_threshold, multinacci_dimension,
                          rho, smallest_level, spectral_radius)
from univoque.symbolic import Digit, EPSequence, omega
from univoque.tm import TMFamily


def level_beta(M, k):
    """A rational base between hat beta_k and the previous threshold."""
    th = hat_threshold(M, k)
    up = hat_threshold(M, k - 1).value.lo_fraction() if k else Fraction(M + 1)
    return Beta.from_value((th.value.hi_fraction() + up) / 2, M)


@pytest.mark.parametrize("M", [1, 2, 3, 4, 6])
def test_graph_structure(M):
    for k in range(3):
        G = build_Xk_graph(M, k)
        assert G.adjacency() == [[1, 1], [1, 1]]
        assert G.label_lengths == [3 * 2**k]
        F = TMFamily.for_M(M)
        a = G.loop_at("R")
        assert G.loop_at("L") == F.Phi(a)
        assert ("R", "L", F.plus(a)) in G.edges


def test_graph_M1_level0():
    G = build_Xk_graph(1, 0)
    assert G.loop_at("R") == TMFamily.for_M(1).tower(0).a[0]
    dot = G.to_dot()
    assert dot.startswith("digraph") and dot.count("->") == 4
    with pytest.raises(DepthExceeded):
        build_Xk_graph(1, 99)


def test_paths_count():
    G = build_Xk_graph(2, 1)
    assert len(G.paths(3)) == 2 * 2**3
    assert all(len(w) == 3 * 6 for _, _, w in G.paths(3))
    assert len(G.paths(2, start="L")) == 4


@pytest.mark.parametrize("M", [1, 2, 3])
@pytest.mark.parametrize("k", [0, 1, 2])
def test_path_language_members(M, k):
    G = build_Xk_graph(M, k)
    beta = level_beta(M, k)
    for L in range(1, 5 if k < 2 else 3):
        for _, end, w in G.paths(L):
            for ctx in ((), (Digit(0, 0, M),)):
                s = EPSequence(ctx + w, G.loop_at(end))
                assert check_membership(s, beta).is_member


@pytest.mark.slow
@pytest.mark.parametrize("M", [1, 2, 3])
def test_path_language_level3(M):
    G = build_Xk_graph(M, 3)
    beta = level_beta(M, 3)
    for L in range(1, 5):
        for _, end, w in G.paths(L):
            assert check_membership(EPSequence(w, G.loop_at(end)), beta).is_member


def test_spectral_radius_examples():
    r = spectral_radius(MULTINACCI_MATRIX)
    assert r.contains(2)
    fib = spectral_radius([[1, 1], [1, 0]])
    assert abs(float(fib) - (1 + math.sqrt(5)) / 2) < 1e-12
    assert spectral_radius([[0, 1], [1, 0]]).contains(1)  # periodic graph
    assert spectral_radius([[3]]).contains(3)


def test_not_irreducible():
    with pytest.raises(NotIrreducible):
        spectral_radius([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        spectral_radius([[1, 1]])


@st.composite
def positive_matrices(draw):
    n = draw(st.integers(1, 5))
    return [[draw(st.integers(1, 6)) for _ in range(n)] for _ in range(n)]


@st.composite
def irreducible_matrices(draw):
    n = draw(st.integers(2, 5))
    A = [[draw(st.integers(0, 3)) for _ in range(n)] for _ in range(n)]
    for i in range(n):  # a Hamiltonian cycle makes it irreducible
        A[i][(i + 1) % n] = max(1, A[i][(i + 1) % n])
    return A


@settings(max_examples=40)
@given(st.one_of(positive_matrices(), irreducible_matrices()))
def test_cw_sandwich(A):
    enc, hist = collatz_wielandt(A, tol=1e-10)
    lows, highs = [h[0] for h in hist], [h[1] for h in hist]
    assert lows == sorted(lows) and highs == sorted(highs, reverse=True)
    assert all(lo <= hi + 1e-12 for lo, hi in hist)
    ev = max(abs(np.linalg.eigvals(np.array(A, dtype=float))))
    assert float(enc.lo) - 1e-9 <= ev <= float(enc.hi) + 1e-9


def test_dim_bounds_values():
    for M in (1, 2, 3):
        for k in range(3):
            beta = level_beta(M, k)
            d = dim_bounds(M, k, beta)
            assert d.symbolic.contains(Fraction(1, 3 * 2**k))
            assert d.block_length == 3 * 2**k
            expect = math.log(2) / (3 * 2**k * math.log(float(beta)))
            assert abs(float(d.geometric_lower) - expect) < 1e-12
            assert float(d.geometric_lower.lo) > 0


def test_dim_bounds_refuses():
    for M in (1, 2, 3):
        for k in range(3):
            below = Beta.from_value(hat_threshold(M, k).value.lo_fraction() - Fraction(1, 10**6), M)
            with pytest.raises(BetaTooSmall):
                dim_bounds(M, k, below)


def test_dim_monotone_in_level():
    beta = Beta.from_value("1.7", 1)
    dims = [dim_bounds(1, k, beta).symbolic for k in range(3)]
    assert dims[0].gt(dims[1]) and dims[1].gt(dims[2])
    assert smallest_level(1, beta) == 0
    assert smallest_level(1, Beta.from_value("1.1", 1)) is None


def test_smallest_level_near_beta_c():
    assert smallest_level(1, midpoint_beta(hat_threshold(1, 3), hat_threshold(1, 2))) == 3
    # the hats decrease to beta_c, so just above it a deeper level is needed
    assert smallest_level(1, midpoint_beta(beta_c(1), hat_threshold(1, 3))) == 4


@settings(max_examples=60)
@given(st.lists(st.sampled_from(omega(1)), min_size=6, max_size=6),
       st.lists(st.sampled_from(omega(1)), min_size=6, max_size=6),
       st.lists(st.sampled_from(omega(1)), min_size=6, max_size=6))
def test_rho_ultrametric(a, b, c):
    assert rho(a, b) == rho(b, a)
    assert rho(a, a) == 0
    assert rho(a, c) <= max(rho(a, b), rho(b, c))


def test_rho_sequences():
    s = EPSequence.periodic((Digit(0, 0, 1),))
    t = EPSequence((Digit(0, 0, 1),) * 3, (Digit(1, 0, 1),))
    assert rho(s, t) == Fraction(1, 16)
    assert rho(s, s) == 0


def test_multinacci():
    g = golden_ratio()
    d = multinacci_dimension(g)
    assert abs(float(d) - math.log(2) / math.log((1 + math.sqrt(5)) / 2)) < 1e-12
    assert str(d.decimal(5)) == "1.44042"
    assert multinacci_dimension(Beta.from_value(2, 1)).contains(1)
    bad = [(Digit(0, 0, 1), Digit(0, 0, 1)), (Digit(1, 0, 1), Digit(1, 0, 1)),
           (Digit(0, 1, 1), Digit(0, 1, 1))]
    assert forbidden_adjacency(bad) == [list(r) for r in MULTINACCI_MATRIX]
