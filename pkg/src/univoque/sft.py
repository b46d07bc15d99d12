"""Subshifts of finite type inside the univoque set, spectral radii and dimension bounds.

For beta above hat beta_k the two-node labelled graph

    left --Phi(a_k)--> left,   left --Phi(a_k^+)--> right,
    right --a_k--> right,      right --a_k^+--> left

presents a subshift X_k of the symbolic univoque set. Each node has two
outgoing blocks of length |a_k|, so X_k has entropy log 2 per block and
dimension 1/|a_k| in the metric rho(c, d) = 2^-(first index where they differ).

Level k always means blocks of length 3 * 2^k. For M = 3N+3 the first tower
block is a single digit, so level k uses the family block of index k+1.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from flint import arb

from .config import DEFAULT
from .critical import beta_c, beta_hat
from .errors import BetaTooSmall, DepthExceeded, NotIrreducible, PrecisionExhausted
from .expansion import separate
from .interval import RealInterval, working_precision
from .symbolic import EPSequence, format_word, omega
from .tm import TMFamily


@dataclass(frozen=True)
class SFTGraph:
    nodes: tuple
    edges: tuple  # (source, target, label word)
    M: int
    level: int = 0

    def __post_init__(self):
        for _, _, label in self.edges:
            if not label:
                raise ValueError("edge labels must be nonempty")

    def adjacency(self):
        """Node-level adjacency matrix counting parallel edges."""
        index = {v: i for i, v in enumerate(self.nodes)}
        A = [[0] * len(self.nodes) for _ in self.nodes]
        for u, v, _ in self.edges:
            A[index[u]][index[v]] += 1
        return A

    @property
    def label_lengths(self):
        return sorted({len(w) for _, _, w in self.edges})

    def out_edges(self, node):
        return [e for e in self.edges if e[0] == node]

    def paths(self, length, start=None):
        """(end node, concatenated word) for every path with ``length`` edges."""
        starts = [start] if start is not None else list(self.nodes)
        frontier = [(v, v, ()) for v in starts]
        for _ in range(length):
            frontier = [(s, e[1], w + e[2]) for s, v, w in frontier for e in self.out_edges(v)]
        return [(s, v, w) for s, v, w in frontier]

    def loop_at(self, node):
        for u, v, w in self.edges:
            if u == v == node:
                return w
        return None

    def to_dot(self):
        lines = ["digraph X {", "  rankdir=LR;"]
        for v in self.nodes:
            lines.append(f'  "{v}";')
        for u, v, w in self.edges:
            lines.append(f'  "{u}" -> "{v}" [label="{format_word(w)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _level_block(family, k):
    return family.tower(k + family.first_level).a[k + family.first_level]


def build_Xk_graph(M, k):
    cap = DEFAULT.depth_caps["ladder"]
    if not 0 <= k <= cap:
        raise DepthExceeded(f"level {k} outside 0..{cap}")
    family = TMFamily.for_M(M)
    a = _level_block(family, k)
    ap = family.plus(a)
    edges = (
        ("L", "L", family.Phi(a)),
        ("L", "R", family.Phi(ap)),
        ("R", "R", a),
        ("R", "L", ap),
    )
    return SFTGraph(("L", "R"), edges, M, k)


def hat_threshold(M, k, bits=None):
    """hat beta attached to SFT level k (blocks of length 3 * 2^k)."""
    family = TMFamily.for_M(M)
    return beta_hat(M, k + family.first_level, bits=bits)


# spectral radius

def _check_irreducible(A):
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise ValueError("adjacency must be a nonempty square matrix")
    if any(x < 0 for row in A for x in row):
        raise ValueError("adjacency entries must be nonnegative")
    if n == 1:
        return

    def reach(step):
        seen, todo = {0}, deque([0])
        while todo:
            u = todo.popleft()
            for v in range(n):
                if step(u, v) and v not in seen:
                    seen.add(v)
                    todo.append(v)
        return len(seen) == n

    if not (reach(lambda u, v: A[u][v] > 0) and reach(lambda u, v: A[v][u] > 0)):
        raise NotIrreducible("the graph is not strongly connected")


def collatz_wielandt(adj, tol=None, max_iter=100000, bits=None):
    """Power iteration on A + I with Collatz-Wielandt bounds.

    Returns (enclosure of rho(A), list of (lower, upper) per step). Adding
    the identity makes the matrix primitive, so the sandwich closes even for
    periodic graphs; the shift is removed at the end.
    """
    A = [list(map(int, row)) for row in adj]
    _check_irreducible(A)
    tol = tol or DEFAULT.tol
    n = len(A)
    bits = bits or DEFAULT.precision_bits
    history = []
    with working_precision(bits):
        B = [[arb(A[i][j] + (i == j)) for j in range(n)] for i in range(n)]
        v = [arb(1)] * n
        for _ in range(max_iter):
            w = [sum((B[i][j] * v[j] for j in range(n)), arb(0)) for i in range(n)]
            ratios = [w[i] / v[i] for i in range(n)]
            lo = min(r.lower() for r in ratios)
            hi = max(r.upper() for r in ratios)
            if history:
                lo = max(lo, history[-1][0])
                hi = min(hi, history[-1][1])
            history.append((lo, hi))
            if float(hi - lo) <= tol:
                break
            top = max(x.mid() for x in w)
            v = [(x / top).mid() for x in w]
        else:
            raise PrecisionExhausted(f"power iteration did not reach {tol} in {max_iter} steps")
        lo, hi = history[-1]
        ball = arb.union(lo - 1, hi - 1) if lo != hi else lo - 1
    history = [(float(a) - 1, float(b) - 1) for a, b in history]
    return RealInterval(ball, bits), history


def spectral_radius(adj, tol=None):
    return collatz_wielandt(adj, tol)[0]


# dimensions

@dataclass(frozen=True)
class SymbolicMetric:
    """rho(c, d) = 2^-n with n the first (1-based) index where c and d differ."""

    def distance(self, c, d):
        if isinstance(c, EPSequence) and isinstance(d, EPSequence):
            if c == d:
                return Fraction(0)
            L = c.horizon(d)
        else:
            c, d = tuple(c), tuple(d)
            L = min(len(c), len(d))
            if c[:L] == d[:L]:
                return Fraction(0)
        for n in range(L):
            if c[n] != d[n]:
                return Fraction(1, 2 ** (n + 1))
        return Fraction(0)

    __call__ = distance


rho = SymbolicMetric()


@dataclass(frozen=True)
class DimBounds:
    M: int
    k: int
    block_length: int
    symbolic: RealInterval
    geometric_lower: RealInterval

    def to_json(self):
        return {"M": self.M, "k": self.k, "block_length": self.block_length,
                "symbolic_dim": str(self.symbolic.decimal(12) or self.symbolic),
                "geometric_dim_lower": float(self.geometric_lower.lo),
                "geometric_dim": str(self.geometric_lower)}


def dim_bounds(M, k, beta, cap=None):
    """Dimension of X_k: exactly 1/|a_k| for rho, and log 2 / (|a_k| log beta) after Pi_beta.

    The second entry is an enclosure of log 2 / (|a_k| log beta); its lower
    end (taken at the upper end of beta) is the certified lower bound.
    Raises BetaTooSmall unless beta > hat beta for the level.
    """
    threshold = hat_threshold(M, k)
    beta, threshold, below = separate(beta, threshold, cap)
    if below:
        raise BetaTooSmall(f"beta={beta} does not exceed hat beta at level {k} ({threshold})")
    L = 3 * 2**k
    bits = beta.bits
    with working_precision(bits + 16):
        geo = arb(2).log() / (L * beta.value.ball.log())
    return DimBounds(M, k, L, RealInterval.exact(Fraction(1, L), bits), RealInterval(geo, bits))


def smallest_level(M, beta, k_max=None, cap=None):
    """Smallest k with hat beta_k < beta, or None within the ladder cap."""
    k_max = DEFAULT.depth_caps["ladder"] if k_max is None else k_max
    # the hats decrease to beta_c, so nothing at or below it qualifies
    try:
        if separate(beta, beta_c(M), cap)[2]:
            return None
    except PrecisionExhausted:
        return None
    for k in range(k_max + 1):
        try:
            _, _, below = separate(beta, hat_threshold(M, k), cap)
        except PrecisionExhausted:
            continue
        if not below:
            return k
    return None


MULTINACCI_MATRIX = ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def forbidden_adjacency(forbidden, M=1):
    """Adjacency over Omega_M for a set of forbidden two-letter words."""
    letters = omega(M)
    bad = {tuple(w) for w in forbidden}
    return [[0 if (u, v) in bad else 1 for v in letters] for u in letters]


def multinacci_dimension(beta, adj=None, forbidden=None):
    """log rho(A) / log beta for the one-step SFT cut out by the forbidden words.

    The default matrix forbids the repeated pairs 00 00, 10 10 and 01 01; it
    is the right one when beta is the golden ratio. No check is made that
    beta matches the forbidden set.
    """
    if forbidden is not None:
        adj = forbidden_adjacency(forbidden, beta.M)
    adj = adj or MULTINACCI_MATRIX
    r = spectral_radius(adj)
    with working_precision(beta.bits + 16):
        value = r.ball.log() / beta.value.ball.log()
    return RealInterval(value, beta.bits)


def golden_ratio(bits=None):
    """The golden ratio as a base for M = 1, with delta = (10)^infinity."""
    from .expansion import delta_inverse
    return delta_inverse(EPSequence((), (1, 0)), 1, bits=bits)
