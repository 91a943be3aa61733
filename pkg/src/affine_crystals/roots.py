"""Finite root systems and the weight set of the little adjoint crystal.

Roots are stored with doubled integer coefficients over alpha_1..alpha_n so
that the half-integral weights appearing for A_{2n}^(2) stay exact.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RootVector:
    """Element of the rational span of the finite simple roots.

    ``twice[i]`` is 2x the coefficient of alpha_{i+1}; only denominators 1
    and 2 ever occur.
    """

    twice: tuple

    @staticmethod
    def from_coeffs(coeffs):
        return RootVector(tuple(int(2 * Fraction(c)) for c in coeffs))

    @staticmethod
    def simple(i, n):
        """alpha_i inside a rank-n system."""
        return RootVector(tuple(2 if j == i - 1 else 0 for j in range(n)))

    @staticmethod
    def zero(n):
        return RootVector((0,) * n)

    def __add__(self, other):
        return RootVector(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other):
        return RootVector(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self):
        return RootVector(tuple(-a for a in self.twice))

    def is_zero(self):
        return all(a == 0 for a in self.twice)

    def is_nonneg(self):
        return all(a >= 0 for a in self.twice)

    def coeff(self, i):
        """Coefficient of alpha_i as an exact Fraction."""
        return Fraction(self.twice[i - 1], 2)

    def support(self):
        return tuple(i + 1 for i, a in enumerate(self.twice) if a != 0)

    def height2(self):
        return sum(self.twice)

    def pairing(self, d, j):
        """<h_j, .> computed from the affine Cartan matrix of d (j in 0..n)."""
        total = sum(self.twice[k] * d.cartan[j][k + 1] for k in range(len(self.twice)))
        if total % 2 != 0:
            raise ArithmeticError("non-integral Cartan pairing")
        return total // 2

    def json_coeffs(self):
        """[numerator, denominator] pairs in alpha-coordinates, denominator 1 or 2."""
        out = []
        for a in self.twice:
            if a % 2 == 0:
                out.append([a // 2, 1])
            else:
                out.append([a, 2])
        return out

    def label(self):
        parts = []
        for a in self.twice:
            parts.append(str(a // 2) if a % 2 == 0 else f"{a}/2")
        return "[" + ",".join(parts) + "]"


def leq(a, b):
    """Dominance order: a <= b iff b - a has nonnegative coefficients."""
    return (b - a).is_nonneg()


def theta(d):
    """The weight theta: marks over the finite nodes, halved for A_{2n}^(2)."""
    twice = [2 * m for m in d.marks[1:]]
    if d.d0 == 2:
        twice = [m for m in d.marks[1:]]
    return RootVector(tuple(twice))


def finite_roots(d):
    """All roots of g by closure from the simple roots.

    Returns a list of (root, length_class) with length_class "short" or
    "long"; in the simply-laced case every root is classed long.
    """
    n = d.n
    fc = d.finite_cartan()
    simple = [RootVector.simple(i, n) for i in range(1, n + 1)]
    known = set(simple)
    by_height = {1: list(simple)}
    h = 1
    while by_height.get(h):
        nxt = []
        for beta in by_height[h]:
            for i in range(1, n + 1):
                # root string: beta + alpha_i is a root iff the string
                # below beta is long enough relative to <beta, h_i>
                pair = sum(
                    beta.twice[k] * fc[i - 1][k] for k in range(n)
                ) // 2
                down = 0
                cur = beta - simple[i - 1]
                while cur in known:
                    down += 1
                    cur = cur - simple[i - 1]
                if down - pair > 0:
                    cand = beta + simple[i - 1]
                    if cand not in known:
                        known.add(cand)
                        nxt.append(cand)
        h += 1
        if nxt:
            by_height[h] = nxt
    positives = sorted(known, key=lambda r: (r.height2(), r.twice))
    gram = [[d.symmetrizers[i + 1] * fc[i][j] for j in range(n)] for i in range(n)]

    def norm2(r):
        return sum(
            r.twice[i] * r.twice[j] * gram[i][j] for i in range(n) for j in range(n)
        )

    top = max(norm2(r) for r in positives)
    out = []
    for r in positives:
        cls = "short" if norm2(r) < top else "long"
        out.append((r, cls))
        out.append((-r, cls))
    return out


def lambda_weights(d):
    """Weight data of the little adjoint crystal.

    Returns (lambda_plus, has_y, contains_zero): the positive part of the
    weight set, the indices i with alpha_i in it, and whether 0 is a weight.
    lambda_plus is sorted by height then lexicographically.
    """
    n = d.n
    if d.d0 == 2:
        # A_{2n}^(2): the n weights alpha_i + ... + alpha_{n-1} + alpha_n/2
        plus = []
        for i in range(1, n + 1):
            twice = [0] * n
            for k in range(i - 1, n - 1):
                twice[k] = 2
            twice[n - 1] = 1
            plus.append(RootVector(tuple(twice)))
        plus.sort(key=lambda r: (r.height2(), r.twice))
        return plus, frozenset(), False
    roots = finite_roots(d)
    if d.type.twist == 1:
        plus = [r for r, _ in roots if r.is_nonneg()]
    else:
        plus = [r for r, cls in roots if cls == "short" and r.is_nonneg()]
    plus.sort(key=lambda r: (r.height2(), r.twice))
    members = set(plus)
    has_y = frozenset(
        i for i in range(1, n + 1) if RootVector.simple(i, n) in members
    )
    return plus, has_y, True


def _finite_adjacency(d):
    n = d.n
    return {
        i: [j for j in range(1, n + 1) if j != i and d.cartan[i][j] != 0]
        for i in range(1, n + 1)
    }


def dynkin_path(d, i, j):
    """The unique path from node i to node j in the finite Dynkin diagram."""
    n = d.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"nodes must lie in 1..{n}")
    adj = _finite_adjacency(d)
    prev = {i: None}
    frontier = [i]
    while frontier and j not in prev:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in prev:
                    prev[v] = u
                    nxt.append(v)
        frontier = nxt
    if j not in prev:
        raise ValueError(f"nodes {i} and {j} are disconnected")
    path = [j]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    return tuple(path)


def connect_support(d, gamma, i):
    """Node sequence from supp(gamma) to node i, excluding the support.

    gamma must avoid alpha_i; the result (j_1, ..., j_t = i) walks the tree
    geodesic starting just outside the support component nearest to i.  When
    the support neighbors i the sequence is (i) alone.
    """
    if gamma.coeff(i) != 0:
        raise ValueError(f"alpha_{i} lies in the support of {gamma.label()}")
    supp = set(gamma.support())
    if not supp:
        raise ValueError("empty support")
    adj = _finite_adjacency(d)
    # BFS out from i; the first support node reached is the nearest one.
    prev = {i: None}
    frontier = [i]
    hit = i if i in supp else None
    while frontier and hit is None:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in prev:
                    prev[v] = u
                    if v in supp:
                        hit = v
                        break
                    nxt.append(v)
            if hit is not None:
                break
        frontier = nxt
    if hit is None:
        raise ValueError("support is disconnected from node")
    path = []
    node = prev[hit]  # first node outside the support
    while node is not None:
        path.append(node)
        node = prev[node]
    return tuple(path)
