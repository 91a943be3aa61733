"""Cartan data for the affine Lie algebra families.

Hard-codes the affine Cartan matrix and marks for each of the fourteen
families X_n^(r), computes comarks and symmetrizers from the matrix, and
exposes the level machinery for classical weights.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

# (family, twist) -> minimal rank_param, plus extra per-family constraints
# enforced in AffineType.validate.
_FAMILIES = {
    ("A", 1): 1,
    ("B", 1): 3,
    ("C", 1): 2,
    ("D", 1): 4,
    ("E", 1): 6,
    ("F", 1): 4,
    ("G", 1): 2,
    ("A", 2): 2,
    ("D", 2): 3,
    ("E", 2): 6,
    ("D", 3): 4,
}


@dataclass(frozen=True)
class AffineType:
    """One of the fourteen affine families, written X_n^(r)."""

    family: str
    rank_param: int
    twist: int

    def __post_init__(self):
        key = (self.family, self.twist)
        if key not in _FAMILIES:
            raise ValueError(f"unknown affine family {self.name}")
        lo = _FAMILIES[key]
        ok = self.rank_param >= lo
        if key == ("E", 1):
            ok = self.rank_param in (6, 7, 8)
        elif key in (("F", 1), ("G", 1), ("E", 2), ("D", 3)):
            ok = self.rank_param == lo
        elif key == ("A", 2):
            # even rank 2n (n >= 1) or odd rank 2n-1 (n >= 3)
            ok = self.rank_param >= 2 and (
                self.rank_param % 2 == 0 or self.rank_param >= 5
            )
        if not ok:
            raise ValueError(
                f"rank {self.rank_param} is out of range for family "
                f"{self.family}^({self.twist})"
            )

    @property
    def name(self):
        return f"{self.family}{self.rank_param}-{self.twist}"

    @property
    def finite_rank(self):
        """Number of non-affine nodes n (the rank of g)."""
        if self.twist == 1:
            return self.rank_param
        if self.family == "A":
            return (self.rank_param + 1) // 2
        if self.family == "D" and self.twist == 2:
            return self.rank_param - 1
        if self.family == "E":
            return 4
        return 2  # D4-3

    def __str__(self):
        return self.name


def parse_type(text):
    """Parse a type name like 'A2-1' or 'd4-3' (case-insensitive)."""
    s = text.strip().upper()
    m = re.fullmatch(r"([A-Z])([0-9]+)-([0-9]+)", s)
    if m is None:
        raise ValueError(f"cannot parse affine type {text!r}")
    return AffineType(m.group(1), int(m.group(2)), int(m.group(3)))


@dataclass(frozen=True)
class AffineWeight:
    """Classical weight in Lambda-coordinates plus a delta degree.

    ``coeffs[i]`` is the coefficient of Lambda_i.  ``delta`` counts energy
    quanta below the highest weight: the weight is classical - delta * d,
    where d is the basic imaginary grading unit of the family.
    """

    coeffs: tuple
    delta: int = 0

    def __add__(self, other):
        return AffineWeight(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            self.delta + other.delta,
        )

    def __sub__(self, other):
        return AffineWeight(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)),
            self.delta - other.delta,
        )

    @staticmethod
    def fundamental(i, n):
        """Lambda_i for a rank-n datum (coordinates over Lambda_0..Lambda_n)."""
        if not 0 <= i <= n:
            raise ValueError(f"Lambda_{i} is out of range for rank {n}")
        return AffineWeight(tuple(1 if j == i else 0 for j in range(n + 1)))

    @staticmethod
    def zero(n):
        return AffineWeight((0,) * (n + 1))


@dataclass(frozen=True)
class AffineDatum:
    """Cartan matrix, marks, comarks and symmetrizers of one affine family."""

    type: AffineType
    cartan: tuple  # (n+1) x (n+1), row-major tuples
    marks: tuple  # d_0 .. d_n, null vector of the matrix
    comarks: tuple  # c_0 .. c_n, left null vector, c_0 = 1
    symmetrizers: tuple  # s_0 .. s_n with diag(s) . A symmetric
    finite_type: str  # type of the finite algebra g, e.g. "C2", "F4t"

    @property
    def n(self):
        return self.type.finite_rank

    @property
    def d0(self):
        return self.marks[0]

    def a(self, i, j):
        return self.cartan[i][j]

    def neighbors(self, i):
        """Nodes adjacent to i in the affine Dynkin diagram."""
        return tuple(
            j for j in range(self.n + 1) if j != i and self.cartan[i][j] != 0
        )

    def finite_cartan(self):
        """The Cartan matrix of g (rows and columns 1..n)."""
        return tuple(row[1:] for row in self.cartan[1:])


def _chain_edges(nodes):
    return [(nodes[k], nodes[k + 1], -1, -1) for k in range(len(nodes) - 1)]


def _edges(t):
    """Edge list (i, j, a_ij, a_ji) for the affine Dynkin diagram.

    Node 0 is always the affine node; for E6-1 it attaches to the branch
    node 6 and for F4-1 to node 1, which the component analysis of the
    crystal algebra relies on.
    """
    f, m, r = t.family, t.rank_param, t.twist
    n = t.finite_rank
    if r == 1:
        if f == "A":
            if n == 1:
                return [(0, 1, -2, -2)]
            return _chain_edges(list(range(n + 1))) + [(n, 0, -1, -1)]
        if f == "B":
            return (
                [(0, 2, -1, -1), (1, 2, -1, -1)]
                + _chain_edges(list(range(2, n)))
                + [(n - 1, n, -1, -2)]
            )
        if f == "C":
            return (
                [(0, 1, -1, -2)]
                + _chain_edges(list(range(1, n)))
                + [(n - 1, n, -2, -1)]
            )
        if f == "D":
            return (
                [(0, 2, -1, -1), (1, 2, -1, -1)]
                + _chain_edges(list(range(2, n - 1)))
                + [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
            )
        if f == "E" and m == 6:
            return _chain_edges([1, 2, 3, 4, 5]) + [(3, 6, -1, -1), (6, 0, -1, -1)]
        if f == "E" and m == 7:
            return _chain_edges([1, 2, 3, 4, 5, 6]) + [
                (3, 7, -1, -1),
                (0, 1, -1, -1),
            ]
        if f == "E" and m == 8:
            return _chain_edges([1, 2, 3, 4, 5, 6, 7]) + [
                (3, 8, -1, -1),
                (7, 0, -1, -1),
            ]
        if f == "F":
            return [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
        if f == "G":
            return [(0, 1, -1, -1), (1, 2, -1, -3)]
    if f == "A" and r == 2 and m % 2 == 0:
        if n == 1:
            return [(0, 1, -4, -1)]
        return (
            [(0, 1, -2, -1)]
            + _chain_edges(list(range(1, n)))
            + [(n - 1, n, -2, -1)]
        )
    if f == "A" and r == 2:
        return (
            [(0, 2, -1, -1), (1, 2, -1, -1)]
            + _chain_edges(list(range(2, n)))
            + [(n - 1, n, -2, -1)]
        )
    if f == "D" and r == 2:
        return (
            [(0, 1, -2, -1)]
            + _chain_edges(list(range(1, n)))
            + [(n - 1, n, -1, -2)]
        )
    if f == "E":
        return [(0, 1, -1, -1), (1, 2, -1, -1), (2, 3, -2, -1), (3, 4, -1, -1)]
    return [(0, 1, -1, -1), (1, 2, -3, -1)]  # D4-3


def _marks(t):
    f, m, r = t.family, t.rank_param, t.twist
    n = t.finite_rank
    if r == 1:
        if f == "A":
            return [1] * (n + 1)
        if f == "B":
            return [1, 1] + [2] * (n - 1)
        if f == "C":
            return [1] + [2] * (n - 1) + [1]
        if f == "D":
            return [1, 1] + [2] * (n - 3) + [1, 1]
        if f == "E" and m == 6:
            return [1, 1, 2, 3, 2, 1, 2]
        if f == "E" and m == 7:
            return [1, 2, 3, 4, 3, 2, 1, 2]
        if f == "E" and m == 8:
            return [1, 2, 4, 6, 5, 4, 3, 2, 3]
        if f == "F":
            return [1, 2, 3, 4, 2]
        if f == "G":
            return [1, 2, 3]
    if f == "A" and r == 2 and m % 2 == 0:
        return [2] * n + [1]
    if f == "A" and r == 2:
        return [1, 1] + [2] * (n - 2) + [1]
    if f == "D" and r == 2:
        return [1] * (n + 1)
    if f == "E":
        return [1, 2, 3, 2, 1]
    return [1, 2, 1]  # D4-3


def _finite_type_name(t):
    n = t.finite_rank
    if t.twist == 1:
        return f"{t.family}{n}"
    if t.family == "A":
        return f"C{n}"
    if t.family == "D" and t.twist == 2:
        return f"B{n}"
    if t.family == "E":
        return "F4t"
    return "G2"


def _left_null_vector(matrix, size):
    """Minimal positive integer vector c with c . A = 0 (corank-1 matrix)."""
    # Gaussian elimination on A^T over the rationals.
    rows = [[Fraction(matrix[i][j]) for i in range(size)] for j in range(size)]
    pivots = []
    r = 0
    for col in range(size):
        piv = next((k for k in range(r, size) if rows[k][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rows[r] = [x / rows[r][col] for x in rows[r]]
        for k in range(size):
            if k != r and rows[k][col] != 0:
                fac = rows[k][col]
                rows[k] = [a - fac * b for a, b in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(size) if c not in pivots]
    if len(free) != 1:
        raise ValueError("affine Cartan matrix must have corank 1")
    sol = [Fraction(0)] * size
    sol[free[0]] = Fraction(1)
    for k, col in enumerate(pivots):
        sol[col] = -rows[k][free[0]]
    scale = 1
    for x in sol:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in sol]
    if ints[0] < 0:
        ints = [-x for x in ints]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _symmetrizers(cartan, size):
    """Positive integers s_i with s_i a_ij = s_j a_ji, minimal."""
    s = [None] * size
    s[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(size):
            if j != i and cartan[i][j] != 0 and s[j] is None:
                s[j] = s[i] * cartan[i][j] / cartan[j][i]
                queue.append(j)
    scale = 1
    for x in s:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in s]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def build_datum(t):
    """Construct the AffineDatum for a valid AffineType.

    All structural identities (null vectors, symmetrizability, d_0) are
    asserted on the way out, so a transcription error in the tables cannot
    survive construction.
    """
    if isinstance(t, str):
        t = parse_type(t)
    n = t.finite_rank
    size = n + 1
    a = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for i, j, aij, aji in _edges(t):
        a[i][j] = aij
        a[j][i] = aji
    cartan = tuple(tuple(row) for row in a)
    marks = tuple(_marks(t))
    comarks = _left_null_vector(cartan, size)
    sym = _symmetrizers(cartan, size)

    for i in range(size):
        if sum(cartan[i][j] * marks[j] for j in range(size)) != 0:
            raise AssertionError(f"marks are not a null vector for {t.name}")
        if sum(comarks[j] * cartan[j][i] for j in range(size)) != 0:
            raise AssertionError(f"comarks are not a left null vector for {t.name}")
        for j in range(size):
            if sym[i] * cartan[i][j] != sym[j] * cartan[j][i]:
                raise AssertionError(f"symmetrizers fail for {t.name}")
    if comarks[0] != 1:
        raise AssertionError(f"c_0 != 1 for {t.name}")
    want_d0 = 2 if (t.family, t.twist) == ("A", 2) and t.rank_param % 2 == 0 else 1
    if marks[0] != want_d0:
        raise AssertionError(f"d_0 mismatch for {t.name}")
    return AffineDatum(t, cartan, marks, comarks, sym, _finite_type_name(t))


def level(w, d):
    """Level of a classical weight: sum of c_i times its Lambda_i coefficient."""
    return sum(c * x for c, x in zip(d.comarks, w.coeffs))


def level_one_dominants(d):
    """The fundamental weights Lambda_i with comark 1, ascending in i."""
    return [
        AffineWeight.fundamental(i, d.n)
        for i in range(d.n + 1)
        if d.comarks[i] == 1
    ]


def swept_types(max_rank=5, with_exceptional=True):
    """Every valid family with rank parameter <= max_rank.

    With ``with_exceptional`` the fixed high-rank families (E series, F4-1,
    E6-2, D4-3) are appended even when max_rank does not reach them.
    """
    out = []
    for r in range(1, max_rank + 1):
        out.append(AffineType("A", r, 1))
    for r in range(3, max_rank + 1):
        out.append(AffineType("B", r, 1))
    for r in range(2, max_rank + 1):
        out.append(AffineType("C", r, 1))
    for r in range(4, max_rank + 1):
        out.append(AffineType("D", r, 1))
    if max_rank >= 2:
        out.append(AffineType("G", 2, 1))
    if max_rank >= 4:
        out.append(AffineType("F", 4, 1))
    for r in range(2, max_rank + 1, 2):
        out.append(AffineType("A", r, 2))
    for r in range(5, max_rank + 1, 2):
        out.append(AffineType("A", r, 2))
    for r in range(3, max_rank + 1):
        out.append(AffineType("D", r, 2))
    if max_rank >= 4:
        out.append(AffineType("D", 4, 3))
    for r in (6, 7, 8):
        if max_rank >= r:
            out.append(AffineType("E", r, 1))
    if max_rank >= 6:
        out.append(AffineType("E", 6, 2))
    if with_exceptional:
        names = {t.name for t in out}
        for extra in [
            AffineType("E", 6, 1),
            AffineType("E", 7, 1),
            AffineType("E", 8, 1),
            AffineType("F", 4, 1),
            AffineType("E", 6, 2),
            AffineType("D", 4, 3),
        ]:
            if extra.name not in names:
                out.append(extra)
    return out
