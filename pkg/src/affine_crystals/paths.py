"""Path realization of the level-1 highest weight crystals.

Paths are semi-infinite tensor words agreeing with a periodic ground state
far out; only the finite override prefix is stored.  The energy function
turns path statistics into affine weights, and breadth-first generation
yields character coefficients, cross-checkable against a lattice
generating-function oracle in the simply-laced untwisted case.
"""

from collections import deque
from dataclasses import dataclass

from .algebra import energy_propagate
from .cartan import AffineWeight
from .crystal import build_crystal
from .perfect import minimal_elements
from .roots import RootVector
from .tensor import TensorCrystal


@dataclass(frozen=True)
class GroundState:
    lam: AffineWeight
    entries: tuple  # b_0, b_1, ... up to one full period
    period: int

    def entry(self, k):
        if k < len(self.entries):
            return self.entries[k]
        head = len(self.entries) - self.period
        return self.entries[head + (k - head) % self.period]


@dataclass(frozen=True)
class Path:
    """A level-1 path in canonical form: the minimal override prefix.

    prefix[k] is the path entry at position k; beyond the prefix the path
    follows the ground state of lam.
    """

    lam: tuple  # Lambda-coordinates of the dominant weight
    prefix: tuple

    def depth(self):
        return len(self.prefix)


def ground_state(d, lam, graph=None):
    """Iterate the minimal-element recursion from b_lam until it repeats."""
    if graph is None:
        graph = build_crystal(d)
    table = minimal_elements(d, graph)
    seen = {}
    seq = []
    cur = lam
    while True:
        key = cur.coeffs
        if key in seen:
            period = len(seq) - seen[key]
            return GroundState(lam, tuple(seq), period)
        seen[key] = len(seq)
        if sum(key) != 1 or 1 not in key or key.index(1) not in table:
            raise ValueError(
                f"no minimal element for weight {key}; ground states exist "
                "only for the level-1 fundamental weights"
            )
        b = table[key.index(1)][1]  # the phi-preimage b_lam
        seq.append(b)
        cur = graph.eps_vec(b)


class PathModel:
    """Crystal operations on the set of lam-paths for one family.

    Holds the base crystal, its tensor square with the propagated energy
    table, and the ground state; all path operations go through here.
    """

    def __init__(self, d, lam, graph=None, tensor=None, energy=None):
        self.datum = d
        self.graph = graph if graph is not None else build_crystal(d)
        self.tensor = tensor if tensor is not None else TensorCrystal(self.graph)
        self.energy = energy if energy is not None else energy_propagate(self.tensor)
        self.lam = lam
        self.ground = ground_state(d, lam, self.graph)
        self.ground_path = Path(lam.coeffs, ())

    def _canonical(self, entries):
        n = len(entries)
        while n > 0 and entries[n - 1] == self.ground.entry(n - 1):
            n -= 1
        return Path(self.lam.coeffs, tuple(entries[:n]))

    def _window(self, p, i):
        """Prefix plus one ground entry, with the running suffix stats.

        Returns (entries, eps_below, phi_below) where eps_below[k] and
        phi_below[k] are the statistics of the tensor word strictly below
        position k; index N is the appended ground slot.
        """
        g = self.graph
        entries = list(p.prefix) + [self.ground.entry(len(p.prefix))]
        eps_below = [0]
        phi_below = [0]
        for k, b in enumerate(entries[:-1]):
            e_b, p_b = g.string_stats(b, i)
            eps_below.append(e_b + max(0, eps_below[k] - p_b))
            phi_below.append(phi_below[k] + max(0, p_b - eps_below[k]))
        return entries, eps_below, phi_below

    def f(self, p, i):
        """Lowering operator on paths; None when absent."""
        g = self.graph
        entries, eps_below, _ = self._window(p, i)
        k = len(entries) - 1
        while k > 0 and not g.phi(entries[k], i) > eps_below[k]:
            k -= 1
        new = g.f_tilde(entries[k], i)
        if new is None:
            return None
        entries[k] = new
        return self._canonical(entries)

    def e(self, p, i):
        """Raising operator on paths; None when absent (in particular on
        any position at or beyond the ground tail)."""
        g = self.graph
        entries, eps_below, _ = self._window(p, i)
        top = len(entries) - 1
        k = top
        while k > 0 and not g.phi(entries[k], i) >= eps_below[k]:
            k -= 1
        if k == top:
            return None
        new = g.e_tilde(entries[k], i)
        if new is None:
            return None
        entries[k] = new
        return self._canonical(entries)

    def stats(self, p, i):
        """(eps_i, phi_i) of a path via the one-ground-entry window."""
        g = self.graph
        entries, eps_below, phi_below = self._window(p, i)
        e_g, p_g = g.string_stats(entries[-1], i)
        n = len(entries) - 1
        eps = max(eps_below[n] - p_g, 0)
        phi = phi_below[n] + max(p_g - eps_below[n], 0)
        return eps, phi

    def weight(self, p):
        """Affine weight: classical part plus the energy-graded delta part."""
        g = self.graph
        n_idx = g.n_indices
        coeffs = list(self.lam.coeffs)
        for k, b in enumerate(p.prefix):
            w = g.weight_of(b)
            gw = g.weight_of(self.ground.entry(k))
            for j in range(n_idx):
                coeffs[j] += w.coeffs[j] - gw.coeffs[j]
        m = len(g)
        delta = 0
        entries = list(p.prefix) + [self.ground.entry(len(p.prefix))]
        for k in range(len(p.prefix)):
            upper, lower = entries[k + 1], entries[k]
            gk = self.ground.entry(k)
            gk1 = self.ground.entry(k + 1)
            h_path = self.energy[g.index[upper] * m + g.index[lower]]
            h_ground = self.energy[g.index[gk1] * m + g.index[gk]]
            delta -= (k + 1) * (h_path - h_ground)
        return AffineWeight(tuple(coeffs), delta)

    def root_offset(self, p):
        """Finite root-lattice displacement of a path from its ground state."""
        g = self.graph
        total = RootVector.zero(self.datum.n)
        for k, b in enumerate(p.prefix):
            total = total + g.root_weight(b) - g.root_weight(self.ground.entry(k))
        return total

    def generate(self, max_depth, order=None, lifo=False):
        """All paths with delta degree down to -max_depth, breadth-first.

        order permutes the operator indices, and lifo switches the frontier
        discipline; the returned set must not depend on either (generation
        order independence is part of the test suite).
        """
        indices = list(order) if order is not None else list(range(self.datum.n + 1))
        start = self.ground_path
        seen = {start}
        frontier = deque([(start, 0)])
        out = []
        while frontier:
            p, depth = frontier.pop() if lifo else frontier.popleft()
            out.append(p)
            for i in indices:
                q = self.f(p, i)
                if q is None or q in seen:
                    continue
                q_depth = depth + (1 if i == 0 else 0)
                if q_depth > max_depth:
                    continue
                seen.add(q)
                frontier.append((q, q_depth))
        return out

    def character(self, max_degree, order=None, lifo=False):
        """Multiplicities of affine weights down to delta degree -max_degree.

        Returns a map (classical Lambda-coordinates, delta) -> multiplicity.
        """
        counts = {}
        for p in self.generate(max_degree, order=order, lifo=lifo):
            w = self.weight(p)
            key = (w.coeffs, w.delta)
            counts[key] = counts.get(key, 0) + 1
        return counts

    def root_character(self, max_degree):
        """Multiplicities keyed by (root-lattice offset, energy degree)."""
        counts = {}
        for p in self.generate(max_degree):
            w = self.weight(p)
            beta = self.root_offset(p)
            counts[(beta.twice, -w.delta)] = counts.get((beta.twice, -w.delta), 0) + 1
        return counts


def path_f(model, p, i):
    return model.f(p, i)


def path_e(model, p, i):
    return model.e(p, i)


def path_stats(model, p, i):
    return model.stats(p, i)


def affine_weight(model, p):
    return model.weight(p)


def character(d, lam, max_degree, model=None):
    if model is None:
        model = PathModel(d, lam)
    return model.character(max_degree)


class OracleUnsupported(ValueError):
    """The lattice generating-function oracle does not cover this family."""


def partition_series(colors, max_degree):
    """Coefficients of prod_{k>=1} (1 - q^k)^(-colors) through q^max_degree."""
    c = [1] + [0] * max_degree
    for k in range(1, max_degree + 1):
        for _ in range(colors):
            for m in range(k, max_degree + 1):
                c[m] += c[m - k]
    return c


def oracle_multiplicity(d, beta, degree, _series_cache={}):
    """Multiplicity of the weight at lattice point beta and energy degree.

    Only valid for the simply-laced untwisted families at the basic weight:
    the multiplicity of Lambda_0 + beta - degree * delta is the coefficient
    of q^(degree - (beta,beta)/2) in the rank-colored partition series.
    """
    t = d.type
    if t.twist != 1 or t.family not in ("A", "D", "E"):
        raise OracleUnsupported(f"no independent oracle for {t.name}")
    if degree < 0:
        return 0
    fc = d.finite_cartan()
    n = d.n
    raw = sum(
        beta.twice[i] * beta.twice[j] * fc[i][j] for i in range(n) for j in range(n)
    )
    if raw % 4 != 0:
        raise ValueError("lattice point has non-integral coefficients")
    norm2 = raw // 4
    exponent = degree - norm2 // 2
    if exponent < 0:
        return 0
    key = (n, degree)
    if key not in _series_cache:
        _series_cache[key] = partition_series(n, degree)
    return _series_cache[key][exponent]


def lattice_points_up_to(d, max_norm2):
    """Finite root-lattice vectors with squared norm at most max_norm2.

    Enumerates a coefficient box wide enough for the tree-climb bound on
    bounded-norm vectors.
    """
    n = d.n
    fc = d.finite_cartan()
    bound = int((max_norm2 * (n + 1)) ** 0.5) + 2
    out = []

    def norm2(c):
        return sum(c[i] * c[j] * fc[i][j] for i in range(n) for j in range(n))

    def rec(prefix):
        if len(prefix) == n:
            if norm2(prefix) <= max_norm2:
                out.append(RootVector(tuple(2 * x for x in prefix)))
            return
        for v in range(-bound, bound + 1):
            rec(prefix + [v])

    rec([])
    return out
