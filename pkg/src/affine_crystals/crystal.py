"""The level-1 crystal B: little adjoint crystal plus the trivial crystal.

Vertices are x_alpha for alpha in the weight set, y_i for the simple roots
in it, and a single empty element; arrows follow the subtraction rule for
classical indices and the theta-translation rule for index 0.
"""

import json
from dataclasses import dataclass

from .cartan import AffineWeight
from .roots import RootVector, lambda_weights, theta


@dataclass(frozen=True)
class XRoot:
    root: RootVector

    def label(self):
        return "x" + self.root.label()


@dataclass(frozen=True)
class YElement:
    index: int

    def label(self):
        return f"y_{self.index}"


@dataclass(frozen=True)
class EmptyElement:
    def label(self):
        return "empty"


EMPTY = EmptyElement()


class CrystalGraph:
    """A finite edge-colored graph with the crystal query operations.

    Arrows are the lowering maps; raising maps are derived.  String
    statistics, weights in Lambda-coordinates, and exports all come from
    the arrow structure alone, so any labelled graph with the crystal
    axioms can be wrapped (the energy fixture uses this).
    """

    def __init__(self, elements, arrows, n_indices, datum=None):
        self.datum = datum
        self.elements = tuple(elements)
        self.n_indices = n_indices
        self.index = {b: k for k, b in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate crystal elements")
        self.f = [dict() for _ in range(n_indices)]
        self.e = [dict() for _ in range(n_indices)]
        for i, src, dst in arrows:
            si, di = self.index[src], self.index[dst]
            if si in self.f[i] or di in self.e[i]:
                raise ValueError(f"parallel {i}-arrows at {src}")
            self.f[i][si] = di
            self.e[i][di] = si
        self._eps = [
            [self._walk(self.e[i], k) for k in range(len(self.elements))]
            for i in range(n_indices)
        ]
        self._phi = [
            [self._walk(self.f[i], k) for k in range(len(self.elements))]
            for i in range(n_indices)
        ]

    @staticmethod
    def _walk(arrow, k):
        count = 0
        while k in arrow:
            k = arrow[k]
            count += 1
            if count > 10000:
                raise ValueError("arrow cycle inside a single index")
        return count

    def __len__(self):
        return len(self.elements)

    def f_tilde(self, b, i):
        """Lowering operator; None when the arrow is absent."""
        k = self.f[i].get(self.index[b])
        return None if k is None else self.elements[k]

    def e_tilde(self, b, i):
        k = self.e[i].get(self.index[b])
        return None if k is None else self.elements[k]

    def eps(self, b, i):
        return self._eps[i][self.index[b]]

    def phi(self, b, i):
        return self._phi[i][self.index[b]]

    def string_stats(self, b, i):
        k = self.index[b]
        return self._eps[i][k], self._phi[i][k]

    def eps_vec(self, b):
        k = self.index[b]
        return AffineWeight(tuple(self._eps[i][k] for i in range(self.n_indices)))

    def phi_vec(self, b):
        k = self.index[b]
        return AffineWeight(tuple(self._phi[i][k] for i in range(self.n_indices)))

    def weight_of(self, b):
        """Classical weight phi(b) - eps(b) in Lambda-coordinates."""
        k = self.index[b]
        return AffineWeight(
            tuple(self._phi[i][k] - self._eps[i][k] for i in range(self.n_indices))
        )

    def root_weight(self, b):
        """Weight as a vector over the finite simple roots (0 for y and empty)."""
        if isinstance(b, XRoot):
            return b.root
        return RootVector.zero(self.n_indices - 1)

    def arrows(self):
        """All arrows as (i, src, dst), ordered by index then source."""
        out = []
        for i in range(self.n_indices):
            for src in sorted(self.f[i]):
                out.append((i, self.elements[src], self.elements[self.f[i][src]]))
        return out

    def to_dot(self):
        lines = ["digraph crystal {", "  rankdir=LR;"]
        for k, b in enumerate(self.elements):
            lines.append(f'  n{k} [label="{b.label()}"];')
        for i in range(self.n_indices):
            for src in sorted(self.f[i]):
                style = ", style=dashed" if i == 0 else ""
                lines.append(
                    f'  n{src} -> n{self.f[i][src]} [label="{i}"{style}];'
                )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self):
        elems = []
        for k, b in enumerate(self.elements):
            entry = {"index": k, "label": b.label()}
            if isinstance(b, XRoot):
                entry["kind"] = "x"
                entry["root"] = b.root.json_coeffs()
            elif isinstance(b, YElement):
                entry["kind"] = "y"
                entry["i"] = b.index
            else:
                entry["kind"] = "empty"
            elems.append(entry)
        arrows = []
        for i in range(self.n_indices):
            for src in sorted(self.f[i]):
                arrows.append({"i": i, "from": src, "to": self.f[i][src]})
        out = {"elements": elems, "arrows": arrows}
        if self.datum is not None:
            out["type"] = self.datum.type.name
        return out

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def build_crystal(d):
    """Build B for an affine datum, in the canonical element order.

    Order: positive x-elements by height then lexicographically, then y_i
    by index, then the negative x-elements mirroring the positives, then
    the empty element.
    """
    lam_plus, has_y, _ = lambda_weights(d)
    th = theta(d)
    elements = (
        [XRoot(r) for r in lam_plus]
        + [YElement(i) for i in sorted(has_y)]
        + [XRoot(-r) for r in lam_plus]
        + [EMPTY]
    )
    lam_set = set(lam_plus) | {-r for r in lam_plus}
    n = d.n
    arrows = []
    for i in range(1, n + 1):
        alpha_i = RootVector.simple(i, n)
        for a in sorted(lam_set, key=lambda r: r.twice):
            b = a - alpha_i
            if b in lam_set:
                arrows.append((i, XRoot(a), XRoot(b)))
        if i in has_y:
            arrows.append((i, XRoot(alpha_i), YElement(i)))
            arrows.append((i, YElement(i), XRoot(-alpha_i)))
    for a in sorted(lam_set, key=lambda r: r.twice):
        if a == th or a == -th:
            continue
        b = a + th
        if b in lam_set:
            arrows.append((0, XRoot(a), XRoot(b)))
    arrows.append((0, XRoot(-th), EMPTY))
    arrows.append((0, EMPTY, XRoot(th)))
    return CrystalGraph(elements, arrows, n + 1, datum=d)
