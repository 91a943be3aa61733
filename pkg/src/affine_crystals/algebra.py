"""Crystal algebra structure and the energy function.

Builds the embedding of the little adjoint crystal into its tensor square,
inverts it into a multiplication, and computes the energy function twice:
once by propagating the defining recurrence over the whole tensor square,
once from the closed component classification.
"""

import json
from collections import deque
from dataclasses import dataclass

from .crystal import EMPTY, CrystalGraph, EmptyElement, XRoot, YElement
from .roots import RootVector, connect_support, dynkin_path, lambda_weights, theta
from .tensor import TensorCrystal, TensorElement

EMPTY_EMPTY = "EmptyEmpty"
THETA_MINUS_THETA = "ThetaMinusTheta"
LEFT_EMPTY = "LeftEmpty"
RIGHT_EMPTY = "RightEmpty"
TWO_THETA = "TwoTheta"
GENERIC = "Generic"


def theta_comp(i):
    return f"ThetaComp({i})"


def valid_psi_indices(d):
    """Finite nodes adjacent to node 0 whose simple root carries a y-element.

    Empty exactly for A_{2n}^(2) and D_{n+1}^(2).
    """
    _, has_y, _ = lambda_weights(d)
    return [i for i in range(1, d.n + 1) if d.cartan[0][i] != 0 and i in has_y]


def _x_or_y(vec, i):
    """x element for a nonzero weight vector, y_i for zero."""
    if vec.is_zero():
        return YElement(i)
    return XRoot(vec)


def build_psi(d, graph, i):
    """Embedding of the little adjoint crystal onto the component of
    x_theta (x) y_i.

    Every positive weight gamma gets a split theta - gamma = A + B with the
    image x_{theta-A} (x) x_{-B}; zero vectors in either slot are replaced
    by y_i.  Negative weights and the y elements follow the same split.
    The type-A and type-C families use their own splits (leading/trailing
    runs of simple roots); everything else grades by the coefficient of
    alpha_i and walks the Dynkin tree.
    """
    choices = valid_psi_indices(d)
    if i not in choices:
        raise ValueError(
            f"node {i} is not a valid embedding node for {d.type.name}; "
            f"valid choices: {choices or 'none'}"
        )
    n = d.n
    th = theta(d)
    lam_plus, has_y, _ = lambda_weights(d)
    family = d.type.family if d.type.twist == 1 else None

    split = {}
    zero = RootVector.zero(n)
    if family == "A" or family == "C":
        for gamma in lam_plus:
            supp = gamma.support()
            if family == "A" and i == n:
                run = range(supp[-1] + 1, n + 1)
            else:
                run = range(1, supp[0])
            b_part = zero
            for j in run:
                b_part = b_part + RootVector.simple(j, n)
            split[gamma] = (th - gamma - b_part, b_part)
    else:
        for gamma in lam_plus:
            c = gamma.coeff(i)
            if c == 2:
                split[gamma] = (zero, zero)
            elif c == 1:
                split[gamma] = (zero, th - gamma)
            else:
                a_part = zero
                for j in connect_support(d, gamma, i):
                    a_part = a_part + RootVector.simple(j, n)
                split[gamma] = (a_part, th - gamma - a_part)

    psi = {}
    for gamma in lam_plus:
        a_part, b_part = split[gamma]
        psi[XRoot(gamma)] = TensorElement(
            XRoot(th - a_part), _x_or_y(-b_part, i)
        )
        psi[XRoot(-gamma)] = TensorElement(
            _x_or_y(b_part, i), XRoot(-(th - a_part))
        )

    for j in sorted(has_y):
        if family == "A" or family == "C":
            # y_j maps to the weight-zero pair built from the run of simple
            # roots strictly between the embedding node and j
            if (family == "A" and i == n and j == n) or (i == 1 and j == 1):
                psi[YElement(j)] = TensorElement(YElement(i), YElement(i))
                continue
            run = range(j + 1, n + 1) if (family == "A" and i == n) else range(1, j)
            s = zero
            for k in run:
                s = s + RootVector.simple(k, n)
            psi[YElement(j)] = TensorElement(XRoot(s), XRoot(-s))
        else:
            s = zero
            for k in dynkin_path(d, i, j):
                s = s + RootVector.simple(k, n)
            psi[YElement(j)] = TensorElement(XRoot(th - s), XRoot(-(th - s)))
    return psi


def verify_psi(d, graph, tensor, psi, i):
    """Full morphism check of an embedding.

    Confirms weight and string statistics are preserved, every classical
    lowering operator commutes with the map (absent matching absent), the
    map is injective, and the image is exactly the classical component of
    x_theta (x) y_i.  Returns (ok, witness) with witness None on success.
    """
    th = theta(d)
    domain = [b for b in graph.elements if not isinstance(b, EmptyElement)]
    if sorted(psi, key=graph.index.get) != sorted(domain, key=graph.index.get):
        return False, "domain is not the little adjoint crystal"
    images = set()
    for b in domain:
        t = psi[b]
        if t in images:
            return False, f"not injective at {b.label()}"
        images.add(t)
        tw = graph.weight_of(t.left) + graph.weight_of(t.right)
        if graph.weight_of(b).coeffs != tw.coeffs:
            return False, f"weight mismatch at {b.label()}"
        for k in range(1, d.n + 1):
            if tensor.string_stats(t, k) != graph.string_stats(b, k):
                return False, f"string statistics differ at {b.label()}, index {k}"
            fb = graph.f_tilde(b, k)
            ft = tensor.f_tilde(t, k)
            if (fb is None) != (ft is None):
                return False, f"operator domain differs at ({b.label()}, {k})"
            if fb is not None and psi[fb] != ft:
                return False, f"operators do not commute at ({b.label()}, {k})"
    comp = tensor.component_of(TensorElement(XRoot(th), YElement(i)), omit_zero=True)
    image_idx = {tensor.pair_index(t) for t in images}
    if image_idx != comp:
        return False, "image is not the component of x_theta (x) y_i"
    return True, None


def multiply(graph, psi, b1, b2):
    """Product on the little adjoint crystal: the inverse of the embedding
    on its image, absent elsewhere."""
    inverse = {t: b for b, t in psi.items()}
    return inverse.get(TensorElement(b1, b2))


def multiplication_table(graph, psi):
    """Dense product table over the little adjoint crystal.

    Rows and columns follow the canonical element order; entries are labels,
    None for absent products.
    """
    inverse = {t: b for b, t in psi.items()}
    domain = [b for b in graph.elements if not isinstance(b, EmptyElement)]
    rows = []
    for b1 in domain:
        row = []
        for b2 in domain:
            prod = inverse.get(TensorElement(b1, b2))
            row.append(None if prod is None else prod.label())
        rows.append(row)
    return {"order": [b.label() for b in domain], "rows": rows}


def energy_propagate(tensor, anchor=None, anchor_value=0):
    """Energy by breadth-first propagation of the defining recurrence.

    Starts from empty (x) empty at level 0 unless another anchor is given,
    copies values across classical arrows, shifts by one across 0-arrows
    according to which slot the raising operator selects, and re-derives
    the value across every edge touching an already-assigned pair so that
    an inconsistent assignment cannot survive.
    """
    base = tensor.base
    m = len(base)
    if anchor is None:
        anchor = TensorElement(EMPTY, EMPTY)
    start = tensor.pair_index(anchor)
    eps0 = base._eps[0]
    phi0 = base._phi[0]

    def zero_step(src):
        # value difference H(e_0(t)) - H(t) for the pair t = src
        return 1 if phi0[src // m] >= eps0[src % m] else -1

    h = [None] * tensor.size
    h[start] = anchor_value
    queue = deque([start])
    f_tabs = tensor.f
    e_tabs = tensor.e
    n_idx = tensor.n_indices
    while queue:
        k = queue.popleft()
        hk = h[k]
        for i in range(n_idx):
            up = e_tabs[i][k]
            if up >= 0:
                val = hk + (zero_step(k) if i == 0 else 0)
                if h[up] is None:
                    h[up] = val
                    queue.append(up)
                elif h[up] != val:
                    raise ValueError(
                        f"inconsistent energy at {tensor.element(up).label()}: "
                        f"{h[up]} vs {val} via index {i}"
                    )
            down = f_tabs[i][k]
            if down >= 0:
                val = hk - (zero_step(down) if i == 0 else 0)
                if h[down] is None:
                    h[down] = val
                    queue.append(down)
                elif h[down] != val:
                    raise ValueError(
                        f"inconsistent energy at {tensor.element(down).label()}: "
                        f"{h[down]} vs {val} via index {i}"
                    )
    if any(v is None for v in h):
        raise ValueError("tensor square is not connected; energy is partial")
    return h


def two_theta_formula_indices(tensor):
    """Order-theoretic candidate for the component of x_theta (x) x_theta.

    Pairs of x-elements in dominance order, plus the y (x) x and x (x) y
    fringes at nodes where theta has positive pairing; for A_{2n}^(2) the
    fringes are empty because no y elements exist.  The true component is
    computed by ``two_theta_indices``; the two sets agree only on A1-1,
    A2-1 and the y-free A_{2n}^(2) chains (elsewhere the fringe condition
    drops true members, and outside type A ranks 1, 2 the dominance set
    also picks up pairs from other components), so this formula is kept
    only as the documented candidate.
    """
    base = tensor.base
    d = base.datum
    th = theta(d)
    m = len(base)
    lam_plus, has_y, has_zero = lambda_weights(d)
    lam = set(lam_plus) | {-r for r in lam_plus}
    out = set()
    x_idx = {b.root: base.index[b] for b in base.elements if isinstance(b, XRoot)}
    for alpha, ia in x_idx.items():
        for beta, ib in x_idx.items():
            if (beta - alpha).is_nonneg():
                out.add(ia * m + ib)
    for i in sorted(has_y):
        if th.pairing(d, i) <= 0:
            continue
        iy = base.index[YElement(i)]
        alpha_i = RootVector.simple(i, d.n)
        for beta in lam:
            if not beta.is_nonneg() or beta.is_zero():
                continue
            gamma = beta - alpha_i
            if gamma in lam or (has_zero and gamma.is_zero()):
                out.add(iy * m + x_idx[beta])
                out.add(x_idx[-beta] * m + iy)
    return out


def two_theta_indices(tensor):
    """The classical component of x_theta (x) x_theta (exact, by search)."""
    d = tensor.base.datum
    th = theta(d)
    return tensor.component_of(TensorElement(XRoot(th), XRoot(th)), omit_zero=True)


def classify_components(tensor, psis=None):
    """Label every pair of the tensor square by its component class.

    psis maps each valid node i to a built embedding; when omitted the
    embeddings are built on the fly.  Pairs outside the named classes are
    labelled Generic.
    """
    base = tensor.base
    d = base.datum
    if psis is None:
        psis = {i: build_psi(d, base, i) for i in valid_psi_indices(d)}
    m = len(base)
    th = theta(d)
    i_empty = base.index[EMPTY]
    i_top = base.index[XRoot(th)]
    i_bot = base.index[XRoot(-th)]
    labels = [GENERIC] * tensor.size
    for k in range(tensor.size):
        l, r = k // m, k % m
        if l == i_empty:
            labels[k] = EMPTY_EMPTY if r == i_empty else LEFT_EMPTY
        elif r == i_empty:
            labels[k] = RIGHT_EMPTY
    labels[i_top * m + i_bot] = THETA_MINUS_THETA
    for k in two_theta_indices(tensor):
        labels[k] = TWO_THETA
    for i, psi in sorted(psis.items()):
        tag = theta_comp(i)
        for t in psi.values():
            labels[tensor.pair_index(t)] = tag
    return labels


def classify_component(tensor, t, psis=None):
    return classify_components(tensor, psis)[tensor.pair_index(t)]


def energy_by_classification(tensor, psis=None):
    """Energy from the classical component structure alone.

    Every classical component of the tensor square holds exactly one
    maximal vector b1 (x) b2 with b1 either x_theta or empty.  The energy
    of the whole component is 0 on empty (x) empty, 1 on empty (x) x_theta,
    and eps_0(b2) otherwise.  This reproduces the seven tabulated values
    (ThetaComp heads carry y elements with eps_0 = 0, the 2-theta head
    carries x_theta with eps_0 = 2, the theta - alpha heads carry one
    incoming 0-arrow) and extends them to the components with eps_0 = 0
    heads that the named classes do not cover.  No 0-arrow of the product
    graph is traversed, so the computation is independent of propagation.
    """
    base = tensor.base
    m = len(base)
    eps0 = base._eps[0]
    i_empty = base.index[EMPTY]
    parts = tensor.components(omit_zero=True)
    maximal = set(tensor.maximal_indices())
    h = [0] * tensor.size
    for part in parts:
        heads = [k for k in part if k in maximal]
        if len(heads) != 1:
            raise ValueError(
                f"component with {len(heads)} maximal vectors; not a crystal"
            )
        l, r = heads[0] // m, heads[0] % m
        if l == i_empty:
            value = 0 if r == i_empty else 1
        else:
            value = eps0[r]
        for k in part:
            h[k] = value
    return h


def energy_table_json(tensor, h):
    """JSON map '(left,right)' -> H, in canonical pair order."""
    out = {}
    for k in range(tensor.size):
        t = tensor.element(k)
        out[f"({t.left.label()},{t.right.label()})"] = h[k]
    return json.dumps(out, indent=2) + "\n"


@dataclass(frozen=True)
class Box:
    value: int

    def label(self):
        return str(self.value)


def three_box_crystal():
    """The three-element loop crystal used as the energy fixture: boxes
    1 -> 2 -> 3 under indices 1, 2 and a 0-arrow closing 3 back to 1."""
    boxes = [Box(1), Box(2), Box(3)]
    arrows = [(1, boxes[0], boxes[1]), (2, boxes[1], boxes[2]), (0, boxes[2], boxes[0])]
    return CrystalGraph(boxes, arrows, 3)


def fixture_energy_check():
    """Propagate energy over the three-box tensor square and compare with
    the closed form: 1 when the left box dominates, 0 otherwise.

    Returns (ok, mismatches).
    """
    g = three_box_crystal()
    t = TensorCrystal(g)
    h = energy_propagate(t, anchor=TensorElement(Box(1), Box(1)), anchor_value=1)
    mismatches = []
    for k in range(t.size):
        pair = t.element(k)
        want = 1 if pair.left.value >= pair.right.value else 0
        if h[k] != want:
            mismatches.append((pair.label(), h[k], want))
    return not mismatches, mismatches
