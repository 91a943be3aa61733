import pytest

from affine_crystals.cartan import build_datum, level, swept_types
from affine_crystals.crystal import EMPTY, XRoot, YElement, build_crystal
from affine_crystals.roots import RootVector, theta

# the five fully drawn level-1 graphs, edge for edge
FIXTURES = {
    "A2-1": {
        (1, "x[1,1]", "x[0,1]"), (1, "x[1,0]", "y_1"), (1, "y_1", "x[-1,0]"),
        (1, "x[0,-1]", "x[-1,-1]"),
        (2, "x[1,1]", "x[1,0]"), (2, "x[0,1]", "y_2"), (2, "y_2", "x[0,-1]"),
        (2, "x[-1,0]", "x[-1,-1]"),
        (0, "x[-1,0]", "x[0,1]"), (0, "x[0,-1]", "x[1,0]"),
        (0, "x[-1,-1]", "empty"), (0, "empty", "x[1,1]"),
    },
    "D4-3": {
        (1, "x[2,1]", "x[1,1]"), (1, "x[1,0]", "y_1"), (1, "y_1", "x[-1,0]"),
        (1, "x[-1,-1]", "x[-2,-1]"),
        (2, "x[1,1]", "x[1,0]"), (2, "x[-1,0]", "x[-1,-1]"),
        (0, "x[-1,0]", "x[1,1]"), (0, "x[-1,-1]", "x[1,0]"),
        (0, "x[-2,-1]", "empty"), (0, "empty", "x[2,1]"),
    },
    "C2-1": {
        (1, "x[2,1]", "x[1,1]"), (1, "x[1,1]", "x[0,1]"), (1, "x[1,0]", "y_1"),
        (1, "y_1", "x[-1,0]"), (1, "x[0,-1]", "x[-1,-1]"), (1, "x[-1,-1]", "x[-2,-1]"),
        (2, "x[1,1]", "x[1,0]"), (2, "x[0,1]", "y_2"), (2, "y_2", "x[0,-1]"),
        (2, "x[-1,0]", "x[-1,-1]"),
        (0, "x[-1,0]", "x[1,1]"), (0, "x[-1,-1]", "x[1,0]"),
        (0, "x[-2,-1]", "empty"), (0, "empty", "x[2,1]"),
    },
    "A4-2": {
        (1, "x[1,1/2]", "x[0,1/2]"), (1, "x[0,-1/2]", "x[-1,-1/2]"),
        (2, "x[0,1/2]", "x[0,-1/2]"),
        (0, "x[-1,-1/2]", "empty"), (0, "empty", "x[1,1/2]"),
    },
    "A6-2": {
        (1, "x[1,1,1/2]", "x[0,1,1/2]"), (1, "x[0,-1,-1/2]", "x[-1,-1,-1/2]"),
        (2, "x[0,1,1/2]", "x[0,0,1/2]"), (2, "x[0,0,-1/2]", "x[0,-1,-1/2]"),
        (3, "x[0,0,1/2]", "x[0,0,-1/2]"),
        (0, "x[-1,-1,-1/2]", "empty"), (0, "empty", "x[1,1,1/2]"),
    },
}

COUNTS = {"A2-1": 9, "D4-3": 8, "C2-1": 11, "A4-2": 5, "A6-2": 7}


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_drawn_graphs_edge_for_edge(name):
    g = build_crystal(build_datum(name))
    assert len(g) == COUNTS[name]
    got = {(i, s.label(), t.label()) for i, s, t in g.arrows()}
    assert got == FIXTURES[name]


def _graphs(max_rank=4):
    for t in swept_types(max_rank, with_exceptional=False):
        d = build_datum(t)
        yield d, build_crystal(d)


def test_element_count_formula():
    from affine_crystals.roots import lambda_weights

    for d, g in _graphs():
        plus, has_y, _ = lambda_weights(d)
        assert len(g) == 2 * len(plus) + len(has_y) + 1


def test_kashiwara_operator_examples():
    d = build_datum("A2-1")
    g = build_crystal(d)
    assert g.f_tilde(XRoot(RootVector.simple(1, 2)), 1) == YElement(1)
    assert g.f_tilde(EMPTY, 0) == XRoot(theta(d))
    assert g.f_tilde(EMPTY, 1) is None
    assert g.f_tilde(XRoot(theta(d)), 1) == XRoot(RootVector.simple(2, 2))


def test_string_stats_examples():
    d = build_datum("A2-1")
    g = build_crystal(d)
    th = XRoot(theta(d))
    assert g.eps(th, 0) == 2
    assert g.eps(EMPTY, 0) == 1
    assert g.string_stats(YElement(1), 1) == (1, 1)
    d3 = build_datum("D4-3")
    g3 = build_crystal(d3)
    assert g3.eps_vec(XRoot(theta(d3))).coeffs == (2, 0, 0)


def test_weight_examples():
    d = build_datum("A2-1")
    g = build_crystal(d)
    assert g.weight_of(EMPTY).coeffs == (0, 0, 0)
    assert g.weight_of(YElement(1)).coeffs == (0, 0, 0)
    assert g.weight_of(XRoot(theta(d))).coeffs == (-2, 1, 1)
    assert g.eps_vec(EMPTY).coeffs == (1, 0, 0)
    assert g.phi_vec(EMPTY).coeffs == (1, 0, 0)
    assert g.eps_vec(YElement(2)).coeffs == (0, 0, 1)


def test_inverse_pairs_and_weight_drop():
    for d, g in _graphs():
        for b in g.elements:
            for i in range(d.n + 1):
                fb = g.f_tilde(b, i)
                if fb is not None:
                    assert g.e_tilde(fb, i) == b
                    drop = tuple(
                        x - y
                        for x, y in zip(g.weight_of(b).coeffs, g.weight_of(fb).coeffs)
                    )
                    assert drop == tuple(d.cartan[j][i] for j in range(d.n + 1))
                eb = g.e_tilde(b, i)
                if eb is not None:
                    assert g.f_tilde(eb, i) == b


def test_phi_minus_eps_is_weight_pairing():
    for d, g in _graphs():
        for b in g.elements:
            w = g.weight_of(b)
            for i in range(d.n + 1):
                assert g.phi(b, i) - g.eps(b, i) == w.coeffs[i]
            rw = g.root_weight(b)
            if isinstance(b, XRoot):
                for i in range(d.n + 1):
                    assert w.coeffs[i] == rw.pairing(d, i)


def test_connectivity_with_and_without_zero():
    for d, g in _graphs():
        # whole graph, all arrows
        seen = {0}
        stack = [0]
        while stack:
            k = stack.pop()
            for i in range(d.n + 1):
                for nb in (g.f[i].get(k), g.e[i].get(k)):
                    if nb is not None and nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
        assert len(seen) == len(g)
        # little adjoint part, classical arrows only
        start = g.index[XRoot(theta(d))]
        seen = {start}
        stack = [start]
        while stack:
            k = stack.pop()
            for i in range(1, d.n + 1):
                for nb in (g.f[i].get(k), g.e[i].get(k)):
                    if nb is not None and nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
        assert len(seen) == len(g) - 1


def test_weights_sit_under_theta():
    for d, g in _graphs():
        th = theta(d)
        top = [b for b in g.elements if g.weight_of(b).coeffs == g.weight_of(XRoot(th)).coeffs]
        assert top == [XRoot(th)]
        for b in g.elements:
            diff = th - g.root_weight(b)
            assert diff.is_nonneg()
            if d.d0 == 1:
                assert all(t % 2 == 0 for t in diff.twice)


def test_eps_level_at_least_one():
    for d, g in _graphs():
        for b in g.elements:
            assert level(g.eps_vec(b), d) >= 1


def test_exports_deterministic():
    d = build_datum("C2-1")
    a = build_crystal(d)
    b = build_crystal(d)
    assert a.to_dot() == b.to_dot()
    assert a.to_json() == b.to_json()
    assert 'style=dashed' in a.to_dot()
    assert '"y_1"' in a.to_dot()
    assert '"empty"' in a.to_dot()


def test_canonical_element_order():
    g = build_crystal(build_datum("A2-1"))
    labels = [b.label() for b in g.elements]
    assert labels == [
        "x[0,1]", "x[1,0]", "x[1,1]", "y_1", "y_2",
        "x[0,-1]", "x[-1,0]", "x[-1,-1]", "empty",
    ]
