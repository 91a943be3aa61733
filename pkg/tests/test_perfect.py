import json

import pytest

from affine_crystals.cartan import build_datum, swept_types
from affine_crystals.crystal import CrystalGraph, EMPTY, YElement, build_crystal
from affine_crystals.perfect import minimal_elements, verify_perfect


def test_a2_report():
    d = build_datum("A2-1")
    rep = verify_perfect(d)
    assert rep.all_passed
    assert rep.minimal_elements["Lambda_0"] == {"b_upper": "empty", "b_lower": "empty"}
    assert rep.minimal_elements["Lambda_1"] == {"b_upper": "y_1", "b_lower": "y_1"}
    assert rep.minimal_elements["Lambda_2"] == {"b_upper": "y_2", "b_lower": "y_2"}


def test_d43_report():
    rep = verify_perfect(build_datum("D4-3"))
    assert rep.all_passed
    assert list(rep.minimal_elements) == ["Lambda_0"]


@pytest.mark.parametrize("ty", [t.name for t in swept_types(4, with_exceptional=False)])
def test_small_sweep(ty):
    assert verify_perfect(build_datum(ty)).all_passed


def test_minimal_elements_values():
    d = build_datum("C2-1")
    g = build_crystal(d)
    table = minimal_elements(d, g)
    assert table[0] == (EMPTY, EMPTY)
    assert table[1] == (YElement(1), YElement(1))
    assert table[2] == (YElement(2), YElement(2))
    d4 = build_datum("A4-2")
    table4 = minimal_elements(d4, build_crystal(d4))
    assert list(table4) == [0]


def test_corrupted_graph_fails_with_witness():
    d = build_datum("A2-1")
    g = build_crystal(d)
    arrows = [(i, s, t) for i, s, t in g.arrows()]
    dropped = [
        (i, s, t) for i, s, t in arrows if not (i == 1 and s == YElement(1))
    ]
    broken = CrystalGraph(g.elements, dropped, g.n_indices, datum=d)
    rep = verify_perfect(d, broken)
    assert not rep.all_passed
    failing = [k for k, v in rep.axioms.items() if not v.passed]
    assert failing
    assert any(rep.axioms[k].witness or rep.axioms[k].detail for k in failing)


def test_report_json_round_trips():
    rep = verify_perfect(build_datum("A4-2"))
    blob = rep.to_json()
    data = json.loads(blob)
    assert data["type"] == "A4-2"
    assert data["passed"] is True
    assert set(data["axioms"]) == {
        "module_asserted",
        "tensor_square_connected",
        "weight_cone",
        "eps_level_bound",
        "minimal_elements",
    }


def test_level_one_statistics_are_bijections():
    from affine_crystals.cartan import level, level_one_dominants

    for ty in swept_types(4, with_exceptional=False):
        d = build_datum(ty)
        g = build_crystal(d)
        dominants = {lam.coeffs for lam in level_one_dominants(d)}
        ups = [b for b in g.elements if level(g.eps_vec(b), d) == 1]
        downs = [b for b in g.elements if level(g.phi_vec(b), d) == 1]
        assert {g.eps_vec(b).coeffs for b in ups} == dominants
        assert len({g.eps_vec(b).coeffs for b in ups}) == len(ups)
        assert {g.phi_vec(b).coeffs for b in downs} == dominants
        assert len({g.phi_vec(b).coeffs for b in downs}) == len(downs)
