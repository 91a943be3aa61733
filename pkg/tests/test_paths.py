import random

import pytest

from affine_crystals.cartan import AffineWeight, build_datum, level_one_dominants
from affine_crystals.crystal import EMPTY, YElement
from affine_crystals.paths import (
    OracleUnsupported,
    PathModel,
    ground_state,
    lattice_points_up_to,
    oracle_multiplicity,
    partition_series,
)
from affine_crystals.roots import RootVector


def _model(name, lam_index=0):
    d = build_datum(name)
    return d, PathModel(d, AffineWeight.fundamental(lam_index, d.n))


def test_ground_state_fixed_points():
    d = build_datum("A2-1")
    gs0 = ground_state(d, AffineWeight.fundamental(0, 2))
    assert gs0.entries == (EMPTY,) and gs0.period == 1
    gs1 = ground_state(d, AffineWeight.fundamental(1, 2))
    assert gs1.entries == (YElement(1),) and gs1.period == 1
    for name in ["C2-1", "D4-3", "A4-2", "B3-1"]:
        dn = build_datum(name)
        for lam in level_one_dominants(dn):
            gs = ground_state(dn, lam)
            assert gs.period == 1
            assert gs.period <= len(level_one_dominants(dn))


def test_path_f_first_excitation():
    d, pm = _model("A1-1")
    p = pm.f(pm.ground_path, 0)
    assert [b.label() for b in p.prefix] == ["x[1]"]
    for i in range(2):
        assert pm.e(pm.ground_path, i) is None


def test_path_inverse_pairs():
    d, pm = _model("A2-1")
    paths = pm.generate(3)
    for p in paths:
        for i in range(d.n + 1):
            q = pm.f(p, i)
            if q is not None:
                assert pm.e(q, i) == p
            r = pm.e(p, i)
            if r is not None:
                assert pm.f(r, i) == p


def test_path_stats_examples():
    d, pm = _model("A1-1")
    ground = pm.ground_path
    for i in range(2):
        assert pm.stats(ground, i)[0] == 0
    assert pm.stats(ground, 0) == (0, 1)


def test_path_stats_window_independent():
    # the one-ground-entry window gives the same statistics as any larger one
    for name, lam_i in [("A2-1", 0), ("A2-1", 1), ("C2-1", 2), ("A4-2", 0), ("D4-3", 0)]:
        d, pm = _model(name, lam_i)
        g = pm.graph
        for p in pm.generate(2):
            for i in range(d.n + 1):
                base = pm.stats(p, i)
                for extra in range(2, 5):
                    word = list(p.prefix) + [
                        pm.ground.entry(k)
                        for k in range(len(p.prefix), len(p.prefix) + extra - 1)
                    ]
                    E, P = 0, 0
                    for b in word:
                        e_b, p_b = g.string_stats(b, i)
                        E, P = e_b + max(0, E - p_b), P + max(0, p_b - E)
                    top = pm.ground.entry(len(p.prefix) + extra - 1)
                    e_t, p_t = g.string_stats(top, i)
                    widened = (max(E - p_t, 0), P + max(p_t - E, 0))
                    assert widened == base


def test_stats_difference_is_weight_pairing():
    d, pm = _model("C2-1", 1)
    for p in pm.generate(2):
        w = pm.weight(p)
        for i in range(d.n + 1):
            eps, phi = pm.stats(p, i)
            assert phi - eps == w.coeffs[i]


def test_affine_weight_examples():
    d, pm = _model("A1-1")
    assert pm.weight(pm.ground_path).coeffs == (1, 0)
    assert pm.weight(pm.ground_path).delta == 0
    p = pm.f(pm.ground_path, 0)  # prefix [x_theta]
    w = pm.weight(p)
    # Lambda_0 + alpha_1 - delta in Lambda-coordinates
    assert w.coeffs == (-1, 2)
    assert w.delta == -1


def test_weight_drop_along_edges():
    rng = random.Random(99)
    for name in ["A2-1", "A2-2", "A4-2", "C2-1", "D4-3", "D3-2"]:
        d = build_datum(name)
        for lam in level_one_dominants(d):
            pm = PathModel(d, lam)
            paths = pm.generate(3)
            for p in rng.sample(paths, min(25, len(paths))):
                wp = pm.weight(p)
                for i in range(d.n + 1):
                    q = pm.f(p, i)
                    if q is None:
                        continue
                    wq = pm.weight(q)
                    drop = tuple(a - b for a, b in zip(wp.coeffs, wq.coeffs))
                    assert drop == tuple(d.cartan[j][i] for j in range(d.n + 1))
                    assert wp.delta - wq.delta == (1 if i == 0 else 0)


def test_raising_every_path_reaches_ground():
    d, pm = _model("C2-1")
    for p in pm.generate(2):
        cur = p
        guard = 0
        while True:
            nxt = None
            for i in range(d.n + 1):
                nxt = pm.e(cur, i)
                if nxt is not None:
                    break
            if nxt is None:
                break
            cur = nxt
            guard += 1
            assert guard < 10000
        assert cur == pm.ground_path


def test_ground_multiplicity_one():
    for name in ["A2-1", "C2-1", "D4-3", "A4-2"]:
        d, pm = _model(name)
        ch = pm.character(2)
        lam = AffineWeight.fundamental(0, d.n)
        assert ch[(lam.coeffs, 0)] == 1


def test_a1_basic_multiplicities():
    d, pm = _model("A1-1")
    ch = pm.character(5)
    assert [ch.get(((1, 0), -n), 0) for n in range(6)] == [1, 1, 2, 3, 5, 7]


def test_a2_rank_multiplicity_at_first_level():
    d, pm = _model("A2-1")
    ch = pm.character(1)
    # delta restricts to zero classically, so Lambda_0 - delta keeps the
    # Lambda_0 coordinates with degree -1; its multiplicity is the rank
    assert ch[((1, 0, 0), -1)] == 2


def test_generation_order_independence():
    for name in ["A2-1", "C2-1", "A4-2"]:
        d, pm = _model(name)
        base = pm.character(3)
        shuffled = pm.character(3, order=list(reversed(range(d.n + 1))), lifo=True)
        assert base == shuffled


def test_partition_series():
    assert partition_series(1, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert partition_series(2, 4) == [1, 2, 5, 10, 20]


def test_oracle_values():
    d = build_datum("A1-1")
    assert oracle_multiplicity(d, RootVector.zero(1), 4) == 5
    assert oracle_multiplicity(d, RootVector.simple(1, 1), 1) == 1
    assert oracle_multiplicity(d, RootVector.simple(1, 1), 0) == 0


def test_oracle_unsupported():
    for name in ["C2-1", "A4-2", "D4-3", "B3-1", "E6-2"]:
        d = build_datum(name)
        with pytest.raises(OracleUnsupported):
            oracle_multiplicity(d, RootVector.zero(d.n), 1)


def test_lattice_point_enumeration():
    d = build_datum("A1-1")
    pts = {p.twice for p in lattice_points_up_to(d, 8)}
    # norm^2 = 2 c^2 <= 8 means c in -2..2
    assert pts == {(2 * c,) for c in range(-2, 3)}


@pytest.mark.parametrize("name,deg", [("A1-1", 5), ("A2-1", 5)])
def test_character_matches_oracle(name, deg):
    d, pm = _model(name)
    rc = pm.root_character(deg)
    for beta in lattice_points_up_to(d, 2 * deg):
        for n in range(deg + 1):
            assert rc.get((beta.twice, n), 0) == oracle_multiplicity(d, beta, n)


def test_ground_state_rejects_non_level_one():
    d = build_datum("D5-2")
    with pytest.raises(ValueError, match="level-1"):
        # Lambda_1 has comark 2 for this family
        ground_state(d, AffineWeight.fundamental(1, d.n))
    with pytest.raises(ValueError, match="out of range"):
        AffineWeight.fundamental(6, d.n)
