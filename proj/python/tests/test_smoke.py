import json
from fractions import Fraction

import pytest

import kleinvcy as kv


def test_group_law():
    assert kv.mul((0, 0), (5, 7)) == (5, 7)
    assert kv.mul((1, 1), (2, 0)) == (-1, 1)
    assert kv.pow((3, 1), 2) == (0, 2)
    assert kv.conj((0, 1), (1, 0)) == (-1, 0)
    g = (10**30 + 1, 3)
    assert kv.mul(g, kv.inv(g)) == (0, 0)


def test_plane_action_uses_fractions():
    assert kv.act_point((1, 1), Fraction(1, 2), 0) == (Fraction(1, 2), Fraction(1))


def test_isotropy_and_fixed_sets():
    gen, rule = kv.isotropy(Fraction(1, 2), 0)
    assert gen == (4, 2)
    assert "odd" in rule
    assert kv.isotropy("inf", Fraction(1, 4))[0] == (0, 2)
    assert kv.isotropy("inf", Fraction(3, 2))[0] == (3, 1)
    assert kv.fixed_set((3, 1)) == {
        "kind": "SinglePoint",
        "line": {"slope": "inf", "intercept": "3/2"},
        "contractible": True,
    }
    assert kv.stabilizes((1, 2), 2, Fraction(5, 7))
    assert kv.verify_i_complex(3) == (True, [])


def test_classes():
    assert kv.comm_class((5, 0)) == {"tag": "H"}
    assert kv.comm_class((7, 3)) == {"tag": "K"}
    assert kv.comm_class((3, 6)) == {"tag": "R", "rep": {"generator": [1, 2]}}
    assert kv.commensurable((4, 3), (0, 2))
    assert kv.commensurator((1, 2)) == "EvenVertical"
    with pytest.raises(ValueError):
        kv.canonicalize((0, 0))


def test_models():
    assert kv.act_on_kn((1, 1), 3) == -1
    assert kv.map_f((1, 2), 0, 2) == Fraction(-1)
    report = kv.pushout_report(2)
    assert report["counts"]["H"] == 1
    assert report["counts"]["K"] == 1
    assert report["counts"]["R"] == 3


def test_homology():
    assert kv.model_homology(2) == [(1, []), (0, []), (1, [2]), (2, [2, 2])]
    assert kv.model_homology(2, "simplicial") == kv.model_homology(2)
    assert kv.circle_klein_product_homology() == [(1, []), (2, [2]), (1, [2])]


def test_cli_round_trip():
    code, out, err = kv.run_cli(["isotropy", "1/2", "0", "--json"])
    assert code == 0 and err == ""
    assert json.loads(out)["result"]["isotropy"]["generator"] == [4, 2]
    assert kv.run_cli(["class", "0", "0"])[0] == 1
    assert kv.run_cli(["mul", "1"])[0] == 2
