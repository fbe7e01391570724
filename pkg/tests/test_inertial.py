from itertools import product

import pytest

from g2series.inertial import (Case, InertialPoint, SmoothCharacter, canonical_ram, classify_case,
                               inertial_point, orbit_size, reflection_subgroup, stabilizer_subgroup)
from g2series.weyl import g2_weyl_group

G = g2_weyl_group()


def _words(ws):
    return {w.name for w in ws}


def test_stabilizers():
    assert _words(stabilizer_subgroup((6, 6))) == {"e", "a", "babab", "ababab"}
    assert _words(stabilizer_subgroup((4, 4))) == {"e", "a", "bab", "abab", "baba", "ababa"}
    assert _words(stabilizer_subgroup((1, 0))) == {"e", "b"}


def test_classification_examples():
    assert classify_case((0, 0)) == Case.IWAHORI
    assert classify_case((6, 6)) == Case.SO4
    assert classify_case((6, 0)) == Case.SO4
    assert classify_case((1, 5)) == Case.TRIVIAL_WS


def test_exhaustive_over_z12():
    counts = {}
    for ram in product(range(12), repeat=2):
        stab = stabilizer_subgroup(ram)
        assert G.is_subgroup(stab)
        assert {w.matrix for w in stab} == {w.matrix for w in reflection_subgroup(ram)}
        orbit = {tuple(sum(a * r for a, r in zip(row, ram)) % 12 for row in w.matrix) for w in G}
        assert len(orbit) * len(stab) == 12
        case = classify_case(ram)
        counts[case] = counts.get(case, 0) + 1
    assert counts == {Case.TRIVIAL_WS: 84, Case.GL2_CHI_ONE: 30, Case.GL2_CHI_CHI: 24,
                      Case.SO4: 3, Case.SL3: 2, Case.IWAHORI: 1}


def test_orbit_sizes():
    assert [orbit_size("chi_chi", k) for k in (1, 2, 3, 4)] == [1, 3, 2, 6]
    assert [orbit_size("chi_one", k) for k in (1, 2, 4)] == [1, 3, 6]
    with pytest.raises(ValueError):
        orbit_size("chi_chi", 5)
    with pytest.raises(ValueError):
        orbit_size("other", 2)


def test_canonical_pairs():
    assert [canonical_ram(c) for c in ("iwahori", "gl2-chi1", "gl2-chichi", "sl3", "so4")] == \
        [(0, 0), (1, 0), (1, 1), (4, 4), (6, 6)]
    with pytest.raises(ValueError):
        canonical_ram("sl3", 4)
    with pytest.raises(ValueError):
        canonical_ram("trivial")


def test_inertial_point_validation():
    assert inertial_point("so4").stabilizer()
    with pytest.raises(ValueError):
        InertialPoint((1, 5), Case.SO4)
    assert SmoothCharacter(13).ram == 1 and SmoothCharacter(3).ram_order() == 4
