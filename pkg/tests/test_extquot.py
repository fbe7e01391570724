import pytest

from g2series.extquot import (CELLS, LOWEST_CELL, CompactForm, cell_of_point, compact_form_report,
                              component_by_tag, extended_quotient, find_component)
from g2series.inertial import CASES
from g2series.scalars import ONE, j, minus_one, var
from g2series.torus import point
from g2series.weyl import act, g2_weyl_group

G = g2_weyl_group()


def _inventory(case):
    return [(m.tag, m.cell, m.dim) for m in extended_quotient(case)]


def test_iwahori_components():
    assert _inventory("iwahori") == [
        ("pt_*", "c_e", 0), ("pt_1", "c_1", 0), ("pt_2", "c_1", 0), ("pt_3", "c_1", 0),
        ("pt_4", "c_1", 0), ("line_a", "c_2", 1), ("line_b", "c_3", 1), ("surface", "c_0", 2)]
    assert component_by_tag("iwahori", "pt_2").branch.base == point(minus_one, ONE)
    assert component_by_tag("iwahori", "pt_3").branch.base == point(j, j)


def test_other_inventories():
    assert _inventory("gl2-chi1") == [("line_b", "b_e", 1), ("surface", "b_0", 2)]
    assert _inventory("gl2-chichi") == [("line_a", "b_e", 1), ("surface", "b_0", 2)]
    assert _inventory("sl3") == [("pt_1", "d_e", 0), ("pt_2", "d_e", 0), ("pt_3", "d_e", 0),
                                 ("line_a", "d_1", 1), ("surface", "d_0", 2)]
    assert _inventory("so4") == [("pt_1", "e_e", 0), ("pt_2", "e_e", 0), ("line_a", "e_1", 1),
                                 ("line_babab", "e_1'", 1), ("pt_*", "e_0", 0),
                                 ("surface", "e_0", 2)]


def test_compact_forms():
    forms = {(r["tag"], r["compact_form"]) for r in compact_form_report("iwahori")}
    assert ("line_a", "UnitInterval") in forms and ("line_b", "UnitInterval") in forms
    assert component_by_tag("gl2-chi1", "line_b").compact_form == CompactForm.CIRCLE
    assert component_by_tag("sl3", "line_a").compact_form == CompactForm.CIRCLE
    for case in CASES:
        for m in extended_quotient(case):
            expected = {0: {CompactForm.ISOLATED_POINT},
                        1: {CompactForm.UNIT_INTERVAL, CompactForm.CIRCLE},
                        2: {CompactForm.COMPACT_QUOTIENT}}[m.dim]
            assert m.compact_form in expected


def test_cells_of_points():
    assert cell_of_point("iwahori", (G.element("ababab"), point(minus_one, ONE))) == "c_1"
    assert cell_of_point("so4", (G.element("ababab"), point(ONE, minus_one))) == "e_0"
    assert cell_of_point("so4", (G.element("ababab"), point(minus_one, ONE))) == "e_0"
    for case in CASES:
        assert cell_of_point(case, (G.identity(), point(var("z"), var("w")))) == LOWEST_CELL[case]
        assert {m.cell for m in extended_quotient(case)} == set(CELLS[case])


def test_components_consist_of_fixed_points():
    for case in CASES:
        for m in extended_quotient(case):
            p = m.generic_point()
            assert act(m.class_rep, p) == p


def test_find_component_rejects_non_fixed_points():
    with pytest.raises(ValueError):
        find_component("iwahori", (G.element("a"), point(var("z"), ONE)))


def test_trivial_case_has_no_data():
    with pytest.raises(ValueError):
        extended_quotient("trivial")
