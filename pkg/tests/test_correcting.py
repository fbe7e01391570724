import pytest
from hypothesis import given, strategies as st

from g2series.correcting import (PRINTED_COCHARACTERS, DualPairSO4, Mat2, ScalarSum,
                                 assign_triple, cocharacter, component_group_order,
                                 dual_torus_point, fiber, pi_tau, so4_dual_check, tempered_table,
                                 verify_counts)
from g2series.extquot import (LOWEST_CELL, CompactForm, component_by_tag, extended_quotient,
                              find_component)
from g2series.families import special_points
from g2series.inertial import CASES, Case, canonical_ram, stabilizer_subgroup
from g2series.scalars import (ONE, Q, SymbolicScalar, j, minus_one, nu, q, root_of_unity,
                              substitute, var)
from g2series.torus import orbit_rep, point, same_orbit
from g2series.weyl import act, g2_weyl_group

G = g2_weyl_group()
z, w = var("z"), var("w")


def _group(case):
    return stabilizer_subgroup(canonical_ram(case))


def _canon(case, word, t):
    comp, moved = find_component(case, (G.element(word), t))
    if comp.dim == 2:
        moved = orbit_rep(_group(case), moved)
    return comp.tag, moved


def _fiber_set(case, y):
    return {_canon(case, p.element.word, p.point) for p in fiber(case, y)}


def _printed(case, pts):
    return {_canon(case, word, t) for word, t in pts}


def test_cocharacters():
    assert cocharacter("iwahori", "c_e").exps == (-2, -4)
    assert cocharacter("gl2-chichi", "b_e").exps == (1, -1)
    assert cocharacter("gl2-chi1", "b_e").exps == (0, -2)
    assert PRINTED_COCHARACTERS[(Case.GL2_CHI_ONE, "b_e")] == (1, -1)
    for case in CASES:
        assert cocharacter(case, LOWEST_CELL[case]).exps == (0, 0)
    with pytest.raises(ValueError):
        cocharacter("iwahori", "d_1")


def test_printed_gl2_cocharacter_misses_the_curve():
    line = component_by_tag("gl2-chi1", "line_b")
    W = _group("gl2-chi1")
    s = var("s")
    on_curve = lambda p: any(act(x, p).coords[1] in (nu, nu.inverse()) for x in W)
    printed = point(Q, Q.inverse()) * line.branch.at([s])
    assert not on_curve(printed)
    assert on_curve(pi_tau("gl2-chi1", (line.class_rep, line.branch.at([s])), Q))


def test_pi_tau_examples():
    t_a = dict(special_points("iwahori"))["t_a"]
    W = _group("iwahori")
    assert pi_tau("iwahori", (G.element("ab"), point(ONE, ONE)), Q) == orbit_rep(W, t_a)
    assert pi_tau("iwahori", (G.identity(), point(z, w)), Q) == orbit_rep(W, point(z, w))
    z_c = dict(special_points("so4"))["z_c"]
    assert pi_tau("so4", (G.element("a"), point(minus_one, minus_one)), Q) == \
        orbit_rep(_group("so4"), z_c)


def test_iwahori_printed_fibers():
    pts = dict(special_points("iwahori"))
    assert _fiber_set("iwahori", pts["t_e"]) == _printed("iwahori", [
        ("e", point(ONE, nu)), ("abab", point(ONE, ONE)), ("ababab", point(ONE, ONE)),
        ("a", point(ONE, ONE)), ("b", point(ONE, ONE))])
    assert _fiber_set("iwahori", pts["t_d"]) == _printed("iwahori", [
        ("e", point(nu, minus_one)), ("ababab", point(minus_one, ONE)),
        ("a", point(minus_one, minus_one)), ("b", point(minus_one, ONE))])
    assert _fiber_set("iwahori", pts["t_c"]) == _printed("iwahori", [
        ("e", point(j, j * nu)), ("abab", point(j, j)), ("a", point(j, j)),
        ("a", point(j ** 2, j ** 2))])


def test_t_a_fiber_and_the_misprinted_b_point():
    pts = dict(special_points("iwahori"))
    assert _fiber_set("iwahori", pts["t_a"]) == _printed("iwahori", [
        ("e", point(nu, nu ** 2)), ("ab", point(ONE, ONE)), ("a", point(nu, nu)),
        ("b", point(nu ** 2, ONE))])
    W = _group("iwahori")
    misprint = pi_tau("iwahori", (G.element("b"), point(nu, ONE)), Q)
    assert misprint == orbit_rep(W, pts["t_i"])


def test_self_intersection():
    t_c = dict(special_points("iwahori"))["t_c"]
    a_points = {p.point for p in fiber("iwahori", t_c) if p.tag == "line_a"}
    assert a_points == {point(j, j), point(j ** 2, j ** 2)}


def test_sl3_and_so4_printed_fibers():
    y_a = dict(special_points("sl3"))["y_a"]
    assert _fiber_set("sl3", y_a) == _printed("sl3", [
        ("e", point(ONE, nu)), ("abab", point(ONE, ONE)), ("a", point(ONE, ONE)),
        ("a", point(q, q))])
    so4 = dict(special_points("so4"))
    assert _fiber_set("so4", so4["z_a"]) == _printed("so4", [
        ("e", point(ONE, nu)), ("ababab", point(ONE, ONE)), ("a", point(ONE, ONE)),
        ("babab", point(ONE, ONE))])
    assert _fiber_set("so4", so4["z_c"]) == _printed("so4", [
        ("e", point(minus_one, minus_one * nu)), ("ababab", point(minus_one, minus_one)),
        ("a", point(minus_one, minus_one)), ("babab", point(minus_one, minus_one))])
    assert _fiber_set("so4", so4["z_*"]) == _printed("so4", [
        ("e", point(minus_one, ONE)), ("ababab", point(minus_one, ONE))])


@pytest.mark.parametrize("case", CASES)
def test_counts_pass(case):
    rows = verify_counts(case)
    assert rows and all(r["pass"] for r in rows)


def _line_identifications(case):
    """(component, x, s -> s') for centralizer elements mapping deformed line
    points to deformed line points."""
    s = var("s")
    out = []
    for m in extended_quotient(case):
        if m.dim != 1:
            continue
        h = cocharacter(case, m.cell).at(Q)
        g = m.branch.gens[0]
        idx = next(i for i, e in enumerate(g) if abs(e) == 1)
        for x in m.centralizer:
            image = act(x, h * m.branch.at([s]))
            s2 = (image.coords[idx] / (h * m.branch.base).coords[idx]) ** g[idx]
            if h * m.branch.at([s2]) == image and s2 != s:
                out.append((m, x, s2))
    return out


scalar_values = st.builds(SymbolicScalar, st.sampled_from([0, 1 / 2, 1 / 3, 1 / 4]),
                          st.integers(-4, 4))


def test_identifications_exist_exactly_on_interval_lines():
    found = {(case.value, m.tag) for case in CASES for m, _, _ in _line_identifications(case)}
    intervals = {(case.value, m.tag) for case in CASES for m in extended_quotient(case)
                 if m.compact_form == CompactForm.UNIT_INTERVAL}
    assert found == intervals == {("iwahori", "line_a"), ("iwahori", "line_b"),
                                  ("so4", "line_a"), ("so4", "line_babab")}


@given(st.sampled_from(CASES), scalar_values)
def test_pi_tau_respects_the_twisted_centralizer_action(case, value):
    for m, x, s2 in _line_identifications(case):
        t1 = m.branch.at([value])
        t2 = m.branch.at([substitute(s2, "s", value)])
        assert pi_tau(case, (m.class_rep, t1), Q) == pi_tau(case, (m.class_rep, t2), Q)


def test_plain_centralizer_translate_moves_pi_tau():
    line = component_by_tag("iwahori", "line_a")
    s = var("s")
    r3 = G.element("ababab")
    t = line.branch.at([s])
    assert r3 in [G.canonical(x) for x in line.centralizer]
    assert pi_tau("iwahori", (line.class_rep, t), Q) != \
        pi_tau("iwahori", (line.class_rep, act(r3, t)), Q)


def test_lowest_cell_projection_is_identity():
    for case in CASES:
        p = point(z, w)
        assert pi_tau(case, (G.identity(), p), Q) == orbit_rep(_group(case), p)


def test_triples():
    pts = dict(special_points("iwahori"))
    W = _group("iwahori")
    pt1 = component_by_tag("iwahori", "pt_1")
    t1 = assign_triple("iwahori", (pt1.class_rep, pt1.branch.base))
    assert same_orbit(W, t1.sigma, pts["t_e"]) and t1.text(Case.IWAHORI).endswith("u_1, ρ1)")
    star = component_by_tag("iwahori", "pt_*")
    ts = assign_triple("iwahori", (star.class_rep, star.branch.base))
    assert same_orbit(W, ts.sigma, pts["t_a"]) and ts.unipotent == "c_e" and ts.rho == "1"
    so4_star = component_by_tag("so4", "pt_*")
    t = assign_triple("so4", (so4_star.class_rep, so4_star.branch.base))
    i = root_of_unity(1, 4)
    assert t.rho == "sgn" and t.text(Case.SO4).split(", ")[-2] == "[I,I]"
    assert same_orbit(_group("so4"), t.sigma, dual_torus_point(i, i))


def test_triple_sigma_is_pi_at_root_q():
    for case in CASES:
        for m in extended_quotient(case):
            ext = (m.class_rep, m.generic_point())
            assert assign_triple(case, ext).sigma == pi_tau(case, ext, Q)


def test_tempered_table():
    rows = tempered_table()
    assert [r["class"] for r in rows] == ["e", "b", "a", "ababab", "abab", "ab"]
    assert all(r["pass"] for r in rows)


def test_tempered_sigma_sits_on_the_other_line():
    # Under the printed pairing a -> c_2, b -> c_3, t_g lies on the image of
    # the a-line and t_j on the image of the b-line.
    pts = dict(special_points("iwahori"))
    assert {p.tag for p in fiber("iwahori", pts["t_g"])} == {"line_a", "surface"}
    assert {p.tag for p in fiber("iwahori", pts["t_j"])} == {"line_b", "surface"}
    rows = {r["triple"]: r for r in tempered_table()}
    assert rows["(t_g, u_3, 1)"]["sigma_on_component_image"] is False


def test_scalar_sum_matrices():
    u = Mat2.unipotent(ScalarSum.of(1))
    s = Mat2.diag(Q)
    assert s * s.inverse() == Mat2.identity()
    assert (s * u * s.inverse()).b == ScalarSum.of(q)
    assert ScalarSum.of(Q) + -ScalarSum.of(Q) == ScalarSum()
    pair = DualPairSO4(u, u)
    assert pair == DualPairSO4(-u, -u)
    with pytest.raises(ValueError):
        DualPairSO4(Mat2(ScalarSum.of(2), ScalarSum(), ScalarSum(), ScalarSum.of(1)), u)


def test_component_groups_computed():
    i, tau, tau2 = root_of_unity(1, 4), var("tau"), var("tau'")
    assert component_group_order((Q, Q), (True, True)) == 2
    assert component_group_order((Q, minus_one * Q), (True, True)) == 2
    assert component_group_order((tau, tau2), (False, False)) == 1
    assert component_group_order((i, i), (False, False)) == 2
    assert component_group_order((ONE, ONE), (False, False)) == 1
    # Z([s_q^(1/2), s_tau], [u, I]) = ({+-I} x T) / (-I,-I), which is a torus.
    assert component_group_order((Q, tau), (True, False)) == 1


@pytest.mark.xfail(strict=True, reason="a sign in the first factor is absorbed by the torus of "
                   "the second modulo (-I,-I), so these centralizers are connected")
@pytest.mark.parametrize("label", ["Case 2", "Case 3"])
def test_component_group_printed_for_mixed_cases(label):
    row = next(r for r in so4_dual_check() if r["check"].startswith(label))
    assert row["observed"] == 2


def test_dual_check_other_rows():
    for r in so4_dual_check():
        if not r["check"].startswith(("Case 2", "Case 3")):
            assert r["pass"], r
