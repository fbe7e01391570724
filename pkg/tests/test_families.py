import pytest
from hypothesis import given, strategies as st

from g2series.families import (PRINTED_GL2_CHI_ONE_FACTOR, PRINTED_SL3_EXTRA, Binomial, FlatFamily,
                               PrincipalSeriesPoint, constituent_count, count_with_source,
                               curve_intersection, family_member, flat_family, is_reducible,
                               is_reducible_by_roots, keys_reducible, reducibility_curves,
                               solve_monomial, special_points)
from g2series.inertial import CASES, Case, canonical_ram, stabilizer_subgroup
from g2series.scalars import ONE, Q, SymbolicScalar, j, minus_one, nu, var
from g2series.torus import orbit_rep, point, same_orbit
from g2series.verification import off_locus_points

z, w = var("z"), var("w")


def _group(case):
    return stabilizer_subgroup(canonical_ram(case))


def test_reducibility_examples():
    assert is_reducible(PrincipalSeriesPoint((0, 0), point(ONE, nu)))
    assert keys_reducible(PrincipalSeriesPoint((6, 6), point(minus_one, ONE)))
    assert is_reducible(PrincipalSeriesPoint((6, 6), point(minus_one, ONE)))
    assert not is_reducible(PrincipalSeriesPoint((0, 0), point(z, w)))


coords = st.builds(SymbolicScalar, st.sampled_from([0, 1 / 2, 1 / 3, 2 / 3, 1 / 4, 1 / 6]),
                   st.integers(-5, 5))


@given(st.sampled_from(CASES), coords, coords)
def test_twelve_conditions_match_coroots(case, x, y):
    p = PrincipalSeriesPoint(canonical_ram(case), point(x, y))
    assert is_reducible(p) == is_reducible_by_roots(p)


def test_counts():
    assert constituent_count("iwahori", point(ONE, nu)) == 5
    assert constituent_count("sl3", point(ONE, nu)) == 4
    z_b = dict(special_points("so4"))["z_b"]
    assert constituent_count("so4", z_b) == 2
    assert constituent_count("so4", point(z, w)) == 1
    assert "Iwahori" in count_with_source("iwahori", point(nu, nu ** 2)).source
    with pytest.raises(ValueError):
        count_with_source("trivial", point(z, w))


def test_flat_family_factors():
    assert flat_family("iwahori").text() == ["1 = y*tau^2", "x = y*tau^2"]
    assert flat_family("so4").text() == ["x = y*tau^2", "1 = x*y*tau^2", "(1, zeta(1/2))"]
    assert flat_family("sl3").text() == ["x = y*tau^2", "(zeta(1/3), zeta(1/3)*tau^-2)",
                                         "(zeta(2/3), zeta(2/3)*tau^-2)"]
    with pytest.raises(ValueError):
        Binomial((0, 0, 0), (0, 0, 0))


def test_membership_examples():
    W = _group("iwahori")
    fam = flat_family("iwahori")
    assert family_member(fam, Q, point(z, z * nu), W)
    assert family_member(fam, ONE, point(z, ONE), W)
    assert not family_member(flat_family("so4"), Q, point(z, w), _group("so4"))


@pytest.mark.parametrize("case", CASES)
def test_family_at_root_q_is_the_reducibility_locus(case):
    fam, W = flat_family(case), _group(case)
    for curve in reducibility_curves(case):
        assert family_member(fam, Q, curve.parametrization, W)
    for _, p in special_points(case):
        assert family_member(fam, Q, p, W)
    off = off_locus_points(case)
    assert len(off) == 20
    assert not any(family_member(fam, Q, p, W) for p in off)


def test_printed_gl2_factor_misses_the_locus():
    printed = FlatFamily(Case.GL2_CHI_ONE, (PRINTED_GL2_CHI_ONE_FACTOR,))
    curve = reducibility_curves("gl2-chi1")[0]
    assert not family_member(printed, Q, curve.parametrization, _group("gl2-chi1"))
    assert family_member(flat_family("gl2-chi1"), Q, curve.parametrization, _group("gl2-chi1"))


def test_printed_sl3_points_are_irreducible():
    ram = canonical_ram("sl3")
    for extra in PRINTED_SL3_EXTRA:
        assert not is_reducible(PrincipalSeriesPoint(ram, extra.at(Q)))
    for extra in flat_family("sl3").extra_points:
        assert is_reducible(PrincipalSeriesPoint(ram, extra.at(Q)))


def _tags(case, pts):
    W = _group(case)
    return sorted(tag for tag, p in special_points(case) if not p.variables()
                  and any(same_orbit(W, f, p) for f in pts))


def test_curve_intersections():
    c2 = reducibility_curves("iwahori")[0]
    meet = curve_intersection("iwahori", c2, Binomial((0, 0, 0), (0, 1, 2)))
    assert _tags("iwahori", meet) == ["t_a", "t_d", "t_e"]
    c1 = reducibility_curves("so4")[0]
    meet = curve_intersection("so4", c1, Binomial((0, 0, 0), (1, 1, 2)))
    assert _tags("so4", meet) == ["z_a", "z_c"]


def test_solve_monomial():
    assert solve_monomial(var("s", 2) * nu, "s") == sorted([Q, minus_one * Q])
    assert solve_monomial(ONE, "s") is None
    assert solve_monomial(nu, "s") == []
    with pytest.raises(ValueError):
        solve_monomial(var("s", 2) * Q, "s")
