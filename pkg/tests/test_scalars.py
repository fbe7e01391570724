from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g2series.scalars import (ONE, Q, SymbolicScalar, inv, j, minus_one, mul, nu, parse_scalar,
                              power, q, root_of_unity, substitute, var)

z, w = var("z"), var("w")

scalars = st.builds(
    SymbolicScalar,
    st.fractions(min_value=-3, max_value=3, max_denominator=12),
    st.integers(-6, 6),
    st.dictionaries(st.sampled_from(["z", "w", "s1"]), st.integers(-3, 3), max_size=3),
)


def test_products():
    assert mul(j, j ** 2) == ONE
    assert Q ** 2 * Q ** -2 == ONE
    p = nu * z
    assert p.q_half_exp == -2 and p.var_exps == {"z": 1}


def test_inverses():
    assert inv(minus_one) == minus_one
    assert inv(Q) == Q ** -1
    assert inv(j * z) == j ** 2 * z ** -1


def test_powers():
    assert power(j, 3) == ONE
    assert power(Q, 2) == q
    assert power(z, -2).var_exps == {"z": -2}


def test_substitute():
    assert substitute(z * Q ** -2, "z", ONE) == nu
    assert substitute(z ** 2, "z", j) == j ** 2
    assert substitute(z * w, "z", Q) == Q * w
    with pytest.raises(ValueError):
        substitute(z, "z", z * w)


def test_canonical_form():
    s = SymbolicScalar(Fraction(7, 3), 1, {"z": 0, "w": 2})
    assert s.torsion == Fraction(1, 3)
    assert "z" not in s.var_exps
    assert minus_one == root_of_unity(1, 2) == root_of_unity(-1, 2)


def test_roots():
    assert sorted(ONE.root(2), key=SymbolicScalar.sort_key) == [ONE, minus_one]
    assert Q.root(2) == []
    assert q.root(2) == sorted([Q, minus_one * Q])
    with pytest.raises(ValueError):
        ONE.root(0)


def test_immutable():
    with pytest.raises(AttributeError):
        Q.q_half_exp = 3


@given(scalars, scalars, scalars)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * ONE == a
    assert (a * a.inverse())._key == ONE._key


@given(scalars)
def test_torsion_power_vanishes(a):
    t = SymbolicScalar(a.torsion)
    assert (t ** t.torsion.denominator).torsion == 0


@given(scalars)
def test_text_round_trip(a):
    assert parse_scalar(a.text()) == a


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_scalar("Q^x")
