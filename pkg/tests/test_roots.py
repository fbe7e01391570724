from g2series.roots import POSITIVE_ROOTS, coroot_table, reflection_matrix
from g2series.weyl import G2_GENERATORS, g2_weyl_group

G = g2_weyl_group()


def test_coroot_forms():
    assert coroot_table() == {
        "alpha": (1, -1), "beta": (0, 1), "alpha+beta": (1, 2),
        "2alpha+beta": (2, 1), "3alpha+beta": (1, 0), "3alpha+2beta": (1, 1),
    }


def test_simple_reflections_are_the_generators():
    gens = dict(G2_GENERATORS)
    assert reflection_matrix(POSITIVE_ROOTS["alpha"]) == gens["a"]
    assert reflection_matrix(POSITIVE_ROOTS["beta"]) == gens["b"]
    assert reflection_matrix(POSITIVE_ROOTS["alpha+beta"]) == G.element("bab").matrix


def test_reflections_are_the_six_involutions():
    refl = {reflection_matrix(r) for r in POSITIVE_ROOTS.values()}
    involutions = {w.matrix for w in G if G.order_of(w) == 2 and w.word != "ababab"}
    assert refl == involutions
