"""Check rows and report sections shared by the CLI and the test-suite.

A check is a dict {name, claim, parameters, expected, observed, pass}; the
claim string says in words which statement is being reproduced.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from . import asymptotic as asy
from .correcting import (assign_triple, cocharacter, dual_torus_point, pi_tau, so4_dual_check,
                         tempered_table, verify_counts)
from .extquot import CELLS, LOWEST_CELL, extended_quotient
from .families import (Binomial, PrincipalSeriesPoint, curve_intersection, family_member, flat_family,
                       is_reducible, is_reducible_by_roots, reducibility_curves, special_points)
from .inertial import (CASES, Case, canonical_ram, classify_case, orbit_size,
                       reflection_subgroup, stabilizer_subgroup)
from .scalars import ONE, Q, SymbolicScalar, root_of_unity, var
from .torus import TorusPoint, orbit_rep, point, same_orbit
from .weyl import conjugacy_classes, g2_weyl_group

__all__ = [
    "check",
    "group_checks",
    "inertial_checks",
    "case_checks",
    "asymptotic_checks",
    "structured_points",
    "off_locus_points",
    "run_checks",
    "report_sections",
    "random_even_matrix",
    "SCOPES",
]

SCOPES = ("all",) + tuple(c.value for c in CASES)


def check(name: str, claim: str, expected, observed, parameters: dict | None = None) -> dict:
    return {"name": name, "claim": claim, "parameters": parameters or {},
            "expected": expected, "observed": observed, "pass": expected == observed}


# --- the Weyl group and the inertial classification --------------------------------

def group_checks() -> list[dict]:
    G = g2_weyl_group()
    classes = conjugacy_classes(G)
    reps = [c.representative.name for c in classes]
    cents = [len(c.centralizer) for c in classes]
    return [
        check("weyl.order", "the Weyl group of G2 has 12 elements", 12, len(G)),
        check("weyl.class_reps", "classes are represented by e, a, b, r, r^2, r^3",
              ["e", "a", "b", "ab", "abab", "ababab"], reps),
        check("weyl.centralizers", "centralizer orders of e, a, b, r, r^2, r^3",
              [12, 4, 4, 6, 6, 12], cents),
    ]


def inertial_checks(modulus: int = 12) -> list[dict]:
    mismatches = []
    counts: dict[str, int] = {}
    for ram in product(range(modulus), repeat=2):
        W1 = {w.matrix for w in stabilizer_subgroup(ram, modulus)}
        W2 = {w.matrix for w in reflection_subgroup(ram, modulus)}
        if W1 != W2:
            mismatches.append(list(ram))
        tag = classify_case(ram, modulus).value
        counts[tag] = counts.get(tag, 0) + 1
    rows = [check("inertial.stabilizer_is_reflection_group",
                  "W^s is generated by the reflections whose coroot kills the ramified part",
                  [], mismatches, {"modulus": modulus})]
    sizes_cc = [orbit_size("chi_chi", k, modulus) for k in (1, 2, 3, 4) if modulus % k == 0]
    sizes_c1 = [orbit_size("chi_one", k, modulus) for k in (1, 2, 4) if modulus % k == 0]
    if modulus % 12 == 0:
        rows.append(check("inertial.orbit_chi_chi",
                          "orbit sizes of chi x chi for chi of order 1, 2, 3, 4",
                          [1, 3, 2, 6], sizes_cc, {"modulus": modulus}))
        rows.append(check("inertial.orbit_chi_one",
                          "orbit sizes of chi x 1 for chi of order 1, 2, 4",
                          [1, 3, 6], sizes_c1, {"modulus": modulus}))
    if modulus == 12:
        rows.append(check("inertial.case_counts", "number of ramified pairs of each case",
                          {"gl2-chi1": 30, "gl2-chichi": 24, "iwahori": 1, "sl3": 2, "so4": 3,
                           "trivial": 84}, dict(sorted(counts.items())), {"modulus": modulus}))
    return rows


# --- structured sample points -------------------------------------------------------

_TORSION = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4),
            Fraction(3, 4), Fraction(1, 6), Fraction(5, 6))


def _scalar(torsion: Fraction, qexp: int) -> SymbolicScalar:
    return root_of_unity(torsion.numerator, torsion.denominator) * Q ** qexp


def structured_points(count: int, seed: int) -> list[TorusPoint]:
    """Points (zeta q^(a/2), zeta' q^(b/2)), sampled without replacement."""
    grid = [point(_scalar(t1, a), _scalar(t2, b))
            for t1, t2 in product(_TORSION, repeat=2) for a, b in product(range(-4, 5), repeat=2)]
    return random.Random(seed).sample(grid, count)


def off_locus_points(case: Case, count: int = 20) -> list[TorusPoint]:
    ram = canonical_ram(case)
    out = []
    for p in structured_points(400, seed=7):
        if not is_reducible(PrincipalSeriesPoint(ram, p)):
            out.append(p)
        if len(out) == count:
            break
    return out


# --- per-case checks -------------------------------------------------------------------

_INVENTORY = {
    Case.IWAHORI: {"points": 5, "lines": 2, "surfaces": 1},
    Case.GL2_CHI_ONE: {"points": 0, "lines": 1, "surfaces": 1},
    Case.GL2_CHI_CHI: {"points": 0, "lines": 1, "surfaces": 1},
    Case.SL3: {"points": 3, "lines": 1, "surfaces": 1},
    Case.SO4: {"points": 3, "lines": 2, "surfaces": 1},
}

_EXPECTED_COUNTS = {
    Case.IWAHORI: {"t_e": 5, "t_a": 4, "t_c": 4, "t_d": 4, "t_b": 2, "t_f": 2, "t_g": 2,
                   "t_h": 2, "t_i": 2, "t_j": 2},
    Case.SL3: {"y_a": 4, "y_a'": 4, "y_a''": 4, "y_b": 2},
    Case.SO4: {"z_a": 4, "z_c": 4, "z_b": 2, "z_d": 2, "z_*": 2},
    Case.GL2_CHI_ONE: {"c_1(z)": 2},
    Case.GL2_CHI_CHI: {"c(z)": 2},
}


def _inventory(case: Case) -> dict:
    comps = extended_quotient(case)
    return {"points": sum(c.dim == 0 for c in comps), "lines": sum(c.dim == 1 for c in comps),
            "surfaces": sum(c.dim == 2 for c in comps)}


def _group(case: Case):
    return stabilizer_subgroup(canonical_ram(case))


def case_checks(case: Case | str) -> list[dict]:
    case = Case(case)
    rows = [check(f"{case}.extended_quotient", "components of the extended quotient",
                  _INVENTORY[case], _inventory(case))]

    count_rows = verify_counts(case)
    observed = {r["point_tag"]: r["fiber_size"] for r in count_rows
                if r["point_tag"] in _EXPECTED_COUNTS[case]}
    rows.append(check(f"{case}.fiber_sizes", "number of points of pi^-1 over each reducibility point",
                      _EXPECTED_COUNTS[case], observed))
    bad = [r["point_tag"] for r in count_rows if not r["pass"]]
    rows.append(check(f"{case}.fibers_match_constituents",
                      "fiber size equals the number of constituents of the principal series",
                      [], bad))

    Ws = _group(case)
    fam = flat_family(case)
    missing = [c.name for c in reducibility_curves(case)
               if not family_member(fam, Q, c.parametrization, Ws)]
    missing += [tag for tag, p in special_points(case) if not family_member(fam, Q, p, Ws)]
    rows.append(check(f"{case}.family_contains_locus",
                      "X at tau = q^(1/2) contains the reducibility curves and special points",
                      [], missing))
    stray = [p.text() for p in off_locus_points(case) if family_member(fam, Q, p, Ws)]
    rows.append(check(f"{case}.family_excludes_irreducible",
                      "X at tau = q^(1/2) misses 20 points where the principal series is irreducible",
                      [], stray))
    lost = [m.tag for m in extended_quotient(case) if m.cell != LOWEST_CELL[case]
            and not family_member(fam, ONE, orbit_rep(Ws, m.generic_point()), Ws)]
    generic = point(var("z"), var("w"))
    rows.append(check(f"{case}.family_at_one",
                      "X at tau = 1 contains the image of every non-lowest component",
                      {"missing": [], "contains_generic": False},
                      {"missing": lost, "contains_generic": family_member(fam, ONE, generic, Ws)}))

    ram = canonical_ram(case)
    pts = structured_points(200, seed=CASES.index(case))
    disagree = [p.text() for p in pts
                if is_reducible(PrincipalSeriesPoint(ram, p))
                != is_reducible_by_roots(PrincipalSeriesPoint(ram, p))]
    rows.append(check(f"{case}.reducibility_oracles",
                      "the twelve explicit conditions agree with the coroot criterion",
                      [], disagree, {"points": 200}))

    wrong = []
    for comp in extended_quotient(case):
        ext = (comp.class_rep, comp.generic_point())
        if assign_triple(case, ext).sigma != pi_tau(case, ext, Q):
            wrong.append(comp.tag)
    rows.append(check(f"{case}.triple_sigma", "sigma of the attached triple is pi at q^(1/2)",
                      [], wrong))
    if case == Case.IWAHORI:
        rows += _iwahori_checks()
    if case == Case.SL3:
        rows += _sl3_checks()
    if case == Case.SO4:
        rows += _so4_checks()
    return rows


def _intersection_tags(case: Case) -> list[str]:
    first = reducibility_curves(case)[0]
    # the second curve as an equation in x, y
    if case == Case.IWAHORI:
        equation = Binomial((0, 0, 0), (0, 1, 2))  # y = nu
    else:
        equation = Binomial((0, 0, 0), (1, 1, 2))  # xy = nu
    W = _group(case)
    found = curve_intersection(case, first, equation)
    tags = []
    for tag, p in special_points(case):
        if not p.variables() and any(same_orbit(W, f, p) is not None for f in found):
            tags.append(tag)
    return sorted(tags)


def _iwahori_checks() -> list[dict]:
    rows = [check("iwahori.curve_intersection", "the two reducibility curves meet in t_a, t_d, t_e",
                  ["t_a", "t_d", "t_e"], _intersection_tags(Case.IWAHORI))]
    table = tempered_table()
    rows.append(check("iwahori.tempered_classes",
                      "the six tempered triples go to the six conjugacy classes",
                      [r["expected_class"] for r in table], [r["class"] for r in table]))
    return rows


def _sl3_checks() -> list[dict]:
    pts = dict(special_points(Case.SL3))
    W = _group(Case.SL3)
    observed = {}
    for comp in extended_quotient(Case.SL3):
        if comp.dim == 0:
            sigma = assign_triple(Case.SL3, (comp.class_rep, comp.branch.base)).sigma
            observed[comp.tag] = next(t for t in ("y_a", "y_a'", "y_a''")
                                      if same_orbit(W, sigma, pts[t]) is not None)
    return [check("sl3.point_sigmas", "the isolated points have sigma y_a, y_a', y_a''",
                  {"pt_1": "y_a", "pt_2": "y_a'", "pt_3": "y_a''"}, observed)]


def _so4_checks() -> list[dict]:
    rows = [check("so4.curve_intersection", "the two reducibility curves meet in z_a and z_c",
                  ["z_a", "z_c"], _intersection_tags(Case.SO4))]
    i = root_of_unity(1, 4)
    W = _group(Case.SO4)
    star = next(m for m in extended_quotient(Case.SO4) if m.tag == "pt_*")
    sigma = assign_triple(Case.SO4, (star.class_rep, star.branch.base)).sigma
    rows.append(check("so4.pt_star_sigma", "the triple at pt_* has semisimple part [s_i, s_i]",
                      True, same_orbit(W, sigma, dual_torus_point(i, i)) is not None))
    for r in so4_dual_check():
        rows.append(check(f"so4.dual.{r['check']}", "component groups in SL2 x SL2 / (-I,-I)",
                          r["expected"], r["observed"]))
    return rows


# --- the based ring of the lowest SO(4) cell -----------------------------------------

def _random_poly(rng: random.Random, parity: int, degree: int) -> asy.Poly:
    terms = {}
    for a in range(degree + 1):
        for b in range(degree + 1 - a):
            if (a + b) % 2 == parity and rng.random() < 0.5:
                terms[(a, b)] = rng.randint(-3, 3)
    return asy.Poly(terms)


def random_even_matrix(rng: random.Random, degree: int = 3) -> asy.GradedPolyMatrix:
    return asy.GradedPolyMatrix({(r, c): _random_poly(rng, int((r < 2) != (c < 2)), degree)
                                 for r in range(4) for c in range(4)})


def _random_point(rng: random.Random) -> tuple[Fraction, Fraction]:
    while True:
        z = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
             Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        if z != (0, 0):
            return z


def asymptotic_checks(degree: int = 4, seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    rows = []

    bad = []
    for m, n in product(range(9), repeat=2):
        prod_poly = [0] * (m + n + 1)
        for a, c in enumerate(asy.character_polynomial(m)):
            for b, d in enumerate(asy.character_polynomial(n)):
                prod_poly[a + b] += c * d
        if asy.cg_multiply(asy.V(m), asy.V(n)) != asy.from_character(prod_poly):
            bad.append([m, n])
    rows.append(check("so4.j.clebsch_gordan", "Clebsch-Gordan agrees with characters",
                      [], bad, {"max_weight": 8}))

    elems = [asy.lowest_cell_element(t) for t in asy.truncated_basis(3)]
    failures = 0
    for u, v in product(elems, repeat=2):
        try:
            asy.j_multiply(u, v)
        except ValueError:
            failures += 1
    rows.append(check("so4.j.based_ring", "lowest-cell products have non-negative integer coefficients",
                      0, failures, {"max_weight": 3}))

    unit = [asy.table2_basis(u) for u in asy.UNIT_TERMS]
    unit_ok = True
    for u in rng.sample(elems, 20):
        left: dict = {}
        right: dict = {}
        for e in asy.UNIT_TERMS:
            for k, c in asy.j_multiply(e, u).items():
                left[k] = left.get(k, 0) + c
            for k, c in asy.j_multiply(u, e).items():
                right[k] = right.get(k, 0) + c
        unit_ok &= left == {u: 1} == right
    rows.append(check("so4.j.unit", "the four idempotents sum to the unit", True, unit_ok,
                      {"unit": [t.text() for t in unit]}))

    for D in sorted({2, 3, degree}):
        basis = [asy.tensor_to_graded(t) for t in asy.truncated_basis(D)]
        generic = sorted({asy.evaluate(basis, *_random_point(rng)) for _ in range(25)})
        rows.append(check(f"so4.j.rank.generic.D{D}", "evaluation is onto M4 away from the origin",
                          [16], generic, {"degree": D, "points": 25}))
        rows.append(check(f"so4.j.rank.origin.D{D}", "evaluation at the origin has image M2 + M2",
                          8, asy.evaluate(basis, 0, 0), {"degree": D}))

    eps_ok = True
    for _ in range(50):
        M = random_even_matrix(rng)
        z = _random_point(rng)
        lhs = asy.sign_conjugate(asy.GradedPolyMatrix(
            {(r, c): asy.Poly.const(x) for r, row in enumerate(M.at(*z)) for c, x in enumerate(row)}))
        rhs = asy.epsilon(M).at(-z[0], -z[1])
        eps_ok &= [[lhs[(r, c)](0, 0) for c in range(4)] for r in range(4)] == rhs
        eps_ok &= asy.epsilon(asy.epsilon(M)) == M and asy.epsilon(M) == M
    rows.append(check("so4.j.epsilon", "diag(I2,-I2) conjugates M_(z,z') to M_(-z,-z')",
                      True, eps_ok, {"matrices": 50}))

    rows.append(check("so4.crossed.identity", "E31[1] is in the ideal generated by [1]+[eps]",
                      True, asy.crossed_identity_check()))
    for D in range(1, min(degree, 3) + 1):
        rows.append(check(f"so4.crossed.full_ideal.D{D}", "the group-sum ideal is the whole crossed product",
                          True, asy.crossed_product_full_ideal_check(D), {"degree": D}))

    mult_ok = True
    for _ in range(50):
        P, P2 = _random_poly(rng, 0, 4), _random_poly(rng, 0, 4)
        z, z2 = rng.randint(-5, 5), rng.randint(-5, 5)
        mult_ok &= asy.delta0(P * P2, z * z2) == asy.delta0(P, z) * asy.delta0(P2, z2)
    rows.append(check("so4.delta0.multiplicative", "delta0 is an algebra map", True, mult_ok,
                      {"pairs": 50}))

    theta0 = asy.GradedPolyMatrix.diag([asy.Poly.const(1), asy.Poly.const(1), asy.Poly(), asy.Poly()])
    theta = theta0 + asy.GradedPolyMatrix({(0, 0): asy.Poly.monomial(2, 0), (0, 2): asy.Poly.monomial(1, 0),
                                           (3, 3): asy.Poly.monomial(1, 1)})
    ext_ok = True
    for _ in range(20):
        b = random_even_matrix(rng)
        ext_ok &= asy.unit_extension(theta0, b) == asy.unit_extension(theta, b)
    rows.append(check("so4.unit_extension", "phi(theta b) does not depend on theta with phi(theta) = 1",
                      True, ext_ok))
    rows.append(check("j.c1_dims", "simple modules of J for the subregular cell",
                      (3, 3, 2, 1), asy.J_C1_SIMPLE_MODULE_DIMS))
    return rows


def run_checks(scope: str = "all", degree: int = 4, modulus: int = 12) -> list[dict]:
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    rows = []
    if scope == "all":
        rows += group_checks() + inertial_checks(modulus)
    for case in CASES:
        if scope in ("all", case.value):
            rows += case_checks(case)
    if scope in ("all", "so4"):
        rows += asymptotic_checks(degree)
    return rows


def report_sections(case: Case | str) -> list[tuple[str, list[dict]]]:
    """Tables describing one case, in a fixed order."""
    case = Case(case)
    G = g2_weyl_group()
    Ws = _group(case)
    sections = [("W^s elements", [{"word": w.name, "matrix": "; ".join(" ".join(map(str, r)) for r in w.matrix)} for w in Ws])]
    sections.append(("conjugacy classes", [
        {"representative": c.representative.name, "size": len(c.members),
         "centralizer_order": len(c.centralizer)} for c in conjugacy_classes(G, Ws)]))
    sections.append(("extended quotient", [m.as_dict() for m in extended_quotient(case)]))
    sections.append(("cocharacters", [
        {"cell": cell, "cocharacter": list(cocharacter(case, cell).exps)} for cell in CELLS[case]]))
    sections.append(("fibers", [{k: r[k] for k in ("point_tag", "point", "fiber_size", "fiber",
                                                  "constituent_count", "count_source")}
                                for r in verify_counts(case)]))
    sections.append(("flat family", [{"factor": f} for f in flat_family(case).text()]))
    triples = []
    for comp in extended_quotient(case):
        ext = (comp.class_rep, comp.generic_point())
        t = assign_triple(case, ext)
        triples.append({"component": comp.tag, "triple": t.text(case)})
    sections.append(("triples", triples))
    if case == Case.IWAHORI:
        sections.append(("tempered", tempered_table()))
    return sections
