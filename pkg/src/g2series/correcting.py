"""Correcting cocharacters, the deformed projections pi_tau, fibers over
quotient points, indexing triples and the dual-group checks for the SO(4)
case."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .extquot import ExtQuotComponent, LOWEST_CELL, extended_quotient, find_component
from .families import count_with_source, reducibility_curves, special_points
from .inertial import Case, canonical_ram, stabilizer_subgroup
from .scalars import ONE, Q, SymbolicScalar, minus_one, q, root_of_unity, var
from .torus import TorusPoint, orbit, orbit_rep, point
from .weyl import WeylElement, act, conjugacy_classes, g2_weyl_group

__all__ = [
    "Cocharacter",
    "cocharacter",
    "PRINTED_COCHARACTERS",
    "pi_tau",
    "FiberPoint",
    "fiber",
    "IndexingTriple",
    "assign_triple",
    "UNIPOTENT_NAMES",
    "verify_counts",
    "tempered_table",
    "ScalarSum",
    "Mat2",
    "DualPairSO4",
    "component_group_order",
    "so4_dual_check",
    "dual_torus_point",
]


@dataclass(frozen=True)
class Cocharacter:
    exps: tuple[int, int]

    def at(self, tau: SymbolicScalar) -> TorusPoint:
        return TorusPoint(tuple(tau ** e for e in self.exps))


_COCHARACTERS = {
    Case.IWAHORI: {"c_e": (-2, -4), "c_1": (0, -2), "c_2": (0, -2), "c_3": (0, -2)},
    # The line of b is (z, 1), so only (., tau^-2) moves it onto y = nu.
    Case.GL2_CHI_ONE: {"b_e": (0, -2)},
    Case.GL2_CHI_CHI: {"b_e": (1, -1)},
    Case.SL3: {"d_e": (0, -2), "d_1": (0, -2)},
    Case.SO4: {"e_e": (0, -2), "e_1": (0, -2), "e_1'": (0, -2)},
}
PRINTED_COCHARACTERS = {(Case.GL2_CHI_ONE, "b_e"): (1, -1)}


def cocharacter(case: Case | str, cell: str) -> Cocharacter:
    case = Case(case)
    if cell == LOWEST_CELL[case]:
        return Cocharacter((0, 0))
    try:
        return Cocharacter(_COCHARACTERS[case][cell])
    except KeyError:
        raise ValueError(f"{cell} is not a cell of {case}") from None


def _group(case: Case) -> list[WeylElement]:
    return stabilizer_subgroup(canonical_ram(case))


def pi_tau(case: Case | str, ext_point: tuple[WeylElement, TorusPoint],
           tau: SymbolicScalar) -> TorusPoint:
    """Canonical representative of the W^s-orbit of h_cell(tau) * t."""
    case = Case(case)
    comp, moved = find_component(case, ext_point)
    h = cocharacter(case, comp.cell).at(tau)
    return orbit_rep(_group(case), h * moved)


# --- fibers ----------------------------------------------------------------

@dataclass(frozen=True)
class FiberPoint:
    tag: str
    cell: str
    element: WeylElement
    point: TorusPoint

    def text(self) -> str:
        return f"({self.element.name}, {self.point.text()})"


def _section_key(s: SymbolicScalar):
    return (abs(s.q_half_exp), s.q_half_exp, s.torsion, tuple(s.var_exps.items()))


def _solve_on_line(comp: ExtQuotComponent, hq: TorusPoint,
                   target: TorusPoint) -> list[SymbolicScalar]:
    """Parameters s with hq * base * s^g == target."""
    g = comp.branch.gens[0]
    start = hq * comp.branch.base
    idx = max(range(len(g)), key=lambda i: (abs(g[i]) == 1, abs(g[i])))
    lone = target.coords[idx] / start.coords[idx]  # = s ** g[idx]
    if abs(g[idx]) == 1:
        sols = [lone ** g[idx]]
    else:
        sols = lone.root(g[idx]) if g[idx] > 0 else [r.inverse() for r in lone.root(-g[idx])]
    return [s for s in sols if hq * comp.branch.at([s]) == target]


def fiber(case: Case | str, y: TorusPoint) -> list[FiberPoint]:
    """All extended-quotient points p with pi_{q^(1/2)}(p) in the orbit of y.

    On a line, two solutions are the same point when a centralizer element
    carries one deformed point h(q^(1/2)) t onto the other; this is the
    identification under which pi_tau is well defined.
    """
    case = Case(case)
    Ws = _group(case)
    targets = orbit(Ws, y)
    y_rep = targets[0]
    out: list[FiberPoint] = []
    for comp in extended_quotient(case):
        hq = cocharacter(case, comp.cell).at(Q)
        if comp.dim == 2:
            out.append(FiberPoint(comp.tag, comp.cell, comp.class_rep, y_rep))
        elif comp.dim == 0:
            if orbit_rep(Ws, hq * comp.branch.base) == y_rep:
                out.append(FiberPoint(comp.tag, comp.cell, comp.class_rep, comp.branch.base))
        else:
            classes: list[list[SymbolicScalar]] = []
            for target in targets:
                for s in _solve_on_line(comp, hq, target):
                    deformed = hq * comp.branch.at([s])
                    for cls in classes:
                        other = hq * comp.branch.at([cls[0]])
                        if any(act(x, deformed) == other for x in comp.centralizer):
                            if s not in cls:
                                cls.append(s)
                            break
                    else:
                        classes.append([s])
            for cls in classes:
                s = min(cls, key=_section_key)
                out.append(FiberPoint(comp.tag, comp.cell, comp.class_rep, comp.branch.at([s])))
    return out


# --- indexing triples ----------------------------------------------------------

UNIPOTENT_NAMES = {
    Case.IWAHORI: {"c_e": "u_e", "c_1": "u_1", "c_2": "u_2", "c_3": "u_3", "c_0": "1"},
    Case.GL2_CHI_ONE: {"b_e": "u_e", "b_0": "1"},
    Case.GL2_CHI_CHI: {"b_e": "u_e", "b_0": "1"},
    Case.SL3: {"d_e": "u_e", "d_1": "u_1", "d_0": "1"},
    Case.SO4: {"e_e": "[u,u]", "e_1": "[u,I]", "e_1'": "[I,u]", "e_0": "[I,I]"},
}

_RHO = {
    Case.IWAHORI: {"pt_1": "ρ1", "pt_4": "ρ2"},
    Case.SL3: {"pt_1": "ρ1", "pt_2": "ρ2", "pt_3": "ρ1"},
    Case.SO4: {"pt_*": "sgn"},
}


@dataclass(frozen=True)
class IndexingTriple:
    sigma: TorusPoint
    unipotent: str  # cell label standing for its unipotent class
    rho: str

    def text(self, case: Case) -> str:
        return f"({self.sigma.text()}, {UNIPOTENT_NAMES[case][self.unipotent]}, {self.rho})"


def assign_triple(case: Case | str, ext_point: tuple[WeylElement, TorusPoint]) -> IndexingTriple:
    case = Case(case)
    comp, _ = find_component(case, ext_point)
    sigma = pi_tau(case, ext_point, Q)
    rho = _RHO.get(case, {}).get(comp.tag, "1")
    return IndexingTriple(sigma, comp.cell, rho)


def _check_points(case: Case) -> list[tuple[str, TorusPoint]]:
    pts = list(special_points(case))
    tags = {t for t, _ in pts}
    for curve in reducibility_curves(case):
        tag = f"{curve.name}(z)"
        if tag not in tags and not any(curve.parametrization == p for _, p in pts):
            pts.append((tag, curve.parametrization))
    pts.append(("generic", point(var("z"), var("w"))))
    return pts


def verify_counts(case: Case | str) -> list[dict]:
    """|fiber| against the constituent count at every tabulated point, one
    generic point per reducibility curve and one generic point off them."""
    case = Case(case)
    rows = []
    for tag, y in _check_points(case):
        fib = fiber(case, y)
        count = count_with_source(case, y)
        rows.append({
            "case": case.value,
            "point_tag": tag,
            "point": y.text(),
            "fiber_size": len(fib),
            "fiber": [p.text() for p in fib],
            "constituent_count": count.value,
            "count_source": count.source,
            "pass": len(fib) == count.value,
        })
    if case == Case.IWAHORI:
        t_c = dict(special_points(case))["t_c"]
        a_points = [p for p in fiber(case, t_c) if p.tag == "line_a"]
        rows.append({
            "case": case.value,
            "point_tag": "t_c self-intersection",
            "point": t_c.text(),
            "fiber_size": len(a_points),
            "fiber": [p.text() for p in a_points],
            "constituent_count": 2,
            "count_source": "two distinct points of the a-line over t_c",
            "pass": len(a_points) == 2,
        })
    return rows


# The tempered representations with real central character, as
# (sigma tag, unipotent cell, rho), and the W-class they are attached to.
_TEMPERED = (
    ("t_0", "c_0", "1", "e"),
    ("t_g", "c_3", "1", "b"),
    ("t_j", "c_2", "1", "a"),
    ("t_e", "c_1", "ρ1", "ababab"),
    ("t_e", "c_1", "ρ2", "abab"),
    ("t_a", "c_e", "1", "ab"),
)


def tempered_table() -> list[dict]:
    """Match each tempered triple to a component through its unipotent class
    and rho, and read off the conjugacy class of the component."""
    case = Case.IWAHORI
    G = g2_weyl_group()
    classes = conjugacy_classes(G)
    pts = dict(special_points(case))
    rows = []
    for sigma_tag, cell, rho, expected in _TEMPERED:
        comps = [m for m in extended_quotient(case) if m.cell == cell
                 and _RHO.get(case, {}).get(m.tag, "1") == rho]
        assert len(comps) == 1, (cell, rho)
        comp = comps[0]
        k = G.index(comp.class_rep)
        cls = next(c for c in classes if k in c.members)
        sigma = pts.get(sigma_tag)
        on_image = None
        if sigma is not None:
            on_image = any(p.tag == comp.tag for p in fiber(case, sigma))
        rows.append({
            "triple": f"({sigma_tag}, {UNIPOTENT_NAMES[case][cell]}, {rho})",
            "component": comp.tag,
            "class": cls.representative.name,
            "expected_class": expected,
            "pass": cls.representative.name == expected,
            "sigma_on_component_image": on_image,
        })
    return rows


# --- the dual group SL2 x SL2 / <(-I,-I)> ------------------------------------

class ScalarSum:
    """Finite Z-linear combination of SymbolicScalars (for matrix entries)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for s, c in (terms or {}).items():
            if c:
                clean[s] = clean.get(s, 0) + c
        self.terms = {s: c for s, c in clean.items() if c}

    @classmethod
    def of(cls, s: SymbolicScalar | int) -> ScalarSum:
        if isinstance(s, int):
            return cls({ONE: s}) if s else cls()
        return cls({s: 1})

    def __add__(self, other: ScalarSum) -> ScalarSum:
        terms = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return ScalarSum(terms)

    def __neg__(self) -> ScalarSum:
        return ScalarSum({s: -c for s, c in self.terms.items()})

    def __mul__(self, other: ScalarSum) -> ScalarSum:
        terms: dict[SymbolicScalar, int] = {}
        for s, c in self.terms.items():
            for t, d in other.terms.items():
                terms[s * t] = terms.get(s * t, 0) + c * d
        return ScalarSum(terms)

    def __eq__(self, other):
        return isinstance(other, ScalarSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def text(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return " + ".join(s.text() if c == 1 else f"{c}*{s.text()}" for s, c in items)


@dataclass(frozen=True)
class Mat2:
    a: ScalarSum
    b: ScalarSum
    c: ScalarSum
    d: ScalarSum

    def __mul__(self, o: Mat2) -> Mat2:
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def det(self) -> ScalarSum:
        return self.a * self.d + -(self.b * self.c)

    @staticmethod
    def identity() -> Mat2:
        return Mat2(ScalarSum.of(1), ScalarSum.of(0), ScalarSum.of(0), ScalarSum.of(1))

    @staticmethod
    def diag(t: SymbolicScalar) -> Mat2:
        return Mat2(ScalarSum.of(t), ScalarSum.of(0), ScalarSum.of(0), ScalarSum.of(t.inverse()))

    @staticmethod
    def unipotent(n: ScalarSum) -> Mat2:
        """[[1, n], [0, 1]], i.e. u**n."""
        return Mat2(ScalarSum.of(1), n, ScalarSum.of(0), ScalarSum.of(1))

    def inverse(self) -> Mat2:
        if self.det() != ScalarSum.of(1):
            raise ValueError("only determinant-one matrices are inverted")
        return Mat2(self.d, -self.b, -self.c, self.a)


@dataclass(frozen=True)
class DualPairSO4:
    """[x, y] in SL2 x SL2 modulo (-I, -I)."""
    first: Mat2
    second: Mat2

    def __post_init__(self):
        one = ScalarSum.of(1)
        if self.first.det() != one or self.second.det() != one:
            raise ValueError("entries of the pair must have determinant 1")

    def __mul__(self, o: DualPairSO4) -> DualPairSO4:
        return DualPairSO4(self.first * o.first, self.second * o.second)

    def inverse(self) -> DualPairSO4:
        return DualPairSO4(self.first.inverse(), self.second.inverse())

    def __eq__(self, other):
        if not isinstance(other, DualPairSO4):
            return NotImplemented
        return ((self.first, self.second) == (other.first, other.second)
                or (self.first, self.second) == (-other.first, -other.second))

    def __hash__(self):
        return 0


def dual_torus_point(tau1: SymbolicScalar, tau2: SymbolicScalar) -> TorusPoint:
    """[s_tau1, s_tau2] in the coordinates where W^s acts by a and babab."""
    return point(tau1 * tau2, tau1 / tau2)


def _factor_components(tau: SymbolicScalar, unipotent: bool, sign: int):
    """Components of {g in SL2 : g s_tau g^-1 = sign*s_tau, g u g^-1 = u},
    with the permutation induced by multiplying with -I."""
    central = (tau ** 2).is_one()
    if sign == 1:
        if unipotent:
            # {+-I} or {+-I} x (upper unipotent): two components swapped by -I
            return ["+", "-"], {"+": "-", "-": "+"}
        return ["conn"], {"conn": "conn"}  # torus or all of SL2: connected
    anti = (tau ** 2) == minus_one
    if anti and not unipotent and not central:
        return ["w"], {"w": "w"}  # the coset w*T
    return [], {}


def component_group_order(taus: tuple[SymbolicScalar, SymbolicScalar],
                          unipotents: tuple[bool, bool]) -> int:
    """|pi_0 Z(S, U)| for S = [s_tau1, s_tau2], U = [u or I, u or I] in
    SL2 x SL2 / <(-I,-I)>.  Components of the preimage are products of factor
    components for a common sign; (-I,-I) permutes them and the component
    group of the quotient is the set of orbits."""
    comps = []
    for sign in (1, -1):
        (c1, n1), (c2, n2) = (_factor_components(t, u, sign) for t, u in zip(taus, unipotents))
        comps += [((sign, x, y), (sign, n1[x], n2[y])) for x in c1 for y in c2]
    neg = dict(comps)
    seen, orbits = set(), 0
    for c, _ in comps:
        if c not in seen:
            orbits += 1
            seen.update({c, neg[c]})
    return orbits


def so4_dual_check() -> list[dict]:
    s_Q = Mat2.diag(Q)
    u = Mat2.unipotent(ScalarSum.of(1))
    S = DualPairSO4(s_Q, s_Q)
    U = DualPairSO4(u, u)
    Uq = DualPairSO4(Mat2.unipotent(ScalarSum.of(q)), Mat2.unipotent(ScalarSum.of(q)))
    conj = S * U * S.inverse()
    i = root_of_unity(1, 4)
    tau, tau2 = var("tau"), var("tau'")
    rows = [{
        "check": "S U S^-1 = U^q",
        "expected": True,
        "observed": conj == Uq,
        "detail": conj.first.b.text(),
    }]
    cases = [
        ("Case 1: ([s_Q,s_Q],[u,u])", (Q, Q), (True, True), 2),
        ("Case 1: ([s_Q,s_-Q],[u,u])", (Q, minus_one * Q), (True, True), 2),
        ("Case 2: ([s_Q,s_tau],[u,I])", (Q, tau), (True, False), 2),
        ("Case 3: ([s_tau,s_Q],[I,u])", (tau, Q), (False, True), 2),
        ("Case 4: ([s_tau,s_tau'],[I,I]) generic", (tau, tau2), (False, False), 1),
        ("Case 4: ([s_i,s_i],[I,I])", (i, i), (False, False), 2),
    ]
    for name, taus, unis, expected in cases:
        observed = component_group_order(taus, unis)
        rows.append({"check": name, "expected": expected, "observed": observed})
    for row in rows:
        row["pass"] = row["expected"] == row["observed"]
    return rows
