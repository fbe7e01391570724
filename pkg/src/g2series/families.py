"""Reducibility of principal series, constituent counts, reducibility curves
and the flat families X_tau."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .inertial import Case, DEFAULT_MODULUS, apply_to_ram, canonical_ram, stabilizer_subgroup
from .roots import coroot_table
from .scalars import ONE, Q, SymbolicScalar, j, minus_one, nu, var
from .torus import TorusPoint, orbit_rep, point, same_orbit
from .weyl import WeylElement, act, g2_weyl_group

__all__ = [
    "TWELVE_CONDITIONS",
    "PrincipalSeriesPoint",
    "is_reducible",
    "is_reducible_by_roots",
    "keys_reducible",
    "CountResult",
    "constituent_count",
    "count_with_source",
    "Binomial",
    "ExtraPoint",
    "FlatFamily",
    "flat_family",
    "family_member",
    "PRINTED_GL2_CHI_ONE_FACTOR",
    "PRINTED_SL3_EXTRA",
    "ReducibilityCurve",
    "reducibility_curves",
    "special_points",
    "curve_intersection",
    "solve_monomial",
]

# (label, exponents of x and y): psi1chi1 ** c1 * psi2chi2 ** c2 = nu ** +-1
TWELVE_CONDITIONS = (
    ("x", (1, 0)),
    ("y", (0, 1)),
    ("x^2y", (2, 1)),
    ("xy", (1, 1)),
    ("xy^2", (1, 2)),
    ("x/y", (1, -1)),
)

_NU_POWERS = (nu, nu.inverse())


@dataclass(frozen=True)
class PrincipalSeriesPoint:
    """psi1chi1 (x) psi2chi2: ramified parts in Z/N, unramified values as a point."""
    ram: tuple[int, int]
    unram: TorusPoint
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        object.__setattr__(self, "ram", tuple(r % self.modulus for r in self.ram))

    def translate(self, w: WeylElement) -> PrincipalSeriesPoint:
        return PrincipalSeriesPoint(apply_to_ram(w, self.ram, self.modulus),
                                    act(w, self.unram), self.modulus)


def _monomial(p: TorusPoint, c: Sequence[int]) -> SymbolicScalar:
    x, y = p.coords
    return x ** c[0] * y ** c[1]


def _holds(p: PrincipalSeriesPoint, c: Sequence[int]) -> bool:
    if (c[0] * p.ram[0] + c[1] * p.ram[1]) % p.modulus:
        return False
    return _monomial(p.unram, c) in _NU_POWERS


def keys_reducible(p: PrincipalSeriesPoint) -> bool:
    """Unitary case: two distinct characters of order 2."""
    chars = []
    for r, u in zip(p.ram, p.unram.coords):
        if (2 * r) % p.modulus or not u.is_torsion() or u.torsion.denominator > 2:
            return False
        chars.append((r, u))
    return chars[0] != chars[1]


def is_reducible(p: PrincipalSeriesPoint) -> bool:
    """One of the twelve nonunitary identities holds, or the Keys criterion."""
    return any(_holds(p, c) for _, c in TWELVE_CONDITIONS) or keys_reducible(p)


def is_reducible_by_roots(p: PrincipalSeriesPoint) -> bool:
    """Some coroot composed with the character equals nu or nu^-1."""
    return any(_holds(p, c) for c in coroot_table().values()) or keys_reducible(p)


# --- constituent counts ------------------------------------------------------

@dataclass(frozen=True)
class CountResult:
    value: int
    source: str


def _ram_order(r: int, modulus: int) -> int:
    from math import gcd
    return modulus // gcd(r, modulus)


def _in_length_four_set(u1: SymbolicScalar, k: int) -> bool:
    """u1 = q^(1/2) * psi(w) * chi(w) with psi in nu^(+-1/2) mu_k, chi(w) in mu_k."""
    return (u1.is_constant() and u1.q_half_exp in (0, 2)
            and k % u1.torsion.denominator == 0)


def _length_four(p: PrincipalSeriesPoint) -> bool:
    for w in g2_weyl_group():
        t = p.translate(w)
        (r1, r2), (u1, u2) = t.ram, t.unram.coords
        if r1 == r2 and r1 and _ram_order(r1, p.modulus) in (2, 3):
            k = _ram_order(r1, p.modulus)
            if u2 == u1 * nu and _in_length_four_set(u1, k):
                return True
        if r2 == 0 and r1 and _ram_order(r1, p.modulus) == 2:
            if u2 == nu and _in_length_four_set(u1, 2):
                return True
    return False


# Iwahori data: the list of reducibility points with their counts.
_F = var("f")  # stands for q^(2/3), which has no integer power of Q


def special_points(case: Case | str) -> list[tuple[str, TorusPoint]]:
    case = Case(case)
    z = var("z")
    if case == Case.IWAHORI:
        return [
            ("t_a", point(nu, nu ** 2)),
            ("t_b", point(z, nu * z)),
            ("t_c", point(j, nu * j)),
            ("t_d", point(minus_one, nu)),
            ("t_e", point(ONE, nu)),
            ("t_f", point(_F, nu * _F)),
            ("t_g", point(Q, Q.inverse())),
            ("t_h", point(nu, z)),
            ("t_i", point(nu, nu)),
            ("t_j", point(nu, Q)),
        ]
    if case == Case.SL3:
        return [
            ("y_a", point(ONE, nu)),
            ("y_a'", point(j, nu * j)),
            ("y_a''", point(j ** 2, nu * j ** 2)),
            ("y_b", point(z, nu * z)),
        ]
    if case == Case.SO4:
        return [
            ("z_a", point(ONE, nu)),
            ("z_b", point(z.inverse() * Q.inverse(), z * Q.inverse())),
            ("z_c", point(minus_one, minus_one * nu)),
            ("z_d", point(z * Q, z * Q.inverse())),
            ("z_*", point(minus_one, ONE)),
        ]
    if case == Case.GL2_CHI_ONE:
        return [("c_1(z)", point(z, nu))]
    if case == Case.GL2_CHI_CHI:
        return [("c(z)", point(z * Q, z * Q.inverse()))]
    raise ValueError(f"no special points for {case}")


_IWAHORI_COUNTS = {"t_e": 5, "t_a": 4, "t_c": 4, "t_d": 4,
                   "t_b": 2, "t_f": 2, "t_g": 2, "t_h": 2, "t_i": 2, "t_j": 2}


def count_with_source(case: Case | str, y: TorusPoint,
                      modulus: int = DEFAULT_MODULUS) -> CountResult:
    """Number of inequivalent constituents of the principal series at y."""
    case = Case(case)
    if case == Case.TRIVIAL_WS:
        raise ValueError("trivial stabilizer: every principal series is irreducible")
    p = PrincipalSeriesPoint(canonical_ram(case, modulus), y, modulus)
    if case == Case.IWAHORI:
        W = list(g2_weyl_group())
        for tag, t in special_points(case):
            if t.variables() == y.variables() and same_orbit(W, y, t) is not None:
                return CountResult(_IWAHORI_COUNTS[tag], f"Iwahori table ({tag})")
        if not is_reducible(p):
            return CountResult(1, "irreducible" if not y.variables() else "generic: irreducible")
        return CountResult(2, "Iwahori table (point on one reducibility curve)")
    if not is_reducible(p):
        return CountResult(1, "irreducible" if not y.variables() else "generic: irreducible")
    if keys_reducible(p):
        return CountResult(2, "Keys unitary reducibility")
    if _length_four(p):
        return CountResult(4, "length-four rule for quadratic/cubic chi")
    return CountResult(2, "length-two rule")


def constituent_count(case: Case | str, y: TorusPoint,
                      modulus: int = DEFAULT_MODULUS) -> int:
    return count_with_source(case, y, modulus).value


# --- flat families -------------------------------------------------------------

@dataclass(frozen=True)
class Binomial:
    """coef * x^a1 y^b1 tau^e1 = x^a2 y^b2 tau^e2."""
    lhs: tuple[int, int, int]
    rhs: tuple[int, int, int]
    coef: SymbolicScalar = ONE

    def __post_init__(self):
        if self.lhs == self.rhs and self.coef == ONE:
            raise ValueError("degenerate binomial")

    def ratio(self, p: TorusPoint, tau: SymbolicScalar) -> SymbolicScalar:
        """lhs / rhs evaluated at p; the binomial holds iff this is 1."""
        x, y = p.coords
        (a1, b1, e1), (a2, b2, e2) = self.lhs, self.rhs
        return self.coef * x ** (a1 - a2) * y ** (b1 - b2) * tau ** (e1 - e2)

    def holds(self, p: TorusPoint, tau: SymbolicScalar) -> bool:
        return self.ratio(p, tau).is_one()

    def text(self) -> str:
        def mono(exps, coef=None):
            parts = [] if coef is None or coef == ONE else [coef.text()]
            for name, e in zip("xy", exps[:2]):
                if e:
                    parts.append(name if e == 1 else f"{name}^{e}")
            if exps[2]:
                parts.append(f"tau^{exps[2]}")
            return "*".join(parts) or "1"
        return f"{mono(self.lhs, self.coef)} = {mono(self.rhs)}"


@dataclass(frozen=True)
class ExtraPoint:
    """base * (tau^e1, tau^e2)."""
    base: TorusPoint
    tau_exps: tuple[int, int] = (0, 0)

    def at(self, tau: SymbolicScalar) -> TorusPoint:
        return TorusPoint(tuple(c * tau ** e for c, e in zip(self.base.coords, self.tau_exps)))

    def text(self) -> str:
        x, y = self.base.coords
        e1, e2 = self.tau_exps
        fx = x.text() + (f"*tau^{e1}" if e1 else "")
        fy = y.text() + (f"*tau^{e2}" if e2 else "")
        return f"({fx}, {fy})"


@dataclass(frozen=True)
class FlatFamily:
    case: Case
    factors: tuple[Binomial, ...]
    extra_points: tuple[ExtraPoint, ...] = ()

    def text(self) -> list[str]:
        return [f.text() for f in self.factors] + [p.text() for p in self.extra_points]


_X_EQ_T2Y = Binomial((1, 0, 0), (0, 1, 2))
_ONE_EQ_T2Y = Binomial((0, 0, 0), (0, 1, 2))
_ONE_EQ_T2XY = Binomial((0, 0, 0), (1, 1, 2))
PRINTED_GL2_CHI_ONE_FACTOR = Binomial((0, 0, 0), (0, 1, 1))  # 1 = tau*y as printed
PRINTED_SL3_EXTRA = (ExtraPoint(point(j, j ** 2), (0, -2)),
                     ExtraPoint(point(j ** 2, j), (0, -2)))


def flat_family(case: Case | str) -> FlatFamily:
    case = Case(case)
    if case == Case.IWAHORI:
        return FlatFamily(case, (_ONE_EQ_T2Y, _X_EQ_T2Y))
    if case == Case.GL2_CHI_ONE:
        # The printed 1 = tau*y meets the reducibility locus y = nu^(+-1)
        # nowhere at tau = q^(1/2); tau^2 is what the locus requires.
        return FlatFamily(case, (_ONE_EQ_T2Y,))
    if case == Case.GL2_CHI_CHI:
        return FlatFamily(case, (_X_EQ_T2Y,))
    if case == Case.SL3:
        # h(tau) applied to the points fixed by abab in these coordinates
        return FlatFamily(case, (_X_EQ_T2Y,),
                          (ExtraPoint(point(j, j), (0, -2)),
                           ExtraPoint(point(j ** 2, j ** 2), (0, -2))))
    if case == Case.SO4:
        return FlatFamily(case, (_X_EQ_T2Y, _ONE_EQ_T2XY),
                          (ExtraPoint(point(ONE, minus_one)),))
    raise ValueError(f"no flat family for {case}")


def family_member(fam: FlatFamily, tau: SymbolicScalar, orbit_rep_point: TorusPoint,
                  group: Sequence[WeylElement]) -> bool:
    extras = [e.at(tau) for e in fam.extra_points]
    for w in group:
        p = act(w, orbit_rep_point)
        if any(f.holds(p, tau) for f in fam.factors) or p in extras:
            return True
    return False


# --- reducibility curves ---------------------------------------------------------

@dataclass(frozen=True)
class ReducibilityCurve:
    name: str
    parametrization: TorusPoint  # monomial in the variable "z" and Q

    def at(self, value: SymbolicScalar) -> TorusPoint:
        return self.parametrization.substitute("z", value)


def reducibility_curves(case: Case | str) -> list[ReducibilityCurve]:
    case = Case(case)
    z = var("z")
    if case == Case.IWAHORI:
        return [ReducibilityCurve("c_2", point(z, nu * z)),
                ReducibilityCurve("c_3", point(z, nu))]
    if case == Case.GL2_CHI_ONE:
        return [ReducibilityCurve("c_1", point(z, nu))]
    if case == Case.GL2_CHI_CHI:
        return [ReducibilityCurve("c", point(z * Q, z * Q.inverse()))]
    if case == Case.SL3:
        return [ReducibilityCurve("c", point(z, nu * z))]
    if case == Case.SO4:
        return [ReducibilityCurve("c_1", point(z * Q, z * Q.inverse())),
                ReducibilityCurve("c_1'", point(z.inverse() * Q.inverse(), z * Q.inverse()))]
    raise ValueError(f"no reducibility curves for {case}")


def solve_monomial(expr: SymbolicScalar, name: str) -> list[SymbolicScalar] | None:
    """Solutions of expr == 1 in the variable `name`.

    Returns None when expr does not involve the variable and is identically 1
    (every value is a solution).  Raises ValueError when a root has no
    representative in the scalar group."""
    k = expr.var_exps.get(name, 0)
    rest = SymbolicScalar(expr.torsion, expr.q_half_exp,
                          {v: e for v, e in expr.var_exps.items() if v != name})
    if k == 0:
        return None if rest.is_one() else []
    if not rest.is_constant():
        return []
    roots = rest.inverse().root(k)
    if not roots:
        raise ValueError(f"{name}^{k} = {rest.inverse().text()} has no solution with "
                         "integer powers of q^(1/2)")
    return roots


def curve_intersection(case: Case | str, first: ReducibilityCurve,
                       equation: Binomial, tau: SymbolicScalar = Q) -> list[TorusPoint]:
    """Points of `first` (as orbit representatives) at which some translate
    satisfies `equation` at tau."""
    case = Case(case)
    group = stabilizer_subgroup(canonical_ram(case))
    found: list[TorusPoint] = []
    for w in group:
        p = act(w, first.parametrization)
        sols = solve_monomial(equation.ratio(p, tau), "z")
        if sols is None:
            raise ValueError("the curves share a component")
        for s in sols:
            rep = orbit_rep(group, first.at(s))
            if rep not in found:
                found.append(rep)
    return sorted(found, key=TorusPoint.sort_key)
