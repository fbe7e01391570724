"""Smooth characters of the torus, the stabilizer W^s of an inertial class and
the case split of the principal series."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .roots import POSITIVE_ROOTS, coroot_form, reflection_matrix
from .scalars import ONE, SymbolicScalar
from .weyl import WeylElement, g2_weyl_group

__all__ = [
    "Case",
    "CASES",
    "SmoothCharacter",
    "InertialPoint",
    "apply_to_ram",
    "stabilizer_subgroup",
    "reflection_subgroup",
    "classify_case",
    "orbit_size",
    "canonical_ram",
    "inertial_point",
]

DEFAULT_MODULUS = 12


class Case(str, Enum):
    IWAHORI = "iwahori"
    GL2_CHI_ONE = "gl2-chi1"
    GL2_CHI_CHI = "gl2-chichi"
    SL3 = "sl3"
    SO4 = "so4"
    TRIVIAL_WS = "trivial"

    def __str__(self):
        return self.value


CASES = (Case.IWAHORI, Case.GL2_CHI_ONE, Case.GL2_CHI_CHI, Case.SL3, Case.SO4)


@dataclass(frozen=True)
class SmoothCharacter:
    """Restriction to units (an element of Z/N) plus the value at a uniformizer."""
    ram: int
    unram: SymbolicScalar = ONE
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "ram", self.ram % self.modulus)

    def ram_order(self) -> int:
        return self.modulus // gcd(self.ram, self.modulus)


def apply_to_ram(w: WeylElement, ram: tuple[int, int], modulus: int) -> tuple[int, int]:
    return tuple(sum(a * r for a, r in zip(row, ram)) % modulus for row in w.matrix)


def stabilizer_subgroup(sigma0: tuple[int, int],
                        modulus: int = DEFAULT_MODULUS) -> list[WeylElement]:
    ram = tuple(r % modulus for r in sigma0)
    return [w for w in g2_weyl_group() if apply_to_ram(w, ram, modulus) == ram]


def reflection_subgroup(sigma0: tuple[int, int],
                        modulus: int = DEFAULT_MODULUS) -> list[WeylElement]:
    """Group generated by the s_gamma whose coroot kills sigma0."""
    G = g2_weyl_group()
    gens = []
    for root in POSITIVE_ROOTS.values():
        c = coroot_form(root)
        if (c[0] * sigma0[0] + c[1] * sigma0[1]) % modulus == 0:
            gens.append(G.index(reflection_matrix(root)))
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return [G.elements[i] for i in sorted(members)]


def _order(r: int, modulus: int) -> int:
    return modulus // gcd(r % modulus, modulus)


def classify_case(sigma0: tuple[int, int], modulus: int = DEFAULT_MODULUS) -> Case:
    orbit = {apply_to_ram(w, sigma0, modulus) for w in g2_weyl_group()}
    if (0, 0) in orbit:
        return Case.IWAHORI
    for r1, r2 in sorted(orbit):
        if r1 == r2:
            k = _order(r1, modulus)
            return {2: Case.SO4, 3: Case.SL3}.get(k, Case.GL2_CHI_CHI)
    for r1, r2 in sorted(orbit):
        if r2 == 0 and _order(r1, modulus) != 2:
            return Case.GL2_CHI_ONE
    return Case.TRIVIAL_WS


def orbit_size(pattern: str, order_of_chi: int, modulus: int = DEFAULT_MODULUS) -> int:
    """Size of the W-orbit of chi x chi ("chi_chi") or chi x 1 ("chi_one")."""
    if order_of_chi < 1 or modulus % order_of_chi:
        raise ValueError(f"order {order_of_chi} does not divide the modulus {modulus}")
    r = modulus // order_of_chi % modulus
    if pattern == "chi_chi":
        ram = (r, r)
    elif pattern == "chi_one":
        ram = (r, 0)
    else:
        raise ValueError(f"unknown pattern {pattern!r}")
    return len({apply_to_ram(w, ram, modulus) for w in g2_weyl_group()})


def canonical_ram(case: Case | str, modulus: int = DEFAULT_MODULUS) -> tuple[int, int]:
    """A representative ramified pair for each case."""
    case = Case(case)
    if case == Case.IWAHORI:
        return (0, 0)
    if case == Case.SO4:
        if modulus % 2:
            raise ValueError("quadratic characters need an even modulus")
        return (modulus // 2, modulus // 2)
    if case == Case.SL3:
        if modulus % 3:
            raise ValueError("cubic characters need a modulus divisible by 3")
        return (modulus // 3, modulus // 3)
    if modulus in (1, 2, 3, 6) or modulus < 4:
        raise ValueError(f"modulus {modulus} has no character of order outside 1,2,3")
    if case == Case.GL2_CHI_CHI:
        return (1, 1)
    if case == Case.GL2_CHI_ONE:
        return (1, 0)
    raise ValueError("the trivial-stabilizer case has no canonical representative")


@dataclass(frozen=True)
class InertialPoint:
    ram_pair: tuple[int, int]
    case_tag: Case
    modulus: int = DEFAULT_MODULUS

    def __post_init__(self):
        if classify_case(self.ram_pair, self.modulus) != self.case_tag:
            raise ValueError(f"{self.ram_pair} is not of case {self.case_tag}")

    def stabilizer(self) -> list[WeylElement]:
        return stabilizer_subgroup(self.ram_pair, self.modulus)


def inertial_point(case: Case | str, modulus: int = DEFAULT_MODULUS) -> InertialPoint:
    case = Case(case)
    return InertialPoint(canonical_ram(case, modulus), case, modulus)
