"""Extended quotients T//W^s as lists of components carrying two-sided cell
labels and compact forms."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .inertial import Case, canonical_ram, stabilizer_subgroup
from .scalars import ONE, j, minus_one
from .torus import Branch, TorusPoint, fixed_locus, orbit, point, same_orbit
from .weyl import WeylElement, act, conjugacy_classes, g2_weyl_group

__all__ = [
    "CompactForm",
    "CELLS",
    "LOWEST_CELL",
    "ExtQuotComponent",
    "extended_quotient",
    "compact_form_report",
    "cell_of_point",
    "find_component",
    "component_by_tag",
]


class CompactForm(str, Enum):
    ISOLATED_POINT = "IsolatedPoint"
    UNIT_INTERVAL = "UnitInterval"
    CIRCLE = "Circle"
    COMPACT_QUOTIENT = "CompactQuotient"

    def __str__(self):
        return self.value


CELLS = {
    Case.IWAHORI: ("c_e", "c_1", "c_2", "c_3", "c_0"),
    Case.GL2_CHI_ONE: ("b_e", "b_0"),
    Case.GL2_CHI_CHI: ("b_e", "b_0"),
    Case.SL3: ("d_e", "d_1", "d_0"),
    Case.SO4: ("e_e", "e_1", "e_1'", "e_0"),
}
LOWEST_CELL = {case: cells[-1] for case, cells in CELLS.items()}


@dataclass(frozen=True)
class ExtQuotComponent:
    case: Case
    tag: str
    cell: str
    class_rep: WeylElement
    branch: Branch  # canonical section of the centralizer action
    centralizer: tuple[WeylElement, ...]
    compact_form: CompactForm

    @property
    def dim(self) -> int:
        return self.branch.dim

    def generic_point(self) -> TorusPoint:
        return self.branch.generic()

    def as_dict(self) -> dict:
        return {
            "case": self.case.value,
            "tag": self.tag,
            "cell": self.cell,
            "class_rep_word": self.class_rep.name,
            "locus": self.branch.text(),
            "dim": self.dim,
            "compact_form": self.compact_form.value,
        }


# Isolated points are named after the irreducible representations they are
# matched with: pt_1, pt_4 over t_e, pt_2 over t_d, pt_3 over t_c.
_IWAHORI_POINTS = {
    ("ab", point(ONE, ONE)): ("c_e", "pt_*"),
    ("ababab", point(ONE, ONE)): ("c_1", "pt_1"),
    ("ababab", point(minus_one, ONE)): ("c_1", "pt_2"),
    ("abab", point(j, j)): ("c_1", "pt_3"),
    ("abab", point(ONE, ONE)): ("c_1", "pt_4"),
}
_SL3_POINTS = {
    ("abab", point(ONE, ONE)): ("d_e", "pt_1"),
    ("abab", point(j, j)): ("d_e", "pt_2"),
    ("abab", point(j ** 2, j ** 2)): ("d_e", "pt_3"),
}
_SO4_POINTS = {
    ("ababab", point(ONE, ONE)): ("e_e", "pt_1"),
    ("ababab", point(minus_one, minus_one)): ("e_e", "pt_2"),
    ("ababab", point(ONE, minus_one)): ("e_0", "pt_*"),
}
_LINE_CELLS = {
    Case.IWAHORI: {"a": "c_2", "b": "c_3"},
    Case.GL2_CHI_ONE: {"b": "b_e"},
    Case.GL2_CHI_CHI: {"a": "b_e"},
    Case.SL3: {"a": "d_1"},
    Case.SO4: {"a": "e_1", "babab": "e_1'"},
}
_POINT_LABELS = {Case.IWAHORI: _IWAHORI_POINTS, Case.SL3: _SL3_POINTS, Case.SO4: _SO4_POINTS}


def _inverts(x: WeylElement, branch: Branch) -> bool:
    g = branch.gens[0]
    image = tuple(sum(a * e for a, e in zip(row, g)) for row in x.matrix)
    return image == tuple(-e for e in g)


@lru_cache(maxsize=None)
def extended_quotient(case: Case | str) -> tuple[ExtQuotComponent, ...]:
    case = Case(case)
    if case == Case.TRIVIAL_WS:
        raise ValueError("the trivial-stabilizer case has no extended-quotient data")
    G = g2_weyl_group()
    Ws = stabilizer_subgroup(canonical_ram(case))
    comps = []
    for cls in conjugacy_classes(G, Ws):
        c = cls.representative
        cent = tuple(G.elements[i] for i in cls.centralizer)
        locus = fixed_locus(c)
        if c.is_identity():
            comps.append(ExtQuotComponent(case, "surface", LOWEST_CELL[case], c,
                                          locus.branches[0], cent,
                                          CompactForm.COMPACT_QUOTIENT))
            continue
        seen: list[TorusPoint] = []
        for br in locus:
            if br.dim == 0:
                members = orbit(cent, br.base)
                if any(m in seen for m in members):
                    continue
                seen.extend(members)
                labels = _POINT_LABELS[case]
                rep = next(m for m in members if (c.word, m) in labels)
                cell, tag = labels[(c.word, rep)]
                comps.append(ExtQuotComponent(case, tag, cell, c, Branch(rep, ()), cent,
                                              CompactForm.ISOLATED_POINT))
            else:
                form = (CompactForm.UNIT_INTERVAL if any(_inverts(x, br) for x in cent)
                        else CompactForm.CIRCLE)
                comps.append(ExtQuotComponent(case, f"line_{c.word}",
                                              _LINE_CELLS[case][c.word], c, br, cent, form))
    order = {cell: k for k, cell in enumerate(CELLS[case])}
    comps.sort(key=lambda m: (order[m.cell], m.dim, m.tag))
    return tuple(comps)


def component_by_tag(case: Case | str, tag: str) -> ExtQuotComponent:
    for comp in extended_quotient(case):
        if comp.tag == tag:
            return comp
    raise KeyError(tag)


def compact_form_report(case: Case | str) -> list[dict]:
    return [{"tag": m.tag, "cell": m.cell, "dim": m.dim,
             "compact_form": m.compact_form.value} for m in extended_quotient(case)]


def _on_branch(p: TorusPoint, br: Branch) -> bool:
    if br.dim == 2:
        return True
    if br.dim == 0:
        return p == br.base
    g = br.gens[0]
    idx = next(i for i, e in enumerate(g) if abs(e) == 1)
    s = (p.coords[idx] / br.base.coords[idx]) ** g[idx]
    return br.at([s]) == p


def find_component(case: Case | str, ext_point: tuple[WeylElement, TorusPoint]):
    """The component through (w, t), and the point moved onto its section."""
    case = Case(case)
    G = g2_weyl_group()
    Ws = stabilizer_subgroup(canonical_ram(case))
    w, t = ext_point
    if act(w, t) != t:
        raise ValueError(f"{t} is not fixed by {w.name}")
    for comp in extended_quotient(case):
        for x in Ws:
            conj = G.multiply(G.multiply(x, w), G.inverse(x))
            if not conj.same(comp.class_rep):
                continue
            moved = act(x, t)
            if comp.dim == 0:
                if same_orbit(comp.centralizer, moved, comp.branch.base) is not None:
                    return comp, comp.branch.base
            elif _on_branch(moved, comp.branch):
                return comp, moved
    raise ValueError(f"({w.name}, {t}) lies on no component")


def cell_of_point(case: Case | str, ext_point: tuple[WeylElement, TorusPoint]) -> str:
    return find_component(case, ext_point)[0].cell
