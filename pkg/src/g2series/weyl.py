"""Finite groups of integer matrices acting monomially on torus coordinates.

An element w with matrix A acts by (w.t)_i = prod_j t_j ** A[i][j].  Words
are read as matrix products, so in the word "ab" the letter b acts first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "WeylElement",
    "FiniteGroup",
    "ConjClass",
    "generate",
    "conjugacy_classes",
    "centralizer",
    "act",
    "g2_weyl_group",
    "G2_GENERATORS",
]

Matrix = tuple[tuple[int, ...], ...]


def _as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _det(m: Matrix) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        minor = tuple(row[:c] + row[c + 1:] for row in m[1:])
        total += (-1) ** c * m[0][c] * _det(minor)
    return total


@dataclass(frozen=True)
class WeylElement:
    word: str
    matrix: Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", _as_matrix(self.matrix))
        if abs(_det(self.matrix)) != 1:
            raise ValueError(f"matrix {self.matrix} is not unimodular")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def name(self) -> str:
        return self.word or "e"

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(self.word + other.word, _matmul(self.matrix, other.matrix))

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.rank)

    def same(self, other: WeylElement) -> bool:
        return self.matrix == other.matrix

    def __str__(self):
        return self.name


@dataclass
class ConjClass:
    representative: WeylElement
    members: list[int]
    centralizer: list[int]


@dataclass
class FiniteGroup:
    elements: list[WeylElement]
    generators: dict[str, Matrix]
    table: list[list[int]] = field(repr=False)
    _index: dict[Matrix, int] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def index(self, w: WeylElement | Matrix) -> int:
        m = w.matrix if isinstance(w, WeylElement) else _as_matrix(w)
        return self._index[m]

    def __contains__(self, w: WeylElement) -> bool:
        return w.matrix in self._index

    def canonical(self, w: WeylElement) -> WeylElement:
        """The stored element (shortest word) with the same matrix as w."""
        return self.elements[self.index(w)]

    def element(self, word: str) -> WeylElement:
        """Evaluate a word such as "bab"; "e" or "" is the identity."""
        m = self.elements[0].matrix
        for letter in word.replace("e", ""):
            m = _matmul(m, self.generators[letter])
        return self.elements[self._index[m]]

    def identity(self) -> WeylElement:
        return self.elements[0]

    def inverse(self, w: WeylElement) -> WeylElement:
        i = self.index(w)
        for k, row in enumerate(self.table[i]):
            if row == 0:
                return self.elements[k]
        raise AssertionError("inverse missing")

    def multiply(self, x: WeylElement, y: WeylElement) -> WeylElement:
        return self.elements[self.table[self.index(x)][self.index(y)]]

    def order_of(self, w: WeylElement) -> int:
        k, m = 1, w.matrix
        ident = self.elements[0].matrix
        while m != ident:
            m = _matmul(m, w.matrix)
            k += 1
        return k

    def is_subgroup(self, subset: Sequence[WeylElement]) -> bool:
        mats = {w.matrix for w in subset}
        if self.elements[0].matrix not in mats:
            return False
        return all(_matmul(x, y) in mats for x in mats for y in mats)

    def dump(self) -> str:
        """One element per line: word, then matrix rows."""
        lines = []
        for w in self.elements:
            rows = ";".join(",".join(str(x) for x in row) for row in w.matrix)
            lines.append(f"{w.name} [{rows}]")
        return "\n".join(lines)


def generate(generators: Sequence[tuple[str, Sequence[Sequence[int]]]],
             cap: int = 10000) -> FiniteGroup:
    """Enumerate the group generated by named unimodular matrices.

    Breadth-first search with generators in name order, so each element is
    stored under its lexicographically smallest shortest word.
    """
    gens = sorted((name, _as_matrix(m)) for name, m in generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0][1])
    for name, m in gens:
        if len(name) != 1 or name == "e":
            raise ValueError(f"generator names are single letters other than 'e': {name!r}")
        if abs(_det(m)) != 1:
            raise ValueError(f"generator {name} is not unimodular")
    ident = _identity(n)
    index = {ident: 0}
    elements = [WeylElement("", ident)]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        w = elements[i]
        for name, m in gens:
            prod = _matmul(w.matrix, m)
            if prod not in index:
                if len(elements) >= cap:
                    raise RuntimeError(f"group exceeds {cap} elements; generators "
                                       "of infinite order or mis-entered")
                index[prod] = len(elements)
                elements.append(WeylElement(w.word + name, prod))
                queue.append(index[prod])
    table = [[index[_matmul(x.matrix, y.matrix)] for y in elements] for x in elements]
    return FiniteGroup(elements, dict(gens), table, index)


def _word_key(w: WeylElement):
    return (len(w.word), w.word)


def centralizer(g: FiniteGroup, w: WeylElement) -> list[WeylElement]:
    i = g.index(w)
    return [x for k, x in enumerate(g.elements) if g.table[k][i] == g.table[i][k]]


def conjugacy_classes(g: FiniteGroup,
                      subset: Sequence[WeylElement] | None = None) -> list[ConjClass]:
    """Conjugacy classes of g, or of the subgroup `subset` of g.

    Member and centralizer indices refer to positions in g.elements.
    Classes are sorted by representative (shortest word, then lexicographic).
    """
    pool = [g.index(x) for x in (subset if subset is not None else g.elements)]
    inv = {k: g.index(g.inverse(g.elements[k])) for k in pool}
    seen: set[int] = set()
    classes = []
    for k in pool:
        if k in seen:
            continue
        members = sorted({g.table[g.table[x][k]][inv[x]] for x in pool})
        seen.update(members)
        rep = min((g.elements[m] for m in members), key=_word_key)
        r = g.index(rep)
        cent = [x for x in pool if g.table[x][r] == g.table[r][x]]
        classes.append(ConjClass(rep, members, cent))
    classes.sort(key=lambda c: _word_key(c.representative))
    return classes


def act(w: WeylElement, t):
    """Monomial action on a TorusPoint."""
    from .torus import TorusPoint

    coords = []
    for row in w.matrix:
        value = None
        for c, e in zip(t.coords, row):
            term = c ** e
            value = term if value is None else value * term
        coords.append(value)
    return TorusPoint(tuple(coords))


# a = s_alpha, b = s_beta acting on characters chi1 (x) chi2
G2_GENERATORS = (("a", ((0, 1), (1, 0))), ("b", ((1, 1), (0, -1))))


@lru_cache(maxsize=None)
def g2_weyl_group() -> FiniteGroup:
    return generate(G2_GENERATORS)
