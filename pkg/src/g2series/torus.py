"""Points of the rank-2 complex torus, fixed-point loci of Weyl elements and
Weyl orbits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .scalars import ONE, SymbolicScalar, root_of_unity, var
from .weyl import WeylElement, act

__all__ = [
    "TorusPoint",
    "point",
    "SnfResult",
    "snf",
    "Branch",
    "FixedLocus",
    "fixed_locus",
    "orbit",
    "same_orbit",
    "orbit_rep",
]


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple[SymbolicScalar, ...]

    def __mul__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(tuple(a * b for a, b in zip(self.coords, other.coords)))

    def inverse(self) -> TorusPoint:
        return TorusPoint(tuple(c.inverse() for c in self.coords))

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.coords:
            out |= c.variables()
        return frozenset(out)

    def substitute(self, name: str, value: SymbolicScalar) -> TorusPoint:
        from .scalars import substitute
        return TorusPoint(tuple(substitute(c, name, value) for c in self.coords))

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def text(self) -> str:
        return "(" + ", ".join(c.text() for c in self.coords) + ")"

    def __str__(self):
        return self.text()


def point(*coords: SymbolicScalar) -> TorusPoint:
    return TorusPoint(tuple(coords))


# --- Smith normal form -----------------------------------------------------

@dataclass
class SnfResult:
    U: list[list[int]]
    D: list[list[int]]
    V: list[list[int]]

    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0))]


def _eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _mm(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def snf(M: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form U*M*V = D with U, V unimodular, D >= 0 diagonal and
    d1 | d2 | ..."""
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = _eye(m), _eye(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(i, k):
        for row in A:
            row[i], row[k] = row[k], row[i]
        for row in V:
            row[i], row[k] = row[k], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // A[t][t]))
                    if A[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // A[t][t]))
                    if A[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # divisibility: pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return SnfResult(U, A, V)


# --- fixed loci ------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    """{ base * (s_1^g_1 * s_2^g_2 ...) } with one free parameter per generator."""
    base: TorusPoint
    gens: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.gens)

    def at(self, params: Sequence[SymbolicScalar]) -> TorusPoint:
        coords = list(self.base.coords)
        for s, g in zip(params, self.gens):
            coords = [c * s ** e for c, e in zip(coords, g)]
        return TorusPoint(tuple(coords))

    def generic(self, names: Sequence[str] | None = None) -> TorusPoint:
        names = names or [f"s{i + 1}" for i in range(self.dim)]
        return self.at([var(n) for n in names])

    def text(self) -> str:
        if not self.gens:
            return self.base.text()
        gens = " ".join("(" + ",".join(map(str, g)) + ")" for g in self.gens)
        return f"{self.base.text()} ; {gens}"


@dataclass(frozen=True)
class FixedLocus:
    branches: tuple[Branch, ...]

    def __iter__(self):
        return iter(self.branches)

    def __len__(self):
        return len(self.branches)

    def text(self) -> str:
        return "\n".join(b.text() for b in self.branches)


def _normalize_gen(g: Sequence[int]) -> tuple[int, ...]:
    g = tuple(g)
    first = next((x for x in g if x), 0)
    return tuple(-x for x in g) if first < 0 else g


def fixed_locus(w: WeylElement) -> FixedLocus:
    """Solve w.t = t: prod_j t_j^((A-I)_ij) = 1 via the Smith form of A - I."""
    n = w.rank
    M = [[w.matrix[i][k] - int(i == k) for k in range(n)] for i in range(n)]
    res = snf(M)
    d = res.diagonal()
    V = res.V
    free = [i for i in range(n) if i >= len(d) or d[i] == 0]
    tors = [i for i in range(n) if i < len(d) and d[i] > 0]
    gens = tuple(_normalize_gen([V[row][i] for row in range(n)]) for i in free)
    if len(gens) == n:
        gens = tuple(tuple(int(i == k) for k in range(n)) for i in range(n))
    branches = []
    seen = set()
    for ks in product(*[range(d[i]) for i in tors]):
        coords = [ONE] * n
        for k, i in zip(ks, tors):
            zeta = root_of_unity(k, d[i]) if k else ONE
            coords = [c * zeta ** V[row][i] for row, c in enumerate(coords)]
        base = _reduce_base(TorusPoint(tuple(coords)), gens)
        if base not in seen:
            seen.add(base)
            branches.append(Branch(base, gens))
    branches.sort(key=lambda b: b.base.sort_key())
    return FixedLocus(tuple(branches))


def _reduce_base(base: TorusPoint, gens) -> TorusPoint:
    """Pick a deterministic base point of the coset base * <gens>.

    With one generator having a coordinate +-1, shift so that coordinate is 1.
    """
    if len(gens) != 1:
        return base
    g = gens[0]
    for idx, e in enumerate(g):
        if abs(e) == 1:
            c = base.coords[idx]
            shift = c ** (-e)
            return TorusPoint(tuple(x * shift ** ge for x, ge in zip(base.coords, g)))
    return base


# --- orbits ----------------------------------------------------------------

def orbit(sub: Iterable[WeylElement], t: TorusPoint) -> list[TorusPoint]:
    """Distinct images of t, sorted deterministically."""
    return sorted({act(w, t) for w in sub}, key=TorusPoint.sort_key)


def orbit_rep(sub: Iterable[WeylElement], t: TorusPoint) -> TorusPoint:
    return orbit(sub, t)[0]


def same_orbit(sub: Iterable[WeylElement], t: TorusPoint,
               t2: TorusPoint) -> WeylElement | None:
    """A witness w with w.t == t2 (shortest word first), or None."""
    for w in sorted(sub, key=lambda x: (len(x.word), x.word)):
        if act(w, t) == t2:
            return w
    return None
