"""The based ring of the lowest cell in the SO(4) case.

Elements of the SL2 representation ring R are finite sums of V(l).  The
lowest cell is realized inside M2(R) (x) M2(R) through the map w -> V_w,
and through characters inside the parity-graded algebra M4(C[X,Y])_0.  Everything is
exact: coefficients are ints or Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

__all__ = [
    "RepRingElement",
    "V",
    "cg_multiply",
    "character_polynomial",
    "from_character",
    "TensorBasisElement",
    "LowestCellElement",
    "table2_basis",
    "lowest_cell_element",
    "j_multiply",
    "UNIT_TERMS",
    "Poly",
    "GradedPolyMatrix",
    "tensor_to_graded",
    "truncated_basis",
    "evaluate",
    "span_rank",
    "epsilon",
    "sign_conjugate",
    "CrossedElement",
    "crossed_multiply",
    "crossed_identity_check",
    "crossed_product_full_ideal_check",
    "delta0",
    "unit_extension",
    "J_C1_SIMPLE_MODULE_DIMS",
]

# Simple modules of J for the subregular cell of the Iwahori case; stored,
# not computed.
J_C1_SIMPLE_MODULE_DIMS = (3, 3, 2, 1)


# --- representation ring -----------------------------------------------------

class RepRingElement:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for weight, c in (coeffs or {}).items():
            if weight < 0:
                raise ValueError("weights are non-negative")
            if c:
                clean[weight] = c
        self.coeffs = dict(sorted(clean.items()))

    def __add__(self, other: RepRingElement) -> RepRingElement:
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return RepRingElement(out)

    def __mul__(self, other: RepRingElement) -> RepRingElement:
        return cg_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, RepRingElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"V({w})" if c == 1 else f"{c}V({w})" for w, c in self.coeffs.items())


def V(weight: int) -> RepRingElement:
    return RepRingElement({weight: 1})


def cg_multiply(a: RepRingElement, b: RepRingElement) -> RepRingElement:
    """Clebsch-Gordan: V(m) V(n) = V(|m-n|) + V(|m-n|+2) + ... + V(m+n)."""
    out: dict[int, int] = {}
    for m, c in a.coeffs.items():
        for n, d in b.coeffs.items():
            for weight in range(abs(m - n), m + n + 1, 2):
                out[weight] = out.get(weight, 0) + c * d
    return RepRingElement(out)


def character_polynomial(weight: int) -> list[int]:
    """Coefficients (constant term first) of p_l with p_0 = 1, p_1 = X,
    p_l = X p_{l-1} - p_{l-2}."""
    prev, cur = [1], [0, 1]
    if weight == 0:
        return prev
    for _ in range(weight - 1):
        nxt = [0] + cur
        for k, c in enumerate(prev):
            nxt[k] -= c
        prev, cur = cur, nxt
    return cur


def from_character(coeffs: Sequence[int]) -> RepRingElement:
    """Expand a polynomial in X in the basis p_l (p_l is monic of degree l)."""
    rest = list(coeffs)
    out: dict[int, int] = {}
    while any(rest):
        top = max(k for k, c in enumerate(rest) if c)
        c = rest[top]
        out[top] = c
        for k, e in enumerate(character_polynomial(top)):
            rest[k] -= c * e
    return RepRingElement(out)


# --- the map w -> V_w ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class TensorBasisElement:
    """V_ij(m) (x) V_kl(n)."""
    i: int
    j: int
    k: int
    l: int
    m: int
    n: int

    def __post_init__(self):
        if not all(x in (1, 2) for x in (self.i, self.j, self.k, self.l)):
            raise ValueError("matrix indices are 1 or 2")
        if self.m < 0 or self.n < 0:
            raise ValueError("weights are non-negative")

    def is_even(self) -> bool:
        return (self.m + self.n + self.i + self.j + self.k + self.l) % 2 == 0

    def text(self) -> str:
        return f"V{self.i}{self.j}({self.m})⊗V{self.k}{self.l}({self.n})"


@dataclass(frozen=True, order=True)
class LowestCellElement:
    """(a^left x^m)(a'^right x'^n) with m + n even."""
    left_a: bool
    m: int
    right_a: bool
    n: int

    def __post_init__(self):
        if (self.m + self.n) % 2:
            raise ValueError("m + n must be even")
        for has_a, e in ((self.left_a, self.m), (self.right_a, self.n)):
            if has_a and e == -1:
                raise ValueError("a x^-1 is not in the lowest cell")
            if not has_a and e == 0:
                raise ValueError("x^0 without a is not in the lowest cell")

    def text(self) -> str:
        left = f"{'a' if self.left_a else ''}x^{self.m}"
        right = f"{'a′' if self.right_a else ''}x′^{self.n}"
        return f"({left})({right})"


def _factor(has_a: bool, e: int) -> tuple[int, int, int]:
    if has_a and e >= 0:
        return 1, 1, e
    if not has_a and e >= 1:
        return 2, 1, e - 1
    if has_a and e <= -2:
        return 2, 2, -e - 2
    if not has_a and e <= -1:
        return 1, 2, -e - 1
    raise ValueError(f"no V_w row for a={has_a}, exponent {e}")


def _unfactor(i: int, j: int, weight: int) -> tuple[bool, int]:
    return {(1, 1): (True, weight), (2, 1): (False, weight + 1),
            (2, 2): (True, -weight - 2), (1, 2): (False, -weight - 1)}[(i, j)]


def table2_basis(w: LowestCellElement) -> TensorBasisElement:
    i, j, m = _factor(w.left_a, w.m)
    k, l, n = _factor(w.right_a, w.n)
    return TensorBasisElement(i, j, k, l, m, n)


def lowest_cell_element(t: TensorBasisElement) -> LowestCellElement:
    left_a, m = _unfactor(t.i, t.j, t.m)
    right_a, n = _unfactor(t.k, t.l, t.n)
    return LowestCellElement(left_a, m, right_a, n)


UNIT_TERMS = tuple(LowestCellElement(la, m, ra, n)
                   for (la, m), (ra, n) in product([(True, 0), (True, -2)], repeat=2))


def _tensor_multiply(s: TensorBasisElement, t: TensorBasisElement) -> dict[TensorBasisElement, int]:
    if s.j != t.i or s.l != t.k:
        return {}
    out: dict[TensorBasisElement, int] = {}
    for m, c in cg_multiply(V(s.m), V(t.m)).coeffs.items():
        for n, d in cg_multiply(V(s.n), V(t.n)).coeffs.items():
            key = TensorBasisElement(s.i, t.j, s.k, t.l, m, n)
            out[key] = out.get(key, 0) + c * d
    return out


def j_multiply(w: LowestCellElement, w2: LowestCellElement) -> dict[LowestCellElement, int]:
    """Product in the based ring, as coefficients on the lowest-cell basis."""
    out: dict[LowestCellElement, int] = {}
    for t, c in _tensor_multiply(table2_basis(w), table2_basis(w2)).items():
        if c < 0:
            raise ValueError(f"negative structure constant at {t.text()}")
        out[lowest_cell_element(t)] = c
    return dict(sorted(out.items()))


# --- polynomials and 4x4 matrices ------------------------------------------------

class Poly:
    """Polynomial in X, Y: {(deg_X, deg_Y): coefficient}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int | Fraction] | None = None):
        self.terms = {k: c for k, c in sorted((terms or {}).items()) if c}

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> Poly:
        return cls({(a, b): c})

    @classmethod
    def in_x(cls, coeffs: Sequence[int]) -> Poly:
        return cls({(k, 0): c for k, c in enumerate(coeffs)})

    @classmethod
    def in_y(cls, coeffs: Sequence[int]) -> Poly:
        return cls({(0, k): c for k, c in enumerate(coeffs)})

    def __add__(self, o: Poly) -> Poly:
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return Poly(out)

    def __neg__(self) -> Poly:
        return Poly({k: -c for k, c in self.terms.items()})

    def __sub__(self, o: Poly) -> Poly:
        return self + (-o)

    def __mul__(self, o: Poly) -> Poly:
        out: dict[tuple[int, int], int | Fraction] = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in o.terms.items():
                out[(a + d, b + e)] = out.get((a + d, b + e), 0) + c * f
        return Poly(out)

    def scale(self, c) -> Poly:
        return Poly({k: c * v for k, v in self.terms.items()})

    def negate_variables(self) -> Poly:
        return Poly({(a, b): c * (-1) ** (a + b) for (a, b), c in self.terms.items()})

    def __call__(self, x, y):
        return sum((c * x ** a * y ** b for (a, b), c in self.terms.items()), 0)

    def parity(self) -> int | None:
        """0 or 1 if all monomials have that total-degree parity; None if mixed.
        The zero polynomial is of either parity and reports 0."""
        ps = {(a + b) % 2 for a, b in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def __eq__(self, o):
        return isinstance(o, Poly) and self.terms == o.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*X^{a}*Y^{b}" for (a, b), c in self.terms.items())


def _block(r: int) -> int:
    return 0 if r < 2 else 1


class GradedPolyMatrix:
    """4x4 matrix over C[X, Y]; rows and columns 0..3, blocks {0,1} and {2,3}."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[tuple[int, int], Poly] | None = None):
        self.entries = {k: p for k, p in sorted((entries or {}).items()) if not p.is_zero()}

    @classmethod
    def unit(cls, row: int, col: int, poly: Poly | None = None) -> GradedPolyMatrix:
        return cls({(row, col): poly if poly is not None else Poly.const(1)})

    @classmethod
    def diag(cls, polys: Sequence[Poly]) -> GradedPolyMatrix:
        return cls({(k, k): p for k, p in enumerate(polys)})

    @classmethod
    def identity(cls) -> GradedPolyMatrix:
        return cls.diag([Poly.const(1)] * 4)

    def __getitem__(self, key: tuple[int, int]) -> Poly:
        return self.entries.get(key, Poly())

    def __add__(self, o: GradedPolyMatrix) -> GradedPolyMatrix:
        keys = set(self.entries) | set(o.entries)
        return GradedPolyMatrix({k: self[k] + o[k] for k in keys})

    def __neg__(self) -> GradedPolyMatrix:
        return GradedPolyMatrix({k: -p for k, p in self.entries.items()})

    def __sub__(self, o: GradedPolyMatrix) -> GradedPolyMatrix:
        return self + (-o)

    def __mul__(self, o: GradedPolyMatrix) -> GradedPolyMatrix:
        out: dict[tuple[int, int], Poly] = {}
        for (r, k), p in self.entries.items():
            for (k2, c), p2 in o.entries.items():
                if k == k2:
                    out[(r, c)] = out.get((r, c), Poly()) + p * p2
        return GradedPolyMatrix(out)

    def scale(self, c) -> GradedPolyMatrix:
        return GradedPolyMatrix({k: p.scale(c) for k, p in self.entries.items()})

    def map(self, f) -> GradedPolyMatrix:
        return GradedPolyMatrix({k: f(k, p) for k, p in self.entries.items()})

    def parity(self) -> int | None:
        """0 for the even part (even diagonal blocks, odd off-diagonal blocks),
        1 for the odd part, None if neither."""
        seen = set()
        for (r, c), p in self.entries.items():
            pp = p.parity()
            if pp is None:
                return None
            seen.add((pp + _block(r) + _block(c)) % 2)
        if len(seen) > 1:
            return None
        return seen.pop() if seen else 0

    def at(self, x, y) -> list[list]:
        return [[self[(r, c)](x, y) for c in range(4)] for r in range(4)]

    def __eq__(self, o):
        return isinstance(o, GradedPolyMatrix) and self.entries == o.entries

    def __hash__(self):
        return hash(tuple(self.entries.items()))

    def __repr__(self):
        return f"GradedPolyMatrix({self.entries!r})"


# (i, k) -> 4x4 row, (j, l) -> 4x4 column; the order puts i == k first so that
# even tensors land in the even part.
_PAIR_INDEX = {(1, 1): 0, (2, 2): 1, (1, 2): 2, (2, 1): 3}


def tensor_to_graded(t: TensorBasisElement) -> GradedPolyMatrix:
    poly = Poly.in_x(character_polynomial(t.m)) * Poly.in_y(character_polynomial(t.n))
    return GradedPolyMatrix.unit(_PAIR_INDEX[(t.i, t.k)], _PAIR_INDEX[(t.j, t.l)], poly)


def truncated_basis(degree: int) -> list[TensorBasisElement]:
    """Even tensor basis elements with both weights at most `degree`."""
    out = []
    for i, j, k, l in product((1, 2), repeat=4):
        for m in range(degree + 1):
            for n in range(degree + 1):
                t = TensorBasisElement(i, j, k, l, m, n)
                if t.is_even():
                    out.append(t)
    return out


def span_rank(vectors: Iterable[Sequence]) -> int:
    """Rank over Q (or over whatever field the entries live in) by elimination."""
    pivots: list[tuple[int, list]] = []
    for vec in vectors:
        v = [Fraction(x) if isinstance(x, int) else x for x in vec]
        for col, row in pivots:
            if v[col]:
                f = v[col] / row[col]
                v = [a - f * b for a, b in zip(v, row)]
        lead = next((k for k, x in enumerate(v) if x), None)
        if lead is not None:
            pivots.append((lead, v))
    return len(pivots)


def evaluate(algebra_basis: Sequence[GradedPolyMatrix], z, z2) -> int:
    """Dimension of the span of the matrices ev_(z, z2)(M)."""
    return span_rank([x for row in M.at(z, z2) for x in row] for M in algebra_basis)


def sign_conjugate(M: GradedPolyMatrix) -> GradedPolyMatrix:
    """Conjugation by diag(I2, -I2): negate the off-diagonal blocks."""
    return M.map(lambda k, p: p if _block(k[0]) == _block(k[1]) else -p)


def epsilon(M: GradedPolyMatrix) -> GradedPolyMatrix:
    """(X, Y) -> (-X, -Y) followed by negating the off-diagonal blocks."""
    return sign_conjugate(M.map(lambda k, p: p.negate_variables()))


# --- crossed product by {1, epsilon} ----------------------------------------------

@dataclass(frozen=True)
class CrossedElement:
    """plain[1] + twisted[epsilon]."""
    plain: GradedPolyMatrix
    twisted: GradedPolyMatrix

    def __add__(self, o: CrossedElement) -> CrossedElement:
        return CrossedElement(self.plain + o.plain, self.twisted + o.twisted)

    def scale(self, c) -> CrossedElement:
        return CrossedElement(self.plain.scale(c), self.twisted.scale(c))

    def vector(self) -> dict:
        out = {}
        for tag, M in (("1", self.plain), ("eps", self.twisted)):
            for (r, c), p in M.entries.items():
                for mono, coef in p.terms.items():
                    out[(tag, r, c, mono)] = coef
        return out


def crossed_multiply(u: CrossedElement, v: CrossedElement, twisted_group: bool = True) -> CrossedElement:
    """(a[g])(b[h]) = a g(b) [gh]."""
    if not twisted_group:
        return CrossedElement(u.plain * v.plain, GradedPolyMatrix())
    plain = u.plain * v.plain + u.twisted * epsilon(v.twisted)
    twisted = u.plain * v.twisted + u.twisted * epsilon(v.plain)
    return CrossedElement(plain, twisted)


def _group_sum(twisted_group: bool) -> CrossedElement:
    one = GradedPolyMatrix.identity()
    return CrossedElement(one, one if twisted_group else GradedPolyMatrix())


def crossed_identity_check() -> bool:
    """E31[1] = (E31/2)([1]+[eps]) + ([1]+[eps])(E31/2)."""
    e31 = CrossedElement(GradedPolyMatrix.unit(2, 0), GradedPolyMatrix())
    half = e31.scale(Fraction(1, 2))
    s = _group_sum(True)
    return crossed_multiply(half, s) + crossed_multiply(s, half) == e31


def _monomials(degree: int) -> list[tuple[int, int]]:
    return [(a, d - a) for d in range(degree + 1) for a in range(d + 1)]


def _sparse_rank(vectors: Iterable[dict], target: int) -> int:
    pivots: dict = {}
    rank = 0
    for vec in vectors:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            lead = min(v)
            if lead not in pivots:
                pivots[lead] = v
                rank += 1
                break
            row = pivots[lead]
            f = v[lead] / row[lead]
            for k, c in row.items():
                nv = v.get(k, 0) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        if rank == target:
            break
    return rank


def crossed_product_full_ideal_check(degree: int, twisted_group: bool = True) -> bool:
    """Whether the two-sided ideal generated by the group sum is everything,
    inside the span of matrices with polynomial degree at most `degree`.

    Generators x . e . y use x = monomial * matrix unit * group element and
    y = constant matrix unit * group element, which keeps degrees bounded."""
    if degree < 1:
        raise ValueError("degree must be at least 1")
    e = _group_sum(twisted_group)
    tags = (True, False) if twisted_group else (True,)
    zero = GradedPolyMatrix()

    def units(monos):
        for r, c, mono, plain in product(range(4), range(4), monos, tags):
            M = GradedPolyMatrix.unit(r, c, Poly.monomial(*mono))
            yield CrossedElement(M, zero) if plain else CrossedElement(zero, M)

    xs = list(units(_monomials(degree)))
    ys = list(units([(0, 0)]))
    full = len(xs)
    gens = (crossed_multiply(crossed_multiply(x, e, twisted_group), y, twisted_group).vector()
            for x in xs for y in ys)
    return _sparse_rank(gens, full) == full


# --- delta_0 and the unit extension -------------------------------------------------

def delta0(P: Poly, z) -> GradedPolyMatrix:
    """(P, z) -> diag(P, 0, z, 0) for an even polynomial P."""
    if P.parity() != 0:
        raise ValueError("delta0 takes an even polynomial")
    return GradedPolyMatrix.diag([P, Poly(), Poly.const(z), Poly()])


def _upper_left_at_origin(M: GradedPolyMatrix) -> tuple:
    return tuple(M[(r, c)](0, 0) for r in range(2) for c in range(2))


def unit_extension(theta: GradedPolyMatrix, b: GradedPolyMatrix) -> tuple:
    """phi(theta * b), where phi is the upper-left block of ev_(0,0) on the
    ideal of matrices whose value at the origin lies in M2 + 0."""
    at0 = theta.at(0, 0)
    if any(at0[r][c] for r in range(4) for c in range(4) if r >= 2 or c >= 2):
        raise ValueError("theta is not in the ideal")
    if _upper_left_at_origin(theta) != (1, 0, 0, 1):
        raise ValueError("phi(theta) is not the identity")
    return _upper_left_at_origin(theta * b)
