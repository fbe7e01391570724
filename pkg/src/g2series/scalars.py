"""Exact multiplicative scalars: roots of unity times powers of Q = q^(1/2)
times monomials in formal unramified parameters.

The ambient structure is an abelian group, so there is no addition.  Two
scalars compare equal exactly when they agree as functions of the formal
variables.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping

__all__ = [
    "SymbolicScalar",
    "ONE",
    "Q",
    "q",
    "nu",
    "minus_one",
    "j",
    "root_of_unity",
    "var",
    "mul",
    "inv",
    "power",
    "substitute",
    "parse_scalar",
]


class SymbolicScalar:
    """zeta(torsion) * Q**q_half_exp * prod(v**e for v, e in var_exps)."""

    __slots__ = ("torsion", "q_half_exp", "var_exps", "_key")

    def __init__(self, torsion=0, q_half_exp: int = 0,
                 var_exps: Mapping[str, int] | None = None):
        t = Fraction(torsion)
        t = t - (t.numerator // t.denominator)
        exps = {}
        for name, e in (var_exps or {}).items():
            e = int(e)
            if e:
                exps[str(name)] = e
        object.__setattr__(self, "torsion", t)
        object.__setattr__(self, "q_half_exp", int(q_half_exp))
        object.__setattr__(self, "var_exps", dict(sorted(exps.items())))
        object.__setattr__(self, "_key",
                           (t, int(q_half_exp), tuple(sorted(exps.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicScalar is immutable")

    # group structure

    def __mul__(self, other: SymbolicScalar) -> SymbolicScalar:
        if not isinstance(other, SymbolicScalar):
            return NotImplemented
        exps = dict(self.var_exps)
        for name, e in other.var_exps.items():
            exps[name] = exps.get(name, 0) + e
        return SymbolicScalar(self.torsion + other.torsion,
                              self.q_half_exp + other.q_half_exp, exps)

    def __truediv__(self, other: SymbolicScalar) -> SymbolicScalar:
        if not isinstance(other, SymbolicScalar):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> SymbolicScalar:
        return SymbolicScalar(-self.torsion, -self.q_half_exp,
                              {k: -e for k, e in self.var_exps.items()})

    def __pow__(self, n: int) -> SymbolicScalar:
        n = int(n)
        return SymbolicScalar(self.torsion * n, self.q_half_exp * n,
                              {k: e * n for k, e in self.var_exps.items()})

    def __eq__(self, other):
        if not isinstance(other, SymbolicScalar):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other: SymbolicScalar) -> bool:
        # Only used to make orderings deterministic.
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.q_half_exp, self.torsion, tuple(self.var_exps.items()))

    # predicates

    def is_one(self) -> bool:
        return self == ONE

    def is_constant(self) -> bool:
        """No formal variables."""
        return not self.var_exps

    def is_torsion(self) -> bool:
        """A root of unity: no Q and no variables."""
        return self.q_half_exp == 0 and not self.var_exps

    def torsion_order(self) -> int:
        if not self.is_torsion():
            raise ValueError(f"{self} is not a root of unity")
        return self.torsion.denominator

    def variables(self) -> frozenset[str]:
        return frozenset(self.var_exps)

    def root(self, k: int) -> list[SymbolicScalar]:
        """All s with s**k == self, when self is constant and the Q exponent
        is divisible by k.  Returns [] when no root exists in this group."""
        if k == 0:
            raise ValueError("zeroth root")
        if k < 0:
            return [s.inverse() for s in self.root(-k)]
        if self.var_exps or self.q_half_exp % k:
            return []
        qe = self.q_half_exp // k
        return sorted({SymbolicScalar((self.torsion + i) / k, qe) for i in range(k)})

    def text(self) -> str:
        parts = []
        if self.torsion:
            parts.append(f"zeta({self.torsion.numerator}/{self.torsion.denominator})")
        if self.q_half_exp:
            parts.append(f"Q^{self.q_half_exp}")
        for name, e in self.var_exps.items():
            parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"SymbolicScalar({self.text()!r})"


_FACTOR = re.compile(r"^(?:zeta\((-?\d+)/(\d+)\)|Q\^(-?\d+)|([A-Za-z_][A-Za-z_0-9]*)\^(-?\d+))$")


def parse_scalar(text: str) -> SymbolicScalar:
    """Inverse of SymbolicScalar.text()."""
    text = text.strip()
    if text == "1":
        return ONE
    torsion, qe, exps = Fraction(0), 0, {}
    for factor in text.split("*"):
        m = _FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse scalar factor {factor!r}")
        if m.group(1) is not None:
            torsion += Fraction(int(m.group(1)), int(m.group(2)))
        elif m.group(3) is not None:
            qe += int(m.group(3))
        else:
            exps[m.group(4)] = exps.get(m.group(4), 0) + int(m.group(5))
    return SymbolicScalar(torsion, qe, exps)


def mul(a: SymbolicScalar, b: SymbolicScalar) -> SymbolicScalar:
    return a * b


def inv(a: SymbolicScalar) -> SymbolicScalar:
    return a.inverse()


def power(a: SymbolicScalar, n: int) -> SymbolicScalar:
    return a ** n


def substitute(a: SymbolicScalar, name: str, value: SymbolicScalar) -> SymbolicScalar:
    """Replace the formal variable `name` by `value` everywhere in `a`."""
    if name in value.var_exps:
        raise ValueError(f"substitution of {name} by an expression in {name}")
    e = a.var_exps.get(name, 0)
    if not e:
        return a
    rest = {k: v for k, v in a.var_exps.items() if k != name}
    return SymbolicScalar(a.torsion, a.q_half_exp, rest) * value ** e


def root_of_unity(numerator: int, denominator: int) -> SymbolicScalar:
    return SymbolicScalar(Fraction(numerator, denominator))


def var(name: str, exponent: int = 1) -> SymbolicScalar:
    return SymbolicScalar(0, 0, {name: exponent})


ONE = SymbolicScalar()
Q = SymbolicScalar(0, 1)
q = SymbolicScalar(0, 2)
nu = SymbolicScalar(0, -2)  # normalized absolute value at a uniformizer
minus_one = SymbolicScalar(Fraction(1, 2))
j = SymbolicScalar(Fraction(1, 3))
