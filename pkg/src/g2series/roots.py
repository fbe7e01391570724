"""G2 root data in the character basis (2*alpha+beta, alpha+beta).

Coroot pairings are computed from the inner products (alpha|alpha) = 2,
(beta|beta) = 6, (alpha|beta) = -3 rather than typed in, so that the
reducibility test built on them is independent of the explicit list of
twelve conditions in families.py.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["POSITIVE_ROOTS", "inner", "coroot_form", "reflection_matrix", "coroot_table"]

# coefficients (of alpha, of beta)
POSITIVE_ROOTS = {
    "alpha": (1, 0),
    "beta": (0, 1),
    "alpha+beta": (1, 1),
    "2alpha+beta": (2, 1),
    "3alpha+beta": (3, 1),
    "3alpha+2beta": (3, 2),
}

_GRAM = ((2, -3), (-3, 6))
_BASIS = ((2, 1), (1, 1))  # character basis e1 = 2a+b, e2 = a+b


def inner(u, v) -> int:
    return sum(u[i] * _GRAM[i][k] * v[k] for i in range(2) for k in range(2))


def _in_basis(root) -> tuple[int, int]:
    """Coordinates of a root (given in alpha, beta) in the basis e1, e2."""
    (p, r), (s, t) = _BASIS
    det = p * t - r * s
    a, b = root
    # solve x*e1 + y*e2 = (a, b)
    x = Fraction(a * t - b * s, det)
    y = Fraction(p * b - r * a, det)
    assert x.denominator == y.denominator == 1
    return int(x), int(y)


def coroot_form(root) -> tuple[int, int]:
    """(c1, c2) with <v, root^vee> = c1*v1 + c2*v2 for v in the e-basis."""
    norm = inner(root, root)
    out = []
    for e in _BASIS:
        val = Fraction(2 * inner(e, root), norm)
        assert val.denominator == 1
        out.append(int(val))
    return tuple(out)


def reflection_matrix(root) -> tuple[tuple[int, int], tuple[int, int]]:
    """s_root acting on exponent vectors: v - <v, root^vee> * root."""
    c = coroot_form(root)
    r = _in_basis(root)
    return tuple(tuple(int(i == k) - r[i] * c[k] for k in range(2)) for i in range(2))


@lru_cache(maxsize=None)
def coroot_table() -> dict[str, tuple[int, int]]:
    return {name: coroot_form(root) for name, root in POSITIVE_ROOTS.items()}
