"""Combinatorial data of S, the projective plane blown up in three collinear points.

Pic(S) has basis E0 (pullback of a line) and the exceptional curves E1, E2, E3.
The Cox ring is k[s0, s1, s2, s3, t1, t2, t3] / (s1 t1 + s2 t2 + s3 t3) with
deg s_i = E_i and deg t_i = F_i = E0 + sum_{j != i, j >= 1} E_j.  Coordinates
are indexed 0..6 in the order s0, s1, s2, s3, t1, t2, t3.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

import numpy as np

from .ff_poly import DivisorP1, ZERO_DIVISOR

GENERATORS = ("s0", "s1", "s2", "s3", "t1", "t2", "t3")


class PicVector(NamedTuple):
    """Coordinates on [E0], [E1], [E2], [E3]."""

    a0: int
    a1: int
    a2: int
    a3: int

    def __add__(self, other):
        return PicVector(*(x + y for x, y in zip(self, other)))

    def scaled(self, k: int) -> "PicVector":
        return PicVector(*(k * x for x in self))


def exceptional_class(i: int) -> PicVector:
    v = [0, 0, 0, 0]
    v[i] = 1
    return PicVector(*v)


def strict_transform_class(i: int) -> PicVector:
    """Class of the curve t_i = 0: E0 + sum of the two other exceptional classes."""
    return PicVector(1, *(0 if j == i else 1 for j in (1, 2, 3)))


ANTICANONICAL = PicVector(3, 2, 2, 2)

GENERATOR_DEGREES = tuple(
    [exceptional_class(i) for i in range(4)] + [strict_transform_class(i) for i in (1, 2, 3)]
)

# degree map Z^7 -> Pic(S), one column per generator
DEGREE_MATRIX = np.array(GENERATOR_DEGREES, dtype=np.int64).T

# relations among generator degrees: t_i - s0 - sum_{j != i} s_j has degree 0
RELATION_MATRIX = np.array(
    [
        [-1] + [0 if j == i else -1 for j in (1, 2, 3)] + [1 if k == i else 0 for k in (1, 2, 3)]
        for i in (1, 2, 3)
    ],
    dtype=np.int64,
)

# the anticanonical class as a nonnegative combination of generator classes, two ways
ANTICANONICAL_EXPANSIONS = (
    (3, 2, 2, 2, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 1),
)

_S = {name: k for k, name in enumerate(GENERATORS)}


def _chart(*names):
    return frozenset(_S[n] for n in names)


# an index set I' belongs to the family when the monomial prod_{i in I'} x_i
# has an open nonvanishing locus contained in the torsor
CHARTS = (
    _chart("s1", "s2", "t1", "t2", "t3"),
    _chart("s2", "s3", "t1", "t2", "t3"),
    _chart("s1", "s3", "t1", "t2", "t3"),
    _chart("s0", "s1", "s2", "t1", "t2"),
    _chart("s0", "s1", "s3", "t1", "t3"),
    _chart("s0", "s2", "s3", "t2", "t3"),
    _chart("s0", "s1", "s2", "s3"),
)

CHART_MASKS = tuple(sum(1 << i for i in c) for c in CHARTS)


class DivTuple7(NamedTuple):
    """Seven effective divisors (E0, E1, E2, E3, F1, F2, F3), one per Cox coordinate."""

    e0: DivisorP1 = ZERO_DIVISOR
    e1: DivisorP1 = ZERO_DIVISOR
    e2: DivisorP1 = ZERO_DIVISOR
    e3: DivisorP1 = ZERO_DIVISOR
    f1: DivisorP1 = ZERO_DIVISOR
    f2: DivisorP1 = ZERO_DIVISOR
    f3: DivisorP1 = ZERO_DIVISOR

    def degrees(self) -> tuple:
        return tuple(D.degree for D in self)


ZERO_TUPLE = DivTuple7()


def _degrees7(E) -> tuple:
    if E is None:
        return (0,) * 7
    if hasattr(E, "degrees"):
        return E.degrees()
    if len(E) != 7:
        raise ValueError("expected seven divisors or seven degrees")
    return tuple(D.degree if isinstance(D, DivisorP1) else int(D) for D in E)


def lift_degrees(d: Sequence[int]) -> tuple:
    """(d0, d1, d2, d3) -> degrees of all seven coordinates of a lifted morphism."""
    d0, d1, d2, d3 = (int(x) for x in d)
    if min(d0, d1, d2, d3) < 0:
        raise ValueError("degrees must be nonnegative")
    ds = (d1, d2, d3)
    fs = tuple(d0 + sum(ds[j] for j in range(3) if j != i) for i in range(3))
    return (d0, d1, d2, d3) + fs


def anticanonical_degree(d: Sequence[int]) -> int:
    return 3 * d[0] + 2 * (d[1] + d[2] + d[3])


def degree_vectors(n: int) -> list[tuple]:
    """All d in N^4 with 3 d0 + 2 (d1 + d2 + d3) = n."""
    out = []
    for d0 in range(n // 3 + 1):
        rest = n - 3 * d0
        if rest % 2:
            continue
        m = rest // 2
        for d1 in range(m + 1):
            for d2 in range(m - d1 + 1):
                out.append((d0, d1, d2, m - d1 - d2))
    return out


def psi(i: int, d: Sequence[int], E=None) -> int:
    """Degree of the section t_i once the divisors E have been divided out."""
    if i not in (1, 2, 3):
        raise ValueError("index must be 1, 2 or 3")
    e = _degrees7(E)
    others = [j for j in (1, 2, 3) if j != i]
    return d[0] + sum(d[j] for j in others) + e[0] + sum(e[j] for j in others) - e[3 + i]


def phi(i: int, d: Sequence[int], E=None) -> int:
    """d0 + d_i + deg E0 + deg E_i - deg F_j - deg F_k for {j, k} the two other indices."""
    if i not in (1, 2, 3):
        raise ValueError("index must be 1, 2 or 3")
    e = _degrees7(E)
    others = [j for j in (1, 2, 3) if j != i]
    return d[0] + d[i] + e[0] + e[i] - sum(e[3 + j] for j in others)


def chart_sums(orders: Sequence[int]) -> list[int]:
    return [sum(orders[k] for k in c) for c in CHARTS]


def is_primitive(divs: Sequence[DivisorP1]) -> bool:
    """True iff at every closed point some chart has all seven-tuple orders zero on it."""
    if len(divs) != 7:
        raise ValueError("expected seven divisors")
    points = set()
    for D in divs:
        points.update(D.support())
    for pt in points:
        orders = [D.mult(pt) for D in divs]
        if min(chart_sums(orders)) > 0:
            return False
    return True


def cone_constant(exponents: Sequence[int], order: int) -> Fraction:
    """lim_{T->1} (1-T)^order / prod_j (1 - T^{a_j}), by cancelling the (1-T) factors.

    Each factor 1 - T^a equals (1-T)(1 + T + ... + T^(a-1)), which tends to a.
    """
    if any(a < 1 for a in exponents):
        raise ValueError("exponents must be positive")
    if order > len(exponents):
        return Fraction(0)
    if order < len(exponents):
        raise ValueError("the limit has a pole at T = 1")
    out = Fraction(1)
    for a in exponents:
        out /= a
    return out


def alpha_S() -> Fraction:
    """Cone constant of S, read off sum_d T^n(d) = 1 / ((1 - T^3)(1 - T^2)^3)."""
    return cone_constant((3, 2, 2, 2), 4)
