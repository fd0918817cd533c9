"""Möbius weights inverting the chart indicator on {0,1}^7, and their extension to divisor tuples."""
from __future__ import annotations

import itertools
from typing import Sequence

from .ff_poly import DivisorP1
from .surface import CHARTS


def _bits(n: Sequence[int]) -> int:
    return sum(1 << k for k, v in enumerate(n) if v)


def _vector(mask: int, width: int) -> tuple:
    return tuple((mask >> k) & 1 for k in range(width))


class ChartMoebius:
    """Möbius function attached to a family of index sets (charts) on `width` coordinates.

    A 0/1 vector is *allowed* when some chart avoids all of its ones.  The weight
    mu0 is the Boolean Möbius transform of the allowed-set indicator, so that
    ``allowed(n) == sum(mu0(m) for m <= n)``; it vanishes off {0,1}^width.
    """

    def __init__(self, charts=CHARTS, width: int = 7):
        self.charts = tuple(frozenset(c) for c in charts)
        self.width = width
        masks = [sum(1 << k for k in c) for c in self.charts]
        size = 1 << width
        self.allowed_table = [any(m & cm == 0 for cm in masks) for m in range(size)]
        mu = [1 if a else 0 for a in self.allowed_table]
        # subset-sum inversion, one coordinate at a time
        for k in range(width):
            bit = 1 << k
            for m in range(size):
                if m & bit:
                    mu[m] -= mu[m ^ bit]
        self.table = tuple(mu)
        self.support = tuple(
            _vector(m, width) for m in range(size) if mu[m] != 0
        )

    def allowed(self, n: Sequence[int]) -> bool:
        if len(n) != self.width or any(v not in (0, 1) for v in n):
            raise ValueError("expected a 0/1 vector of the right length")
        return self.allowed_table[_bits(n)]

    def mu0(self, n: Sequence[int]) -> int:
        if len(n) != self.width:
            raise ValueError("wrong vector length")
        if any(v < 0 for v in n):
            raise ValueError("negative entry")
        if any(v >= 2 for v in n):
            return 0
        return self.table[_bits(n)]

    def mu_div(self, divs: Sequence[DivisorP1]) -> int:
        """Product over the joint support of mu0 of the local order vectors."""
        if len(divs) != self.width:
            raise ValueError("wrong tuple length")
        points = set()
        for D in divs:
            points.update(D.support())
        out = 1
        for pt in points:
            w = self.mu0([D.mult(pt) for D in divs])
            if w == 0:
                return 0
            out *= w
        return out


S_MOEBIUS = ChartMoebius()


def in_01S(n: Sequence[int]) -> bool:
    """Whether the 0/1 vector n has some chart of S free of ones."""
    return S_MOEBIUS.allowed(n)


def mu0(n: Sequence[int]) -> int:
    return S_MOEBIUS.mu0(n)


def mu_div(divs: Sequence[DivisorP1]) -> int:
    return S_MOEBIUS.mu_div(divs)


def binary_vectors(width: int = 7):
    return itertools.product((0, 1), repeat=width)
