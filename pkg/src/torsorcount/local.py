"""Local densities of the torsor equation x1 y1 + x2 y2 + x3 y3 = 0 at a place.

Coordinates are ordered (x0, x1, x2, x3, y1, y2, y3), matching (s0, s1, s2, s3,
t1, t2, t3).  A 0/1 vector n forces the coordinates where it is 1 to vanish.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ff_poly import FieldCtx
from .moebius import S_MOEBIUS
from .series import F_tilde_closed
from .surface import CHART_MASKS

_EXHAUSTIVE_LIMIT = 16


def _check_binary(n: Sequence[int]):
    if len(n) != 7 or any(v not in (0, 1) for v in n):
        raise ValueError("expected a 0/1 vector of length 7")


@functools.lru_cache(maxsize=None)
def _pattern_counts(F: FieldCtx) -> np.ndarray:
    """counts[z1, z2, z3] = #{(x, y) in k^6 : sum x_i y_i = 0, zero pattern of pair i is z_i}.

    The zero pattern of a pair is (x == 0) + 2 (y == 0).  Every one of the q^6
    tuples is accounted for: per-pair histograms over (pattern, product value)
    are combined by summing over all value triples adding up to zero.
    """
    q = F.q
    if q > _EXHAUSTIVE_LIMIT:
        raise ValueError(f"field of size {q} is too large for exhaustive counting")
    x = np.repeat(np.arange(q), q)
    y = np.tile(np.arange(q), q)
    prod = F.mul_np[x, y]
    pattern = (x == 0).astype(int) + 2 * (y == 0).astype(int)
    hist = np.zeros((4, q), dtype=np.int64)
    np.add.at(hist, (pattern, prod), 1)
    add, neg = F.add_np, np.array(F.neg)
    counts = np.zeros((4, 4, 4), dtype=np.int64)
    for z1, z2 in itertools.product(range(4), repeat=2):
        pair_sum = np.zeros(q, dtype=np.int64)
        np.add.at(pair_sum, add.ravel(), np.outer(hist[z1], hist[z2]).ravel())
        for z3 in range(4):
            counts[z1, z2, z3] = int(np.dot(pair_sum, hist[z3][neg]))
    return counts


def _compatible(forced_x: bool, forced_y: bool):
    return [z for z in range(4) if (not forced_x or z & 1) and (not forced_y or z & 2)]


def dens(n: Sequence[int], F: FieldCtx) -> Fraction:
    """Solutions in k^n of the torsor equation divided by q^6; x0 contributes q or 1."""
    _check_binary(n)
    counts = _pattern_counts(F)
    q = F.q
    allowed = [_compatible(n[i], n[3 + i]) for i in (1, 2, 3)]
    total = sum(int(counts[z1, z2, z3]) for z1 in allowed[0] for z2 in allowed[1] for z3 in allowed[2])
    x0 = 1 if n[0] else q
    return Fraction(x0 * total, q ** 6)


def dens_direct(n: Sequence[int], F: FieldCtx) -> Fraction:
    """dens by literal enumeration of k^n (small fields only)."""
    _check_binary(n)
    q = F.q
    if q > 5:
        raise ValueError("direct enumeration is limited to q <= 5")
    ranges = [[0] if n[k] else range(q) for k in range(7)]
    total = 0
    for v in itertools.product(*ranges):
        acc = 0
        for i in (1, 2, 3):
            acc = F.add_t[acc][F.mul_t[v[i]][v[3 + i]]]
        total += acc == 0
    return Fraction(total, q ** 6)


def torsor_point_count(F: FieldCtx) -> int:
    """#{7-tuples over k with sum x_i y_i = 0 on which some chart monomial is nonzero}."""
    counts = _pattern_counts(F)
    q = F.q
    total = 0
    for x0_zero, weight in ((True, 1), (False, q - 1)):
        for z in itertools.product(range(4), repeat=3):
            zero_mask = (1 if x0_zero else 0)
            for i, zi in enumerate(z, start=1):
                if zi & 1:
                    zero_mask |= 1 << i
                if zi & 2:
                    zero_mask |= 1 << (3 + i)
            if any(cm & zero_mask == 0 for cm in CHART_MASKS):
                total += weight * int(counts[z])
    return total


def torsor_point_count_direct(F: FieldCtx) -> int:
    """Same count by vectorized enumeration of all of k^7 (q <= 7)."""
    q = F.q
    if q > 7:
        raise ValueError("direct enumeration is limited to q <= 7")
    grids = np.indices((q,) * 7).reshape(7, -1)
    acc = np.zeros(grids.shape[1], dtype=np.int64)
    for i in (1, 2, 3):
        acc = F.add_np[acc, F.mul_np[grids[i], grids[3 + i]]]
    nonzero = grids != 0
    ok = np.zeros(grids.shape[1], dtype=bool)
    for cm in CHART_MASKS:
        rows = [k for k in range(7) if cm >> k & 1]
        ok |= nonzero[rows].all(axis=0)
    return int(np.count_nonzero(ok & (acc == 0)))


def s_count_torsor(F: FieldCtx) -> int:
    """Number of k-points of S, as torsor points divided by the (q-1)^4 torus orbits."""
    raw = torsor_point_count(F)
    orbit = (F.q - 1) ** 4
    if raw % orbit:
        raise ArithmeticError(f"torsor count {raw} not divisible by {orbit}")
    return raw // orbit


def fact(n: Sequence[int], F_or_q) -> Fraction:
    """(1 - q^-2)^-1 q^-(e0 + sum(e_i + f_i)) Ftilde_{(e_i + f_i)}(q, 1/q)."""
    _check_binary(n)
    q = F_or_q.q if isinstance(F_or_q, FieldCtx) else int(F_or_q)
    c = [n[i] + n[3 + i] for i in (1, 2, 3)]
    poly = F_tilde_closed(c, q)
    value = poly.evaluate([Fraction(1, q)] * 3)
    return value * Fraction(1, q) ** (n[0] + sum(c)) / (1 - Fraction(1, q * q))


def fact_series(n: Sequence[int], F_or_q) -> Fraction:
    """(1 - 1/q)^3 q^-e0 sum_{m_i >= e_i + f_i} q^(min m - sum m), summed exactly.

    Grouping by the minimum value t of m: with G(t) = prod_i q^-max(c_i, t) / (1 - 1/q),
    the tuples with min m = t contribute q^t (G(t) - G(t+1)), and for t >= max c this
    is a geometric sequence of ratio q^-2 summed in closed form.
    """
    _check_binary(n)
    q = F_or_q.q if isinstance(F_or_q, FieldCtx) else int(F_or_q)
    c = [n[i] + n[3 + i] for i in (1, 2, 3)]
    x = Fraction(1, q)

    def G(t):
        out = Fraction(1)
        for ci in c:
            out *= x ** max(ci, t) / (1 - x)
        return out

    total = Fraction(0)
    top = max(c)
    for t in range(min(c), top):
        total += Fraction(q) ** t * (G(t) - G(t + 1))
    # t >= top: q^t (G(t) - G(t+1)) = x^(2t) (1 - x^3) / (1 - x)^3
    total += x ** (2 * top) * (1 - x ** 3) / ((1 - x) ** 3 * (1 - x ** 2))
    return (1 - x) ** 3 * x ** n[0] * total


@dataclass
class LocalReport:
    q: int
    moebius_dens_sum: Fraction | None
    moebius_fact_sum: Fraction
    point_count_side: Fraction
    passed: bool

    def lines(self) -> list[str]:
        return [
            f"q={self.q} sum mu0*dens = {self.moebius_dens_sum}",
            f"q={self.q} sum mu0*fact = {self.moebius_fact_sum}",
            f"q={self.q} (1-1/q)^4 |S(k)| / q^2 = {self.point_count_side}",
            f"q={self.q} {'pass' if self.passed else 'FAIL'}",
        ]


def verify_local(F: FieldCtx) -> LocalReport:
    """Check sum mu0 dens = sum mu0 fact = (1 - 1/q)^4 |S(k)| / q^2 exactly."""
    q = F.q
    support = S_MOEBIUS.support
    fact_sum = sum((S_MOEBIUS.mu0(n) * fact(n, q) for n in support), Fraction(0))
    if q <= 9:
        dens_sum = sum((S_MOEBIUS.mu0(n) * dens(n, F) for n in support), Fraction(0))
    else:
        dens_sum = None
    points = s_count_torsor(F) if q <= _EXHAUSTIVE_LIMIT else q * q + 4 * q + 1
    target = (1 - Fraction(1, q)) ** 4 * Fraction(points, q * q)
    ok = fact_sum == target and (dens_sum is None or dens_sum == target)
    return LocalReport(q, dens_sum, fact_sum, target, ok)
