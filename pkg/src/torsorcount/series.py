"""Truncated power series with exact rational coefficients, and the series built from them.

Covers the zeta function of P^1, the min-exponent series F_nu and their
polynomial normalizations, Euler products for gcd sums over divisors, exact
pole limits and a least-squares estimate of the constant in a pole expansion.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .ff_poly import DivisorP1, FieldCtx, closed_points, effective_divisors


def _orders(orders, r=None) -> tuple:
    if isinstance(orders, int):
        if r is None:
            raise ValueError("variable count needed for a scalar truncation order")
        orders = (orders,) * r
    orders = tuple(int(o) for o in orders)
    if not 1 <= len(orders) <= 3 or min(orders) < 0:
        raise ValueError("1 to 3 variables with nonnegative truncation orders")
    return orders


class TruncSeries:
    """Power series in r <= 3 variables, kept up to exponent ``orders[i]`` in variable i.

    Coefficients live in a dense object array of Fractions; products drop every
    monomial beyond the truncation, which leaves all kept coefficients exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.empty(np.shape(coeffs), dtype=object)
        src = np.asarray(coeffs, dtype=object)
        for idx in np.ndindex(arr.shape):
            arr[idx] = Fraction(src[idx])
        if not 1 <= arr.ndim <= 3:
            raise ValueError("1 to 3 variables supported")
        self.coeffs = arr

    @classmethod
    def _wrap(cls, arr) -> "TruncSeries":
        out = cls.__new__(cls)
        out.coeffs = arr
        return out

    @classmethod
    def zero(cls, orders) -> "TruncSeries":
        orders = _orders(orders)
        arr = np.empty(tuple(o + 1 for o in orders), dtype=object)
        arr.fill(Fraction(0))
        return cls._wrap(arr)

    @classmethod
    def from_dict(cls, orders, terms: dict) -> "TruncSeries":
        s = cls.zero(orders)
        for exps, c in terms.items():
            exps = (exps,) if isinstance(exps, int) else tuple(exps)
            if all(e <= o for e, o in zip(exps, s.orders)):
                s.coeffs[exps] += Fraction(c)
        return s

    @classmethod
    def one(cls, orders) -> "TruncSeries":
        orders = _orders(orders)
        return cls.from_dict(orders, {(0,) * len(orders): 1})

    @classmethod
    def geometric(cls, ratio, order: int) -> "TruncSeries":
        """1 / (1 - ratio * T) in one variable."""
        ratio = Fraction(ratio)
        return cls._wrap(np.array([ratio ** k for k in range(order + 1)], dtype=object))

    @property
    def orders(self) -> tuple:
        return tuple(n - 1 for n in self.coeffs.shape)

    @property
    def nvars(self) -> int:
        return self.coeffs.ndim

    def __getitem__(self, exps) -> Fraction:
        exps = (exps,) if isinstance(exps, int) else tuple(exps)
        if any(e > o for e, o in zip(exps, self.orders)):
            raise IndexError("monomial beyond truncation")
        return self.coeffs[exps]

    def terms(self) -> Iterable[tuple[tuple, Fraction]]:
        for idx in np.ndindex(self.coeffs.shape):
            c = self.coeffs[idx]
            if c:
                yield idx, c

    def truncate(self, orders) -> "TruncSeries":
        orders = _orders(orders, self.nvars)
        if any(o > s for o, s in zip(orders, self.orders)):
            raise ValueError("cannot extend a truncated series")
        return self._wrap(self.coeffs[tuple(slice(0, o + 1) for o in orders)].copy())

    def _check(self, other):
        if not isinstance(other, TruncSeries) or other.coeffs.shape != self.coeffs.shape:
            raise ValueError("series must share variable count and truncation")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries.one(self.orders) * other
        self._check(other)
        return self._wrap(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            return self._wrap(self.coeffs * c)
        self._check(other)
        shape = self.coeffs.shape
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        b = other.coeffs
        for idx, c in self.terms():
            dst = tuple(slice(i, n) for i, n in zip(idx, shape))
            src = tuple(slice(0, n - i) for i, n in zip(idx, shape))
            out[dst] = out[dst] + c * b[src]
        return self._wrap(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TruncSeries) or other.coeffs.shape != self.coeffs.shape:
            return NotImplemented
        return bool(np.all(self.coeffs == other.coeffs))

    def __hash__(self):
        return hash(tuple(self.coeffs.flat))

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value of the kept polynomial at a point (meaningful for polynomials)."""
        point = [Fraction(x) for x in point]
        if len(point) != self.nvars:
            raise ValueError("point has the wrong dimension")
        total = Fraction(0)
        for idx, c in self.terms():
            term = c
            for x, e in zip(point, idx):
                term *= x ** e
            total += term
        return total

    def degree_in(self, var: int) -> int:
        """Largest exponent of a variable among nonzero kept terms (-1 for zero)."""
        best = -1
        for idx, _ in self.terms():
            best = max(best, idx[var])
        return best

    def __repr__(self):
        terms = ", ".join(f"{idx}: {c}" for idx, c in self.terms())
        return f"TruncSeries(orders={self.orders}, {{{terms}}})"


def zeta_p1(q: int, trunc: int) -> TruncSeries:
    """Zeta function of P^1 over F_q, sum over effective divisors of T^deg, as 1/((1-T)(1-qT))."""
    if trunc < 0:
        raise ValueError("truncation must be >= 0")
    return TruncSeries.geometric(1, trunc) * TruncSeries.geometric(q, trunc)


def effective_divisor_count(q: int, d: int) -> int:
    return (q ** (d + 1) - 1) // (q - 1)


# ---------------------------------------------------------------------------
# min-exponent series

def F_nu_direct(nu: Sequence[int], rho, trunc) -> TruncSeries:
    """sum_n rho^min(n_i + nu_i) T^n, truncated."""
    nu = tuple(int(v) for v in nu)
    orders = _orders(trunc, len(nu))
    rho = Fraction(rho)
    arr = np.empty(tuple(o + 1 for o in orders), dtype=object)
    for idx in np.ndindex(arr.shape):
        arr[idx] = rho ** min(n + v for n, v in zip(idx, nu))
    return TruncSeries._wrap(arr)


def F_tilde_coefficient(nu: Sequence[int], rho, n: Sequence[int]) -> Fraction:
    """Coefficient of T^n in (1 - rho prod T)(prod (1 - T_i)) F_nu, by the closed case analysis."""
    rho = Fraction(rho)
    r = len(nu)
    m = min(ni + vi for ni, vi in zip(n, nu))
    ones = {i for i in range(r) if n[i] >= 1}
    twos = {i for i in range(r) if n[i] >= 2}
    raised = {i for i in ones if n[i] + nu[i] >= m + 1}
    if len(ones) < r:
        if not ones:
            return rho ** m
        if not raised:
            return rho ** m - rho ** (m - 1)
        return Fraction(0)
    if twos & raised:
        return Fraction(0)
    if not twos and raised:
        return -(rho ** m)
    if twos and not raised:
        return Fraction(0)
    if twos and raised:
        return rho ** (m - 1) - rho ** m
    return -(rho ** (m - 1))


def F_tilde_closed(nu: Sequence[int], rho) -> TruncSeries:
    """The polynomial (1 - rho prod T)(prod (1 - T_i)) F_nu, from its closed coefficients.

    Its degree in each variable is at most max(nu) + 1, which is the kept truncation.
    """
    nu = tuple(int(v) for v in nu)
    top = max(nu) + 1
    orders = (top,) * len(nu)
    arr = np.empty(tuple(o + 1 for o in orders), dtype=object)
    for idx in np.ndindex(arr.shape):
        arr[idx] = F_tilde_coefficient(nu, rho, idx)
    return TruncSeries._wrap(arr)


def F_tilde_product(nu: Sequence[int], rho, trunc) -> TruncSeries:
    """Same polynomial obtained by multiplying out the truncated series F_nu."""
    nu = tuple(int(v) for v in nu)
    orders = _orders(trunc, len(nu))
    r = len(nu)
    rho = Fraction(rho)
    prefactor = TruncSeries.from_dict(orders, {(0,) * r: 1, (1,) * r: -rho})
    for i in range(r):
        e = [0] * r
        e[i] = 1
        prefactor = prefactor * TruncSeries.from_dict(orders, {(0,) * r: 1, tuple(e): -1})
    return prefactor * F_nu_direct(nu, rho, orders)


def F_nu_power_substituted(nu: Sequence[int], rho, step: int, orders) -> TruncSeries:
    """F_nu(rho, T^step) truncated at the given orders: exponents step*n carry rho^min(n+nu)."""
    orders = _orders(orders, len(nu))
    rho = Fraction(rho)
    s = TruncSeries.zero(orders)
    ranges = [range(0, o // step + 1) for o in orders]
    for n in itertools.product(*ranges):
        s.coeffs[tuple(step * k for k in n)] = rho ** min(k + v for k, v in zip(n, nu))
    return s


# ---------------------------------------------------------------------------
# gcd sums over effective divisors

_BRUTE_BUDGET = 8


def gcd_sum_brute(F: FieldCtx, D: Sequence[DivisorP1], d: Sequence[int]) -> int:
    """sum over effective G_i of degree d_i of q^deg gcd(D_i + G_i), by enumeration."""
    if len(D) != len(d) or not 1 <= len(d) <= 2:
        raise ValueError("one or two divisors with matching degrees")
    if sum(d) > _BRUTE_BUDGET or F.q > 3:
        raise ValueError("outside the exhaustive enumeration budget")
    lists = [effective_divisors(F, k) for k in d]
    total = 0
    for G in itertools.product(*lists):
        g = DivisorP1.gcd(*(Di + Gi for Di, Gi in zip(D, G)))
        total += F.q ** g.degree
    return total


def gcd_sum_euler(F: FieldCtx, D: Sequence[DivisorP1], d: Sequence[int], cutoff: int) -> int:
    """Same sum read off the Euler product of F_{v(D)}(q_v, T^deg v) over closed points."""
    d = tuple(int(k) for k in d)
    if len(D) != len(d):
        raise ValueError("divisor and degree vectors differ in length")
    if cutoff < sum(d):
        raise ValueError("cutoff must be at least the total degree")
    r = len(d)
    top = max(d) if d else 0
    points = []
    if top >= 1:
        for deg, pts in closed_points(F, min(top, cutoff)).items():
            points.extend(pts)
    seen = set(points)
    for Di in D:
        for pt in Di.support():
            if pt not in seen:
                points.append(pt)
                seen.add(pt)
    product = TruncSeries.one(d)
    for pt in sorted(points):
        nu = tuple(Di.mult(pt) for Di in D)
        factor = F_nu_power_substituted(nu, F.q ** pt.degree, pt.degree, d)
        product = product * factor
    value = product[d]
    if value.denominator != 1:
        raise ArithmeticError("Euler product gave a non-integral coefficient")
    return int(value)


# ---------------------------------------------------------------------------
# poles

def pole_limit(factors: Sequence[tuple[int, int]], point, order: int) -> Fraction:
    """lim_{T -> point} (1 - T/point)^order * prod 1/(1 - c T^k) over factors (c, k).

    A factor vanishing at the point satisfies c point^k = 1, so
    1 - c T^k = (1 - T/point)(1 + u + ... + u^(k-1)) with u = T/point, which tends to k.
    """
    point = Fraction(point)
    vanishing = 0
    value = Fraction(1)
    for c, k in factors:
        at = Fraction(c) * point ** k
        if at == 1:
            vanishing += 1
            value /= k
        else:
            value /= 1 - at
    if vanishing > order:
        raise ValueError("pole of higher order than requested")
    if vanishing < order:
        return Fraction(0)
    return value


def height_zeta_factors(q: int) -> list[tuple[int, int]]:
    """Denominator factors of Z(q^2 T^3) Z(q T^2)^3 for the zeta function of P^1."""
    return [(q ** 2, 3), (q ** 3, 3)] + [(q, 2), (q ** 2, 2)] * 3


def main_term_residue(q: int) -> Fraction:
    """lim_{T -> 1/q} (1 - qT)^4 Z(q^2 T^3) Z(q T^2)^3 for P^1 over F_q."""
    if q < 2:
        raise ValueError("q must be >= 2")
    return pole_limit(height_zeta_factors(q), Fraction(1, q), 4)


def pole_main_term(limit, k: int, alpha, n: int) -> float:
    """Leading term of a_n for f with lim_{z->alpha} (z - alpha)^k f(z) = limit.

    Standard normalization: a_n ~ limit (-1)^k alpha^(-k) binom(n+k-1, k-1) alpha^(-n).
    """
    alpha = Fraction(alpha)
    return float(Fraction(limit) * (-1) ** k * alpha ** (-k) * math.comb(n + k - 1, k - 1) * alpha ** (-n))


def tauber_fit(coeffs: Sequence, k: int, alpha_inv, tail: int | None = None) -> float:
    """Estimate C in a_n ~ C n^(k-1) alpha_inv^n from the tail of a coefficient list.

    Fits r_n = a_n / (n^(k-1) alpha_inv^n) to C + D/n + E/n^2 by least squares
    and returns C.  Diagnostic only.
    """
    pairs = [(n, c) for n, c in enumerate(coeffs) if n >= 1]
    if tail is None:
        tail = max(4, len(pairs) // 2)
    pairs = pairs[-tail:]
    if len(pairs) < 4:
        raise ValueError("at least four tail coefficients are needed")
    ns = np.array([n for n, _ in pairs], dtype=float)
    r = np.array(
        [float(Fraction(c) / (Fraction(n) ** (k - 1) * Fraction(alpha_inv) ** n)) for n, c in pairs]
    )
    basis = np.stack([np.ones_like(ns), 1 / ns, 1 / ns ** 2], axis=1)
    sol, *_ = np.linalg.lstsq(basis, r, rcond=None)
    return float(sol[0])
