"""Linear algebra of section spaces on P^1: kernels of (t_i) -> sum a_i t_i and the counts built on them.

For forms a_1, .., a_r and a target degree delta, the map sends t_i of degree
delta - deg a_i to sum a_i t_i, a form of degree delta.  A section space of
negative degree is the zero space.
"""
from __future__ import annotations

import functools
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ff_poly import (
    BinaryForm,
    DivisorP1,
    FieldCtx,
    canonical_form,
    form_gcd,
    normalized_forms,
    poly_mul,
)
from .rowreduce import fq_linear, section_rank
from .surface import DivTuple7, ZERO_TUPLE, phi, psi

__all__ = [
    "DivTuple7",
    "section_map_matrix",
    "kernel_dim",
    "kernel_dim2",
    "kernel_dim3",
    "image_of_map2",
    "multiples_of",
    "kernel_t3_nonzero_count",
    "count_NS",
    "count_NS0_closed",
    "NS1_bound",
    "bound_NS1",
]


def section_map_matrix(coeff_lists: Sequence[tuple], t_degrees: Sequence[int], delta: int) -> np.ndarray:
    """Matrix of (t_i) -> sum a_i t_i; columns run over the monomials X^j Y^(deg t_i - j)."""
    cols = []
    for a, t in zip(coeff_lists, t_degrees):
        for j in range(t + 1):
            col = np.zeros(delta + 1, dtype=np.int64)
            col[j:j + len(a)] = a
            cols.append(col)
    if not cols:
        return np.zeros((delta + 1, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def kernel_dim(F: FieldCtx, coeff_lists: Sequence[tuple], degrees: Sequence[int], delta: int) -> int:
    """Kernel dimension of (t_i) -> sum a_i t_i with deg t_i = delta - deg a_i (zero space if negative)."""
    t_deg = [delta - a for a in degrees]
    M = section_map_matrix(coeff_lists, t_deg, delta)
    if M.shape[1] == 0:
        return 0
    return fq_linear(F).kernel_dim(M)


def _check_forms(*forms: BinaryForm):
    for s in forms:
        if s.is_zero():
            raise ValueError("sections must be nonzero")


def kernel_dim2(s1: BinaryForm, s2: BinaryForm, delta: int) -> int:
    _check_forms(s1, s2)
    return kernel_dim(s1.field, [s1.coeffs, s2.coeffs], [s1.d, s2.d], delta)


def _gcd_degree(*forms: BinaryForm) -> int:
    g = forms[0]
    for s in forms[1:]:
        g = form_gcd(g, s)
    return g.d


def kernel_dim3(s1: BinaryForm, s2: BinaryForm, s3: BinaryForm, delta: int) -> tuple[int, bool | None]:
    """Kernel dimension by row reduction, plus a check of the closed dimension formula.

    The formula dim = 2 (delta + 1) - sum deg s_i + deg gcd is checked when two
    of the three pair conditions delta >= deg s_i + deg s_j - 1 hold, whichever
    two they are; otherwise the flag is None.
    """
    _check_forms(s1, s2, s3)
    forms = (s1, s2, s3)
    dim = kernel_dim(s1.field, [s.coeffs for s in forms], [s.d for s in forms], delta)
    degs = [s.d for s in forms]
    pairs_ok = sum(delta >= degs[i] + degs[j] - 1 for i, j in ((0, 1), (1, 2), (0, 2)))
    if pairs_ok < 2:
        return dim, None
    expected = 2 * (delta + 1) - sum(degs) + _gcd_degree(*forms)
    return dim, dim == expected


def kernel_t3_nonzero_count(s1: BinaryForm, s2: BinaryForm, s3: BinaryForm, delta: int) -> int:
    """#{t in the kernel of the three-term map with t3 != 0}."""
    q = s1.field.q
    d3 = kernel_dim(s1.field, [s.coeffs for s in (s1, s2, s3)], [s.d for s in (s1, s2, s3)], delta)
    d12 = kernel_dim(s1.field, [s1.coeffs, s2.coeffs], [s1.d, s2.d], delta)
    if delta - s3.d < 0:
        return 0
    return q ** d3 - q ** d12


def image_of_map2(s1: BinaryForm, s2: BinaryForm, delta: int) -> set[tuple]:
    """All forms s1 t1 + s2 t2 of degree delta, by enumerating the F_q-span of the images."""
    F = s1.field
    cols = section_map_matrix([s1.coeffs, s2.coeffs], [delta - s1.d, delta - s2.d], delta)
    return _span(F, [tuple(int(x) for x in cols[:, j]) for j in range(cols.shape[1])], delta + 1)


def multiples_of(g: BinaryForm, delta: int) -> set[tuple]:
    """All forms of degree delta divisible by g (including zero)."""
    F = g.field
    gens = []
    for j in range(delta - g.d + 1):
        col = [0] * (delta + 1)
        col[j:j + len(g.coeffs)] = g.coeffs
        gens.append(tuple(col))
    return _span(F, gens, delta + 1)


def _span(F: FieldCtx, gens: list[tuple], length: int) -> set[tuple]:
    span = {(0,) * length}
    add, mul = F.add_t, F.mul_t
    for g in gens:
        new = set()
        for v in span:
            for c in range(1, F.q):
                new.add(tuple(add[x][mul[c][y]] for x, y in zip(v, g)))
        span |= new
    return span


# ---------------------------------------------------------------------------
# counts of sections satisfying the twisted torsor relation

VARIANTS = ("full", "zero0", "drop1", "drop2", "drop3", "prod4")


@functools.lru_cache(maxsize=4096)
def _canonical_coeffs(F: FieldCtx, D: DivisorP1) -> tuple:
    return canonical_form(F, D).coeffs


def _twists(F: FieldCtx, E: DivTuple7) -> list[tuple]:
    """Canonical sections of E_i + F_i for i = 1, 2, 3 as coefficient tuples."""
    return [_canonical_coeffs(F, E[i] + E[3 + i]) for i in (1, 2, 3)]


def _target_degree(d, E: DivTuple7) -> int:
    e = E.degrees()
    return d[0] + d[1] + d[2] + d[3] + e[0] + e[1] + e[2] + e[3]


def _nonzero_space(q: int, deg: int) -> int:
    return q ** (deg + 1) - 1 if deg >= 0 else 0


def _per_triple_dims(F: FieldCtx, d, E: DivTuple7):
    """Yield the twisted products a_i = s_i can(E_i + F_i) for normalized nonzero s_i.

    Kernel dimensions do not change when an s_i is scaled, so each yielded
    triple stands for (q-1)^3 triples of nonzero forms.
    """
    twists = _twists(F, E)
    delta = _target_degree(d, E)
    psis = [psi(i, d, E) for i in (1, 2, 3)]
    for s1 in normalized_forms(F, d[1], raw=True):
        a1 = poly_mul(F, s1, twists[0])
        for s2 in normalized_forms(F, d[2], raw=True):
            a2 = poly_mul(F, s2, twists[1])
            for s3 in normalized_forms(F, d[3], raw=True):
                a3 = poly_mul(F, s3, twists[2])
                yield (a1, a2, a3), delta, psis


def _dim(F, avecs, psis, idx, delta):
    return section_rank(F).kernel_dim([avecs[i] for i in idx], [psis[i] for i in idx], delta)


def count_NS(F: FieldCtx, d: Sequence[int], E: DivTuple7 = ZERO_TUPLE, variant: str = "full") -> int:
    """Count tuples (s0, s, t) with sum s_i t_i can(E_i) can(F_i) = 0.

    s0 and s_i range over nonzero forms of degrees d0 and d_i, t_i over forms of
    degree psi_i(d, E).  Variants: ``full`` requires every t_i nonzero, ``zero0``
    lets them vanish, ``dropk`` omits t_k (so the relation has two terms) and
    lets the others vanish, ``prod4`` counts the s-tuples alone.  With ``full``,
    a negative psi_i leaves no nonzero t_i and the count is 0.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    d = tuple(int(x) for x in d)
    q = F.q
    s_factor = _nonzero_space(q, d[0])
    if variant == "prod4":
        return s_factor * _nonzero_space(q, d[1]) * _nonzero_space(q, d[2]) * _nonzero_space(q, d[3])
    psis = [psi(i, d, E) for i in (1, 2, 3)]
    if variant == "full":
        if min(psis) < 0:
            return 0
        return _count_full(F, d, tuple(_twists(F, E)), E.degrees())
    total = 0
    for avecs, delta, psis in _per_triple_dims(F, d, E):
        if variant == "zero0":
            total += q ** _dim(F, avecs, psis, (0, 1, 2), delta)
        else:
            k = int(variant[-1])
            keep = tuple(i for i in range(3) if i != k - 1)
            total += q ** _dim(F, avecs, psis, keep, delta)
    return total * s_factor * (q - 1) ** 3


@functools.lru_cache(maxsize=65536)
def _count_full(F: FieldCtx, d: tuple, twists: tuple, e: tuple) -> int:
    # depends on E only through the twist forms and the divisor degrees
    q = F.q
    delta = sum(d) + e[0] + e[1] + e[2] + e[3]
    psis = [d[0] + e[0] + sum(d[j] + e[j] for j in (1, 2, 3) if j != i) - e[3 + i] for i in (1, 2, 3)]
    ranker = section_rank(F)
    total = 0
    for s1 in normalized_forms(F, d[1], raw=True):
        a1 = poly_mul(F, s1, twists[0])
        for s2 in normalized_forms(F, d[2], raw=True):
            a2 = poly_mul(F, s2, twists[1])
            for s3 in normalized_forms(F, d[3], raw=True):
                a3 = poly_mul(F, s3, twists[2])
                k, k1, k2, k3 = ranker.full_dims((a1, a2, a3), psis, delta)
                total += q ** k - q ** k1 - q ** k2 - q ** k3 + 2
    return total * _nonzero_space(q, d[0]) * (q - 1) ** 3


def _closed_precondition(d, E) -> bool:
    return sum(phi(i, d, E) >= -1 for i in (1, 2, 3)) >= 2


def count_NS0_closed(F: FieldCtx, d: Sequence[int], E: DivTuple7 = ZERO_TUPLE) -> int:
    """Closed formula for the ``zero0`` count, valid when two of the phi_i are >= -1."""
    d = tuple(int(x) for x in d)
    if not _closed_precondition(d, E):
        raise ValueError("closed formula needs two indices with phi >= -1")
    q = F.q
    e = E.degrees()
    exponent = 2 + 2 * d[0] + d[1] + d[2] + d[3] + 2 * e[0] + e[1] + e[2] + e[3] - e[4] - e[5] - e[6]
    twists = _twists(F, E)
    gsum = 0
    for s1 in normalized_forms(F, d[1]):
        for s2 in normalized_forms(F, d[2]):
            for s3 in normalized_forms(F, d[3]):
                forms = [s * BinaryForm(F, tw) for s, tw in zip((s1, s2, s3), twists)]
                gsum += q ** _gcd_degree(*forms)
    gsum *= (q - 1) ** 3
    value = _nonzero_space(q, d[0]) * gsum * Fraction(q) ** exponent
    if value.denominator != 1:
        raise ArithmeticError("closed formula produced a non-integer")
    return int(value)


def NS1_bound(F: FieldCtx, d: Sequence[int], E: DivTuple7 = ZERO_TUPLE) -> Fraction:
    """q^(5 + 2d0 + 2d1 + 2d2 + d3 + e0 + e1 + e2 - f3)."""
    e = E.degrees()
    exponent = 5 + 2 * d[0] + 2 * d[1] + 2 * d[2] + d[3] + e[0] + e[1] + e[2] - e[6]
    return Fraction(F.q) ** exponent


def bound_NS1(F: FieldCtx, d: Sequence[int], E: DivTuple7 = ZERO_TUPLE) -> bool:
    """Whether the ``drop1`` count stays below q^(5 + 2d0 + 2d1 + 2d2 + d3 + e0 + e1 + e2 - f3)."""
    if min(psi(i, d, E) for i in (1, 2, 3)) < 0:
        raise ValueError("all psi_i must be nonnegative")
    return count_NS(F, d, E, "drop1") <= NS1_bound(F, d, E)
