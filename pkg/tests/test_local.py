from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from torsorcount.ff_poly import field_of_size
from torsorcount.local import (
    dens,
    dens_direct,
    fact,
    fact_series,
    s_count_torsor,
    torsor_point_count,
    torsor_point_count_direct,
    verify_local,
)

VECS = list(itertools.product((0, 1), repeat=7))


def test_dens_examples():
    F = field_of_size(2)
    # 36 zeros of a split quadratic form in six variables, times q for x0
    assert dens((0,) * 7, F) == Fraction(9, 8)
    for q in (2, 3, 5):
        Fq = field_of_size(q)
        assert dens((0, 1, 1, 1, 0, 0, 0), Fq) == Fraction(1, q * q)
        assert dens((1,) * 7, Fq) == Fraction(1, q ** 6)


@pytest.mark.parametrize("q", [2, 3, 4])
def test_dens_matches_direct_enumeration(q):
    F = field_of_size(q)
    assert all(dens(n, F) == dens_direct(n, F) for n in VECS)


def test_dens_matches_direct_enumeration_q5_sample():
    F = field_of_size(5)
    for n in VECS[::17]:
        assert dens(n, F) == dens_direct(n, F)


@pytest.mark.parametrize("q", [3, 4, 7])
def test_dens_symmetric_under_pair_permutations(q):
    F = field_of_size(q)
    for n in VECS:
        for perm in itertools.permutations(range(3)):
            moved = (n[0],) + tuple(n[1 + p] for p in perm) + tuple(n[4 + p] for p in perm)
            assert dens(moved, F) == dens(n, F)


@pytest.mark.parametrize("q,expected", [(2, 13), (3, 22), (4, 33), (5, 46)])
def test_point_count_of_surface(q, expected):
    assert s_count_torsor(field_of_size(q)) == expected == q * q + 4 * q + 1


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_torsor_point_count_two_ways(q):
    F = field_of_size(q)
    assert torsor_point_count(F) == torsor_point_count_direct(F)


def test_fact_examples():
    # with no forced zeros the normalized polynomial is 1 - T1 T2 T3
    assert fact((0,) * 7, 2) == (1 - Fraction(1, 8)) / (1 - Fraction(1, 4))
    assert fact((1, 0, 0, 0, 0, 0, 0), 3) == fact((0,) * 7, 3) / 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_fact_matches_exact_series_sum(q):
    assert all(fact(n, q) == fact_series(n, q) for n in VECS)


@pytest.mark.parametrize("n", [(0,) * 7, (0, 1, 0, 0, 1, 0, 0), (1, 1, 1, 0, 0, 0, 1)])
def test_fact_matches_truncated_float_sum(n):
    q = 3
    c = [n[i] + n[3 + i] for i in (1, 2, 3)]
    top = 40
    total = sum(q ** (min(m) - sum(m)) for m in itertools.product(*(range(ci, top) for ci in c)))
    value = (1 - 1 / q) ** 3 * q ** -n[0] * total
    assert value == pytest.approx(float(fact(n, q)), rel=1e-12)


@pytest.mark.parametrize("q,expected", [
    (2, Fraction(13, 64)),
    (3, Fraction(2, 3) ** 4 * Fraction(22, 9)),
    (5, Fraction(4, 5) ** 4 * Fraction(46, 25)),
])
def test_verify_local_values(q, expected):
    rep = verify_local(field_of_size(q))
    assert rep.passed
    assert rep.point_count_side == rep.moebius_fact_sum == rep.moebius_dens_sum == expected
    assert len(rep.lines()) == 4


def test_dens_rejects_bad_vectors():
    with pytest.raises(ValueError):
        dens((0, 2, 0, 0, 0, 0, 0), field_of_size(2))
    with pytest.raises(ValueError):
        dens((0,) * 6, field_of_size(2))
