from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from torsorcount.ff_poly import DivisorP1, closed_points, field_of_size
from torsorcount.surface import (
    ANTICANONICAL,
    ANTICANONICAL_EXPANSIONS,
    CHARTS,
    DEGREE_MATRIX,
    GENERATORS,
    RELATION_MATRIX,
    DivTuple7,
    alpha_S,
    anticanonical_degree,
    cone_constant,
    degree_vectors,
    is_primitive,
    lift_degrees,
    phi,
    psi,
)

F2 = field_of_size(2)
P = closed_points(F2, 1)[1][1]


def _names(chart):
    return frozenset(GENERATORS[k] for k in chart)


def test_chart_family_is_the_listed_seven_sets():
    expected = {
        frozenset(s.split()) for s in (
            "s1 s2 t1 t2 t3", "s2 s3 t1 t2 t3", "s1 s3 t1 t2 t3", "s0 s1 s2 t1 t2",
            "s0 s1 s3 t1 t3", "s0 s2 s3 t2 t3", "s0 s1 s2 s3",
        )
    }
    assert {_names(c) for c in CHARTS} == expected
    assert len(CHARTS) == 7


def test_charts_have_empty_intersection():
    assert frozenset.intersection(*map(frozenset, CHARTS)) == frozenset()


def test_generator_classes_and_anticanonical():
    # columns are the classes of s0..s3, t1..t3 on [E0],...,[E3]
    assert DEGREE_MATRIX[:, 4].tolist() == [1, 0, 1, 1]
    assert DEGREE_MATRIX[:, 5].tolist() == [1, 1, 0, 1]
    assert DEGREE_MATRIX[:, 6].tolist() == [1, 1, 1, 0]
    assert tuple(ANTICANONICAL) == (3, 2, 2, 2)
    for expansion in ANTICANONICAL_EXPANSIONS:
        assert (DEGREE_MATRIX @ np.array(expansion)).tolist() == [3, 2, 2, 2]


def test_relations_are_degree_zero():
    assert not (DEGREE_MATRIX @ RELATION_MATRIX.T).any()


@pytest.mark.parametrize("d,expected", [((0, 0, 0, 0), (0,) * 7), ((1, 0, 0, 0), (1, 0, 0, 0, 1, 1, 1)),
                                        ((0, 1, 0, 0), (0, 1, 0, 0, 0, 1, 1))])
def test_lift_degrees_examples(d, expected):
    assert lift_degrees(d) == expected


def test_lift_degrees_orthogonal_to_relations_and_degree_agrees():
    for d in itertools.product(range(6), repeat=4):
        lifted = np.array(lift_degrees(d))
        assert not (RELATION_MATRIX @ lifted).any()
        n = anticanonical_degree(d)
        assert n == 3 * d[0] + 2 * sum(d[1:])
        # the seven section degrees weighted by either anticanonical expansion
        for expansion in ANTICANONICAL_EXPANSIONS:
            # pairing through Pic: deg of the pulled-back anticanonical class
            assert sum(int(a) * int(b) for a, b in zip(expansion, lifted)) == n


def test_degree_vectors_match_generating_function():
    # coefficients of 1 / ((1 - T^3)(1 - T^2)^3)
    coeffs = [0] * 21
    for a, b, c, e in itertools.product(range(8), range(11), range(11), range(11)):
        n = 3 * a + 2 * (b + c + e)
        if n <= 20:
            coeffs[n] += 1
    assert [len(degree_vectors(n)) for n in range(21)] == coeffs


def test_psi_examples():
    assert psi(1, (0, 0, 0, 0), DivTuple7()) == 0
    assert psi(1, (1, 1, 1, 1), DivTuple7()) == 3
    F2div = DivisorP1({closed_points(F2, 2)[2][0]: 1})
    E = DivTuple7(f2=F2div)
    assert psi(2, (0, 1, 0, 0), E) == -1


def test_phi_examples():
    assert phi(1, (0, 0, 0, 0)) == 0
    assert phi(1, (2, 1, 0, 0)) == 3
    assert phi(3, (0, 0, 0, 2), DivTuple7(f1=DivisorP1({P: 1}))) == 1


def test_phi_cyclic_convention():
    degs = (1, 2, 3, 4, 5, 6, 7)
    d = (1, 2, 3, 4)
    assert phi(2, d, degs) == d[0] + d[2] + degs[0] + degs[2] - degs[4 + 2] - degs[4 + 0]
    assert phi(3, d, degs) == d[0] + d[3] + degs[0] + degs[3] - degs[4 + 0] - degs[4 + 1]


def test_psi_is_degree_of_t_section():
    for d in itertools.product(range(3), repeat=4):
        assert [psi(i, d) for i in (1, 2, 3)] == list(lift_degrees(d)[4:])


def test_primitivity_examples():
    zero = DivisorP1()
    one = DivisorP1({P: 1})
    assert is_primitive([zero] * 7)
    assert not is_primitive([one] * 4 + [zero] * 3)
    assert is_primitive([zero] * 4 + [one, zero, zero])


def test_primitivity_by_chart_sums_at_every_point():
    one = DivisorP1({P: 1})
    zero = DivisorP1()
    for pattern in itertools.product((0, 1), repeat=7):
        divs = [one if b else zero for b in pattern]
        sums = [sum(pattern[k] for k in c) for c in CHARTS]
        assert is_primitive(divs) == (min(sums) == 0)


pts = [p for lst in closed_points(F2, 2).values() for p in lst]


@st.composite
def div_tuples(draw):
    return [DivisorP1({p: draw(st.integers(0, 2)) for p in pts}) for _ in range(7)]


@given(div_tuples(), st.integers(0, 6), st.sampled_from(pts))
def test_primitivity_monotone(divs, slot, point):
    if not is_primitive(divs):
        bigger = list(divs)
        bigger[slot] = bigger[slot] + DivisorP1({point: 1})
        assert not is_primitive(bigger)


def test_alpha_is_one_twenty_fourth():
    assert alpha_S() == Fraction(1, 24)


def test_cone_constant_helper():
    assert cone_constant((2, 1, 1, 1), 4) == Fraction(1, 2)
    with pytest.raises(ValueError):
        cone_constant((2, 2), 1)
