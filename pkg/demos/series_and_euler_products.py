"""
Series, Euler products and the pole constant
============================================

Truncated power series with exact rational coefficients: the zeta function of
P^1, the normalized min-exponent series and an Euler product that reproduces
a gcd sum over pairs of divisors.
"""
from __future__ import annotations

from fractions import Fraction

from torsorcount.ff_poly import DivisorP1, field_of_size
from torsorcount.series import F_tilde_closed, gcd_sum_brute, gcd_sum_euler, main_term_residue, zeta_p1

##############################################################################
# Z(T) = 1 / ((1 - T)(1 - qT)) counts effective divisors by degree.
Z = zeta_p1(2, 5)
print("effective divisors over F_2 by degree:", [int(Z[(d,)]) for d in range(6)])

##############################################################################
# The normalized series for shift (1, 0, 2) is a polynomial.
poly = F_tilde_closed((1, 0, 2), 2)
print("nonzero terms:", {k: str(v) for k, v in poly.terms()})

##############################################################################
# gcd sums: enumeration against the Euler product.
F2 = field_of_size(2)
D = [DivisorP1(), DivisorP1()]
print("sum over deg-(2,2) pairs of q^deg gcd:", gcd_sum_brute(F2, D, (2, 2)), gcd_sum_euler(F2, D, (2, 2), 4))

##############################################################################
# Leading pole constant of the height zeta function at T = 1/q.
print("residue at q=2:", main_term_residue(2), "=", Fraction(2, 1) ** 4 / 24)
