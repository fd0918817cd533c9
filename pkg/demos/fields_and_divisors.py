"""
Finite fields and divisors on the projective line
=================================================

Field elements are plain integers whose base-p digits are coordinates in a
power basis.  Binary forms carry their degree, so a form can vanish at the
point at infinity Y = 0.
"""
from __future__ import annotations

from torsorcount.ff_poly import BinaryForm, closed_points, divisor_of, field_of_size, form_gcd

##############################################################################
# A field with nine elements: the modulus is the first irreducible quadratic.
F9 = field_of_size(9)
print("modulus of F_9 (low to high):", F9.modulus)
print("3 * 5 =", F9.mul(3, 5), " inverse of 5 =", F9.inv[5])

##############################################################################
# Closed points of P^1 over F_2 by degree: three rational points, one of
# degree two, two of degree three.
F2 = field_of_size(2)
for deg, pts in closed_points(F2, 3).items():
    print(f"degree {deg}: {len(pts)} points")

##############################################################################
# The divisor of a form lists its zeros with multiplicity.  X^2 Y + X Y^2
# vanishes at 0, infinity and 1.
f = BinaryForm(F2, (0, 1, 1, 0))
print("div(X^2 Y + X Y^2) =", divisor_of(f))

##############################################################################
# gcd of forms matches the minimum of divisors.
g = BinaryForm(F2, (0, 1)) * BinaryForm(F2, (1, 1, 1))
print("deg gcd =", form_gcd(f, g).d)
