"""
Local densities at a place
==========================

Over a residue field with q_v elements the torsor equation
x1 y1 + x2 y2 + x3 y3 = 0 is counted with prescribed zero patterns.  The
Möbius-weighted sum of these densities equals the normalized point count
(1 - 1/q_v)^4 (q_v^2 + 4 q_v + 1) / q_v^2 of the surface.
"""
from __future__ import annotations

from torsorcount.ff_poly import field_of_size
from torsorcount.local import dens, s_count_torsor, verify_local
from torsorcount.moebius import S_MOEBIUS

##############################################################################
# Densities for a few zero patterns over F_3.
F3 = field_of_size(3)
for n in [(0,) * 7, (0, 1, 0, 0, 1, 0, 0), (1,) * 7]:
    print(n, "->", dens(n, F3))

##############################################################################
# Only a few 0/1 patterns carry a nonzero Möbius weight.
print("patterns with nonzero weight:", len(S_MOEBIUS.support))

##############################################################################
# Both sums agree with the point count for several residue fields.
for q in (2, 3, 4, 5, 7):
    rep = verify_local(field_of_size(q))
    print(f"q={q}: |S| = {s_count_torsor(field_of_size(q))}, sums = {rep.moebius_fact_sum}, ok = {rep.passed}")
