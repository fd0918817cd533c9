"""
Growth against the predicted main term
======================================

The prediction is alpha * gamma * n^3 * q^n with alpha = 1/24 and gamma an
Euler product over closed points.  Even and odd degrees oscillate, and at
these degrees the ratios are still far from their limit.  The same table is
stored in artifacts/ratio_table_q2.csv.
"""
from __future__ import annotations

from torsorcount.heights import count_torsor, gamma_S, ratio_table

print("gamma(S) at q=2 by cutoff:", [round(gamma_S(2, c), 6) for c in (4, 8, 10, 20, 40)])
for n, count, predicted, ratio in ratio_table(count_torsor(2, 14), n_min=6):
    print(f"n={n:2d}  N={count:7d}  predicted={predicted:12.2f}  ratio={ratio:.4f}")
