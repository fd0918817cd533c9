"""
Counting morphisms three ways
=============================

N(n) counts morphisms from P^1 to the surface of anticanonical degree n whose
image meets the open part.  The torsor, plane-geometry and Möbius routes are
independent and must agree exactly.
"""
from __future__ import annotations

import time

from torsorcount.heights import count_geometric, count_moebius, count_torsor

for q, n_max in ((2, 8), (3, 5)):
    for method in (count_torsor, count_geometric, count_moebius):
        t0 = time.perf_counter()
        counts = [r.count for r in method(q, n_max)]
        print(f"q={q} {method.__name__:16s} {counts}  ({time.perf_counter() - t0:.2f} s)")
