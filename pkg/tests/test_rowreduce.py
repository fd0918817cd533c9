from __future__ import annotations

import itertools
import random

import numpy as np
import pytest

from torsorcount.ff_poly import field_of_size
from torsorcount.linear_sections import section_map_matrix
from torsorcount.rowreduce import (
    fq_linear,
    nullspace_fq,
    nullspace_mod_p,
    rank_mod_p,
    rref_fq,
    section_rank,
)


def _brute_kernel_size(F, M):
    """Count x in F_q^n with M x = 0 by listing every vector."""
    m, n = M.shape
    add, mul = F.add_t, F.mul_t
    total = 0
    for x in itertools.product(range(F.q), repeat=n):
        ok = True
        for row in M:
            acc = 0
            for a, b in zip(row, x):
                acc = add[acc][mul[int(a)][b]]
            if acc:
                ok = False
                break
        total += ok
    return total


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_kernel_dimension_matches_brute_force(q):
    F = field_of_size(q)
    rng = random.Random(q)
    for _ in range(25):
        m, n = rng.randrange(1, 4), rng.randrange(1, 5 if q <= 5 else 4)
        M = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(m)], dtype=np.int64)
        assert q ** fq_linear(F).kernel_dim(M) == _brute_kernel_size(F, M)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fp_nullspace_vectors_solve_the_system(p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        A = rng.integers(0, p, size=(rng.integers(1, 6), rng.integers(1, 8)))
        N = nullspace_mod_p(A, p)
        assert N.shape[0] == A.shape[1] - rank_mod_p(A, p)
        assert not ((A @ N.T) % p).any()


@pytest.mark.parametrize("q", [4, 9])
def test_reference_path_agrees_with_expanded_path(q):
    F = field_of_size(q)
    rng = random.Random(q + 1)
    for _ in range(30):
        m, n = rng.randrange(1, 5), rng.randrange(1, 6)
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(m)]
        R, piv = rref_fq(F, rows)
        assert len(piv) == fq_linear(F).rank(np.array(rows))
        for v in nullspace_fq(F, rows, n):
            for row in rows:
                acc = 0
                for a, b in zip(row, v):
                    acc = F.add(acc, F.mul(a, b))
                assert acc == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_section_rank_matches_matrix_rank(q):
    F = field_of_size(q)
    lin = fq_linear(F)
    ranker = section_rank(F)
    rng = random.Random(100 + q)
    for _ in range(150):
        degs = [rng.randrange(0, 4) for _ in range(3)]
        polys = [tuple(rng.randrange(q) for _ in range(k + 1)) for k in degs]
        polys = [p if any(p) else (1,) + p[1:] for p in polys]
        delta = max(degs) + rng.randrange(0, 4)
        tdeg = [delta - k - rng.randrange(0, 2) for k in degs]
        M = section_map_matrix(polys, tdeg, delta)
        expected = lin.kernel_dim(M) if M.shape[1] else 0
        assert ranker.kernel_dim(polys, tdeg, delta) == expected
        full = ranker.full_dims(polys, tdeg, delta)
        pick = lambda idx: (lin.kernel_dim(section_map_matrix([polys[i] for i in idx], [tdeg[i] for i in idx], delta))
                            if sum(tdeg[i] + 1 for i in idx if tdeg[i] >= 0) else 0)
        assert full == (expected, pick((1, 2)), pick((0, 2)), pick((0, 1)))
