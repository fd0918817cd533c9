"""Exact row reduction over F_p (numpy) and over F_q via its F_p-structure.

An F_q-linear map is handled by expanding each matrix entry c into the f x f
F_p-matrix of multiplication by c.  Ranks over F_q are then ranks over F_p
divided by f, and the F_p-nullspace of the expansion is an F_p-basis of the
F_q-kernel (enumerating its F_p-combinations visits every kernel vector once).
"""
from __future__ import annotations

import functools

import numpy as np

from .ff_poly import FieldCtx


def rref_mod_p(A, p: int):
    """Reduced row echelon form over F_p. Returns (nonzero rows, pivot columns)."""
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a matrix")
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = (A[r] * pow(lead, p - 2, p)) % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p: int) -> np.ndarray:
    """Basis of {x : A x = 0} over F_p, one vector per row."""
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, c in enumerate(free):
        basis[i, c] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-R[r, c]) % p
    return basis


class FqLinear:
    """Linear algebra over F_q carried out on F_p-expansions."""

    def __init__(self, F: FieldCtx):
        self.F = F
        p, f, q = F.p, F.f, F.q
        # blocks[c] @ digits(x) = digits(c * x)
        blocks = np.zeros((q, f, f), dtype=np.int64)
        for c in range(q):
            for j in range(f):
                blocks[c, :, j] = F.digits[F.mul(c, F.root_power(j))]
        self.blocks = blocks

    def expand(self, M) -> np.ndarray:
        M = np.asarray(M, dtype=np.int64)
        m, n = M.shape
        f = self.F.f
        if f == 1:
            return M.copy()
        return self.blocks[M].transpose(0, 2, 1, 3).reshape(m * f, n * f)

    def to_digits(self, v) -> np.ndarray:
        """F_q vector(s) -> F_p coordinate vector(s), coordinates interleaved per entry."""
        v = np.asarray(v, dtype=np.int64)
        return self.F.digits[v].reshape(v.shape[:-1] + (-1,))

    def from_digits(self, w) -> np.ndarray:
        w = np.asarray(w, dtype=np.int64)
        f = self.F.f
        w = w.reshape(w.shape[:-1] + (-1, f))
        return w @ np.array([self.F.p ** j for j in range(f)], dtype=np.int64)

    def rank(self, M) -> int:
        M = np.asarray(M)
        if M.size == 0:
            return 0
        r = rank_mod_p(self.expand(M), self.F.p)
        return r // self.F.f

    def kernel_dim(self, M) -> int:
        M = np.asarray(M)
        return M.shape[1] - self.rank(M)

    def nullspace_fp(self, M) -> np.ndarray:
        """F_p-basis of the F_q-kernel, in interleaved digit coordinates."""
        return nullspace_mod_p(self.expand(M), self.F.p)


@functools.lru_cache(maxsize=None)
def fq_linear(F: FieldCtx) -> FqLinear:
    return FqLinear(F)


def rref_fq(F: FieldCtx, rows):
    """Plain reduced row echelon form over F_q using the field tables (reference path)."""
    A = [list(r) for r in rows]
    if not A:
        return [], []
    n = len(A[0])
    add, mul, inv = F.add_t, F.mul_t, F.inv
    pivots = []
    r = 0
    for c in range(n):
        k = next((i for i in range(r, len(A)) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        s = inv[A[r][c]]
        A[r] = [mul[s][x] for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                t = F.neg[A[i][c]]
                A[i] = [add[x][mul[t][y]] for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def nullspace_fq(F: FieldCtx, rows, ncols: int) -> list[list[int]]:
    """Basis of the F_q-kernel of the matrix with the given rows (reference path)."""
    R, pivots = rref_fq(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for c in free:
        v = [0] * ncols
        v[c] = 1
        for r, pc in enumerate(pivots):
            v[pc] = F.neg[R[r][c]]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# small section-map ranks without numpy overhead

def _rank_gf2(vectors) -> int:
    """Rank over F_2 of vectors packed into Python ints."""
    basis = []
    for v in vectors:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return len(basis)


def _rank_fp_lists(vectors, p: int) -> int:
    """Rank over F_p of coordinate lists, by echelon insertion keyed on the top nonzero entry."""
    basis = {}
    for v in vectors:
        v = [x % p for x in v]
        top = len(v) - 1
        while top >= 0:
            if v[top] == 0:
                top -= 1
                continue
            b = basis.get(top)
            if b is None:
                inv = pow(v[top], p - 2, p)
                basis[top] = [x * inv % p for x in v]
                break
            c = v[top]
            v = [(x - c * y) % p for x, y in zip(v, b)]
            top -= 1
        # a vector reduced to zero adds nothing
    return len(basis)


class SectionRank:
    """Kernel dimensions of (t_i) -> sum a_i t_i for small degrees over a fixed field."""

    def __init__(self, F: FieldCtx):
        self.F = F
        if F.p == 2:
            f = F.f
            # bits of c * a^l for every element c and basis index l
            self._bits = [
                [int(sum(int(b) << k for k, b in enumerate(F.digits[F.mul(c, F.root_power(l))])))
                 for c in range(F.q)]
                for l in range(f)
            ]

    def _packed(self, a) -> list[int]:
        f = self.F.f
        out = []
        for l in range(f):
            bits = self._bits[l]
            v = 0
            for k, c in enumerate(a):
                if c:
                    v |= bits[c] << (f * k)
            out.append(v)
        return out

    def full_dims(self, coeff_lists, t_degrees, delta: int) -> tuple:
        """Kernel dimensions for all three terms and for the pairs omitting term 1, 2, 3."""
        if self.F.p != 2:
            kd = self.kernel_dim
            cl, td = coeff_lists, t_degrees
            pick = lambda idx: kd([cl[i] for i in idx], [td[i] for i in idx], delta)
            return pick((0, 1, 2)), pick((1, 2)), pick((0, 2)), pick((0, 1))
        f = self.F.f
        blocks = []
        for a, t in zip(coeff_lists, t_degrees):
            if t < 0:
                blocks.append([])
                continue
            packed = self._packed(a)
            blocks.append([v << (f * j) for j in range(t + 1) for v in packed])
        ncol = [len(b) // f for b in blocks]

        def extend(basis, part):
            for v in part:
                for b in basis:
                    v = min(v, v ^ b)
                if v:
                    basis.append(v)
                    basis.sort(reverse=True)
            return basis

        basis = extend([], blocks[0] + blocks[1])
        r01 = len(basis) // f
        r012 = len(extend(basis, blocks[2])) // f
        r12 = len(extend([], blocks[1] + blocks[2])) // f
        r02 = len(extend([], blocks[0] + blocks[2])) // f
        total = sum(ncol)
        return (total - r012, ncol[1] + ncol[2] - r12, ncol[0] + ncol[2] - r02, ncol[0] + ncol[1] - r01)

    def kernel_dim(self, coeff_lists, t_degrees, delta: int) -> int:
        F = self.F
        ncols = sum(t + 1 for t in t_degrees if t >= 0)
        if ncols == 0:
            return 0
        if F.p == 2:
            f = F.f
            vecs = []
            for a, t in zip(coeff_lists, t_degrees):
                if t < 0:
                    continue
                packed = self._packed(a)
                for j in range(t + 1):
                    vecs.extend(v << (f * j) for v in packed)
            return ncols - _rank_gf2(vecs) // f
        if F.f == 1:
            vecs = []
            for a, t in zip(coeff_lists, t_degrees):
                for j in range(t + 1):
                    col = [0] * (delta + 1)
                    col[j:j + len(a)] = a
                    vecs.append(col)
            return ncols - _rank_fp_lists(vecs, F.p)
        cols = []
        for a, t in zip(coeff_lists, t_degrees):
            for j in range(t + 1):
                col = np.zeros(delta + 1, dtype=np.int64)
                col[j:j + len(a)] = a
                cols.append(col)
        return fq_linear(F).kernel_dim(np.stack(cols, axis=1))


@functools.lru_cache(maxsize=None)
def section_rank(F: FieldCtx) -> SectionRank:
    return SectionRank(F)
