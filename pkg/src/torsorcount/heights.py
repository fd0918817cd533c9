"""Counting morphisms P^1 -> S of fixed anticanonical degree, three independent ways.

* ``count_torsor`` lifts a morphism to seven nonzero sections (s0, s, t) with
  s1 t1 + s2 t2 + s3 t3 = 0 satisfying the chart gcd conditions, and divides by
  the (q-1)^4 torus orbits.
* ``count_geometric`` enumerates maps to the plane and reads off the degree from
  the contact orders with the three blown-up points.
* ``count_moebius`` drops the gcd conditions and restores them by Möbius
  inversion over divisor tuples.

Also the Euler-product constant of S and the predicted growth
alpha * gamma * n^3 * q^n.
"""
from __future__ import annotations

import functools
import itertools
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .ff_poly import (
    INFINITY,
    ClosedPoint,
    DivisorP1,
    FieldCtx,
    closed_points,
    count_closed_points,
    enumerate_forms,
    factor_poly,
    field_of_size,
    normalized_forms,
    poly_gcd,
    poly_mod,
    poly_trim,
)
from .linear_sections import count_NS, section_map_matrix
from .moebius import S_MOEBIUS
from .rowreduce import fq_linear
from .surface import DivTuple7, alpha_S, degree_vectors, lift_degrees, psi

# default largest anticanonical degree per field size (enumeration grows like q^(n+6))
DEFAULT_BUDGET = {2: 14, 3: 8, 4: 6, 5: 5}
SUPPORTED_Q = (2, 3, 4, 5)

DEFAULT_GAMMA_CUTOFF = 40


@dataclass
class CountRecord:
    n: int
    count: int
    method: str
    predicted: float | None = None
    ratio: float | None = None
    elapsed: float = 0.0


def _check_q(q: int, n_max: int, budget: int | None):
    if q not in SUPPORTED_Q:
        raise ValueError(f"q must be one of {SUPPORTED_Q}")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    limit = DEFAULT_BUDGET[q] if budget is None else budget
    if n_max > limit:
        raise ValueError(f"n_max={n_max} exceeds the enumeration budget {limit} for q={q}")


def _records(counts: list[int], method: str, q: int, elapsed: list[float]) -> list[CountRecord]:
    out = []
    for n, c in enumerate(counts):
        pred = predict(q, n) if n >= 1 else None
        ratio = c / pred if pred else None
        out.append(CountRecord(n, c, method, pred, ratio, elapsed[n]))
    return out


# ---------------------------------------------------------------------------
# torsor method

@functools.lru_cache(maxsize=100_000)
def _support(F: FieldCtx, coeffs: tuple) -> frozenset:
    """Closed points where the form with these coefficients vanishes."""
    poly = poly_trim(coeffs)
    _, factors = factor_poly(F, poly)
    pts = {ClosedPoint(fac) for fac, _ in factors}
    if len(poly) < len(coeffs):
        pts.add(INFINITY)
    return frozenset(pts)


class _TorsorKernelCounter:
    """Counts kernel vectors t of (t_i) -> sum s_i t_i avoiding prescribed zeros.

    The kernel is described by an F_p-basis, and every kernel vector is one
    F_p-combination of it; all p^K combinations are evaluated at once by a
    matrix product against the values of the basis vectors under each
    evaluation functional t -> t_i(P).
    """

    def __init__(self, F: FieldCtx):
        self.F = F
        self.p = F.p
        self.f = F.f
        self.fq = fq_linear(F)
        self._reductions = {}
        self._combos = {}
        self._classes = {}

    def reduction(self, P: ClosedPoint, deg: int) -> np.ndarray:
        """F_p matrix sending the digits of a degree-deg form to the digits of its value at P."""
        key = (P, deg)
        R = self._reductions.get(key)
        if R is None:
            F = self.F
            if P.is_infinity:
                Rq = np.zeros((1, deg + 1), dtype=np.int64)
                Rq[0, deg] = 1
            else:
                k = P.degree
                Rq = np.zeros((k, deg + 1), dtype=np.int64)
                for j in range(deg + 1):
                    rem = poly_mod(F, (0,) * j + (1,), P.poly)
                    Rq[: len(rem), j] = rem
            R = self.fq.expand(Rq).T.copy()
            self._reductions[key] = R
        return R

    def combos(self, K: int) -> np.ndarray:
        G = self._combos.get(K)
        if G is None:
            p = self.p
            G = np.indices((p,) * K).reshape(K, -1).T.astype(np.float32) if K else np.zeros((1, 0), np.float32)
            self._combos[K] = G
        return G

    def s0_classes(self, d0: int, normalized: bool) -> list[tuple[frozenset, int]]:
        """Nonzero forms of degree d0 grouped by their set of zeros, with multiplicities."""
        key = (d0, normalized)
        if key not in self._classes:
            F = self.F
            tally = Counter()
            if normalized:
                for s0 in normalized_forms(F, d0, raw=True):
                    tally[_support(F, s0)] += F.q - 1
            else:
                for s0 in enumerate_forms(F, d0, nonzero_only=True, raw=True):
                    tally[_support(F, s0)] += 1
            self._classes[key] = sorted(tally.items(), key=lambda kv: sorted(kv[0]))
        return self._classes[key]

    def _all_nonzero(self, G: np.ndarray, groups: list[np.ndarray]) -> np.ndarray:
        """Boolean mask over the combinations: every group of values has a nonzero entry."""
        V = np.concatenate(groups, axis=1).astype(np.float32)
        Y = G @ V
        nz = np.fmod(Y, self.p) != 0
        starts = np.cumsum([0] + [g.shape[1] for g in groups[:-1]])
        return np.logical_or.reduceat(nz, starts, axis=1).all(axis=1)

    def count(self, s: tuple, fdeg: tuple, delta: int, classes) -> int:
        """sum over s0 classes of (class size) * #{valid t} for the s-triple s."""
        F, p, f = self.F, self.p, self.f
        supports = [_support(F, si) for si in s]
        M = section_map_matrix(s, fdeg, delta)
        B = self.fq.nullspace_fp(M)
        K = B.shape[0]
        if K == 0:
            return 0
        offsets = np.cumsum([0] + [(fi + 1) * f for fi in fdeg])
        blocks = [B[:, offsets[i]:offsets[i + 1]] for i in range(3)]
        cache = {}

        def values(i, P):
            key = (i, P)
            if key not in cache:
                cache[key] = (blocks[i] @ self.reduction(P, fdeg[i])) % p
            return cache[key]

        others = [supports[(i + 1) % 3] | supports[(i + 2) % 3] for i in range(3)]
        G = self.combos(K)
        base_groups = [values(i, P) for i in range(3) for P in sorted(others[i])]
        base = self._all_nonzero(G, base_groups) if base_groups else np.ones(G.shape[0], dtype=bool)
        total = 0
        for zeros, size in classes:
            extra = []
            for i in range(3):
                for P in sorted(zeros - others[i]):
                    extra.append(values(i, P))
                if not zeros and not others[i]:
                    extra.append(blocks[i])  # t_i itself must be nonzero
            ok = base & self._all_nonzero(G, extra) if extra else base
            total += size * int(np.count_nonzero(ok))
        return total


@functools.lru_cache(maxsize=None)
def _torsor_counter(F: FieldCtx) -> _TorsorKernelCounter:
    return _TorsorKernelCounter(F)


def _pairwise_coprime(F: FieldCtx, s: tuple) -> bool:
    a, b, c = (_support(F, si) for si in s)
    return not (a & b or a & c or b & c)


def _raw_count_for_degree(q: int, d: tuple, symmetry: bool) -> int:
    """Raw number of seven-tuples of nonzero forms of degrees lift(d) on the torsor."""
    F = field_of_size(q)
    counter = _torsor_counter(F)
    lifted = lift_degrees(d)
    delta = sum(d)
    fdeg = lifted[4:]
    classes = counter.s0_classes(d[0], symmetry)
    if symmetry:
        streams = [list(normalized_forms(F, k, raw=True)) for k in d[1:]]
        weight = (q - 1) ** 3
    else:
        streams = [list(enumerate_forms(F, k, nonzero_only=True, raw=True)) for k in d[1:]]
        weight = 1
    total = 0
    for s in itertools.product(*streams):
        if not _pairwise_coprime(F, s):
            continue
        total += counter.count(s, fdeg, delta, classes)
    return weight * total


def _torsor_work(q: int, n_max: int, symmetry: bool) -> list[tuple[int, tuple, int]]:
    """(n, d, multiplicity) for every degree vector to evaluate."""
    work = []
    for n in range(n_max + 1):
        for d in degree_vectors(n):
            if symmetry:
                if list(d[1:]) != sorted(d[1:]):
                    continue
                mult = len(set(itertools.permutations(d[1:])))
            else:
                mult = 1
            work.append((n, d, mult))
    return work


def _torsor_task(args):
    q, d, symmetry = args
    t0 = time.perf_counter()
    return _raw_count_for_degree(q, d, symmetry), time.perf_counter() - t0


def _run_tasks(fn: Callable, tasks: list, threads: int) -> list:
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks, chunksize=1))


def count_torsor_raw(q: int, n_max: int, threads: int = 1, symmetry: bool = True,
                     budget: int | None = None) -> tuple[list[int], list[float]]:
    """Raw torsor counts per n (before dividing by (q-1)^4) and seconds spent per n."""
    _check_q(q, n_max, budget)
    work = _torsor_work(q, n_max, symmetry)
    # largest tasks first keeps a process pool busy
    order = sorted(range(len(work)), key=lambda k: -sum(work[k][1]))
    results = _run_tasks(_torsor_task, [(q, work[k][1], symmetry) for k in order], threads)
    raw = [0] * (n_max + 1)
    elapsed = [0.0] * (n_max + 1)
    for k, (value, secs) in zip(order, results):
        n, _, mult = work[k]
        raw[n] += mult * value
        elapsed[n] += secs
    return raw, elapsed


def count_torsor(q: int, n_max: int, threads: int = 1, symmetry: bool = True,
                 budget: int | None = None) -> list[CountRecord]:
    """N(n) for n <= n_max from nonzero seven-tuples on the torsor, up to the torus action."""
    raw, elapsed = count_torsor_raw(q, n_max, threads, symmetry, budget)
    orbit = (q - 1) ** 4
    counts = []
    for n, r in enumerate(raw):
        if r % orbit:
            raise ArithmeticError(f"raw torsor count {r} at n={n} is not divisible by {orbit}")
        counts.append(r // orbit)
    return _records(counts, "torsor", q, elapsed)


# ---------------------------------------------------------------------------
# geometric method

def _geometric_degree(q: int, e: int, n_max: int) -> tuple[list[int], float]:
    """Counts per n of maps (g0 : g1 : g2) of degree e >= 1 to the plane, lifted to S."""
    t0 = time.perf_counter()
    F = field_of_size(q)
    forms = list(enumerate_forms(F, e, raw=True))
    Q = len(forms)
    digits = np.array(forms, dtype=np.int64)
    weights = q ** np.arange(e + 1, dtype=np.int64)
    # index of g0 - g1 for every pair of forms
    diff = (F.sub_np[digits[:, None, :], digits[None, :, :]] * weights).sum(axis=2)
    counts = np.zeros(n_max + 1, dtype=np.int64)
    for g2 in normalized_forms(F, e, raw=True):
        p2 = poly_trim(g2)
        inf2 = e - (len(p2) - 1)
        roots = sorted(_support(F, g2))
        gcd_deg = np.zeros(Q, dtype=np.int64)
        mask = np.zeros(Q, dtype=np.int64)
        for idx in range(1, Q):
            g = forms[idx]
            pg = poly_trim(g)
            inf = min(inf2, e - (len(pg) - 1))
            gcd_deg[idx] = len(poly_gcd(F, pg, p2)) - 1 + inf
            bits = 0
            if gcd_deg[idx]:
                zs = _support(F, g)
                for b, P in enumerate(roots):
                    if P in zs:
                        bits |= 1 << b
            mask[idx] = bits
        idx = np.arange(Q)
        g0, g1 = idx[:, None], idx[None, :]
        valid = (g0 != 0) & (g1 != 0) & (g0 != g1) & ((mask[g0] & mask[g1]) == 0)
        # contact orders with p1 = (1:0:0), p2 = (0:1:0), p3 = (1:1:0)
        n = 3 * e - gcd_deg[g1] - gcd_deg[g0] - gcd_deg[diff]
        n = np.broadcast_to(n, valid.shape)[valid]
        n = n[n <= n_max]
        counts += np.bincount(n, minlength=n_max + 1)[: n_max + 1]
    return [int(c) for c in counts], time.perf_counter() - t0


def _geometric_task(args):
    return _geometric_degree(*args)


def count_geometric(q: int, n_max: int, threads: int = 1, budget: int | None = None) -> list[CountRecord]:
    """N(n) from maps to the plane avoiding the line of the three points and the lines to (0:0:1)."""
    _check_q(q, n_max, budget)
    counts = [0] * (n_max + 1)
    elapsed = [0.0] * (n_max + 1)
    counts[0] = (q - 1) * (q - 2)  # constant maps to points of the open part
    # n >= 2e because the three contact orders sum to at most deg g2 = e
    tasks = [(q, e, n_max) for e in range(1, n_max // 2 + 1)]
    for (_, e, _), (per_n, secs) in zip(tasks, _run_tasks(_geometric_task, tasks, threads)):
        for n, c in enumerate(per_n):
            counts[n] += c
        elapsed[min(2 * e, n_max)] += secs
    return _records(counts, "geometric", q, elapsed)


# ---------------------------------------------------------------------------
# Möbius method

def _weight(v) -> int:
    return 3 * v[0] + 2 * (v[1] + v[2] + v[3])


def moebius_tuples(q: int, n_max: int):
    """Divisor tuples E with nonzero Möbius weight that can contribute up to degree n_max.

    Yields (E, mu, weight) with weight = 3 deg E0 + 2 sum deg E_i.
    """
    F = field_of_size(q)
    vectors = [(v, S_MOEBIUS.mu0(v), _weight(v), sum(v[4:])) for v in S_MOEBIUS.support if any(v)]
    pts = []
    if n_max >= 2:
        for deg, lst in closed_points(F, n_max // 2).items():
            pts.extend(lst)
    degs = [P.degree for P in pts]

    def rec(start, assigned, weight, fdeg, mu):
        divs = [dict() for _ in range(7)]
        for P, v in assigned:
            for k in range(7):
                if v[k]:
                    divs[k][P] = v[k]
        yield DivTuple7(*(DivisorP1(m) for m in divs)), mu, weight
        for j in range(start, len(pts)):
            P, pdeg = pts[j], degs[j]
            for v, mv, wv, fv in vectors:
                w2 = weight + pdeg * wv
                f2 = fdeg + pdeg * fv
                # every psi_i >= 0 forces sum deg F_i <= n
                if w2 <= n_max and f2 <= n_max:
                    yield from rec(j + 1, assigned + [(P, v)], w2, f2, mu * mv)

    yield from rec(0, [], 0, 0, 1)


def _moebius_task(args):
    q, n_max, E, mu, weight = args
    F = field_of_size(q)
    out = [0] * (n_max + 1)
    for m in range(n_max - weight + 1):
        for d in degree_vectors(m):
            if min(psi(i, d, E) for i in (1, 2, 3)) >= 0:
                out[weight + m] += mu * count_NS(F, d, E, "full")
    return out


def count_moebius(q: int, n_max: int, threads: int = 1, budget: int | None = None) -> list[CountRecord]:
    """N(n) as a Möbius-weighted sum of section counts without any gcd condition."""
    _check_q(q, n_max, budget)
    t0 = time.perf_counter()
    tasks = [(q, n_max, E, mu, w) for E, mu, w in moebius_tuples(q, n_max)]
    raw = [0] * (n_max + 1)
    for part in _run_tasks(_moebius_task, tasks, threads):
        for n, c in enumerate(part):
            raw[n] += c
    orbit = (q - 1) ** 4
    counts = []
    for n, r in enumerate(raw):
        if r % orbit:
            raise ArithmeticError(f"Möbius sum {r} at n={n} is not divisible by {orbit}")
        counts.append(r // orbit)
    elapsed = [0.0] * (n_max + 1)
    elapsed[-1] = time.perf_counter() - t0
    return _records(counts, "moebius", q, elapsed)


# ---------------------------------------------------------------------------
# constants and prediction

def local_factor(qv) -> Fraction:
    """(1 - 1/qv)^4 (qv^2 + 4 qv + 1) / qv^2, the normalized point count of S at a place."""
    x = Fraction(1, qv)
    return (1 - x) ** 4 * (1 + 4 * x + x * x)


@functools.lru_cache(maxsize=None)
def _checked_point_count(qv: int) -> int:
    """qv^2 + 4 qv + 1, confirmed by exhaustive counting when qv <= 16."""
    closed = qv * qv + 4 * qv + 1
    if qv <= 16:
        from .local import s_count_torsor

        counted = s_count_torsor(field_of_size(qv))
        if counted != closed:
            raise ArithmeticError(f"|S(F_{qv})| = {counted}, expected {closed}")
    return closed


def gamma_S_exact(q: int, cutoff_degree: int) -> Fraction:
    """Exact partial product over closed points of degree <= cutoff_degree."""
    if cutoff_degree < 1:
        raise ValueError("cutoff must be >= 1")
    out = (1 - Fraction(1, q)) ** -4 * q * q
    for k in range(1, cutoff_degree + 1):
        qv = q ** k
        _checked_point_count(qv)
        out *= local_factor(qv) ** count_closed_points(q, k)
    return out


def gamma_S(q: int, cutoff_degree: int = DEFAULT_GAMMA_CUTOFF) -> float:
    """(1 - 1/q)^-4 q^2 prod_{deg v <= cutoff} (1 - 1/q_v)^4 |S(k_v)| / q_v^2, in floating point."""
    if cutoff_degree < 1:
        raise ValueError("cutoff must be >= 1")
    log_total = -4 * math.log1p(-1 / q) + 2 * math.log(q)
    for k in range(1, cutoff_degree + 1):
        qv = q ** k
        if qv <= 16:
            _checked_point_count(qv)
        x = 1.0 / qv
        log_factor = 4 * math.log1p(-x) + math.log1p(4 * x + x * x)
        log_total += count_closed_points(q, k) * log_factor
    return math.exp(log_total)


def predict(q: int, n: int, cutoff_degree: int = DEFAULT_GAMMA_CUTOFF) -> float:
    """alpha(S) gamma(S) n^3 q^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return float(alpha_S()) * gamma_S(q, cutoff_degree) * n ** 3 * float(q) ** n


def ratio_table(records: list[CountRecord], n_min: int = 1) -> list[tuple[int, int, float, float]]:
    """(n, N(n), prediction, ratio) rows for n >= n_min."""
    return [(r.n, r.count, r.predicted, r.ratio) for r in records if r.n >= max(n_min, 1)]
