"""Verification suites: every finite identity the library relies on, as pass/fail records.

Each suite returns a list of ``Check`` records.  Random instances come from a
seeded generator so reports are reproducible.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .ff_poly import (
    BinaryForm,
    DivisorP1,
    closed_points,
    effective_divisors,
    field_of_size,
    form_gcd,
    normalized_forms,
)
from .linear_sections import (
    NS1_bound,
    count_NS,
    count_NS0_closed,
    image_of_map2,
    kernel_dim2,
    kernel_dim3,
    kernel_t3_nonzero_count,
    multiples_of,
)
from .local import fact, fact_series, s_count_torsor, verify_local
from .moebius import S_MOEBIUS, binary_vectors
from .series import (
    F_tilde_closed,
    F_tilde_product,
    effective_divisor_count,
    gcd_sum_brute,
    gcd_sum_euler,
    main_term_residue,
    zeta_p1,
)
from .surface import DivTuple7, ZERO_TUPLE, alpha_S, degree_vectors, phi, psi

SUITES = ("local", "series", "kernel", "moebius", "decomposition")
DEFAULT_QV = (2, 3, 4, 5, 7, 8, 9)
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class Check:
    suite: str
    identity: str
    case: str
    expected: str
    actual: str
    passed: bool

    def line(self) -> str:
        flag = "pass" if self.passed else "FAIL"
        return f"{flag} {self.suite}/{self.identity} [{self.case}] expected={self.expected} actual={self.actual}"


def _check(suite, identity, case, expected, actual, passed=None) -> Check:
    ok = expected == actual if passed is None else bool(passed)
    return Check(suite, identity, str(case), str(expected), str(actual), ok)


# ---------------------------------------------------------------------------
# local densities

def suite_local(qv_list: Sequence[int] = DEFAULT_QV) -> list[Check]:
    out = []
    for qv in qv_list:
        F = field_of_size(qv)
        rep = verify_local(F)
        target = rep.point_count_side
        out.append(_check("local", "moebius_fact_sum", f"qv={qv}", target, rep.moebius_fact_sum))
        if rep.moebius_dens_sum is not None:
            out.append(_check("local", "moebius_dens_sum", f"qv={qv}", target, rep.moebius_dens_sum))
        out.append(_check("local", "point_count", f"qv={qv}", qv * qv + 4 * qv + 1, s_count_torsor(F)))
        bad = [n for n in binary_vectors() if fact(n, qv) != fact_series(n, qv)]
        out.append(_check("local", "fact_two_routes", f"qv={qv}", [], bad))
    return out


# ---------------------------------------------------------------------------
# generating series

def _bound_ok(nu, rho) -> tuple[bool, Fraction, Fraction]:
    poly = F_tilde_closed(nu, rho)
    bound = Fraction(2 + max(nu) - min(nu)) ** len(nu) * Fraction(rho) ** min(nu)
    worst = Fraction(0)
    for signs in itertools.product((1, -1), repeat=len(nu)):
        val = abs(poly.evaluate([Fraction(s, rho) for s in signs]))
        worst = max(worst, val)
    return worst <= bound, worst, bound


def suite_series(trunc: int = 6, gcd_degree: int = 4) -> list[Check]:
    out = []
    mismatches = []
    for nu in itertools.product(range(3), repeat=3):
        for rho in (2, 3, 4):
            closed = F_tilde_closed(nu, rho)
            product = F_tilde_product(nu, rho, trunc)
            top = max(nu) + 1
            for idx in itertools.product(range(trunc + 1), repeat=3):
                want = product[idx]
                have = closed[idx] if max(idx) <= top else Fraction(0)
                if want != have:
                    mismatches.append((nu, rho, idx))
    out.append(_check("series", "closed_coefficients", f"nu in {{0,1,2}}^3, rho in 2..4, trunc={trunc}",
                      [], mismatches[:5]))
    bad = []
    for nu in itertools.product(range(3), repeat=3):
        for rho in (2, 3):
            ok, worst, bound = _bound_ok(nu, rho)
            if not ok:
                bad.append((nu, rho, worst, bound))
    out.append(_check("series", "signed_evaluation_bound", "rho in 2..3, signs +-1", [], bad))
    for q in (2, 3):
        z = zeta_p1(q, trunc)
        F = field_of_size(q)
        closed = [effective_divisor_count(q, d) for d in range(trunc + 1)]
        out.append(_check("series", "zeta_closed_form", f"q={q}", closed, [int(z[d]) for d in range(trunc + 1)]))
        enum = [len(effective_divisors(F, d)) for d in range(min(trunc, 5) + 1)]
        out.append(_check("series", "zeta_enumeration", f"q={q}", closed[:len(enum)], enum))
    out.extend(_gcd_sum_checks(gcd_degree))
    out.append(_check("series", "main_term_residue", "q=2", Fraction(2, 3), main_term_residue(2)))
    out.append(_check("series", "cone_constant", "alpha", Fraction(1, 24), alpha_S()))
    return out


def _gcd_sum_checks(max_total: int) -> list[Check]:
    F = field_of_size(2)
    pts = closed_points(F, 2)
    choices = [DivisorP1(), DivisorP1.point(pts[1][0]), DivisorP1.point(pts[2][0])]
    out = []
    for r in (1, 2):
        for D in itertools.product(choices, repeat=r):
            for d in itertools.product(range(max_total + 1), repeat=r):
                if sum(d) > max_total:
                    continue
                brute = gcd_sum_brute(F, D, d)
                euler = gcd_sum_euler(F, D, d, cutoff=max_total)
                case = f"q=2 D-degrees={[x.degree for x in D]} d={list(d)}"
                out.append(_check("series", "gcd_sum_euler_product", case, brute, euler))
    return out


# ---------------------------------------------------------------------------
# kernel dimensions

def _random_form(rng: random.Random, F, deg: int) -> BinaryForm:
    while True:
        coeffs = tuple(rng.randrange(F.q) for _ in range(deg + 1))
        if any(coeffs):
            return BinaryForm(F, coeffs)


def _structured_form(rng: random.Random, F, deg: int, common: BinaryForm | None) -> BinaryForm:
    # bias towards shared factors so gcd terms are exercised
    if common is not None and common.d <= deg and rng.random() < 0.5:
        return common * _random_form(rng, F, deg - common.d)
    return _random_form(rng, F, deg)


def suite_kernel(q_list: Sequence[int] = (2, 3), instances: int = 200, seed: int = DEFAULT_SEED,
                 image_delta: int = 6) -> list[Check]:
    rng = random.Random(seed)
    out = []
    formula_bad, formula_seen = [], 0
    while formula_seen < instances:
        q = q_list[formula_seen % len(q_list)]
        F = field_of_size(q)
        degs = [rng.randrange(0, 4) for _ in range(3)]
        common = _random_form(rng, F, rng.randrange(0, 2))
        forms = [_structured_form(rng, F, k, common) for k in degs]
        low = max(max(degs), degs[0] + degs[1] - 1, degs[1] + degs[2] - 1, 0)
        delta = low + rng.randrange(0, 3)
        dim, flag = kernel_dim3(*forms, delta)
        formula_seen += 1
        if flag is not True:
            formula_bad.append((q, [f.coeffs for f in forms], delta, dim))
    out.append(_check("kernel", "three_term_dimension", f"{instances} instances over q in {list(q_list)}",
                      [], formula_bad[:5]))

    inj_bad, bound_bad, t3_bad = [], [], []
    for k in range(instances):
        q = q_list[k % len(q_list)]
        F = field_of_size(q)
        degs = [rng.randrange(0, 5) for _ in range(2)]
        common = _random_form(rng, F, rng.randrange(0, 3))
        s1, s2 = (_structured_form(rng, F, dd, common) for dd in degs)
        g = form_gcd(s1, s2).d
        delta = max(degs) + rng.randrange(0, 5)
        dim = kernel_dim2(s1, s2, delta)
        threshold = s1.d + s2.d - g
        if delta < threshold and dim != 0:
            inj_bad.append((q, s1.coeffs, s2.coeffs, delta, dim))
        if delta >= threshold and dim > 1 + delta - threshold:
            bound_bad.append((q, s1.coeffs, s2.coeffs, delta, dim))
        s3 = _random_form(rng, F, rng.randrange(0, 3))
        delta3 = max(delta, s3.d)
        # both bounds presuppose a triple without common factor
        if form_gcd(form_gcd(s1, s2), s3).d == 0:
            count = kernel_t3_nonzero_count(s1, s2, s3, delta3)
            general = q ** (2 + 2 * delta3 - s1.d - s2.d - s3.d) + q ** (1 + delta3 - s3.d)
            if count > general:
                t3_bad.append(("general", q, s1.coeffs, s2.coeffs, s3.coeffs, delta3, count))
            if delta3 >= s1.d + s2.d - 1 and count > q ** (2 + 2 * delta3 - s1.d - s2.d - s3.d):
                t3_bad.append(("paired", q, s1.coeffs, s2.coeffs, s3.coeffs, delta3, count))
    out.append(_check("kernel", "two_term_injectivity", f"{instances} instances", [], inj_bad[:5]))
    out.append(_check("kernel", "two_term_dimension_bound", f"{instances} instances", [], bound_bad[:5]))
    out.append(_check("kernel", "nonzero_t3_bound", f"{instances} instances", [], t3_bad[:5]))
    out.extend(_image_checks(image_delta))
    return out


def _image_checks(max_delta: int) -> list[Check]:
    F = field_of_size(2)
    bad, seen = [], 0
    for d1 in range(0, 4):
        for d2 in range(d1, 4):
            for s1 in normalized_forms(F, d1):
                for s2 in normalized_forms(F, d2):
                    g = form_gcd(s1, s2)
                    start = max(d1 + d2 - g.d - 1, d2)
                    for delta in range(start, max_delta + 1):
                        seen += 1
                        if image_of_map2(s1, s2, delta) != multiples_of(g, delta):
                            bad.append((s1.coeffs, s2.coeffs, delta))
    return [_check("kernel", "two_term_image", f"q=2, delta <= {max_delta}, {seen} cases", [], bad[:5])]


# ---------------------------------------------------------------------------
# Möbius function

def suite_moebius(seed: int = DEFAULT_SEED) -> list[Check]:
    vecs = list(binary_vectors())
    out = []
    bad = [n for n in vecs
           if int(S_MOEBIUS.allowed(n)) != sum(S_MOEBIUS.mu0(m) for m in vecs
                                               if all(a <= b for a, b in zip(m, n)))]
    out.append(_check("moebius", "indicator_inversion", "128 vectors", [], bad))
    bad = [n for n in vecs if any(n) and S_MOEBIUS.allowed(n) and S_MOEBIUS.mu0(n) != 0]
    out.append(_check("moebius", "vanishes_on_allowed", "nonzero allowed vectors", [], bad))
    sums = [sum(S_MOEBIUS.mu0((e0,) + rest) for rest in itertools.product((0, 1), repeat=6)) for e0 in (0, 1)]
    out.append(_check("moebius", "slice_sums", "e0 in {0,1}", [0, 0], sums))
    fam_a = [n for n in vecs if sum(n) == 1 and S_MOEBIUS.mu0(n)]
    fam_b = [n for n in vecs if any(n) and not any(n[:4]) and S_MOEBIUS.mu0(n)]
    fam_c = [n for n in vecs
             for i in (1, 2, 3)
             if n[0] == 0 and n[i] == 1 and n[3 + i] == 1
             and all(n[j] == 0 for j in (1, 2, 3) if j != i) and S_MOEBIUS.mu0(n)]
    out.append(_check("moebius", "vanishes_single_one", "sum = 1", [], fam_a))
    out.append(_check("moebius", "vanishes_without_s", "nonzero, e = 0", [], fam_b))
    out.append(_check("moebius", "vanishes_lone_exceptional", "e0 = 0, e_i = f_i = 1, other e = 0", [], fam_c))
    out.append(_check("moebius", "higher_multiplicity_zero", "entry 2",
                      0, S_MOEBIUS.mu0((0, 2, 0, 0, 0, 0, 0))))
    out.extend(_multiplicativity_checks(seed))
    return out


def _random_tuple(rng: random.Random, pts, slots=7) -> DivTuple7:
    divs = []
    for _ in range(slots):
        m = {}
        for P in pts:
            if rng.random() < 0.3:
                m[P] = 1
        divs.append(DivisorP1(m))
    return DivTuple7(*divs)


def _multiplicativity_checks(seed: int) -> list[Check]:
    rng = random.Random(seed)
    F = field_of_size(2)
    pts = [P for lst in closed_points(F, 2).values() for P in lst]
    bad = []
    for _ in range(50):
        rng.shuffle(pts)
        half = len(pts) // 2
        A = _random_tuple(rng, pts[:half])
        B = _random_tuple(rng, pts[half:])
        joint = DivTuple7(*(a + b for a, b in zip(A, B)))
        if S_MOEBIUS.mu_div(joint) != S_MOEBIUS.mu_div(A) * S_MOEBIUS.mu_div(B):
            bad.append((A, B))
    return [_check("moebius", "multiplicative", "50 disjoint pairs over F_2", [], bad)]


# ---------------------------------------------------------------------------
# counting decomposition

def _random_small_tuple(rng: random.Random, F, max_weight: int) -> DivTuple7:
    pts = [P for lst in closed_points(F, 2).values() for P in lst]
    divs = [{} for _ in range(7)]
    budget = max_weight
    while budget > 0 and rng.random() < 0.6:
        slot = rng.randrange(7)
        P = rng.choice(pts)
        if P.degree > budget:
            break
        divs[slot][P] = divs[slot].get(P, 0) + 1
        budget -= P.degree
    return DivTuple7(*(DivisorP1(m) for m in divs))


def suite_decomposition(q_list: Sequence[int] = (2, 3), instances: int = 50, max_n: int = 6,
                        seed: int = DEFAULT_SEED) -> list[Check]:
    rng = random.Random(seed)
    out = []
    vectors = [d for n in range(max_n + 1) for d in degree_vectors(n)]
    bad = []
    for k in range(instances):
        q = q_list[k % len(q_list)]
        F = field_of_size(q)
        d = rng.choice(vectors)
        E = _random_small_tuple(rng, F, 3)
        lhs = count_NS(F, d, E, "zero0")
        rhs = (count_NS(F, d, E, "full") + sum(count_NS(F, d, E, f"drop{j}") for j in (1, 2, 3))
               - 2 * count_NS(F, d, E, "prod4"))
        if lhs != rhs:
            bad.append((q, d, E.degrees(), lhs, rhs))
    out.append(_check("decomposition", "zero_t_split", f"{instances} random (d, E), q in {list(q_list)}",
                      [], bad))

    F = field_of_size(2)
    tuples = [ZERO_TUPLE] + [_random_small_tuple(rng, F, 2) for _ in range(6)]
    closed_bad, closed_seen, bound_bad, bound_seen = [], 0, [], 0
    for E in tuples:
        for d in vectors:
            if sum(phi(i, d, E) >= -1 for i in (1, 2, 3)) >= 2:
                closed_seen += 1
                brute = count_NS(F, d, E, "zero0")
                closed = count_NS0_closed(F, d, E)
                if brute != closed:
                    closed_bad.append((d, E.degrees(), brute, closed))
            if min(psi(i, d, E) for i in (1, 2, 3)) >= 0:
                bound_seen += 1
                value = count_NS(F, d, E, "drop1")
                if value > NS1_bound(F, d, E):
                    bound_bad.append((d, E.degrees(), value))
    out.append(_check("decomposition", "zero_t_closed_form", f"q=2, n(d) <= {max_n}, {closed_seen} cases",
                      [], closed_bad))
    out.append(_check("decomposition", "dropped_term_bound", f"q=2, n(d) <= {max_n}, {bound_seen} cases",
                      [], bound_bad))
    return out


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "local": suite_local,
    "series": suite_series,
    "kernel": suite_kernel,
    "moebius": suite_moebius,
    "decomposition": suite_decomposition,
}
