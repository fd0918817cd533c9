"""Finite fields F_{p^f}, binary forms on the projective line, closed points and divisors.

Field elements are plain ints in ``range(q)``.  The base-p digits of an element
are its coordinates on the power basis 1, a, a^2, ... of F_q over F_p, where
``a`` is a root of the field modulus.  Polynomials over F_q are tuples of
elements, lowest degree first, with no trailing zeros (the zero polynomial is
the empty tuple).
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

# full q x q tables are built up to this size; beyond it arithmetic goes through
# log/exp tables (multiplication) and digit vectors (addition)
_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over the prime field, used only to build extension fields

def _fp_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = _fp_trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _fp_trim(a)
    return a


def _monic_fp_polys(p, deg):
    for low in itertools.product(range(p), repeat=deg):
        yield tuple(low) + (1,)


def _first_irreducible_fp(p: int, f: int) -> tuple:
    """Lexicographically first monic irreducible of degree f over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients (constant term least significant).  Irreducibility
    is checked by trial division against every monic polynomial of degree
    1..f//2.
    """
    divisors = [m for k in range(1, f // 2 + 1) for m in _monic_fp_polys(p, k)]
    for idx in range(p ** f):
        cand = tuple((idx // p ** j) % p for j in range(f)) + (1,)
        if cand[0] == 0:
            continue
        if all(_fp_mod(cand, m, p) for m in divisors):
            return cand
    raise RuntimeError(f"no irreducible polynomial of degree {f} over F_{p}")


class _LazyTable:
    """Row-indexable stand-in for a q x q table, computing entries on demand."""

    __slots__ = ("_fn",)

    def __init__(self, fn):
        self._fn = fn

    def __getitem__(self, a):
        fn = self._fn
        return _LazyRow(fn, a)


class _LazyRow:
    __slots__ = ("_fn", "_a")

    def __init__(self, fn, a):
        self._fn = fn
        self._a = a

    def __getitem__(self, b):
        return self._fn(self._a, b)


class FieldCtx:
    """Explicit finite field with q = p**f elements.

    ``add_t[a][b]``, ``sub_t[a][b]``, ``mul_t[a][b]`` are total tables for
    q <= 1024 and constant-time lazy equivalents above that.  ``neg`` and
    ``inv`` are lists (``inv[0]`` is 0 and must not be used).
    """

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if f < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** f
        if q > 2 ** 16:
            raise ValueError(f"field size {q} exceeds 2^16")
        self.p, self.f, self.q = p, f, q
        self.modulus = _first_irreducible_fp(p, f) if f >= 2 else None

        # digit matrix: row x holds the F_p coordinates of element x
        self.digits = np.array(
            [[(x // p ** j) % p for j in range(f)] for x in range(q)], dtype=np.int64
        )
        self._weights = np.array([p ** j for j in range(f)], dtype=np.int64)

        # multiplication by the generator a of the power basis
        times_a = [self._times_root(x) for x in range(q)]
        # primitive element and log/exp tables
        self._exp, self._log = self._build_log_tables(times_a)

        self.neg = [self.encode((-self.digits[x]) % p) for x in range(q)]
        self.inv = [0] * q
        for x in range(1, q):
            self.inv[x] = self._exp[(q - 1 - self._log[x]) % (q - 1)]

        if q <= _TABLE_LIMIT:
            dg = self.digits
            add = (dg[:, None, :] + dg[None, :, :]) % p
            self.add_np = (add @ self._weights).astype(np.int64)
            sub = (dg[:, None, :] - dg[None, :, :]) % p
            self.sub_np = (sub @ self._weights).astype(np.int64)
            logs = np.array(self._log, dtype=np.int64)
            exps = np.array(self._exp + self._exp, dtype=np.int64)
            mul = exps[(logs[:, None] + logs[None, :])]
            mul[0, :] = 0
            mul[:, 0] = 0
            self.mul_np = mul
            self.add_t = self.add_np.tolist()
            self.sub_t = self.sub_np.tolist()
            self.mul_t = self.mul_np.tolist()
        else:
            self.add_np = self.sub_np = self.mul_np = None
            self.add_t = _LazyTable(self.add)
            self.sub_t = _LazyTable(self.sub)
            self.mul_t = _LazyTable(self.mul)

    # -- construction helpers
    def encode(self, digs) -> int:
        return int(np.dot(np.asarray(digs, dtype=np.int64) % self.p, self._weights))

    def _times_root(self, x: int) -> int:
        p, f = self.p, self.f
        if f == 1:
            return x  # the power basis of F_p is just 1
        d = [int(v) for v in self.digits[x]]
        top = d[-1]
        shifted = [0] + d[:-1]
        # a^f = -(m_0 + m_1 a + ... + m_{f-1} a^{f-1})
        for j in range(f):
            shifted[j] = (shifted[j] - top * self.modulus[j]) % p
        return self.encode(shifted)

    def _mul_slow(self, x: int, y: int, times_a) -> int:
        # y = sum_j y_j a^j, so x*y = sum_j y_j (x a^j)
        acc = np.zeros(self.f, dtype=np.int64)
        cur = x
        for j in range(self.f):
            yj = int(self.digits[y][j])
            if yj:
                acc += yj * self.digits[cur]
            cur = times_a[cur]
        if self.f == 1:
            return (x * y) % self.p
        return self.encode(acc % self.p)

    def _build_log_tables(self, times_a):
        q = self.q
        if q == 2:
            return [1], [0, 0]
        for g in range(2, q) if self.f == 1 else range(1, q):
            exp = [1]
            x = 1
            seen_one = False
            for _ in range(q - 2):
                x = self._mul_slow(x, g, times_a)
                if x == 1:
                    seen_one = True
                    break
                exp.append(x)
            if not seen_one and self._mul_slow(x, g, times_a) == 1:
                log = [0] * q
                for k, v in enumerate(exp):
                    log[v] = k
                return exp, log
        raise RuntimeError("no primitive element found")

    # -- scalar arithmetic (method form; hot loops use the tables directly)
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.encode(self.digits[a] + self.digits[b])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.encode(self.digits[a] - self.digits[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by zero in finite field")
        return self.mul(a, self.inv[b])

    def root_power(self, j: int) -> int:
        """Element a**j for 0 <= j < f (the power-basis vector e_j)."""
        return self.p ** j

    def __repr__(self):
        if self.f == 1:
            return f"FieldCtx(F_{self.q})"
        return f"FieldCtx(F_{self.q}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash(("FieldCtx", self.p, self.f))

    def __reduce__(self):
        return (make_field, (self.p, self.f))


@functools.lru_cache(maxsize=None)
def make_field(p: int, f: int = 1) -> FieldCtx:
    return FieldCtx(p, f)


def field_of_size(q: int) -> FieldCtx:
    """Field with q elements, q a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    f, r = 0, q
    while r % p == 0:
        r //= p
        f += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return make_field(p, f)


# ---------------------------------------------------------------------------
# univariate polynomials over F_q (tuples, low degree first)

def poly_trim(a: Sequence[int]) -> tuple:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def poly_deg(a: Sequence[int]) -> int:
    return len(a) - 1


def poly_add(F: FieldCtx, a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    add = F.add_t
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add[out[i]][c]
    return poly_trim(out)


def poly_sub(F: FieldCtx, a, b) -> tuple:
    n = max(len(a), len(b))
    sub = F.sub_t
    out = [sub[a[i] if i < len(a) else 0][b[i] if i < len(b) else 0] for i in range(n)]
    return poly_trim(out)


def poly_scale(F: FieldCtx, c: int, a) -> tuple:
    if c == 0:
        return ()
    row = F.mul_t[c]
    return tuple(row[x] for x in a)


def poly_mul(F: FieldCtx, a, b) -> tuple:
    if not a or not b:
        return ()
    add, mul = F.add_t, F.mul_t
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        row = mul[x]
        for j, y in enumerate(b):
            if y:
                out[i + j] = add[out[i + j]][row[y]]
    return tuple(out)


def poly_divmod(F: FieldCtx, a, b) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), poly_trim(a)
    sub, mul = F.sub_t, F.mul_t
    inv_lead = F.inv[b[-1]]
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = mul[a[k + db]][inv_lead]
        quot[k] = c
        if c:
            row = mul[c]
            for i, bi in enumerate(b):
                if bi:
                    a[k + i] = sub[a[k + i]][row[bi]]
    return poly_trim(quot), poly_trim(a[:db])


def poly_mod(F: FieldCtx, a, b) -> tuple:
    return poly_divmod(F, a, b)[1]


def poly_monic(F: FieldCtx, a) -> tuple:
    if not a:
        return ()
    return poly_scale(F, F.inv[a[-1]], a)


def poly_gcd(F: FieldCtx, a, b) -> tuple:
    """Monic gcd (the empty tuple when both inputs vanish)."""
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_powmod(F: FieldCtx, a, e: int, m) -> tuple:
    result = (1,)
    base = poly_mod(F, a, m)
    while e:
        if e & 1:
            result = poly_mod(F, poly_mul(F, result, base), m)
        e >>= 1
        if e:
            base = poly_mod(F, poly_mul(F, base, base), m)
    return result


def poly_eval(F: FieldCtx, a, x: int) -> int:
    add, mul = F.add_t, F.mul_t
    acc = 0
    for c in reversed(a):
        acc = add[mul[acc][x]][c]
    return acc


def is_irreducible(F: FieldCtx, a) -> bool:
    """Ben-Or test: a is irreducible iff gcd(a, x^(q^i) - x) = 1 for i <= deg/2."""
    n = len(a) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    a = poly_monic(F, a)
    x = (0, 1)
    h = x
    for _ in range(n // 2):
        h = poly_powmod(F, h, F.q, a)
        if len(poly_gcd(F, a, poly_sub(F, h, x))) > 1:
            return False
    return True


def monic_polys(F: FieldCtx, deg: int) -> Iterator[tuple]:
    q = F.q
    for idx in range(q ** deg):
        yield tuple((idx // q ** j) % q for j in range(deg)) + (1,)


@functools.lru_cache(maxsize=None)
def monic_irreducibles(F: FieldCtx, deg: int) -> tuple:
    if deg == 1:
        return tuple((c, 1) for c in range(F.q))
    return tuple(m for m in monic_polys(F, deg) if is_irreducible(F, m))


def mobius_number(n: int) -> int:
    result, m, k = 1, n, 2
    while k * k <= m:
        if m % k == 0:
            m //= k
            if m % k == 0:
                return 0
            result = -result
        k += 1
    if m > 1:
        result = -result
    return result


def count_irreducibles(q: int, deg: int) -> int:
    """Number of monic irreducibles of degree deg over F_q (necklace formula)."""
    total = sum(mobius_number(deg // e) * q ** e for e in range(1, deg + 1) if deg % e == 0)
    return total // deg


def count_closed_points(q: int, deg: int) -> int:
    return count_irreducibles(q, deg) + (1 if deg == 1 else 0)


# ---------------------------------------------------------------------------
# closed points and divisors on P^1

@dataclass(frozen=True)
class ClosedPoint:
    """A closed point of P^1: a monic irreducible in X/Y, or ``poly=None`` for infinity."""

    poly: tuple | None = None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else len(self.poly) - 1

    @property
    def is_infinity(self) -> bool:
        return self.poly is None

    def sort_key(self):
        return (self.degree, self.poly is not None, self.poly or ())

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "P(inf)" if self.poly is None else f"P{self.poly}"


INFINITY = ClosedPoint(None)


def closed_points(F: FieldCtx, max_deg: int) -> dict[int, list[ClosedPoint]]:
    """Closed points of P^1 over F of degree 1..max_deg, keyed by degree."""
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    out = {}
    for k in range(1, max_deg + 1):
        pts = [ClosedPoint(m) for m in monic_irreducibles(F, k)]
        if k == 1:
            pts.insert(0, INFINITY)
        out[k] = pts
    return out


class DivisorP1:
    """Effective divisor on P^1: an immutable map ClosedPoint -> positive multiplicity."""

    __slots__ = ("_m", "_hash", "_deg")

    def __init__(self, mults: dict | Iterable | None = None):
        m = {}
        if mults:
            items = mults.items() if isinstance(mults, dict) else mults
            for pt, k in items:
                if k < 0:
                    raise ValueError("effective divisors have nonnegative multiplicities")
                if k:
                    m[pt] = m.get(pt, 0) + k
        self._m = m
        self._hash = None
        self._deg = sum(pt.degree * k for pt, k in m.items())

    @classmethod
    def point(cls, pt: ClosedPoint, mult: int = 1) -> "DivisorP1":
        return cls({pt: mult})

    def mult(self, pt: ClosedPoint) -> int:
        return self._m.get(pt, 0)

    def support(self) -> list[ClosedPoint]:
        return sorted(self._m)

    def items(self):
        return sorted(self._m.items())

    @property
    def degree(self) -> int:
        return self._deg

    def is_zero(self) -> bool:
        return not self._m

    def __add__(self, other: "DivisorP1") -> "DivisorP1":
        m = dict(self._m)
        for pt, k in other._m.items():
            m[pt] = m.get(pt, 0) + k
        return DivisorP1(m)

    def __le__(self, other: "DivisorP1") -> bool:
        return all(other.mult(pt) >= k for pt, k in self._m.items())

    def scaled(self, k: int) -> "DivisorP1":
        return DivisorP1({pt: k * v for pt, v in self._m.items()})

    @staticmethod
    def gcd(*divs: "DivisorP1") -> "DivisorP1":
        if not divs:
            raise ValueError("gcd of an empty family")
        common = set(divs[0]._m)
        for D in divs[1:]:
            common &= set(D._m)
        return DivisorP1({pt: min(D._m[pt] for D in divs) for pt in common})

    def __eq__(self, other):
        return isinstance(other, DivisorP1) and self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._m.items()))
        return self._hash

    def __repr__(self):
        if not self._m:
            return "Div(0)"
        return "Div(" + ", ".join(f"{pt}:{k}" for pt, k in self.items()) + ")"


ZERO_DIVISOR = DivisorP1()


def effective_divisors(F: FieldCtx, deg: int) -> list[DivisorP1]:
    """All effective divisors of the given degree, built as multisets of closed points."""
    if deg == 0:
        return [ZERO_DIVISOR]
    pts = [pt for k, lst in closed_points(F, deg).items() for pt in lst]
    out = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(DivisorP1(acc))
            return
        if i == len(pts):
            return
        pt = pts[i]
        k = 0
        while k * pt.degree <= remaining:
            rec(i + 1, remaining - k * pt.degree, {**acc, pt: k} if k else acc)
            k += 1

    rec(0, deg, {})
    return out


# ---------------------------------------------------------------------------
# binary forms

@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form of degree d in X, Y; ``coeffs[i]`` multiplies X^i Y^(d-i)."""

    field: FieldCtx
    coeffs: tuple

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, F: FieldCtx, d: int) -> "BinaryForm":
        return cls(F, (0,) * (d + 1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def dehomogenized(self) -> tuple:
        return poly_trim(self.coeffs)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        F = self.field
        prod = poly_mul(F, self.coeffs, other.coeffs)
        n = self.d + other.d + 1
        return BinaryForm(F, tuple(prod) + (0,) * (n - len(prod)))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.d != other.d:
            raise ValueError("forms of different degrees")
        add = self.field.add_t
        return BinaryForm(self.field, tuple(add[a][b] for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: int) -> "BinaryForm":
        row = self.field.mul_t[c]
        return BinaryForm(self.field, tuple(row[a] for a in self.coeffs))

    def evaluate(self, x: int, y: int) -> int:
        F = self.field
        add, mul = F.add_t, F.mul_t
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                term = mul[c][mul[F.power(x, i)][F.power(y, self.d - i)]]
                acc = add[acc][term]
        return acc


def form_from_poly(F: FieldCtx, poly, d: int) -> BinaryForm:
    """Homogenize a polynomial in X/Y to a form of degree d >= deg(poly)."""
    poly = poly_trim(poly)
    if len(poly) - 1 > d:
        raise ValueError("polynomial degree exceeds form degree")
    return BinaryForm(F, tuple(poly) + (0,) * (d + 1 - len(poly)))


def form_gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """Normalized gcd of two forms (not both zero)."""
    F = a.field
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero forms")
    if a.is_zero():
        return canonical_form(F, divisor_of(b))
    if b.is_zero():
        return canonical_form(F, divisor_of(a))
    pa, pb = a.dehomogenized(), b.dehomogenized()
    g = poly_gcd(F, pa, pb)
    inf = min(a.d - (len(pa) - 1), b.d - (len(pb) - 1))
    return form_from_poly(F, g, len(g) - 1 + inf)


def gcd_degree(F: FieldCtx, a: tuple, b: tuple, da: int, db: int) -> int:
    """Degree of the gcd of two nonzero forms given as raw coefficient tuples."""
    pa, pb = poly_trim(a), poly_trim(b)
    inf = min(da - (len(pa) - 1), db - (len(pb) - 1))
    return len(poly_gcd(F, pa, pb)) - 1 + inf


@functools.lru_cache(maxsize=200_000)
def factor_poly(F: FieldCtx, poly: tuple) -> tuple[int, tuple]:
    """Factor a nonzero polynomial as unit * prod(monic irreducible ** mult).

    Returns ``(unit, ((factor, mult), ...))`` with factors sorted by degree.
    Trial division by monic irreducibles of increasing degree.
    """
    poly = poly_trim(poly)
    if not poly:
        raise ValueError("cannot factor the zero polynomial")
    unit = poly[-1]
    rest = poly_monic(F, poly)
    factors = []
    k = 1
    while len(rest) - 1 >= 2 * k:
        for m in monic_irreducibles(F, k):
            e = 0
            while True:
                quo, rem = poly_divmod(F, rest, m)
                if rem:
                    break
                rest = quo
                e += 1
            if e:
                factors.append((m, e))
            if len(rest) - 1 < 2 * k:
                break
        k += 1
    if len(rest) > 1:
        factors.append((rest, 1))
    factors.sort(key=lambda t: (len(t[0]), t[0]))
    return unit, tuple(factors)


def divisor_of(form: BinaryForm) -> DivisorP1:
    """Divisor of zeros of a nonzero form; the point at infinity is Y = 0."""
    if form.is_zero():
        raise ValueError("the zero form has no divisor")
    poly = form.dehomogenized()
    inf = form.d - (len(poly) - 1)
    _, factors = factor_poly(form.field, poly)
    m = {ClosedPoint(fac): e for fac, e in factors}
    if inf:
        m[INFINITY] = inf
    return DivisorP1(m)


def factor_form(form: BinaryForm) -> tuple[int, DivisorP1]:
    """(unit, divisor) with form = unit * canonical_form(divisor)."""
    unit, _ = factor_poly(form.field, form.dehomogenized())
    return unit, divisor_of(form)


def canonical_form(F: FieldCtx, D: DivisorP1) -> BinaryForm:
    """The form with divisor D whose leading nonzero coefficient is 1."""
    poly = (1,)
    inf = 0
    for pt, k in D.items():
        if pt.is_infinity:
            inf = k
        else:
            for _ in range(k):
                poly = poly_mul(F, poly, pt.poly)
    return form_from_poly(F, poly, len(poly) - 1 + inf)


# ---------------------------------------------------------------------------
# enumeration

def form_count(F: FieldCtx, d: int, nonzero_only: bool = False) -> int:
    return F.q ** (d + 1) - (1 if nonzero_only else 0)


def form_at(F: FieldCtx, d: int, index: int) -> tuple:
    """Coefficient tuple of the index-th form of degree d (base-q digits of index)."""
    q = F.q
    return tuple((index // q ** j) % q for j in range(d + 1))


def enumerate_forms(
    F: FieldCtx,
    d: int,
    nonzero_only: bool = False,
    start: int = 0,
    stop: int | None = None,
    raw: bool = False,
):
    """Forms of degree d in a fixed order, optionally restricted to positions [start, stop).

    Positions refer to the stream itself, so disjoint ranges partition it.
    With ``raw=True`` coefficient tuples are yielded instead of BinaryForm objects.
    """
    if d < 0:
        raise ValueError("degree must be >= 0")
    total = form_count(F, d, nonzero_only)
    stop = total if stop is None else min(stop, total)
    offset = 1 if nonzero_only else 0
    q = F.q
    if start >= stop:
        return
    # odometer from the first index, cheaper than repeated digit extraction
    digits = list(form_at(F, d, start + offset))
    for _ in range(start, stop):
        yield tuple(digits) if raw else BinaryForm(F, tuple(digits))
        for j in range(d + 1):
            digits[j] += 1
            if digits[j] < q:
                break
            digits[j] = 0


def normalized_forms(F: FieldCtx, d: int, raw: bool = False):
    """Nonzero forms of degree d whose leading nonzero coefficient is 1.

    These are representatives of nonzero forms modulo scalars, i.e. of the
    effective divisors of degree d.
    """
    q = F.q
    for top in range(d, -1, -1):
        for idx in range(q ** top):
            low = tuple((idx // q ** j) % q for j in range(top))
            coeffs = low + (1,) + (0,) * (d - top)
            yield coeffs if raw else BinaryForm(F, coeffs)
