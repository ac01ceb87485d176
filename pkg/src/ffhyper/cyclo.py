"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are kept in canonical form: rational coordinates on the power basis
{zeta_m^i : 0 <= i < phi(m)} after reduction modulo the m-th cyclotomic
polynomial.  Equality is therefore coefficient comparison; no floating point
is involved anywhere except the explicitly approximate ``embed_complex``.

Internally a CycloNum stores an integer numerator vector plus one positive
integer denominator, normalized so the gcd of all entries with the
denominator is 1.  This keeps the hot multiply path (integer convolution +
synthetic division, see ``ffhyper.kernel``) free of per-coefficient rational
normalization.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

from . import kernel


class ConductorMismatch(ValueError):
    """Raised when binary arithmetic mixes conductors neither of which divides the other."""


class DivisionByZero(ZeroDivisionError):
    pass


class NotCoprime(ValueError):
    pass


class NotDivisor(ValueError):
    pass


def _phi(m: int) -> int:
    out, n, p = 1, m, 2
    while p * p <= n:
        if n % p == 0:
            out *= p - 1
            n //= p
            while n % p == 0:
                out *= p
                n //= p
        p += 1
    if n > 1:
        out *= n - 1
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (low-to-high coefficients)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c % lead:
            raise ArithmeticError("non-exact polynomial division")
        q = c // lead
        out[k - dn] = q
        if q:
            for i, d in enumerate(den):
                num[k - dn + i] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


_CYCLO_CACHE: dict[int, list[int]] = {}


def cyclo_modulus(m: int) -> list[int]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial Phi_m."""
    if m < 1:
        raise ValueError("conductor must be positive")
    if m in _CYCLO_CACHE:
        return _CYCLO_CACHE[m]
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclo_modulus(d))
    _CYCLO_CACHE[m] = poly
    return poly


class _Ctx:
    """Per-conductor precomputations: Phi_m tail, zeta-power rows, subfield solvers."""

    def __init__(self, m: int):
        self.m = m
        phi_poly = cyclo_modulus(m)
        self.phi = len(phi_poly) - 1
        tail = phi_poly[:-1]
        self.phi_idx = [i for i, c in enumerate(tail) if c]
        self.phi_val = [c for c in tail if c]
        self._rows: dict[int, tuple[int, ...]] = {}
        self._solvers: dict[int, tuple] = {}

    def row(self, t: int) -> tuple[int, ...]:
        """Canonical integer coordinates of zeta_m^t."""
        t %= self.m
        r = self._rows.get(t)
        if r is None:
            if t < self.phi:
                r = tuple(1 if i == t else 0 for i in range(self.phi))
            else:
                vec = [0] * t + [1]
                r = tuple(kernel.poly_reduce(vec, self.phi, self.phi_idx, self.phi_val))
            self._rows[t] = r
        return r

    def subfield_solver(self, d: int):
        """Exact solver expressing elements in the power basis of Q(zeta_d)."""
        sol = self._solvers.get(d)
        if sol is None:
            phid = _phi(d)
            step = self.m // d
            basis = [self.row(step * j) for j in range(phid)]  # phid rows of length phi
            # pick pivot coordinates making the phid x phid minor invertible
            pivots: list[int] = []
            for i in range(self.phi):
                if len(pivots) == phid:
                    break
                trial = pivots + [i]
                sub = [[Fraction(basis[j][p]) for j in range(phid)] for p in trial]
                if _rank(sub) == len(trial):
                    pivots = trial
            sub = [[Fraction(basis[j][p]) for j in range(phid)] for p in pivots]
            inv = _invert(sub)
            sol = (d, phid, step, pivots, inv, basis)
            self._solvers[d] = sol
        return sol


def _rank(rows) -> int:
    rows = [r[:] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _invert(mat):
    """Inverse of a square Fraction matrix via Gauss-Jordan."""
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


_CTX_CACHE: dict[int, _Ctx] = {}


def _ctx(m: int) -> _Ctx:
    c = _CTX_CACHE.get(m)
    if c is None:
        c = _CTX_CACHE[m] = _Ctx(m)
    return c


class CycloNum:
    """An exact element of Q(zeta_m) in canonical reduced coordinates."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num, den: int = 1, _normalized: bool = False):
        self.m = m
        if _normalized:
            self.num = tuple(num)
            self.den = den
            return
        if den == 0:
            raise DivisionByZero("zero denominator")
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            num = [x // g for x in num]
            den //= g
        if not any(num):
            den = 1
        self.num = tuple(num)
        self.den = den

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(m: int, value) -> "CycloNum":
        f = Fraction(value)
        phi = _ctx(m).phi
        return CycloNum(m, [f.numerator] + [0] * (phi - 1), f.denominator)

    @staticmethod
    def zero(m: int) -> "CycloNum":
        return CycloNum(m, [0] * _ctx(m).phi, 1, _normalized=True)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is irrational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other) -> tuple["CycloNum", "CycloNum"]:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(self.m, other)
        if self.m == other.m:
            return self, other
        if other.m % self.m == 0:
            return lift(self, other.m), other
        if self.m % other.m == 0:
            return self, lift(other, self.m)
        raise ConductorMismatch(f"conductors {self.m} and {other.m}")

    def __add__(self, other):
        a, b = self._coerce(other)
        da, db = a.den, b.den
        if da == db:
            return CycloNum(a.m, [x + y for x, y in zip(a.num, b.num)], da)
        return CycloNum(a.m, [x * db + y * da for x, y in zip(a.num, b.num)], da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.m, [-x for x in self.num], self.den, _normalized=True)

    def __sub__(self, other):
        a, b = self._coerce(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a.is_zero() or b.is_zero():
            return CycloNum.zero(a.m)
        c = _ctx(a.m)
        num = kernel.polymul_reduce(list(a.num), list(b.num), c.phi, c.phi_idx, c.phi_val)
        return CycloNum(a.m, num, a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        return a * _inverse(b)

    def __rtruediv__(self, other):
        return CycloNum.from_rational(self.m, other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_rational() == Fraction(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if self.m == other.m:
            return self.num == other.num and self.den == other.den
        try:
            a, b = self._coerce(other)
        except ConductorMismatch:
            return self.is_rational() and other.is_rational() and self.as_rational() == other.as_rational()
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        return hash((self.m, self.num, self.den))

    def __repr__(self):
        return f"CycloNum(m={self.m}, coeffs={self.coeffs()})"

    def coeffs(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {"m": self.m, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs()]}

    @staticmethod
    def from_json(obj: dict) -> "CycloNum":
        m = int(obj["m"])
        fracs = [Fraction(s) for s in obj["coeffs"]]
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        return CycloNum(m, [int(f * den) for f in fracs], den)


def root_of_unity(m: int, j: int) -> CycloNum:
    """zeta_m^j in canonical form (j taken mod m)."""
    return CycloNum(m, list(_ctx(m).row(j)), 1)


def lift(a: CycloNum, m2: int) -> CycloNum:
    """Rewrite a in Q(zeta_m2) where conductor(a) | m2."""
    if m2 % a.m:
        raise NotDivisor(f"{a.m} does not divide {m2}")
    if m2 == a.m:
        return a
    c = _ctx(m2)
    step = m2 // a.m
    out = [0] * c.phi
    for i, x in enumerate(a.num):
        if x:
            for k, r in enumerate(c.row(step * i)):
                if r:
                    out[k] += x * r
    return CycloNum(m2, out, a.den)


def galois_apply(s: int, a: CycloNum) -> CycloNum:
    """The automorphism zeta_m -> zeta_m^s applied to a; requires gcd(s, m) = 1."""
    m = a.m
    s %= m
    if gcd(s, m) != 1:
        raise NotCoprime(f"gcd({s}, {m}) != 1")
    if s == 1:
        return a
    c = _ctx(m)
    out = [0] * c.phi
    for i, x in enumerate(a.num):
        if x:
            for k, r in enumerate(c.row(s * i % m)):
                if r:
                    out[k] += x * r
    return CycloNum(m, out, a.den)


def conjugate(a: CycloNum) -> CycloNum:
    if a.m <= 2:
        return a
    return galois_apply(a.m - 1, a)


def mul_zeta_power(a: CycloNum, t: int) -> CycloNum:
    """a * zeta_m^t, cheaper than a general multiplication."""
    m = a.m
    t %= m
    if t == 0 or a.is_zero():
        return a
    c = _ctx(m)
    out = [0] * c.phi
    for i, x in enumerate(a.num):
        if x:
            for k, r in enumerate(c.row(i + t)):
                if r:
                    out[k] += x * r
    return CycloNum(m, out, a.den)


def in_subfield(a: CycloNum, d: int) -> bool:
    """True iff a is fixed by Gal(Q(zeta_m)/Q(zeta_d)), i.e. lies in Q(zeta_d)."""
    m = a.m
    if m % d:
        raise NotDivisor(f"{d} does not divide {m}")
    if d == m:
        return True
    for s in range(2, m):
        if (s - 1) % d == 0 and gcd(s, m) == 1:
            if galois_apply(s, a) != a:
                return False
    return True


def compress(a: CycloNum, d: int) -> CycloNum | None:
    """Rewrite a with conductor d when a lies in Q(zeta_d); None otherwise."""
    m = a.m
    if m % d:
        raise NotDivisor(f"{d} does not divide {m}")
    if d == m:
        return a
    c = _ctx(m)
    d_, phid, step, pivots, inv, basis = c.subfield_solver(d)
    target = [Fraction(a.num[p], a.den) for p in pivots]
    sol = [sum(inv[i][j] * target[j] for j in range(phid)) for i in range(phid)]
    # verify the candidate against all phi(m) coordinates
    for i in range(c.phi):
        acc = Fraction(0)
        for j in range(phid):
            if basis[j][i]:
                acc += sol[j] * basis[j][i]
        if acc != Fraction(a.num[i], a.den):
            return None
    den = 1
    for f in sol:
        den = den * f.denominator // gcd(den, f.denominator)
    return CycloNum(d, [int(f * den) for f in sol], den)


def embed_complex(a: CycloNum) -> complex:
    """Floating approximation for diagnostics; never used for equality."""
    out = 0j
    for i, x in enumerate(a.num):
        if x:
            out += x * cmath.exp(2j * cmath.pi * i / a.m)
    return out / a.den


def _inverse(b: CycloNum) -> CycloNum:
    """1/b via the extended Euclidean algorithm against Phi_m."""
    if b.is_zero():
        raise DivisionByZero("division by zero CycloNum")
    if b.is_rational():
        r = b.as_rational()
        return CycloNum.from_rational(b.m, Fraction(r.denominator, r.numerator))
    m = b.m
    phi_poly = [Fraction(c) for c in cyclo_modulus(m)]
    bp = [Fraction(x, b.den) for x in b.num]
    while bp and not bp[-1]:
        bp.pop()
    # extended gcd: u*bp + v*Phi = gcd (a nonzero constant, Phi_m irreducible)
    r0, r1 = phi_poly, bp
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise ArithmeticError("Phi_m not coprime to operand")
    const = r1[0]
    inv_coeffs = [c / const for c in s1]
    den = 1
    for f in inv_coeffs:
        den = den * f.denominator // gcd(den, f.denominator)
    vec = [int(f * den) for f in inv_coeffs]
    c = _ctx(m)
    vec = kernel.poly_reduce(vec, c.phi, c.phi_idx, c.phi_val)
    return CycloNum(m, vec, den)


def _poly_divmod(a, b):
    a = a[:]
    db = len(b) - 1
    inv_lead = 1 / b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k] * inv_lead
        if c:
            q[k - db] = c
            for i, bv in enumerate(b):
                a[k - db + i] -= c * bv
    while a and not a[-1]:
        a.pop()
    return q, a


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
