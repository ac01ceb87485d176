"""Finite fields F_q = F_{p^e} with dense discrete-log, trace and norm tables.

Elements are encoded as integers 0..q-1: the base-p positional code of the
coefficient vector on the polynomial basis 1, x, ..., x^{e-1} modulo a fixed
irreducible.  Both the modulus (lexicographically smallest monic irreducible)
and the multiplicative generator (smallest element code of order q-1) are
deterministic, so rebuilding the same (p, e) always yields identical tables.
"""

from __future__ import annotations

import os
from math import isqrt


class NonPrimeP(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


class ZeroHasNoDlog(ZeroDivisionError):
    pass


DEFAULT_MAX_Q = 1 << 20


def _max_q() -> int:
    return int(os.environ.get("FFHYPER_MAX_Q", DEFAULT_MAX_Q))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _factorize(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _digits(code: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(code % p)
        code //= p
    return out


def _code(digits: list[int], p: int) -> int:
    out = 0
    for d in reversed(digits):
        out = out * p + d
    return out


def _polymulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(e):
                prod[k - e + i] = (prod[k - e + i] - c * modulus[i]) % p
    prod = prod[:e]
    prod += [0] * (e - len(prod))
    return prod


def _poly_powmod(base: list[int], exp: int, modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    result = [1] + [0] * (e - 1)
    cur = base[:]
    while exp:
        if exp & 1:
            result = _polymulmod(result, cur, modulus, p)
        cur = _polymulmod(cur, cur, modulus, p)
        exp >>= 1
    return result


def _is_irreducible(modulus: list[int], p: int) -> bool:
    """Rabin test: x^{p^e} == x mod f and gcd-free at proper prime-index powers."""
    e = len(modulus) - 1
    if e == 1:
        return True
    x = [0, 1] + [0] * (e - 2)
    if e <= 3:
        # degree 2 or 3: irreducible iff no root in F_p
        for r in range(p):
            acc = 0
            for c in reversed(modulus):
                acc = (acc * r + c) % p
            if acc == 0:
                return False
        return True
    xq = _poly_powmod(x, p**e, modulus, p)
    if xq != x:
        return False
    for r in _factorize(e):
        xr = _poly_powmod(x, p ** (e // r), modulus, p)
        diff = [(a - b) % p for a, b in zip(xr, x)]
        if not any(diff):
            return False
        if _poly_gcd_deg(modulus, diff, p) > 0:
            return False
    return True


def _poly_gcd_deg(a: list[int], b: list[int], p: int) -> int:
    a, b = a[:], b[:]
    while any(b):
        while a and a[-1] == 0:
            a.pop()
        while b and b[-1] == 0:
            b.pop()
        if not b:
            break
        if len(a) < len(b):
            a, b = b, a
            continue
        inv = pow(b[-1], p - 2, p)
        shift = len(a) - len(b)
        f = a[-1] * inv % p
        for i, bv in enumerate(b):
            a[i + shift] = (a[i + shift] - f * bv) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return len(a) - 1 if a else -1


class FieldCtx:
    """A concrete finite field with precomputed evaluation tables.

    Immutable after construction; safe to share between threads/processes.
    """

    __slots__ = (
        "p", "e", "q", "modulus", "generator",
        "dlog_table", "exp_table", "trace_table", "neg_table", "one_minus",
    )

    def __init__(self, p, e, q, modulus, generator, dlog, exp, trace, neg, one_minus):
        self.p = p
        self.e = e
        self.q = q
        self.modulus = tuple(modulus)
        self.generator = generator
        self.dlog_table = dlog
        self.exp_table = exp
        self.trace_table = trace
        self.neg_table = neg
        self.one_minus = one_minus

    # element arithmetic on codes ------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.e == 1:
            return (x + y) % self.p
        p = self.p
        return _code([(a + b) % p for a, b in zip(_digits(x, p, self.e), _digits(y, p, self.e))], p)

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg_table[y])

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self.exp_table[(self.dlog_table[x] + self.dlog_table[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("field inverse of 0")
        return self.exp_table[(-self.dlog_table[x]) % (self.q - 1)]

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self.exp_table[(self.dlog_table[x] * k) % (self.q - 1)]

    def dlog(self, x: int) -> int:
        if x == 0:
            raise ZeroHasNoDlog("0 has no discrete logarithm")
        return self.dlog_table[x]

    def from_int(self, n: int) -> int:
        """The image of the rational integer n in the field (code of n*1)."""
        return n % self.p

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def is_square(self, x: int) -> bool:
        if x == 0:
            return True
        if self.p == 2:
            return True
        return self.dlog_table[x] % 2 == 0

    def sqrt_codes(self, x: int) -> list[int]:
        """All square roots of x, [] when x is a non-square."""
        if x == 0:
            return [0]
        d = self.dlog_table[x]
        if self.p == 2:
            return [self.exp_table[d * ((self.q - 1 + 1) // 2) % (self.q - 1)]]
        if d % 2:
            return []
        r = self.exp_table[d // 2]
        return sorted({r, self.neg_table[r]})

    def header(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "q": self.q,
            "modulus": list(self.modulus),
            "generator": self.generator,
        }

    def __repr__(self):
        return f"FieldCtx(q={self.q})"


_FIELD_CACHE: dict[tuple[int, int], FieldCtx] = {}


def build_field(p: int, e: int = 1) -> FieldCtx:
    """Construct F_{p^e} with all tables populated (deterministic)."""
    key = (p, e)
    if key in _FIELD_CACHE:
        return _FIELD_CACHE[key]
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**e
    if q > _max_q():
        raise BoundExceeded(f"q={q} exceeds bound {_max_q()}")

    # lexicographically smallest monic irreducible of degree e
    modulus = None
    if e == 1:
        modulus = [0, 1]
    else:
        for low in range(q):
            cand = _digits(low, p, e) + [1]
            if _is_irreducible(cand, p):
                modulus = cand
                break
    if modulus is None:  # cannot happen: irreducibles of every degree exist
        raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")

    # smallest element code of multiplicative order exactly q-1
    order_factors = _factorize(q - 1)
    generator = None
    for cand in range(1, q):
        digs = _digits(cand, p, e)
        ok = all(
            _poly_powmod(digs, (q - 1) // r, modulus, p) != [1] + [0] * (e - 1)
            for r in order_factors
        )
        if ok:
            generator = cand
            break
    if generator is None:
        raise AssertionError("no multiplicative generator found")

    # exponent and dlog tables from successive powers of the generator
    exp = [0] * (q - 1)
    dlog = [-1] * q
    cur = [1] + [0] * (e - 1)
    gd = _digits(generator, p, e)
    for i in range(q - 1):
        code = _code(cur, p)
        exp[i] = code
        dlog[code] = i
        cur = _polymulmod(cur, gd, modulus, p)
    if _code(cur, p) != 1:
        raise AssertionError("generator order check failed")

    # traces to F_p: Tr(x) = sum x^{p^i}
    trace = [0] * q
    for x in range(1, q):
        d = dlog[x]
        acc = [0] * e
        pe = 1
        for _ in range(e):
            y = _digits(exp[(d * pe) % (q - 1)], p, e)
            acc = [(a + b) % p for a, b in zip(acc, y)]
            pe *= p
        if any(acc[1:]):
            raise AssertionError("trace not in prime field")
        trace[x] = acc[0]

    neg = [0] * q
    one_minus = [0] * q
    for x in range(q):
        digs = _digits(x, p, e)
        neg[x] = _code([(-a) % p for a in digs], p)
        om = [(-a) % p for a in digs]
        om[0] = (om[0] + 1) % p
        one_minus[x] = _code(om, p)

    ctx = FieldCtx(p, e, q, modulus, generator, dlog, exp, trace, neg, one_minus)
    _FIELD_CACHE[key] = ctx
    return ctx


class FieldEmbedding:
    """A ring embedding F_q -> F_{q^l} with norm data."""

    __slots__ = ("base", "ext", "l", "embed_map", "_reverse", "norm_exponent")

    def __init__(self, base: FieldCtx, ext: FieldCtx, l: int, embed_map: list[int]):
        self.base = base
        self.ext = ext
        self.l = l
        self.embed_map = embed_map
        self._reverse = {v: k for k, v in enumerate(embed_map)}
        self.norm_exponent = (ext.q - 1) // (base.q - 1)

    def embed(self, x: int) -> int:
        return self.embed_map[x]

    def norm(self, x: int) -> int:
        """N_l(x) = x^{(q^l-1)/(q-1)}, expressed as a base-field code; N(0)=0."""
        if x == 0:
            return 0
        y = self.ext.pow(x, self.norm_exponent)
        back = self._reverse.get(y)
        if back is None:
            raise AssertionError("norm image not in embedded base field")
        return back


def build_embedding(base: FieldCtx, l: int) -> FieldEmbedding:
    """Embed F_q into F_{q^l} (deterministic: smallest root of the base modulus)."""
    if l < 1:
        raise ValueError("embedding degree must be >= 1")
    ext = build_field(base.p, base.e * l)
    p, eb = base.p, base.e
    if eb == 1:
        emb = [c % p for c in range(base.q)]
    else:
        root = None
        for y in range(ext.q):
            # evaluate the base modulus at y inside ext
            acc = 0
            for c in reversed(base.modulus):
                acc = ext.add(ext.mul(acc, y), c % p)
            if acc == 0:
                root = y
                break
        if root is None:
            raise AssertionError("base modulus has no root in the extension")
        emb = [0] * base.q
        for x in range(base.q):
            digs = _digits(x, p, eb)
            acc = 0
            for c in reversed(digs):
                acc = ext.add(ext.mul(acc, root), c)
            emb[x] = acc
    return FieldEmbedding(base, ext, l, emb)
