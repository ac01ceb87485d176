"""Multiplicative and additive characters, Gauss and Jacobi sums, Pochhammer symbols.

Conventions
-----------
The character group of F_q* is cyclic of order n = q-1, generated by the
character omega with omega(g) = zeta_n for the field's fixed generator g.
A character is labeled by its index j: chi = omega^j, and every character
vanishes at 0.  The additive character is pinned to psi(x) = zeta_p^{Tr(x)}.

Value conductors: purely multiplicative quantities (character values, Jacobi
sums) live in Q(zeta_{q-1}); anything involving psi (Gauss sums, Pochhammer
symbols) lives in Q(zeta_{p(q-1)}).  gcd(p, q-1) = 1, so inside the working
conductor m = p(q-1) we take zeta_p = zeta_m^{q-1} and zeta_{q-1} = zeta_m^p,
consistent with CycloNum lifting.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloNum, compress, root_of_unity
from .field import FieldCtx

GAUSS_TABLE_MAX_Q = 128


class MultChar:
    """The multiplicative character omega^j of a field."""

    __slots__ = ("field", "j")

    def __init__(self, field: FieldCtx, j: int):
        self.field = field
        self.j = j % (field.q - 1)

    def __mul__(self, other: "MultChar") -> "MultChar":
        return MultChar(self.field, self.j + other.j)

    def __pow__(self, k: int) -> "MultChar":
        return MultChar(self.field, self.j * k)

    def conj(self) -> "MultChar":
        return MultChar(self.field, -self.j)

    def is_trivial(self) -> bool:
        return self.j == 0

    def order(self) -> int:
        from math import gcd

        n = self.field.q - 1
        return n // gcd(n, self.j)

    def __eq__(self, other):
        return isinstance(other, MultChar) and self.field is other.field and self.j == other.j

    def __hash__(self):
        return hash((id(self.field), self.j))

    def __repr__(self):
        return f"MultChar(q={self.field.q}, j={self.j})"


class AddChar:
    """psi(x) = zeta_p^{Tr(x)}; nontrivial because the trace is onto F_p."""

    __slots__ = ("field",)

    def __init__(self, field: FieldCtx):
        self.field = field

    def eval(self, x: int) -> CycloNum:
        return root_of_unity(self.field.p, self.field.trace_table[x])

    def __repr__(self):
        return f"AddChar(q={self.field.q})"


def trivial_char(field: FieldCtx) -> MultChar:
    return MultChar(field, 0)


def quadratic_char(field: FieldCtx) -> MultChar:
    if field.q % 2 == 0:
        raise ValueError("quadratic character requires odd q")
    return MultChar(field, (field.q - 1) // 2)


def char_by_name(field: FieldCtx, name: str) -> MultChar:
    """CLI-facing names: 'e', 'phi', 'sigma', 'rho', or 'w^j'."""
    n = field.q - 1
    name = name.strip()
    if name in ("e", "eps", "epsilon"):
        return MultChar(field, 0)
    if name == "phi":
        return quadratic_char(field)
    if name == "sigma":
        if n % 4:
            raise ValueError(f"no quartic character: 4 does not divide {n}")
        return MultChar(field, n // 4)
    if name == "rho":
        if n % 3:
            raise ValueError(f"no cubic character: 3 does not divide {n}")
        return MultChar(field, n // 3)
    if name.startswith("w^"):
        return MultChar(field, int(name[2:]))
    raise ValueError(f"unknown character name: {name!r}")


def char_eval(chi: MultChar, x: int) -> CycloNum:
    """chi(x) in Q(zeta_{q-1}); zero at x = 0."""
    F = chi.field
    n = F.q - 1
    if x == 0:
        return CycloNum.zero(n)
    return root_of_unity(n, chi.j * F.dlog_table[x])


class GaussTables:
    """Per-field caches: Gauss sums, their exact inverses, Jacobi sums."""

    def __init__(self, F: FieldCtx):
        self.F = F
        self.n = F.q - 1
        self.m_psi = F.p * (F.q - 1)
        self._plain: list[CycloNum] | None = None
        self._inv_plain: list[CycloNum] | None = None
        self._jacobi: dict[tuple[int, ...], CycloNum] = {}

    def sign_minus1(self, j: int) -> int:
        """chi(-1) = +-1 for chi = omega^j."""
        if self.F.p == 2:
            return 1
        return -1 if (j * ((self.F.q - 1) // 2)) % (self.F.q - 1) else 1

    def _build(self):
        F = self.F
        if F.q > GAUSS_TABLE_MAX_Q:
            raise ValueError(
                f"gauss table for q={F.q} exceeds supported size {GAUSS_TABLE_MAX_Q}"
            )
        n, m, p, q = self.n, self.m_psi, F.p, F.q
        # g(omega^j) = -sum_x zeta_p^{Tr x} omega^j(x); exponents in zeta_m
        vecs = [[0] * m for _ in range(n)]
        for x in range(1, q):
            t = (q - 1) * F.trace_table[x]
            d = F.dlog_table[x]
            for j in range(n):
                vecs[j][(t + p * j * d % m) % m] -= 1
        self._plain = [_from_root_sum(m, v) for v in vecs]
        # 1/g(chi) = chi(-1) g_circle(conj chi) / q  (exact, valid for all chi)
        inv = []
        for j in range(n):
            gbar = self._plain[(-j) % n]
            if j == 0:
                inv.append(CycloNum.from_rational(m, 1))
            else:
                val = gbar * Fraction(self.sign_minus1(j), q)
                inv.append(val)
        self._inv_plain = inv

    def gauss(self, j: int, circle: bool = False) -> CycloNum:
        if self._plain is None:
            self._build()
        g = self._plain[j % self.n]
        if circle and j % self.n == 0:
            return g * self.F.q
        return g

    def inv_gauss(self, j: int, circle: bool = False) -> CycloNum:
        """Exact reciprocal 1/g (or 1/g_circle) via the reflection identity."""
        if self._inv_plain is None:
            self._build()
        v = self._inv_plain[j % self.n]
        if circle and j % self.n == 0:
            return v * Fraction(1, self.F.q)
        return v

    def jacobi(self, idx: tuple[int, ...]) -> CycloNum:
        """j(chi_1, ..., chi_k) in Q(zeta_{q-1}) by the Gauss-sum quotient formula."""
        idx = tuple(i % self.n for i in idx)
        val = self._jacobi.get(idx)
        if val is not None:
            return val
        q = self.F.q
        if not any(idx):
            val = CycloNum.from_rational(self.n, Fraction(1 - (1 - q) ** len(idx), q))
        else:
            acc = self.gauss(idx[0])
            for i in idx[1:]:
                acc = acc * self.gauss(i)
            acc = acc * self.inv_gauss(sum(idx), circle=True)
            val = compress(acc, self.n)
            if val is None:
                raise AssertionError("Jacobi sum not in Q(zeta_{q-1})")
        self._jacobi[idx] = val
        return val


def _from_root_sum(m: int, vec: list[int]) -> CycloNum:
    """sum_t vec[t] * zeta_m^t, reduced to canonical form."""
    from .cyclo import _ctx

    c = _ctx(m)
    out = [0] * c.phi
    for t, v in enumerate(vec):
        if v:
            row = c.row(t)
            for k in range(c.phi):
                if row[k]:
                    out[k] += v * row[k]
    return CycloNum(m, out)


_TABLES: dict[tuple[int, int], GaussTables] = {}


def tables(F: FieldCtx) -> GaussTables:
    key = (F.p, F.e)
    t = _TABLES.get(key)
    if t is None:
        t = _TABLES[key] = GaussTables(F)
    return t


def gauss(F: FieldCtx, chi: MultChar, variant: str = "plain") -> CycloNum:
    """The Gauss sum g(chi), or its modified variant g_circle = q^{delta} g."""
    if variant not in ("plain", "circle"):
        raise ValueError("variant must be 'plain' or 'circle'")
    return tables(F).gauss(chi.j, circle=(variant == "circle"))


def gauss_table(F: FieldCtx) -> list[CycloNum]:
    """g(omega^j) for all j, memoized per field."""
    t = tables(F)
    return [t.gauss(j) for j in range(F.q - 1)]


def jacobi(F: FieldCtx, chis: list[MultChar]) -> CycloNum:
    """Jacobi sum of one or more characters (quotient formula, exact)."""
    if not chis:
        raise ValueError("need at least one character")
    return tables(F).jacobi(tuple(c.j for c in chis))


def jacobi_bruteforce(F: FieldCtx, chis: list[MultChar]) -> CycloNum:
    """Independent oracle: (-1)^{n-1} sum over x_1+...+x_n = 1 of prod chi_i(x_i)."""
    import itertools

    n_chars = len(chis)
    if n_chars < 1:
        raise ValueError("need at least one character")
    n = F.q - 1
    idx = [c.j for c in chis]
    vec = [0] * n
    sign = (-1) ** (n_chars - 1)
    for head in itertools.product(range(F.q), repeat=n_chars - 1):
        s = 0
        for h in head:
            s = F.add(s, h)
        last = F.sub(1, s)
        xs = head + (last,)
        if 0 in xs:
            continue
        t = 0
        for j, x in zip(idx, xs):
            t = (t + j * F.dlog_table[x]) % n
        vec[t] += sign
    return _from_root_sum(n, vec)


def pochhammer(F: FieldCtx, alpha: MultChar, nu: MultChar, variant: str = "plain") -> CycloNum:
    """(alpha)_nu = g(alpha nu)/g(alpha); circle variant uses g_circle throughout."""
    if variant not in ("plain", "circle"):
        raise ValueError("variant must be 'plain' or 'circle'")
    t = tables(F)
    circ = variant == "circle"
    return t.gauss(alpha.j + nu.j, circle=circ) * t.inv_gauss(alpha.j, circle=circ)
