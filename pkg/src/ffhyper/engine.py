"""Per-field evaluation engine for hypergeometric sums.

One FieldEngine per FieldCtx owns every memoized table the evaluators need:
Jacobi-sum vectors, Pochhammer-ratio spectra, Gauss tables, and cached F
values.  Two evaluation routes implement the defining nu-sum:

* balanced (deg A = deg B): each term (A)_nu/(B)_nu-circle factors into
  per-pair Pochhammer ratios, each an exact quotient of Jacobi sums, so the
  whole computation stays in Q(zeta_{q-1}).  This is also why balanced values
  are manifestly independent of the additive character.
* general: terms assembled from the memoized Gauss-sum table with reciprocals
  taken through the reflection identity g(chi) g_circle(conj chi) = chi(-1) q;
  values live in Q(zeta_{p(q-1)}).

For large extension fields (Dwork sweeps over F_{q^3}) the balanced route
switches to an unreduced integer-vector representation driven by numpy;
results are identical, only the intermediate encoding differs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import chars
from .cyclo import CycloNum, _ctx, conjugate, mul_zeta_power, root_of_unity
from .field import FieldCtx

BIG_FIELD_THRESHOLD = 128


class PairingViolation(ValueError):
    """No ordering of the parameter multisets has alpha_i != beta_i for all i."""


class FieldEngine:
    def __init__(self, F: FieldCtx):
        self.F = F
        self.q = F.q
        self.n = F.q - 1  # character-group order = multiplicative conductor
        self.mpsi = F.p * self.n
        self.tables = chars.tables(F)
        self._jvec: dict[tuple[int, int], CycloNum] = {}
        self._inv_jvec: dict[tuple[int, int], CycloNum | Fraction] = {}
        self._spec_bal: dict[tuple, tuple] = {}
        self._F_cache: dict[tuple, CycloNum] = {}
        self._spec_gen: dict[tuple, list[CycloNum]] = {}
        self._np_ready = False
        self._big: dict[tuple, tuple] = {}

    # ---------------- numpy field views ----------------

    def _np_tables(self):
        if not self._np_ready:
            F = self.F
            self.np_dlog = np.array(F.dlog_table, dtype=np.int64)
            self.np_exp = np.array(F.exp_table, dtype=np.int64)
            self.np_one_minus = np.array(F.one_minus, dtype=np.int64)
            self._np_ready = True
        return self

    # ---------------- conductor q-1 primitives ----------------

    def zeta1(self, t: int) -> CycloNum:
        return root_of_unity(self.n, t)

    def chi(self, a: int, x: int) -> CycloNum:
        """omega^a(x) at conductor q-1 (zero at x=0)."""
        if x == 0:
            return CycloNum.zero(self.n)
        return self.zeta1(a * self.F.dlog_table[x])

    def sign_minus1(self, a: int) -> int:
        return self.tables.sign_minus1(a)

    def jvec(self, a: int, b: int) -> CycloNum:
        """j(omega^a, omega^b) by direct binned summation, conductor q-1."""
        n = self.n
        a %= n
        b %= n
        key = (a, b)
        v = self._jvec.get(key)
        if v is None:
            F = self.F
            vec = [0] * n
            dlog = F.dlog_table
            one_minus = F.one_minus
            for x in range(2, F.q):  # x != 0, 1-x != 0
                vec[(a * dlog[x] + b * dlog[one_minus[x]]) % n] -= 1
            v = _sum_of_roots(n, vec)
            self._jvec[key] = v
        return v

    def inv_jvec(self, a: int, b: int):
        """Exact 1/j(omega^a, omega^b) from closed forms (no polynomial inverse)."""
        n = self.n
        a %= n
        b %= n
        key = (a, b)
        v = self._inv_jvec.get(key)
        if v is None:
            if a == 0 and b == 0:
                v = CycloNum.from_rational(n, Fraction(1, 2 - self.q))
            elif a == 0 or b == 0:
                v = CycloNum.from_rational(n, 1)
            elif (a + b) % n == 0:
                v = CycloNum.from_rational(n, self.sign_minus1(a))
            else:
                # |j|^2 = q for chi1, chi2, chi1 chi2 all nontrivial
                v = conjugate(self.jvec(a, b)) * Fraction(1, self.q)
            self._inv_jvec[key] = v
        return v

    # ---------------- balanced route (deg A = deg B) ----------------

    def _balanced_spectrum(self, A: tuple[int, ...], B: tuple[int, ...]):
        """Per-nu coefficients of the defining sum, split as (vectors, scalars, global divisor)."""
        key = (A, B)
        got = self._spec_bal.get(key)
        if got is not None:
            return got
        n = self.n
        pairs = list(zip(A, B))
        coeffs: list[CycloNum] = []
        one = CycloNum.from_rational(n, 1)
        for nu in range(n):
            acc = one
            for a, b in pairs:
                if a == b:
                    k = (1 if a % n == 0 else 0) - (1 if (a + nu) % n == 0 else 0)
                    if k:
                        acc = acc * Fraction(self.q) ** k
                else:
                    acc = acc * self.jvec(a + nu, b - a)
            coeffs.append(acc)
        inv_denom = one
        for a, b in pairs:
            if a != b:
                inv_denom = inv_denom * self.inv_jvec(a, b - a)
        got = (coeffs, inv_denom)
        self._spec_bal[key] = got
        return got

    def F_balanced(self, A: tuple[int, ...], B: tuple[int, ...], lam: int) -> CycloNum:
        """F(A, B; lam) for deg A = deg B, exact in Q(zeta_{q-1})."""
        n = self.n
        A = tuple(sorted(a % n for a in A))
        B = tuple(sorted(b % n for b in B))
        key = ("Fb", A, B, lam)
        v = self._F_cache.get(key)
        if v is not None:
            return v
        if lam == 0:
            v = CycloNum.zero(n)
        elif self.q > BIG_FIELD_THRESHOLD:
            v = self._F_balanced_big(A, B, lam)
        else:
            coeffs, inv_denom = self._balanced_spectrum(A, B)
            L = self.F.dlog_table[lam]
            total = CycloNum.zero(n)
            for nu in range(n):
                c = coeffs[nu]
                if not c.is_zero():
                    total = total + mul_zeta_power(c, nu * L)
            v = total * inv_denom * Fraction(1, 1 - self.q)
        self._F_cache[key] = v
        return v

    # ---------------- balanced route, large extension fields ----------------

    def _big_spectrum(self, A: tuple[int, ...], B: tuple[int, ...]):
        """Unreduced per-nu product vectors (numpy int64) for big-field balanced sums."""
        key = (A, B)
        got = self._big.get(key)
        if got is not None:
            return got
        self._np_tables()
        n = self.n
        pairs = list(zip(A, B))
        if any(a == b for a, b in pairs):
            raise NotImplementedError("equal numerator/denominator pair on a large field")
        x = np.arange(2, self.q, dtype=np.int64)
        u = self.np_dlog[x]
        w = self.np_dlog[self.np_one_minus[x]]
        prod: np.ndarray | None = None
        for a, b in pairs:
            c = (b - a) % n
            base = (a * u + c * w) % n
            # jac[nu] = unreduced vector of j(omega^{a+nu}, omega^c)
            jac = np.zeros((n, n), dtype=np.int64)
            for nu in range(n):
                jac[nu] = np.bincount((base + nu * u) % n, minlength=n)
            np.negative(jac, out=jac)
            if prod is None:
                prod = jac
            else:
                for nu in range(n):
                    prod[nu] = _cyclic_conv(prod[nu], jac[nu])
        inv_denom = CycloNum.from_rational(n, 1)
        for a, b in pairs:
            inv_denom = inv_denom * self.inv_jvec(a, b - a)
        got = (prod, inv_denom)
        self._big[key] = got
        return got

    def _F_balanced_big(self, A, B, lam: int) -> CycloNum:
        n = self.n
        prod, inv_denom = self._big_spectrum(A, B)
        L = self.F.dlog_table[lam]
        total = np.zeros(n, dtype=np.int64)
        for nu in range(n):
            total += np.roll(prod[nu], (nu * L) % n)
        vec = _reduce_np(n, total)
        return CycloNum(n, vec, 1) * inv_denom * Fraction(1, 1 - self.q)

    # ---------------- general route (any degrees) ----------------

    def _general_spectrum(self, A: tuple[int, ...], B: tuple[int, ...]) -> list[CycloNum]:
        key = (A, B)
        got = self._spec_gen.get(key)
        if got is None:
            t = self.tables
            n = self.n
            const = CycloNum.from_rational(self.mpsi, 1)
            for a in A:
                const = const * t.inv_gauss(a)
            for b in B:
                const = const * t.gauss(b, circle=True)
            got = []
            for nu in range(n):
                acc = const
                for a in A:
                    acc = acc * t.gauss(a + nu)
                for b in B:
                    acc = acc * t.inv_gauss(b + nu, circle=True)
                got.append(acc)
            self._spec_gen[key] = got
        return got

    def F_general(self, A: tuple[int, ...], B: tuple[int, ...], lam: int) -> CycloNum:
        """F(A, B; lam) from the Gauss-sum table, exact in Q(zeta_{p(q-1)})."""
        A = tuple(sorted(a % self.n for a in A))
        B = tuple(sorted(b % self.n for b in B))
        key = ("Fg", A, B, lam)
        v = self._F_cache.get(key)
        if v is not None:
            return v
        if lam == 0:
            v = CycloNum.zero(self.mpsi)
        else:
            coeffs = self._general_spectrum(A, B)
            L = self.F.dlog_table[lam]
            p = self.F.p
            total = CycloNum.zero(self.mpsi)
            for nu in range(self.n):
                c = coeffs[nu]
                if not c.is_zero():
                    total = total + mul_zeta_power(c, p * nu * L)
            v = total * Fraction(1, 1 - self.q)
        self._F_cache[key] = v
        return v

    def F_eval(self, A: tuple[int, ...], B: tuple[int, ...], lam: int) -> CycloNum:
        """Dispatch on parameter degrees; balanced values stay at conductor q-1."""
        if len(A) == len(B):
            return self.F_balanced(A, B, lam)
        return self.F_general(A, B, lam)

    # ---------------- oracle route (constrained product sums) ----------------

    def oracle_pairing(self, A: tuple[int, ...], B: tuple[int, ...]) -> list[tuple[int, int]]:
        """A bijection A<->B with alpha_i != beta_i everywhere, or PairingViolation."""
        import itertools

        A = tuple(sorted(A))
        B = tuple(sorted(B))
        if all(a != b for a, b in zip(A, B)):
            return list(zip(A, B))
        for perm in itertools.permutations(B):
            if all(a != b for a, b in zip(A, perm)):
                return list(zip(A, perm))
        raise PairingViolation(f"no admissible pairing for {A} vs {B}")

    def F_oracle(self, A: tuple[int, ...], B: tuple[int, ...], lam: int) -> CycloNum:
        """Evaluate the d-fold constrained character sum and normalize by Jacobi sums."""
        n = self.n
        pairs = self.oracle_pairing(A, B)
        d = len(pairs)
        if d == 0:
            return CycloNum.from_rational(n, -1 if lam == 1 else 0)
        if lam == 0:
            return CycloNum.zero(n)
        self._np_tables()
        F = self.F
        Llam = F.dlog_table[lam]
        avec = np.array([a for a, _ in pairs], dtype=np.int64)
        cvec = np.array([(b - a) % n for a, b in pairs], dtype=np.int64)
        if d == 1:
            t_free = np.empty((1, 0), dtype=np.int64)
        else:
            units = np.arange(1, F.q, dtype=np.int64)
            mesh = np.meshgrid(*([units] * (d - 1)), indexing="ij")
            t_free = np.stack([m.ravel() for m in mesh], axis=1)
        Ls = self.np_dlog[t_free]
        # last variable from the constraint lam * t_1 ... t_d = 1
        Llast = (-Llam - Ls.sum(axis=1)) % n
        tlast = self.np_exp[Llast]
        ts = np.concatenate([t_free, tlast[:, None]], axis=1)
        Lall = np.concatenate([Ls, Llast[:, None]], axis=1)
        om = self.np_one_minus[ts]
        mask = (om != 0).all(axis=1)
        ts = ts[mask]
        Lall = Lall[mask]
        om = om[mask]
        Lom = self.np_dlog[om]
        expo = (Lall * avec[None, :] + Lom * cvec[None, :]).sum(axis=1) % n
        counts = np.bincount(expo, minlength=n)
        vec = [-int(c) for c in counts]  # S enters as -S
        total = _sum_of_roots(n, vec)
        inv = CycloNum.from_rational(n, (-1) ** d)
        for a, b in pairs:
            inv = inv * self.inv_jvec(a, b - a)
        return total * inv


def _sum_of_roots(m: int, vec) -> CycloNum:
    c = _ctx(m)
    out = [0] * c.phi
    for t, v in enumerate(vec):
        if v:
            row = c.row(t)
            for k in range(c.phi):
                if row[k]:
                    out[k] += v * row[k]
    return CycloNum(m, out)


def _cyclic_conv(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    full = np.convolve(a, b)
    out = full[: len(a)].copy()
    out[: len(full) - len(a)] += full[len(a):]
    return out


_RED_CACHE: dict[int, np.ndarray] = {}


def _reduce_np(m: int, vec: np.ndarray) -> list[int]:
    """Reduce an unreduced zeta-exponent vector to canonical coordinates."""
    R = _RED_CACHE.get(m)
    if R is None:
        c = _ctx(m)
        rows = np.zeros((m, c.phi), dtype=np.int64)
        cur = [0] * c.phi
        cur[0] = 1
        from . import kernel

        for t in range(m):
            rows[t] = cur
            cur = [0] + cur
            cur = kernel.poly_reduce(cur, c.phi, c.phi_idx, c.phi_val)
        R = _RED_CACHE[m] = rows
    out = vec @ R
    return [int(x) for x in out]


_ENGINES: dict[tuple[int, int], FieldEngine] = {}


def engine(F: FieldCtx) -> FieldEngine:
    key = (F.p, F.e)
    e = _ENGINES.get(key)
    if e is None:
        e = _ENGINES[key] = FieldEngine(F)
    return e
