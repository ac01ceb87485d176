"""Parameter multisets and hypergeometric evaluation.

F(A, B; lam) = 1/(1-q) * sum over all multiplicative characters nu of
(A)_nu / (B)_nu-circle * nu(lam), with F(A, B; 0) = 0 by definition.
With the classical indexing, rFs(a_1..a_r; b_1..b_s; lam) corresponds to
A = {a_1..a_r} and B = {eps, b_1..b_s}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chars import MultChar
from .cyclo import CycloNum, mul_zeta_power
from .engine import PairingViolation, engine
from .field import FieldCtx


class ArityMismatch(ValueError):
    pass


class ParamMultiset:
    """A finite multiset of multiplicative characters (element of the parameter monoid)."""

    __slots__ = ("field", "indices")

    def __init__(self, field: FieldCtx, indices) -> None:
        n = field.q - 1
        self.field = field
        self.indices = tuple(sorted(i % n for i in indices))

    @staticmethod
    def of(field: FieldCtx, *chars: MultChar) -> "ParamMultiset":
        return ParamMultiset(field, [c.j for c in chars])

    def deg(self) -> int:
        return len(self.indices)

    def pairing(self, other: "ParamMultiset") -> int:
        """Bi-additive pairing: number of index coincidences counted with multiplicity."""
        from collections import Counter

        ca, cb = Counter(self.indices), Counter(other.indices)
        return sum(ca[k] * cb[k] for k in ca)

    def shift(self, chi: MultChar | int) -> "ParamMultiset":
        j = chi.j if isinstance(chi, MultChar) else chi
        return ParamMultiset(self.field, [i + j for i in self.indices])

    def conj(self) -> "ParamMultiset":
        return ParamMultiset(self.field, [-i for i in self.indices])

    def __add__(self, other: "ParamMultiset") -> "ParamMultiset":
        return ParamMultiset(self.field, self.indices + other.indices)

    def __sub__(self, other: "ParamMultiset") -> "ParamMultiset":
        from collections import Counter

        ca = Counter(self.indices)
        ca.subtract(Counter(other.indices))
        if any(v < 0 for v in ca.values()):
            raise ValueError("not a sub-multiset")
        out = []
        for k, v in ca.items():
            out.extend([k] * v)
        return ParamMultiset(self.field, out)

    def intersection(self, other: "ParamMultiset") -> "ParamMultiset":
        from collections import Counter

        ca, cb = Counter(self.indices), Counter(other.indices)
        out = []
        for k in ca:
            out.extend([k] * min(ca[k], cb.get(k, 0)))
        return ParamMultiset(self.field, out)

    def __eq__(self, other):
        return (
            isinstance(other, ParamMultiset)
            and self.field is other.field
            and self.indices == other.indices
        )

    def __hash__(self):
        return hash((id(self.field), self.indices))

    def __repr__(self):
        return f"ParamMultiset(q={self.field.q}, {list(self.indices)})"


@dataclass(frozen=True)
class HypValue:
    value: CycloNum
    conductor: int
    psi_independent: bool

    def to_json(self) -> dict:
        out = self.value.to_json()
        out["psi_independent"] = self.psi_independent
        return out


def hyp_eval(F: FieldCtx, A: ParamMultiset, B: ParamMultiset, lam: int) -> HypValue:
    """Evaluate F(A, B; lam) from the defining nu-sum.

    Balanced parameters (deg A = deg B) come back at conductor q-1 and are
    checked to be fixed by Gal(Q(zeta_{p(q-1)})/Q(zeta_{q-1})) by construction.
    """
    eng = engine(F)
    if A.deg() == B.deg():
        val = eng.F_balanced(A.indices, B.indices, lam)
        return HypValue(val, val.m, True)
    val = eng.F_general(A.indices, B.indices, lam)
    return HypValue(val, val.m, False)


def hyp_eval_oracle(F: FieldCtx, A: ParamMultiset, B: ParamMultiset, lam: int) -> CycloNum:
    """Independent evaluation through the d-fold constrained character sum.

    Requires deg A = deg B and a pairing with alpha_i != beta_i for all i
    (raises PairingViolation otherwise).  O(q^{d-1}) work.
    """
    if A.deg() != B.deg():
        raise PairingViolation("oracle requires deg A = deg B")
    return engine(F).F_oracle(A.indices, B.indices, lam)


def reduce_params(A: ParamMultiset, B: ParamMultiset):
    """Strip the largest common multiset gamma; (A - gamma, B - gamma) has pairing 0."""
    gamma = A.intersection(B)
    return A - gamma, B - gamma, gamma


def kloosterman(F: FieldCtx, alphas: list[MultChar], lam: int) -> CycloNum:
    """Generalized Kloosterman sum: sum over s_1 ... s_d = lam of prod psi(s_i) alpha_i(s_i)."""
    import itertools

    if not alphas:
        raise ValueError("need at least one character")
    d = len(alphas)
    n = F.q - 1
    m = F.p * n
    idx = [a.j for a in alphas]
    if lam == 0:
        return CycloNum.zero(m)
    vec = [0] * m
    trace = F.trace_table
    dlog = F.dlog_table
    Llam = dlog[lam]
    for frees in itertools.product(range(1, F.q), repeat=d - 1):
        Lsum = sum(dlog[s] for s in frees)
        Llast = (Llam - Lsum) % n
        ss = frees + (F.exp_table[Llast],)
        t = 0
        for j, s in zip(idx, ss):
            t = (t + (F.q - 1) * trace[s] + F.p * j * dlog[s]) % m
        vec[t] += 1
    from .engine import _sum_of_roots

    return _sum_of_roots(m, vec)


_LAURICELLA_KINDS = ("A", "B", "C", "D")


def lauricella_eval(F: FieldCtx, kind: str, params: dict, lams: list[int]) -> CycloNum:
    """Finite-field Lauricella functions F_A..F_D in n variables (n <= 3).

    Parameter layout by kind:
      A: alpha, betas[n], gammas[n]     B: alphas[n], betas[n], gamma
      C: alpha, beta, gammas[n]         D: alpha, betas[n], gamma
    Values are exact at conductor q-1.
    """
    import itertools

    if kind not in _LAURICELLA_KINDS:
        raise ArityMismatch(f"kind must be one of {_LAURICELLA_KINDS}")
    nvars = len(lams)
    if nvars < 1 or nvars > 3:
        raise ArityMismatch("1 to 3 variables supported")
    eng = engine(F)
    n = eng.n

    def _idx(c):
        return c.j if isinstance(c, MultChar) else c % n

    def _need(name, count=None):
        v = params.get(name)
        if v is None:
            raise ArityMismatch(f"missing parameter {name!r} for kind {kind}")
        if count is not None:
            v = list(v)
            if len(v) != count:
                raise ArityMismatch(f"parameter {name!r} must have length {count}")
            return [_idx(c) for c in v]
        return _idx(v)

    if kind == "A":
        alpha = _need("alpha")
        betas = _need("betas", nvars)
        gammas = _need("gammas", nvars)
    elif kind == "B":
        alphas = _need("alphas", nvars)
        betas = _need("betas", nvars)
        gamma = _need("gamma")
    elif kind == "C":
        alpha = _need("alpha")
        beta = _need("beta")
        gammas = _need("gammas", nvars)
    else:
        alpha = _need("alpha")
        betas = _need("betas", nvars)
        gamma = _need("gamma")

    if any(l == 0 for l in lams):
        return CycloNum.zero(n)  # nu_i(0) = 0 kills every term
    Ls = [F.dlog_table[l] for l in lams]
    total = CycloNum.zero(n)
    one = CycloNum.from_rational(n, 1)

    def ratio(a, b, nu):
        # (omega^a)_nu / (omega^b)_nu-circle from the engine's pair tables
        if a % n == b % n:
            k = (1 if a % n == 0 else 0) - (1 if (a + nu) % n == 0 else 0)
            return one * Fraction(F.q) ** k if k else one
        return eng.jvec(a + nu, b - a) * eng.inv_jvec(a, b - a)

    for nus in itertools.product(range(n), repeat=nvars):
        term = one
        prefix = 0  # running product nu_1 ... nu_{i-1}
        for i in range(nvars):
            nu = nus[i]
            if kind == "A":
                term = term * ratio(alpha + prefix, 0, nu) * ratio(betas[i], gammas[i], nu)
            elif kind == "B":
                term = term * ratio(alphas[i], 0, nu) * ratio(betas[i], gamma + prefix, nu)
            elif kind == "C":
                term = term * ratio(alpha + prefix, 0, nu) * ratio(beta + prefix, gammas[i], nu)
            else:
                term = term * ratio(alpha + prefix, 0, nu) * ratio(betas[i], gamma + prefix, nu)
            term = mul_zeta_power(term, nu * Ls[i])
            prefix = (prefix + nu) % n
        total = total + term
    return total * Fraction(1, (1 - F.q) ** nvars)
