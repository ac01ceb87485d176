"""Registry entries: reduction, iteration, sum representations, multiplication
formulas, linear transformations and the 24-solution relations."""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import CycloNum
from .base import Env, register


def _odd(env: Env):
    env.require(env.q % 2 == 1, "requires odd q (quadratic character)")


def _delta1(env: Env, lam: int) -> int:
    return 1 if lam == 1 else 0


# ------------------------------------------------------------------
# Reduction of a shared parameter (degree-1 gamma slice of the theorem)

def _reduction_parts(env: Env, case):
    F = env.F
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    lhs = env.F_val((a, c), (b, c), lam)
    corr = env.poch_ratio((a,), (b,), -c) * env.chi(-c, lam) * Fraction(1, env.q)
    rhs = (env.F_val((a,), (b,), lam) + corr) * Fraction(env.q) ** env.delta(c)
    return [("main", lhs, rhs)]


register(
    "REDUCTION",
    "shared-parameter reduction with explicit q-power correction",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    hypothesis=lambda env, case: True,
    parts=_reduction_parts,
)


# ------------------------------------------------------------------
# Non-reduced closed forms

def _nonreduced_parts(env: Env, case):
    a, b, lam = case["a"], case["b"], case["lam"]
    q = env.q
    out = []
    lhs1 = env.F_val((a, 0), (b, 0), lam)
    rhs1 = env.F_val((a,), (b,), lam) * q + 1
    out.append(("append_trivial", lhs1, rhs1))
    lhs2 = env.F_val((a,), (a,), lam)
    rhs2 = (env.rat(-_delta1(env, lam)) + env.chi(-a, lam) * Fraction(1, q)) * Fraction(q) ** env.delta(a)
    out.append(("equal_params", lhs2, rhs2))
    lhs3 = env.F_val((a, b), (0, b), lam)
    if a % env.n:
        rhs3 = env.chi(-a, env.F.one_minus[lam]) * Fraction(q) ** env.delta(b) + env.gq(
            num=[a - b], den=[a, -b]
        ) * env.chi(-b, lam)
    else:
        rhs3 = env.rat(Fraction(q) ** env.delta(b) * (-q * _delta1(env, lam) + 1)) + env.chi(-b, lam)
    out.append(("shared_denominator", lhs3, rhs3))
    return out


register(
    "NONREDUCED_EXAMPLES",
    "closed forms for non-reduced 1F1/2F1-type parameter collisions",
    slots={"a": "char", "b": "char", "lam": "unit"},
    hypothesis=lambda env, case: True,
    parts=_nonreduced_parts,
)


# ------------------------------------------------------------------
# Iteration against a Jacobi-sum kernel

def _iteration_jacobi_parts(env: Env, case):
    F = env.F
    a0, b0, a, b, lam = case["a0"], case["b0"], case["a"], case["b"], case["lam"]
    lhs = env.jac(a, b - a) * env.F_val((a0, a), (b0, b), lam) * -1
    rhs = CycloNum.zero(env.n)
    for t in range(2, env.q):  # t != 0 and 1-t != 0 (chars vanish there)
        rhs = rhs + env.F_val((a0,), (b0,), F.mul(lam, t)) * env.chi(a, t) * env.chi(
            b - a, F.one_minus[t]
        )
    return [("main", lhs, rhs)]


register(
    "ITERATION_JACOBI",
    "parameter-raising iteration with beta-kernel weight",
    slots={"a0": "char", "b0": "char", "a": "char", "b": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["a"] != case["b"],
    parts=_iteration_jacobi_parts,
)


# ------------------------------------------------------------------
# Geometric series analogue for 1F0

register(
    "GEOMETRIC_1F0",
    "1F0 evaluates to a power of (1 - lambda)",
    slots={"a": "char", "lam": "unit"},
    hypothesis=lambda env, case: case["a"] % env.n != 0,
    lhs=lambda env, case: env.F_val((case["a"],), (0,), case["lam"]),
    rhs=lambda env, case: env.chi(-case["a"], env.F.one_minus[case["lam"]]),
)


# ------------------------------------------------------------------
# Sum representations (d-fold products over chained variables)

def _sum_repr_parts(env: Env, case):
    F = env.F
    a0, b0, a1, b1, lam = case["a0"], case["b0"], case["a1"], case["b1"], case["lam"]
    out = []
    if a0 % env.n and a1 != b1 and lam:
        lhs = env.jac(a1, b1 - a1) * env.F_val((a0, a1), (0, b1), lam) * -1
        rhs = CycloNum.zero(env.n)
        for t in range(F.q):
            term = env.chi(-a0, F.one_minus[F.mul(lam, t)]) * env.chi(a1, t)
            if not term.is_zero():
                term = term * env.chi(b1 - a1, F.one_minus[t])
            rhs = rhs + term
        out.append(("open_form", lhs, rhs))
    if a0 != b0 and a1 != b1:
        lhs = env.eng.F_balanced(tuple(sorted((a0, a1))), tuple(sorted((b0, b1))), lam)
        rhs = env.eng.F_oracle((a0, a1), (b0, b1), lam)
        out.append(("closed_form_d2", lhs, rhs))
    return out


register(
    "SUM_REPRESENTATION",
    "hypergeometric values as constrained multiplicative sums",
    slots={"a0": "char", "b0": "char", "a1": "char", "b1": "char", "lam": "elem"},
    hypothesis=lambda env, case: (case["a0"] % env.n and case["a1"] != case["b1"])
    or (case["a0"] != case["b0"] and case["a1"] != case["b1"]),
    parts=_sum_repr_parts,
)


# ------------------------------------------------------------------
# Iteration against the additive character (confluent directions)

def _iteration_gauss_parts(env: Env, case):
    F = env.F
    a0, b0, x, lam = case["a0"], case["b0"], case["x"], case["lam"]
    out = []
    lhs1 = env.tab.gauss(x) * env.F_val((a0, x), (b0,), lam) * -1
    rhs1 = CycloNum.zero(env.mpsi)
    for t in range(1, F.q):
        rhs1 = rhs1 + env.F_val((a0,), (b0,), F.mul(lam, t)) * env.psi(t) * env.chi(x, t)
    out.append(("raise_numerator", lhs1, rhs1))
    lhs2 = env.tab.inv_gauss(x, circle=True) * env.F_val((a0,), (b0, x), lam) * (-env.q)
    rhs2 = CycloNum.zero(env.mpsi)
    for t in range(1, F.q):
        rhs2 = rhs2 + env.F_val((a0,), (b0,), F.mul(lam, F.inv(t))) * env.psi(F.neg(t)) * env.chi(-x, t)
    out.append(("raise_denominator", lhs2, rhs2))
    return out


register(
    "ITERATION_GAUSS",
    "parameter-raising iterations with additive-character kernels",
    slots={"a0": "char", "b0": "char", "x": "char", "lam": "elem"},
    hypothesis=lambda env, case: True,
    parts=_iteration_gauss_parts,
)


# ------------------------------------------------------------------
# Kloosterman-sum representation of F(A, 0; lam) and F(0, B; lam)

def _kloosterman_parts(env: Env, case):
    F = env.F
    shape, x1, x2, lam = case["shape"], case["x1"], case["x2"], case["lam"]
    q, n = env.q, env.n
    zero = CycloNum.zero(env.mpsi)
    if shape == "1,0":
        lhs = env.tab.gauss(x1) * env.F_val((x1,), (), lam) * -1
        rhs = zero if lam == 0 else -(env.psi(F.inv(lam)) * env.chi(x1, F.inv(lam)))
        return [("A1", lhs, rhs)]
    if shape == "2,0":
        lhs = env.tab.gauss(x1) * env.tab.gauss(x2) * env.F_val((x1, x2), (), lam)
        if lam == 0:
            rhs = zero
        else:
            from ..chars import MultChar
            from ..hyper import kloosterman

            rhs = -kloosterman(F, [MultChar(F, x1), MultChar(F, x2)], F.inv(lam))
        return [("A2_kloosterman", lhs, rhs)]
    if shape == "0,1":
        lhs = env.tab.inv_gauss(x1, circle=True) * env.F_val((), (x1,), lam) * (-q)
        rhs = zero if lam == 0 else -(env.psi(F.neg(lam)) * env.chi(-x1, lam))
        return [("B1", lhs, rhs)]
    # shape == "1,1"
    lhs = env.tab.gauss(x1) * env.tab.inv_gauss(x2, circle=True) * env.F_val((x1,), (x2,), lam) * q
    rhs = zero
    for s in range(1, q):
        t = F.mul(lam, s)
        if t:
            rhs = rhs - env.psi(F.sub(s, t)) * env.chi(x1, s) * env.chi(-x2, t)
    return [("AB", lhs, rhs)]


register(
    "KLOOSTERMAN_FORM",
    "Kloosterman-sum representation of one-sided hypergeometric values",
    slots={"shape": ("tag", ("1,0", "2,0", "0,1", "1,1")), "x1": "char", "x2": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["shape"] != "2,0" or case["x1"] <= case["x2"],
    parts=_kloosterman_parts,
)


# ------------------------------------------------------------------
# Davenport-Hasse multiplication and its Pochhammer corollaries

def _dh_requires(env: Env):
    pass  # every field admits all divisors of q-1


def _dh_mult_parts(env: Env, case):
    nd, a = case["nd"], case["a"]
    n = env.n
    step = n // nd
    lhs = env.tab.gauss(a * nd)
    rhs = env.chi(a * nd, env.F.from_int(nd))
    for k in range(nd):
        rhs = rhs * env.tab.gauss(a + k * step) * env.tab.inv_gauss(k * step)
    return [("main", lhs, rhs)]


register(
    "DH_MULT",
    "Davenport-Hasse multiplication formula for Gauss sums",
    slots={"nd": "divisor", "a": "char"},
    hypothesis=lambda env, case: True,
    parts=_dh_mult_parts,
)


def _poch_mult_parts(env: Env, case):
    nd, a, v = case["nd"], case["a"], case["v"]
    n = env.n
    step = n // nd
    elem_n = env.F.from_int(nd)
    out = []
    for circ, label in ((False, "plain"), (True, "circle")):
        lhs = env.poch(a * nd, v * nd, circle=circ)
        rhs = env.chi(v * nd, elem_n)
        for k in range(nd):
            rhs = rhs * env.poch(a + k * step, v, circle=circ)
        out.append((label, lhs, rhs))
    return out


register(
    "POCHHAMMER_MULT",
    "multiplication formulas for Pochhammer symbols",
    slots={"nd": "divisor", "a": "char", "v": "char"},
    hypothesis=lambda env, case: True,
    parts=_poch_mult_parts,
)


def _duplication_parts(env: Env, case):
    a, v = case["a"], case["v"]
    phi = env.phi
    four = env.F.from_int(4)
    out = []
    lhs_g = env.tab.gauss(2 * a)
    rhs_g = env.chi(a, four) * env.tab.gauss(a) * env.tab.gauss(a + phi) * env.tab.inv_gauss(phi)
    out.append(("gauss", lhs_g, rhs_g))
    for circ, label in ((False, "poch"), (True, "poch_circle")):
        lhs = env.poch(2 * a, 2 * v, circle=circ)
        rhs = env.chi(v, four) * env.poch(a, v, circle=circ) * env.poch(a + phi, v, circle=circ)
        out.append((label, lhs, rhs))
    return out


register(
    "DUPLICATION",
    "duplication formulas (Gauss sums and Pochhammer symbols)",
    slots={"a": "char", "v": "char"},
    requires=_odd,
    hypothesis=lambda env, case: True,
    parts=_duplication_parts,
)


# ------------------------------------------------------------------
# Torsion-parameter sums against diagonal Jacobi sums

def _dwork_sum_parts(env: Env, case):
    nd, lam = case["nd"], case["lam"]
    F = env.F
    n, q = env.n, env.q
    step = n // nd
    A = tuple(sorted((k * step) % n for k in range(nd)))
    B = (0,) * nd
    arg = F.mul(F.pow(F.from_int(nd), nd), lam)
    inner = CycloNum.from_rational(n, 0)  # sum over nontrivial nu of j(conj nu, ...) nu(lam)
    for v in range(1, n):
        inner = inner + env.jac(*([-v] * nd)) * env.chi(v, lam)
    lhs1 = env.F_val(A, B, arg) * (1 - q)
    out = [("plain", lhs1, inner * q + 1)]
    A_red = tuple(sorted((k * step) % n for k in range(1, nd)))
    lhs2 = env.F_val(A_red, (0,) * (nd - 1), arg) * (1 - q)
    out.append(("reduced", lhs2, inner + 1))
    return out


register(
    "DWORK_SUM",
    "torsion-parameter evaluation via diagonal Jacobi sums",
    slots={"nd": "divisor", "lam": "unit"},
    hypothesis=lambda env, case: True,
    parts=_dwork_sum_parts,
)


# ------------------------------------------------------------------
# Euler / Pfaff transformations, the connection formula, and all 24 relations

def _linear_hyp(env: Env, case) -> bool:
    a, b, c = case["a"], case["b"], case["c"]
    n = env.n
    return all(x % n not in (0, c % n) for x in (a, b))


def _euler_parts(env: Env, case):
    F = env.F
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    lhs = env.F_val((a, b), (0, c), lam)
    rhs = env.chi(-a - b + c, F.one_minus[lam]) * env.F_val((c - a, c - b), (0, c), lam)
    return [("main", lhs, rhs)]


register(
    "EULER_TRANSFORM",
    "Euler linear transformation of 2F1",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["lam"] != 1 and _linear_hyp(env, case),
    parts=_euler_parts,
)


def _pfaff_parts(env: Env, case):
    F = env.F
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    lhs = env.F_val((a, b), (0, c), lam)
    arg = F.mul(lam, F.inv(F.sub(lam, 1)))
    rhs = env.chi(-a, F.one_minus[lam]) * env.F_val((a, c - b), (0, c), arg)
    return [("main", lhs, rhs)]


register(
    "PFAFF_TRANSFORM",
    "Pfaff linear transformation of 2F1",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["lam"] != 1 and _linear_hyp(env, case),
    parts=_pfaff_parts,
)


def _connection_parts(env: Env, case):
    F = env.F
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    lhs = env.F_val((a, b), (0, c), lam)
    g2 = env.gq(num_circ=[c], num=[c - a - b], den=[c - a, c - b])
    rhs = g2 * env.F_val((a, b), (0, a + b - c), F.one_minus[lam])
    return [("main", lhs, rhs)]


register(
    "CONNECTION",
    "connection formula between the solutions at 0 and 1",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["lam"] not in (0, 1) and _linear_hyp(env, case),
    parts=_connection_parts,
)


def _kummer24_parts(env: Env, case):
    F = env.F
    n, q = env.n, env.q
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    one_m = F.one_minus[lam]
    inv_l = F.inv(lam)
    l_over = F.mul(lam, F.inv(F.sub(lam, 1)))       # lam/(lam-1)
    over_l = F.mul(F.sub(lam, 1), inv_l)            # (lam-1)/lam
    inv_1m = F.inv(one_m)                           # 1/(1-lam)
    neg_l = F.neg(lam)

    G1 = env.gq(num=[a - c, b - c, c], den=[a, b, -c])
    G2 = env.gq(num_circ=[c], num=[c - a - b], den=[c - a, c - b])
    G3 = env.gq(num_circ=[c], num=[a + b - c], den=[a, b])
    G4 = env.gq(num_circ=[c], num=[b - a], den=[c - a, b])
    G5 = env.gq(num_circ=[c], num=[a - b], den=[c - b, a])

    def ch(idx, x):
        return env.chi(idx, x)

    abbar_c_1m = ch(-a - b + c, one_m)

    lhs = env.F_val((a, b), (0, c), lam)
    forms = [
        ("euler", abbar_c_1m * env.F_val((c - a, c - b), (0, c), lam)),
        ("g1_conj", G1 * ch(-c, lam) * abbar_c_1m * env.F_val((-a, -b), (0, -c), lam)),
        ("g1_shift", G1 * ch(-c, lam) * env.F_val((a - c, b - c), (0, -c), lam)),
        ("g2_at_1m", G2 * env.F_val((a, b), (0, a + b - c), one_m)),
        ("g2_shift", G2 * ch(-c, lam) * env.F_val((a - c, b - c), (0, a + b - c), one_m)),
        ("g3_conj", G3 * ch(-c, lam) * abbar_c_1m * env.F_val((-a, -b), (0, c - a - b), one_m)),
        ("g3_eulered", G3 * abbar_c_1m * env.F_val((c - a, c - b), (0, c - a - b), one_m)),
        ("g4_inv", G4 * ch(-a, neg_l) * env.F_val((a, a - c), (0, a - b), inv_l)),
        ("g4_inv_conj", G4 * ch(b - c, neg_l) * abbar_c_1m * env.F_val((-b, c - b), (0, a - b), inv_l)),
        ("g5_inv", G5 * ch(-b, neg_l) * env.F_val((b, b - c), (0, b - a), inv_l)),
        ("g5_inv_conj", G5 * ch(a - c, neg_l) * abbar_c_1m * env.F_val((-a, c - a), (0, b - a), inv_l)),
        ("pfaff_a", ch(-a, one_m) * env.F_val((a, c - b), (0, c), l_over)),
        ("pfaff_b", ch(-b, one_m) * env.F_val((c - a, b), (0, c), l_over)),
        ("g1_pfaff_a", G1 * ch(-c, lam) * ch(c - b, one_m) * env.F_val((-a, b - c), (0, -c), l_over)),
        ("g1_pfaff_b", G1 * ch(-c, lam) * ch(c - a, one_m) * env.F_val((a - c, -b), (0, -c), l_over)),
        ("g2_over_a", G2 * ch(-a, lam) * env.F_val((a, a - c), (0, a + b - c), over_l)),
        ("g2_over_b", G2 * ch(-b, lam) * env.F_val((b, b - c), (0, a + b - c), over_l)),
        ("g3_over_a", G3 * ch(a - c, lam) * abbar_c_1m * env.F_val((-a, c - a), (0, c - a - b), over_l)),
        ("g3_over_b", G3 * ch(b - c, lam) * abbar_c_1m * env.F_val((-b, c - b), (0, c - a - b), over_l)),
        ("g4_1m", G4 * ch(-a, one_m) * env.F_val((a, c - b), (0, a - b), inv_1m)),
        ("g4_1m_shift", G4 * ch(-c, neg_l) * ch(c - a, one_m) * env.F_val((a - c, -b), (0, a - b), inv_1m)),
        ("g5_1m", G5 * ch(-b, one_m) * env.F_val((c - a, b), (0, b - a), inv_1m)),
        ("g5_1m_shift", G5 * ch(-c, neg_l) * ch(c - b, one_m) * env.F_val((-a, b - c), (0, b - a), inv_1m)),
    ]
    out = [(label, lhs, val) for label, val in forms]
    # constant cross-relations among the G factors
    rel_l = G1 * Fraction(q) ** env.delta(c)
    rel_m = G2 * G3 * Fraction(q) ** env.delta(a + b - c)
    rel_r = G4 * G5 * env.rat(env.sign_minus1(c)) * Fraction(q) ** env.delta(a - b)
    out.append(("g_relation_23", rel_l, rel_m))
    out.append(("g_relation_45", rel_m, rel_r))
    return out


register(
    "KUMMER24",
    "all relations among the 24 local solutions",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["lam"] not in (0, 1) and _linear_hyp(env, case),
    parts=_kummer24_parts,
)
