"""Registry entries: summation formulas (values at +-1) and nearly-poised values."""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import CycloNum
from .base import Env, register


def _odd(env: Env):
    env.require(env.q % 2 == 1, "requires odd q (quadratic character)")


def _multiset_eq(env: Env, xs, ys) -> bool:
    n = env.n
    return sorted(x % n for x in xs) == sorted(y % n for y in ys)


# ------------------------------------------------------------------
# Euler-Gauss summation (value at 1), with both side forms

def _euler_gauss_parts(env: Env, case):
    a, b, c = case["a"], case["b"], case["c"]
    q = env.q
    lhs = env.F_val((a, b), (0, c), 1)
    quot = env.gq(num_circ=[c], num=[c - a - b], den_circ=[c - a, c - b])
    degenerate = _multiset_eq(env, (a, b), (0, c))
    if degenerate:
        rhs = env.rat(1 + q ** env.delta(c) * (1 - q))
    else:
        rhs = quot
    out = [("main", lhs, rhs)]
    if degenerate:
        # same value written through the generic quotient with a correction
        out.append(
            ("degenerate_quotient", lhs, quot - Fraction((1 + env.delta(c) * q) * (1 - q) ** 2, q))
        )
    if a % env.n not in (0, c % env.n):
        # terminating form: with nu := conj(beta), the value is a Pochhammer ratio
        out.append(("vandermonde", lhs, env.ratio1(c - a, c, -b)))
    return out


register(
    "EULER_GAUSS",
    "Euler-Gauss summation for 2F1(1), both branches",
    slots={"a": "char", "b": "char", "c": "char"},
    hypothesis=lambda env, case: True,
    parts=_euler_gauss_parts,
)


# ------------------------------------------------------------------
# Multinomial theorem for Pochhammer symbols (two and three factors)

def _multinomial_parts(env: Env, case):
    a1, a2, v = case["a1"], case["a2"], case["v"]
    n = env.n
    scale = Fraction(1, 1 - env.q)
    lhs = CycloNum.zero(n)
    for v1 in range(n):
        lhs = lhs + env.ratio1(a1, 0, v1) * env.ratio1(a2, 0, v - v1)
    lhs = lhs * scale * scale
    rhs = env.ratio1(a1 + a2, 0, v) * scale
    return [("two_factors", lhs, rhs)]


register(
    "MULTINOMIAL",
    "multinomial theorem for Pochhammer symbols",
    slots={"a1": "char", "a2": "char", "v": "char"},
    hypothesis=lambda env, case: (case["a1"] + case["a2"]) % env.n != 0,
    parts=_multinomial_parts,
)


# ------------------------------------------------------------------
# Well-poised 2F1(-1)

def _kummer_m1_parts(env: Env, case):
    form, a, b = case["form"], case["a"], case["b"]
    q, n = env.q, env.n
    minus1 = env.F.neg(1)
    out = []
    if form == "sq":
        lhs = env.F_val((2 * a, b), (0, 2 * a - b), minus1)
        if env.F.p == 2:
            if b % n:
                rhs = env.gq(num_circ=[2 * a - b], num=[a], den=[2 * a], den_circ=[a - b])
            else:
                rhs = env.rat(1 + q ** env.delta(a) * (1 - q))
            out.append(("char2", lhs, rhs))
        else:
            phi = env.phi
            rhs = CycloNum.zero(n)
            for ap in (a, a + phi):
                rhs = rhs + env.gq(num_circ=[2 * a - b], num=[ap], den=[2 * a], den_circ=[ap - b])
            out.append(("odd", lhs, rhs))
    else:  # form == "nonsq": alpha not a square in the character group
        lhs = env.F_val((a, b), (0, a - b), minus1)
        out.append(("nonsquare_vanishes", lhs, env.rat(0)))
    return out


def _kummer_m1_hyp(env: Env, case) -> bool:
    if case["form"] == "nonsq":
        return not env.is_square_char(case["a"])
    return True


register(
    "KUMMER_MINUS1",
    "Kummer's well-poised 2F1(-1) evaluation",
    slots={"form": ("tag", ("sq", "nonsq")), "a": "char", "b": "char"},
    hypothesis=_kummer_m1_hyp,
    parts=_kummer_m1_parts,
)


# ------------------------------------------------------------------
# Thomae and Sheppard relations for 3F2(1)

def _thomae_parts(env: Env, case):
    a, b, c, vp, ps = case["a"], case["b"], case["c"], case["vp"], case["ps"]
    s = vp + ps - a - b - c
    lhs = env.gq(num=[a], den_circ=[vp, ps]) * env.F_val((a, b, c), (0, vp, ps), 1)
    rhs = env.gq(num=[s], den_circ=[b + s, c + s]) * env.F_val(
        (s, vp - a, ps - a), (0, b + s, c + s), 1
    )
    return [("main", lhs, rhs)]


register(
    "THOMAE",
    "Thomae's fundamental 3F2(1) relation",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char", "ps": "char"},
    hypothesis=lambda env, case: case["a"] % env.n not in (case["vp"] % env.n, case["ps"] % env.n)
    and case["b"] % env.n != 0
    and case["c"] % env.n != 0,
    parts=_thomae_parts,
)


def _sheppard_parts(env: Env, case):
    a, b, c, vp, ps = case["a"], case["b"], case["c"], case["vp"], case["ps"]
    lhs = env.F_val((a, b, c), (0, vp, ps), 1)
    coef = env.gq(
        num=[vp - b - c, ps - b - c],
        num_circ=[vp, ps],
        den=[vp - b, vp - c, ps - b, ps - c],
    )
    s = vp + ps - a - b - c
    rhs = coef * env.F_val((-s, b, c), (0, b + c - vp, b + c - ps), 1)
    return [("main", lhs, rhs)]


def _sheppard_hyp(env: Env, case) -> bool:
    n = env.n
    a, b, c, vp, ps = (case[k] % n for k in ("a", "b", "c", "vp", "ps"))
    s = (vp + ps - a - b - c) % n
    return a != 0 and s != 0 and b not in (vp, ps) and c not in (vp, ps)


register(
    "SHEPPARD",
    "Sheppard's 3F2(1) transformation",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char", "ps": "char"},
    hypothesis=_sheppard_hyp,
    parts=_sheppard_parts,
)


# ------------------------------------------------------------------
# The key lemma for nearly-poised values

def _c_coef(env: Env, b: int, c: int) -> CycloNum:
    q = env.q
    dbc = env.delta(c - b)
    scalar = Fraction((1 + dbc * q) * (1 - q) ** 2, q ** (1 + dbc))
    return env.gq(num_circ=[b + c], den=[b, c]) * scalar


def _nearly_key_parts(env: Env, case):
    vp, b, c, v = case["vp"], case["b"], case["c"], case["v"]
    n, q = env.n, env.q
    lhs = (
        env.gq(num_circ=[vp], num=[vp - b - c], den_circ=[vp - b, vp - c])
        * env.ratio1(b, vp - b, v)
        * env.ratio1(c, vp - c, v)
    )
    rhs = CycloNum.zero(n)
    for mu in range(n):
        rhs = rhs + (
            env.ratio1(b, 0, mu)
            * env.ratio1(c, vp, mu)
            * env.ratio1(-mu, vp + mu, v)
        )
    rhs = rhs * Fraction(env.sign_minus1(v), 1 - q)
    if (b + c - vp) % n == 0 and v % n in ((-b) % n, (-c) % n):
        rhs = rhs + _c_coef(env, b, c)
    return [("main", lhs, rhs)]


register(
    "NEARLY_KEY_LEMMA",
    "key lemma for nearly-poised evaluations",
    slots={"vp": "char", "b": "char", "c": "char", "v": "char"},
    hypothesis=lambda env, case: True,
    parts=_nearly_key_parts,
)


# ------------------------------------------------------------------
# Dixon / Watson / Whipple for 3F2(1)

def _dixon_hyp(env: Env, case) -> bool:
    n = env.n
    a, b, c = case["a"], case["b"], case["c"]
    if env.q % 2 == 0:
        return False
    if (2 * a - b - c) % n == 0:
        return False
    phi = n // 2
    for ap in (a, a + phi):
        if _multiset_eq(env, (b, c), (0, ap)):
            return False
    return True


def _dixon_parts(env: Env, case):
    a, b, c = case["a"], case["b"], case["c"]
    phi = env.phi
    lhs = env.F_val((2 * a, b, c), (0, 2 * a - b, 2 * a - c), 1)
    rhs = CycloNum.zero(env.n)
    for ap in (a, a + phi):
        rhs = rhs + env.gq(
            num_circ=[2 * a - b, 2 * a - c],
            num=[ap, ap - b - c],
            den=[2 * a, 2 * a - b - c],
            den_circ=[ap - b, ap - c],
        )
    return [("main", lhs, rhs)]


register(
    "DIXON",
    "Dixon's well-poised 3F2(1) evaluation",
    slots={"a": "char", "b": "char", "c": "char"},
    requires=_odd,
    hypothesis=_dixon_hyp,
    parts=_dixon_parts,
)


def _watson_hyp(env: Env, case) -> bool:
    n = env.n
    a, b, c = case["a"], case["b"], case["c"]
    if env.q % 2 == 0:
        return False
    phi = n // 2
    if (b - a + phi) % n == 0 or c % n == 0:
        return False
    A = [(2 * a) % n, (2 * b) % n, c % n]
    B = [0, (a + b + phi) % n, (2 * c) % n]
    return sum(A.count(x) for x in B) <= 1


def _watson_parts(env: Env, case):
    a, b, c = case["a"], case["b"], case["c"]
    phi = env.phi
    lhs = env.F_val((2 * a, 2 * b, c), (0, a + b + phi, 2 * c), 1)
    rhs = CycloNum.zero(env.n)
    for v in (0, phi):
        rhs = rhs + env.gq(
            num=[phi, c - a - b + phi],
            num_circ=[c + phi, a + b + phi],
            den=[a + v, b + v],
            den_circ=[c - a + v, c - b + v],
        )
    return [("main", lhs, rhs)]


register(
    "WATSON",
    "Watson's 3F2(1) evaluation",
    slots={"a": "char", "b": "char", "c": "char"},
    requires=_odd,
    hypothesis=_watson_hyp,
    parts=_watson_parts,
)


def _whipple3_hyp(env: Env, case) -> bool:
    n = env.n
    if env.q % 2 == 0:
        return False
    phi = n // 2
    a, b, c, vp, ps = (case[k] for k in ("a", "b", "c", "vp", "ps"))
    if (a + b - phi) % n or (vp + ps - c - phi) % n:
        return False
    if c % n in (0, (2 * vp) % n, (2 * ps) % n):
        return False
    A = [(2 * a) % n, (2 * b) % n]
    B = [0, (2 * vp) % n, (2 * ps) % n]
    return sum(A.count(x) for x in B) <= 1


def _whipple3_parts(env: Env, case):
    a, b, c, vp, ps = (case[k] for k in ("a", "b", "c", "vp", "ps"))
    phi = env.phi
    lhs = env.F_val((2 * a, 2 * b, c), (0, 2 * vp, 2 * ps), 1)
    rhs = CycloNum.zero(env.n)
    for v in (0, phi):
        rhs = rhs + env.gq(
            num_circ=[vp, vp + phi, ps, ps + phi],
            den_circ=[a + vp + v, a + ps + v, b + vp + v, b + ps + v],
        )
    return [("main", lhs, rhs)]


register(
    "WHIPPLE_3F2",
    "Whipple's well-poised 3F2(1) evaluation",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char", "ps": "char"},
    requires=_odd,
    hypothesis=_whipple3_hyp,
    parts=_whipple3_parts,
)


# ------------------------------------------------------------------
# Saalschuetz and the integrated connection formula

def _saal_parts(env: Env, case):
    a, b, c, vp = case["a"], case["b"], case["c"], case["vp"]
    ps = a + b + c - vp
    lhs = env.F_val((a, b, c), (0, vp, ps), 1)
    rhs = env.gq(
        num_circ=[vp],
        num=[a - ps, b - ps, c - ps],
        den=[-ps],
        den_circ=[vp - a, vp - b, vp - c],
    ) + env.gq(num_circ=[vp, ps], den=[a, b, c])
    return [("main", lhs, rhs)]


register(
    "SAALSCHUTZ",
    "Saalschuetz's theorem for balanced 3F2(1)",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char"},
    hypothesis=lambda env, case: not _multiset_eq(
        env,
        (case["a"], case["b"], case["c"]),
        (0, case["vp"], case["a"] + case["b"] + case["c"] - case["vp"]),
    ),
    parts=_saal_parts,
)


def _conn_int_parts(env: Env, case):
    a, b, c, vp, ps = (case[k] for k in ("a", "b", "c", "vp", "ps"))
    lhs = env.F_val((a, b, vp), (0, c, vp + ps), 1)
    coef = env.gq(num_circ=[c], num=[c - a - b], den=[c - a, c - b])
    rhs = coef * env.F_val((a, b, ps), (0, a + b - c, vp + ps), 1)
    return [("main", lhs, rhs)]


register(
    "CONNECTION_INTEGRATED",
    "integrated connection relation for 3F2(1)",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char", "ps": "char"},
    hypothesis=lambda env, case: all(
        case[k] % env.n not in (0, case["c"] % env.n) for k in ("a", "b")
    )
    and case["vp"] % env.n != 0
    and case["ps"] % env.n != 0,
    parts=_conn_int_parts,
)


# ------------------------------------------------------------------
# Nearly-poised 3F2(-1) and 4F3(1)

def _nearly_3f2_parts(env: Env, case):
    a, b, c, vp = case["a"], case["b"], case["c"], case["vp"]
    n, q = env.n, env.q
    phi = env.phi
    minus1 = env.F.neg(1)
    out = []
    scale = env.gq(num_circ=[2 * vp], num=[2 * vp - b - c], den_circ=[2 * vp - b, 2 * vp - c])
    if (2 * a) % n not in (0, (2 * vp) % n):
        lhs = scale * env.F_val((2 * a, b, c), (0, 2 * vp - b, 2 * vp - c), minus1)
        rhs = env.F_val(
            (vp - a, vp - a + phi, b, c), (0, 2 * vp - 2 * a, vp, vp + phi), 1
        )
        if (b + c - 2 * vp) % n == 0:
            corr = CycloNum.zero(n)
            for v in {(-b) % n, (-c) % n}:
                corr = corr + env.ratio1(2 * a, 0, v) * env.sign_minus1(v)
            rhs = rhs + corr * _c_coef(env, b, c) * Fraction(1, 1 - q)
        out.append(("general", lhs, rhs))
    if a % n == 0 and (2 * vp) % n != 0:
        lhs = scale * env.F_val((2 * vp, b, c), (0, 2 * vp - b, 2 * vp - c), minus1)
        rhs = env.F_val((phi, b, c), (0, vp, vp + phi), 1) + 1
        if (b + c - 2 * vp) % n == 0:
            dbc = env.delta(c - b)
            rhs = rhs + Fraction((2 - dbc) * (1 - q ** (1 + dbc)), q ** (1 + dbc))
        out.append(("square_slot", lhs, rhs))
    return out


register(
    "NEARLY_3F2",
    "nearly-poised 3F2(-1) in terms of 4F3(1)",
    slots={"a": "char", "b": "char", "c": "char", "vp": "char"},
    requires=_odd,
    hypothesis=lambda env, case: True,
    parts=_nearly_3f2_parts,
)


def _nearly_cor_parts(env: Env, case):
    a, b, vp = case["a"], case["b"], case["vp"]
    phi = env.phi
    minus1 = env.F.neg(1)
    lhs = env.gq(num_circ=[2 * vp], num=[vp - b], den_circ=[2 * vp - b, vp]) * env.F_val(
        (2 * a, b), (0, 2 * vp - b), minus1
    )
    rhs = env.F_val((vp - a, vp - a + phi, b), (0, 2 * vp - 2 * a, vp + phi), 1)
    return [("main", lhs, rhs)]


register(
    "NEARLY_COR",
    "nearly-poised 2F1(-1) in terms of 3F2(1)",
    slots={"a": "char", "b": "char", "vp": "char"},
    requires=_odd,
    hypothesis=lambda env, case: (2 * case["a"]) % env.n
    not in (0, (2 * case["vp"]) % env.n)
    and case["b"] % env.n != case["vp"] % env.n,
    parts=_nearly_cor_parts,
)


def _nearly_4f3_parts(env: Env, case):
    s, a, b, c, vp = case["s"], case["a"], case["b"], case["c"], case["vp"]
    n, q = env.n, env.q
    phi = env.phi
    F = env.F
    out = []
    tail = env.gq(num_circ=[-a, -b, -c])
    if (2 * s) % n not in (0, (2 * vp) % n):
        # correction terms kept in the assembled (unsimplified) form
        lhs = env.gq(num_circ=[2 * vp], num=[2 * vp - b - c], den_circ=[2 * vp - b, 2 * vp - c]) * env.F_val(
            (2 * s, a, b, c), (0, 2 * vp - a, 2 * vp - b, 2 * vp - c), 1
        )
        main = env.gq(
            num_circ=[2 * vp - a], num=[2 * vp - a - b - c], den=[2 * vp - a - b, 2 * vp - a - c]
        ) * env.F_val(
            (vp - s, vp - s + phi, a, b, c),
            (0, 2 * vp - 2 * s, vp, vp + phi, a + b + c - 2 * vp),
            1,
        )
        da, davp = env.delta(a), env.delta(2 * vp - a)
        A = (
            env.rat(Fraction(q) ** (da + davp)) * env.chi(-s, F.from_int(4))
            + env.gq(num_circ=[a], num=[2 * s - a], den=[2 * s]) * Fraction(q) ** (davp - 1)
            + env.gq(num_circ=[2 * vp - a], num=[a - 2 * vp + 2 * s], den=[2 * s]) * Fraction(q) ** (da - 1)
        )
        C = (
            env.gq(num_circ=[2 * vp], num=[2 * s - a], den=[2 * s, 2 * vp - a])
            + env.gq(num_circ=[2 * vp], num=[a - 2 * vp + 2 * s], den=[2 * s, a])
        ) * Fraction(1 - q, q)
        T1 = env.ratio1(b, 0, a - 2 * vp) * env.ratio1(c, 2 * vp, a - 2 * vp)
        T2 = env.ratio1(b, 0, a - 2 * vp) * env.ratio1(c, 2 * vp - a, a - 2 * vp)
        rhs = main - T1 * A * Fraction(1, q) + T2 * C * Fraction(1, 1 - q)
        out.append(("general", lhs, rhs))
    if s % n == 0 and (2 * vp) % n != 0:
        scale = env.gq(
            num=[2 * vp - a - b, 2 * vp - a - c, 2 * vp - b - c],
            den_circ=[2 * vp - a, 2 * vp - b, 2 * vp - c],
        )
        lhs = scale * env.F_val((2 * vp, a, b, c), (0, 2 * vp - a, 2 * vp - b, 2 * vp - c), 1)
        rhs = env.gq(num=[2 * vp - a - b - c], den_circ=[2 * vp]) * (
            env.F_val((phi, a, b, c), (0, vp, vp + phi, a + b + c - 2 * vp), 1) + 1
        ) - tail * env.chi(-vp, env.F.from_int(4)) * Fraction(1, q * q)
        out.append(("square_slot", lhs, rhs))
    return out


register(
    "NEARLY_4F3",
    "nearly-poised 4F3(1) in terms of 5F4(1)",
    slots={"s": "char", "a": "char", "b": "char", "c": "char", "vp": "char"},
    requires=_odd,
    hypothesis=lambda env, case: all(
        (case[x] + case[y] - 2 * case["vp"]) % env.n != 0
        for x, y in (("a", "b"), ("a", "c"), ("b", "c"))
    ),
    parts=_nearly_4f3_parts,
)
