"""Registry entries: quadratic (and derived quartic/cubic) transformation formulas."""

from __future__ import annotations

from .base import Env, register


def _odd(env: Env):
    env.require(env.q % 2 == 1, "requires odd q (quadratic character)")


def _sq_arg(F, lam):
    """1 - ((1-lam)/(1+lam))^2 in the field; requires lam != -1."""
    r = F.mul(F.one_minus[lam], F.inv(F.add(1, lam)))
    return F.one_minus[F.mul(r, r)]


def _quad1_parts(env: Env, case):
    F = env.F
    a, b, lam = case["a"], case["b"], case["lam"]
    phi = env.phi
    out = []
    lhs1 = env.chi(2 * a, F.add(1, lam)) * env.F_val((2 * a, b), (0, 2 * a - b), lam)
    rhs1 = env.F_val((a, a + phi), (0, 2 * a - b), _sq_arg(F, lam))
    out.append(("to_square_args", lhs1, rhs1))
    lam2 = F.mul(lam, lam)
    arg2 = F.sub(1, F.mul(F.one_minus[lam], F.inv(F.add(1, lam))))
    lhs2 = env.chi(2 * a, F.add(1, lam)) * env.F_val((a, a + phi), (0, b + phi), lam2)
    rhs2 = env.F_val((2 * a, b), (0, 2 * b), arg2)
    out.append(("from_square_args", lhs2, rhs2))
    return out


register(
    "QUAD_I",
    "quadratic transformation I for well-poised 2F1",
    slots={"a": "char", "b": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=lambda env, case: (2 * case["a"]) % env.n != 0
    and case["b"] % env.n != 0
    and case["lam"] != env.F.neg(1),
    parts=lambda env, case: _quad1_parts(env, case)[:1],
)


register(
    "QUAD_II",
    "quadratic transformation II (square-argument form)",
    slots={"a": "char", "b": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=lambda env, case: (2 * case["a"]) % env.n != 0
    and case["b"] % env.n != 0
    and case["lam"] != env.F.neg(1),
    parts=lambda env, case: _quad1_parts(env, case)[1:],
)


def _quad_cor_hyp(env: Env, case) -> bool:
    n = env.n
    a, b = case["a"], case["b"]
    phi = n // 2
    return (
        (2 * a) % n != 0
        and (2 * b) % n != 0
        and (a - b + phi) % n != 0
    )


def _quad_cor_parts(env: Env, case):
    F = env.F
    a, b, lam = case["a"], case["b"], case["lam"]
    phi = env.phi
    out = []
    half = F.inv(F.from_int(2))
    if lam not in (1, half):
        one_m2l = F.one_minus[F.mul(F.from_int(2), lam)]
        arg = F.one_minus[F.mul(one_m2l, one_m2l)]
        lhs = env.F_val((2 * a, 2 * b), (0, a + b + phi), lam)
        rhs = env.F_val((a, b), (0, a + b + phi), arg)
        out.append(("gauss_form", lhs, rhs))
    if lam != 1 and lam != F.neg(1):
        lhs = env.chi(2 * a, F.add(1, lam)) * env.F_val(
            (2 * a, a - b + phi), (0, a + b + phi), F.neg(lam)
        )
        rhs = env.F_val((a, b), (0, a + b + phi), _sq_arg(F, lam))
        out.append(("kummer_form", lhs, rhs))
    return out


register(
    "QUAD_COR",
    "quadratic transformations with quadratic-twisted parameters",
    slots={"a": "char", "b": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=_quad_cor_hyp,
    parts=_quad_cor_parts,
)


def _quad_sqrt_parts(env: Env, case):
    F = env.F
    a, b, lam = case["a"], case["b"], case["lam"]
    phi = env.phi
    lam2 = F.mul(lam, lam)
    lhs = env.chi(2 * a, F.add(1, lam)) * env.F_val((a, a - b + phi), (0, b + phi), lam2)
    rhs = env.F_val((a, b), (0, 2 * b), _sq_arg(F, lam))
    return [("main", lhs, rhs)]


register(
    "QUAD_SQRT",
    "square-root argument transformation of Gauss",
    slots={"a": "char", "b": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=lambda env, case: case["a"] % env.n
    not in (0, (case["b"] + env.n // 2) % env.n, (2 * case["b"]) % env.n)
    and case["b"] % env.n != 0
    and case["lam"] != env.F.neg(1),
    parts=_quad_sqrt_parts,
)


def _rmo_requires(env: Env):
    _odd(env)
    env.require(env.n % 3 == 0, "requires a cubic character (3 | q-1)")


def _rmo_parts(env: Env, case):
    F = env.F
    a, r, lam = case["a"], case["r"], case["lam"]
    phi = env.phi
    three = F.from_int(3)
    lam2 = F.mul(lam, lam)
    one_p3l = F.add(1, F.mul(three, lam))
    lhs = env.chi(6 * a, one_p3l) * env.F_val(
        (3 * a, 3 * a + phi), (0, 2 * a + phi + r), lam2
    )
    ratio = F.mul(F.one_minus[lam], F.inv(one_p3l))
    arg = F.one_minus[F.mul(ratio, ratio)]
    rhs = env.F_val((3 * a, 3 * a + phi), (0, 4 * a + 2 * r), arg)
    return [("main", lhs, rhs)]


def _rmo_hyp(env: Env, case) -> bool:
    F = env.F
    n = env.n
    if case["r"] not in ((n // 3) % n, (2 * n // 3) % n):
        return False
    if (6 * case["a"]) % n == 0:
        return False
    three_inv = F.inv(F.from_int(3))
    return case["lam"] not in (F.neg(1), F.neg(three_inv))


register(
    "RMO_CUBIC",
    "cubic-twisted quadratic transformation (Ramanujan type)",
    slots={"a": "char", "r": "char", "lam": "elem"},
    requires=_rmo_requires,
    hypothesis=_rmo_hyp,
    parts=_rmo_parts,
)


def _quartic_requires(env: Env):
    _odd(env)
    env.require(env.n % 4 == 0, "requires a quartic character (4 | q-1)")


def _quartic_hyp(env: Env, case) -> bool:
    F = env.F
    n = env.n
    form, a, x, lam = case["form"], case["a"], case["x"], case["lam"]
    phi = n // 2
    if form == 1:
        if n % 3 or x not in (n // 3, 2 * n // 3):
            return False
        if (3 * a) % n == 0 or (2 * a - phi - x) % n == 0:
            return False
        if lam == F.neg(1) or F.mul(lam, lam) == F.neg(1):
            return False
        return True
    # form 2: quartic
    if x not in (n // 4, 3 * n // 4):
        return False
    if (2 * a) % n == 0 or (a + x) % n == 0:
        return False
    return lam == 0 or F.pow(lam, 4) != 1


def _quartic_parts(env: Env, case):
    F = env.F
    form, a, x, lam = case["form"], case["a"], case["x"], case["lam"]
    phi = env.phi
    ratio = F.mul(F.one_minus[lam], F.inv(F.add(1, lam)))
    arg4 = F.one_minus[F.pow(ratio, 4)]
    if form == 1:
        lhs = env.chi(12 * a, F.add(1, lam)) * env.F_val(
            (3 * a, 2 * a + phi - x), (0, a + phi + x), F.pow(lam, 4)
        )
        rhs = env.F_val((3 * a, 2 * a + phi - x), (0, 4 * a + x), arg4)
        return [("cubic_quartic", lhs, rhs)]
    lhs = env.chi(4 * a, F.add(1, lam)) * env.F_val(
        (2 * a, a + x), (0, a - x), F.neg(F.mul(lam, lam))
    )
    rhs = env.F_val((a, a + x), (0, 2 * a + phi), arg4)
    return [("quartic", lhs, rhs)]


register(
    "QUARTIC_COR",
    "quartic-argument corollaries of the quadratic transformations",
    slots={"form": ("tag", (1, 2)), "a": "char", "x": "char", "lam": "elem"},
    requires=_quartic_requires,
    hypothesis=_quartic_hyp,
    parts=_quartic_parts,
)


def _whipple_quad_hyp(env: Env, case) -> bool:
    n = env.n
    a, b, c = case["a"], case["b"], case["c"]
    if (2 * a) % n == 0 or b % n == 0 or c % n == 0:
        return False
    if (2 * a - b - c) % n == 0:
        return False
    return case["lam"] != env.F.neg(1)


def _whipple_quad_parts(env: Env, case):
    F = env.F
    a, b, c, lam = case["a"], case["b"], case["c"], case["lam"]
    phi = env.phi
    C = env.gq(num_circ=[2 * a - b, 2 * a - c], den=[2 * a, 2 * a - b - c])
    delta1 = 1 if lam == 1 else 0
    lhs = env.F_val((2 * a, b, c), (0, 2 * a - b, 2 * a - c), F.neg(lam)) - C * delta1
    rhs = env.chi(-2 * a, F.add(1, lam)) * env.F_val(
        (a, a + phi, 2 * a - b - c), (0, 2 * a - b, 2 * a - c), _sq_arg(F, lam)
    )
    out = [("main", lhs, rhs)]
    if lam == 1:
        lhs1 = env.F_val((2 * a, b, c), (0, 2 * a - b, 2 * a - c), F.neg(1)) - C
        rhs1 = env.chi(-a, F.from_int(4)) * env.F_val(
            (a, a + phi, 2 * a - b - c), (0, 2 * a - b, 2 * a - c), 1
        )
        out.append(("at_minus_one", lhs1, rhs1))
    return out


register(
    "WHIPPLE_QUAD",
    "Whipple's quadratic transformation for 3F2, with the lam = 1 special value",
    slots={"a": "char", "b": "char", "c": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=_whipple_quad_hyp,
    parts=_whipple_quad_parts,
)
