"""Registry entries: product formulas and the norm-lift relation for Jacobi sums."""

from __future__ import annotations

from fractions import Fraction

from ..cyclo import CycloNum
from ..engine import engine as _engine
from ..field import build_embedding
from .base import Env, register


def _odd(env: Env):
    env.require(env.q % 2 == 1, "requires odd q (quadratic character)")


# ------------------------------------------------------------------
# Confluent product formulas

def _kummer_prod1_parts(env: Env, case):
    F = env.F
    a, b, lam = case["a"], case["b"], case["lam"]
    lhs = env.psi(lam) * env.F_val((a,), (0, b), lam)
    rhs = env.F_val((b - a,), (0, b), F.neg(lam))
    return [("main", lhs, rhs)]


register(
    "KUMMER_PRODUCT_I",
    "first Kummer product formula for 1F1",
    slots={"a": "char", "b": "char", "lam": "elem"},
    hypothesis=lambda env, case: case["a"] % env.n not in (0, case["b"] % env.n),
    parts=_kummer_prod1_parts,
)


def _kummer_prod2_parts(env: Env, case):
    F = env.F
    a, lam = case["a"], case["lam"]
    phi = env.phi
    half = F.inv(F.from_int(2))
    lhs = env.psi(F.mul(lam, half)) * env.F_val((a,), (0, 2 * a), lam)
    arg = F.mul(F.mul(lam, lam), F.inv(F.from_int(16)))
    rhs = env.F_val((), (0, a + phi), arg)
    return [("main", lhs, rhs)]


register(
    "KUMMER_PRODUCT_II",
    "second Kummer product formula (1F1 against 0F1)",
    slots={"a": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=lambda env, case: case["a"] % env.n != 0,
    parts=_kummer_prod2_parts,
)


def _ramanujan_parts(env: Env, case):
    F = env.F
    a, b, lam = case["a"], case["b"], case["lam"]
    phi = env.phi
    lhs = env.F_val((a,), (0, 2 * b), lam) * env.F_val((a,), (0, 2 * b), F.neg(lam))
    arg = F.mul(F.mul(lam, lam), F.inv(F.from_int(4)))
    rhs = env.F_val((a, 2 * b - a), (0, 2 * b, b, b + phi), arg)
    return [("main", lhs, rhs)]


def _ramanujan_hyp(env: Env, case) -> bool:
    n = env.n
    a, b = case["a"], case["b"]
    phi = n // 2
    return a % n not in (0, b % n, (b + phi) % n, (2 * b) % n)


register(
    "RAMANUJAN_PRODUCT",
    "Ramanujan's product formula for 1F1 x 1F1",
    slots={"a": "char", "b": "char", "lam": "elem"},
    requires=_odd,
    hypothesis=_ramanujan_hyp,
    parts=_ramanujan_parts,
)


# ------------------------------------------------------------------
# Fourier coefficients of a product of two hypergeometric functions

def _fourier_product_parts(env: Env, case):
    F = env.F
    a, b, a2, b2, v = case["a"], case["b"], case["a2"], case["b2"], case["v"]
    key = ("fprod", a, b, a2, b2, v)
    lhs = env.scratch.get(key)
    if lhs is None:
        lhs = CycloNum.zero(env.n)
        for lam in range(1, env.q):
            lhs = lhs + env.F_val((a,), (b,), lam) * env.F_val((a2,), (b2,), lam) * env.chi(-v, lam)
        env.scratch[key] = lhs
    rhs = -(env.ratio1(a2, b2, v) * env.F_val((a, -b2 - v), (b, -a2 - v), 1))
    return [("main", lhs, rhs)]


register(
    "FOURIER_PRODUCT_LEMMA",
    "Fourier transform of a product of two hypergeometric functions",
    slots={"a": "char", "b": "char", "a2": "char", "b2": "char", "v": "char"},
    hypothesis=lambda env, case: True,
    parts=_fourier_product_parts,
)


# ------------------------------------------------------------------
# Whipple's relation between two balanced 4F3(1)

def _whipple4_enumerate(env: Env):
    import itertools

    n = env.n
    for a, b, vp, ps, c, s2 in itertools.product(range(n), repeat=6):
        t2 = (a + b + vp + ps - c - s2) % n
        case = {"a": a, "b": b, "vp": vp, "ps": ps, "c": c, "s2": s2, "t2": t2}
        if _whipple4_hyp(env, case):
            yield case


def _whipple4_hyp(env: Env, case) -> bool:
    n = env.n
    a, b, vp, ps, c, s2, t2 = (case[k] for k in ("a", "b", "vp", "ps", "c", "s2", "t2"))
    if (a + b + vp + ps - c - s2 - t2) % n != 0:
        return False
    if a % n in (0, c % n) or b % n in (0, c % n):
        return False
    return vp % n not in (s2 % n, t2 % n) and ps % n not in (s2 % n, t2 % n)


def _whipple4_parts(env: Env, case):
    q = env.q
    a, b, vp, ps, c, s2, t2 = (case[k] for k in ("a", "b", "vp", "ps", "c", "s2", "t2"))
    lhs = env.F_val((a, b, vp, ps), (0, c, s2, t2), 1)
    coef = env.ratio1(s2 - ps, s2, -vp) * env.ratio1(t2 - ps, t2, -vp)
    main = coef * env.F_val((vp, ps, c - a, c - b), (0, c, vp + ps - s2, vp + ps - t2), 1)
    qd = Fraction(1, q ** env.delta(a + b - c))
    mid = env.gq(num_circ=[c, s2, t2], den=[a, b, vp, ps]) * qd
    last = (
        env.gq(
            num=[a - c, b - c],
            num_circ=[c, s2, t2],
            den=[vp, ps, s2 - vp, t2 - vp, s2 - ps, t2 - ps],
        )
        * qd
        * env.sign_minus1(c + vp + ps)
    )
    return [("main", lhs, main + mid - last)]


register(
    "WHIPPLE_4F3",
    "Whipple's relation between balanced 4F3(1) values",
    slots={
        "a": "char",
        "b": "char",
        "vp": "char",
        "ps": "char",
        "c": "char",
        "s2": "char",
        "t2": "char",
    },
    enumerate=_whipple4_enumerate,
    hypothesis=_whipple4_hyp,
    parts=_whipple4_parts,
)


# ------------------------------------------------------------------
# Clausen's formula

def _clausen_hyp(env: Env, case) -> bool:
    n = env.n
    a, b = case["a"], case["b"]
    phi = n // 2
    return (
        (2 * a) % n != 0
        and (2 * b) % n != 0
        and (a + b) % n != 0
        and (a - b - phi) % n != 0
    )


def _clausen_parts(env: Env, case):
    F = env.F
    q = env.q
    a, b, lam = case["a"], case["b"], case["lam"]
    phi = env.phi
    f = env.F_val((a, b), (0, a + b + phi), lam)
    K = env.gq(num_circ=[a + b + phi], num=[phi], den=[a, b])
    Kt = env.gq(num_circ=[a + b + phi], num=[phi], den=[a + phi, b + phi])
    k1 = env.gq(num_circ=[a + b + phi], den=[a, b])
    k2 = env.gq(num_circ=[a + b + phi], den=[a + phi, b + phi])
    delta1 = 1 if lam == 1 else 0
    lhs = f * f + K * K * delta1
    inv_l = F.inv(lam)
    rhs = env.F_val((2 * a, 2 * b, a + b), (0, 2 * a + 2 * b, a + b + phi), lam) + (
        k1 * k2 * env.chi(a + b, inv_l) * env.chi(phi, F.one_minus[inv_l]) * q
    )
    out = [("square", lhs, rhs)]
    if lam == 1:
        val = env.F_val((2 * a, 2 * b, a + b), (0, 2 * a + 2 * b, a + b + phi), 1)
        out.append(("value_at_one", val, K * K + Kt * Kt))
    else:
        g = env.F_val((a + phi, b + phi), (0, a + b + phi), lam)
        out.append(("twist_square", f * f, g * g))
    return out


register(
    "CLAUSEN",
    "Clausen's product formula, all three conclusions",
    slots={"a": "char", "b": "char", "lam": "unit"},
    requires=_odd,
    hypothesis=_clausen_hyp,
    parts=_clausen_parts,
)


# ------------------------------------------------------------------
# Norm lift of Jacobi sums along a quadratic extension

def _dh_norm_requires(env: Env):
    from ..field import BoundExceeded
    from .base import UnsatisfiableInField

    try:
        build_embedding(env.F, 2)
    except BoundExceeded as exc:
        raise UnsatisfiableInField(f"extension field too large: {exc}")


def _dh_norm_parts(env: Env, case):
    a, v = case["a"], case["v"]
    emb = build_embedding(env.F, 2)
    ext = emb.ext
    eng2 = _engine(ext)
    # index of chi o N_l: chi(N(G_ext)) = zeta_{q-1}^{j s0} with s0 = dlog(N(G_ext))
    s0 = env.F.dlog(emb.norm(ext.generator))
    scale = (ext.q - 1) // (env.q - 1)
    a_ext = a * s0 * scale
    v_ext = v * s0 * scale
    lhs = eng2.jvec(a_ext, v_ext)
    base = env.eng.jvec(a, v)
    rhs = base * base
    return [("l_equals_2", lhs, rhs)]


register(
    "DH_NORM_LIFT",
    "Davenport-Hasse norm lift: j(chi o N, nu o N) = j(chi, nu)^l",
    slots={"a": "char", "v": "char"},
    requires=_dh_norm_requires,
    hypothesis=lambda env, case: case["a"] % env.n != 0 or case["v"] % env.n != 0,
    parts=_dh_norm_parts,
)
