"""Identity registry and verification engine.

Every theorem in the registry is stored as an IdentityDescriptor: a slot
schema, a hypothesis predicate over a fully bound case, and independent
left/right evaluators (or a multi-part checker).  The verifier enumerates
every hypothesis-satisfying case over a given field and compares the sides
with exact CycloNum equality; nothing is ever compared through floats.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterator

from ..chars import tables
from ..cyclo import CycloNum, compress, root_of_unity
from ..engine import engine
from ..field import FieldCtx, build_field


class UnsatisfiableInField(Exception):
    """The identity's field-constrained slots cannot be bound in this field."""


class Env:
    """Per-field helper context shared by all identity evaluators."""

    def __init__(self, F: FieldCtx):
        self.F = F
        self.q = F.q
        self.n = F.q - 1
        self.mpsi = F.p * self.n
        self.eng = engine(F)
        self.tab = tables(F)
        self._gq: dict[tuple, CycloNum] = {}
        self._one = CycloNum.from_rational(self.n, 1)
        self.scratch: dict = {}

    # characters are plain ints mod n ---------------------------------

    def chars(self):
        return range(self.n)

    def delta(self, a: int) -> int:
        """delta on the character group: 1 iff omega^a is trivial."""
        return 1 if a % self.n == 0 else 0

    @property
    def phi(self) -> int:
        if self.q % 2 == 0:
            raise UnsatisfiableInField("no quadratic character in characteristic 2")
        return self.n // 2

    def require(self, cond: bool, why: str):
        if not cond:
            raise UnsatisfiableInField(why)

    def quartics(self) -> list[int]:
        self.require(self.n % 4 == 0, "4 does not divide q-1")
        return [self.n // 4, 3 * self.n // 4]

    def cubics(self) -> list[int]:
        self.require(self.n % 3 == 0, "3 does not divide q-1")
        return [self.n // 3, 2 * self.n // 3]

    def is_square_char(self, a: int) -> bool:
        if self.n % 2:
            return True
        return a % 2 == 0

    def sqrt_chars(self, a: int) -> list[int]:
        """All nu with nu^2 = omega^a."""
        n = self.n
        a %= n
        if n % 2:
            return [a * pow(2, -1, n) % n]
        if a % 2:
            return []
        return sorted({a // 2, a // 2 + n // 2})

    # values ------------------------------------------------------------

    def rat(self, x) -> CycloNum:
        return CycloNum.from_rational(self.n, Fraction(x))

    def chi(self, a: int, x: int) -> CycloNum:
        """omega^a(x) at conductor q-1 (zero at x = 0)."""
        return self.eng.chi(a, x)

    def psi(self, x: int) -> CycloNum:
        """psi(x) at the working conductor p(q-1)."""
        return root_of_unity(self.mpsi, self.n * self.F.trace_table[x])

    def F_val(self, A, B, lam: int) -> CycloNum:
        return self.eng.F_eval(tuple(A), tuple(B), lam)

    def poch(self, a: int, nu: int, circle: bool = False) -> CycloNum:
        return self.tab.gauss(a + nu, circle=circle) * self.tab.inv_gauss(a, circle=circle)

    def ratio1(self, a: int, b: int, nu: int) -> CycloNum:
        """(omega^a)_nu / (omega^b)_nu-circle, exact at conductor q-1."""
        n = self.n
        if (a - b) % n == 0:
            k = self.delta(a) - self.delta(a + nu)
            return self.rat(Fraction(self.q) ** k)
        return self.eng.jvec(a + nu, b - a) * self.eng.inv_jvec(a, b - a)

    def poch_ratio(self, A, B, nu: int) -> CycloNum:
        """(A)_nu / (B)_nu-circle for equal-degree tuples, at conductor q-1."""
        acc = self._one
        for a, b in zip(sorted(x % self.n for x in A), sorted(x % self.n for x in B)):
            acc = acc * self.ratio1(a, b, nu)
        return acc

    def gq(self, num=(), den=(), num_circ=(), den_circ=()) -> CycloNum:
        """Quotient of Gauss sums prod g(num) g_circ(num_circ) / (g(den) g_circ(den_circ)).

        Computed exactly at conductor p(q-1); compressed to q-1 whenever the
        value happens to be independent of the additive character.
        """
        key = (
            tuple(sorted(x % self.n for x in num)),
            tuple(sorted(x % self.n for x in den)),
            tuple(sorted(x % self.n for x in num_circ)),
            tuple(sorted(x % self.n for x in den_circ)),
        )
        v = self._gq.get(key)
        if v is None:
            t = self.tab
            acc = CycloNum.from_rational(self.mpsi, 1)
            for a in key[0]:
                acc = acc * t.gauss(a)
            for a in key[1]:
                acc = acc * t.inv_gauss(a)
            for a in key[2]:
                acc = acc * t.gauss(a, circle=True)
            for a in key[3]:
                acc = acc * t.inv_gauss(a, circle=True)
            small = compress(acc, self.n)
            v = small if small is not None else acc
            self._gq[key] = v
        return v

    def jac(self, *idx: int) -> CycloNum:
        return self.tab.jacobi(tuple(idx))

    def sign_minus1(self, a: int) -> int:
        return self.tab.sign_minus1(a)

    def delta_elem(self, x: int) -> int:
        """delta on the additive group: 1 iff x = 0."""
        return 1 if x == 0 else 0


_ENVS: dict[tuple[int, int], Env] = {}


def get_env(F: FieldCtx) -> Env:
    key = (F.p, F.e)
    e = _ENVS.get(key)
    if e is None:
        e = _ENVS[key] = Env(F)
    return e


Part = tuple[str, CycloNum, CycloNum]  # (label, lhs, rhs)


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    anchor: str
    slots: dict  # name -> "char" | "elem" | "unit" | "divisor" | ("tag", values)
    requires: Callable[[Env], None]  # raises UnsatisfiableInField
    enumerate: Callable[[Env], Iterator[dict]]
    hypothesis: Callable[[Env, dict], bool]
    parts: Callable[[Env, dict], list[Part]]


REGISTRY: dict[str, IdentityDescriptor] = {}


def register(
    id: str,
    anchor: str,
    slots: dict,
    hypothesis: Callable[[Env, dict], bool],
    requires: Callable[[Env], None] | None = None,
    enumerate: Callable[[Env], Iterator[dict]] | None = None,
    lhs: Callable[[Env, dict], CycloNum] | None = None,
    rhs: Callable[[Env, dict], CycloNum] | None = None,
    parts: Callable[[Env, dict], list[Part]] | None = None,
):
    if id in REGISTRY:
        raise ValueError(f"duplicate identity id {id}")
    if parts is None:
        if lhs is None or rhs is None:
            raise ValueError("need either parts or lhs+rhs")

        def parts(env, case, _l=lhs, _r=rhs):
            return [("main", _l(env, case), _r(env, case))]

    if requires is None:
        requires = lambda env: None
    if enumerate is None:
        enumerate = lambda env, _s=slots, _h=hypothesis: _product_cases(env, _s, _h)
    REGISTRY[id] = IdentityDescriptor(id, anchor, slots, requires, enumerate, hypothesis, parts)


def _slot_domain(env: Env, kind):
    if isinstance(kind, tuple) and kind[0] == "tag":
        return list(kind[1])
    if kind == "char":
        return range(env.n)
    if kind == "elem":
        return range(env.q)
    if kind == "unit":
        return range(1, env.q)
    if kind == "divisor":
        return [d for d in range(1, env.n + 1) if env.n % d == 0]
    raise ValueError(f"unknown slot kind {kind!r}")


def _product_cases(env: Env, slots: dict, hypothesis) -> Iterator[dict]:
    import itertools

    names = list(slots)
    domains = [_slot_domain(env, slots[k]) for k in names]
    for combo in itertools.product(*domains):
        case = dict(zip(names, combo))
        if hypothesis(env, case):
            yield case


def list_identities() -> list[dict]:
    return [
        {"id": d.id, "anchor": d.anchor, "slots": {k: str(v) for k, v in d.slots.items()}}
        for d in (REGISTRY[i] for i in sorted(REGISTRY))
    ]


def enumerate_cases(identity: str, F: FieldCtx, mode: str = "exhaustive", n: int = 100, seed: int = 0):
    """Iterate the bound cases of one identity over one field.

    Exhaustive mode yields every slot binding satisfying the hypothesis;
    sample mode yields n seeded, deduplicated bindings.  Raises
    UnsatisfiableInField when the field cannot host the identity's slots.
    """
    desc = REGISTRY[identity]
    env = get_env(F)
    desc.requires(env)
    if mode == "exhaustive":
        return desc.enumerate(env)
    return iter(_sample_cases(env, desc, n, seed))


@dataclass
class VerifyReport:
    identity: str
    field: dict
    mode: dict
    cases_checked: int = 0
    skipped: bool = False
    skip_reason: str | None = None
    failures: list = dc_field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, with_timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "field": self.field,
            "mode": self.mode,
            "cases_checked": self.cases_checked,
            "skipped": self.skipped,
            "failures": self.failures,
        }
        if self.skip_reason:
            out["skip_reason"] = self.skip_reason
        if with_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _case_key(case: dict):
    return tuple(sorted(case.items()))


def _sample_cases(env: Env, desc: IdentityDescriptor, n: int, seed: int) -> list[dict]:
    rng = random.Random(seed)
    names = list(desc.slots)
    seen = set()
    out = []
    attempts = 0
    cap = max(10000, 2000 * n)
    while len(out) < n and attempts < cap:
        attempts += 1
        case = {}
        for name in names:
            dom = _slot_domain(env, desc.slots[name])
            case[name] = rng.choice(list(dom)) if not isinstance(dom, range) else rng.randrange(dom.start, dom.stop)
        if not desc.hypothesis(env, case):
            continue
        k = _case_key(case)
        if k in seen:
            continue
        seen.add(k)
        out.append(case)
    return out


def verify(
    identity: str,
    F: FieldCtx,
    mode: str = "exhaustive",
    n: int = 100,
    seed: int = 0,
    max_failures: int | None = None,
) -> VerifyReport:
    """Run one identity over one field; exact comparison on every case."""
    desc = REGISTRY[identity]
    mode_info = {"mode": mode} if mode == "exhaustive" else {"mode": mode, "n": n, "seed": seed}
    report = VerifyReport(identity=identity, field=F.header(), mode=mode_info)
    start = time.perf_counter()
    env = get_env(F)
    try:
        desc.requires(env)
        cases = desc.enumerate(env) if mode == "exhaustive" else _sample_cases(env, desc, n, seed)
        for case in cases:
            report.cases_checked += 1
            for label, lhs_v, rhs_v in desc.parts(env, case):
                if lhs_v != rhs_v:
                    report.failures.append(
                        {
                            "case": dict(sorted(case.items())),
                            "part": label,
                            "lhs": lhs_v.to_json(),
                            "rhs": rhs_v.to_json(),
                        }
                    )
                    if max_failures is not None and len(report.failures) >= max_failures:
                        raise StopIteration
    except StopIteration:
        pass
    except UnsatisfiableInField as exc:
        report.skipped = True
        report.skip_reason = str(exc)
    report.failures.sort(key=lambda f: tuple(sorted(f["case"].items())))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _verify_task(args):
    identity, p, e, mode, n, seed = args
    F = build_field(p, e)
    return verify(identity, F, mode=mode, n=n, seed=seed)


def verify_all(
    fields: list[FieldCtx],
    identities: list[str] | None = None,
    mode: str = "exhaustive",
    n: int = 100,
    seed: int = 0,
    jobs: int = 1,
) -> list[VerifyReport]:
    """Run every registry entry on every field where satisfiable."""
    ids = sorted(REGISTRY) if identities is None else list(identities)
    tasks = [(i, F.p, F.e, mode, n, seed) for i in ids for F in fields]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_verify_task, tasks))
    else:
        reports = [_verify_task(t) for t in tasks]
    reports.sort(key=lambda r: (r.identity, r.field["q"]))
    return reports


def mutation_probe(env: Env, identity: str, rng: random.Random, attempts: int = 40) -> str:
    """Flip one character slot of a passing case; the engine must notice.

    Returns "rejected" when the mutated case violates the hypothesis, or
    "detected" when the sides disagree on the mutated case.  Raises if the
    mutation goes unnoticed within the attempt budget (evaluator-independence
    guard).
    """
    desc = REGISTRY[identity]
    char_slots = [k for k, v in desc.slots.items() if v == "char"]
    if not char_slots:
        raise ValueError(f"{identity} has no character slots to mutate")
    for _ in range(attempts):
        it = desc.enumerate(env)
        skip = rng.randrange(64)
        case = None
        for i, c in enumerate(it):
            case = c
            if i >= skip:
                break
        if case is None:
            raise UnsatisfiableInField(f"{identity}: no cases in this field")
        slot = rng.choice(char_slots)
        mutated = dict(case)
        delta = rng.randrange(1, env.n)
        mutated[slot] = (case[slot] + delta) % env.n
        if not desc.hypothesis(env, mutated):
            return "rejected"
        orig_parts = desc.parts(env, case)
        mut_parts = desc.parts(env, mutated)
        for (_, l0, _), (_, _, r1) in zip(orig_parts, mut_parts):
            if l0 != r1:
                return "detected"
    raise AssertionError(f"mutation went undetected for {identity}")
