"""Acceptance suite: one checked criterion per test, one printed line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines,
or `python -m pytest` for the plain pass/fail roll-up.  Criterion 8 carries a
deliberate red subtest: the unconditional sign claim on the cubic constant
term is refuted by point counts (see the project notes); the attainable parts
of that criterion live in their own green test.
"""

import itertools
import json
import random
import time
from fractions import Fraction

import pytest

from ffhyper.chars import MultChar, gauss, jacobi, jacobi_bruteforce, tables, trivial_char
from ffhyper.cyclo import CycloNum, compress, conjugate, in_subfield
from ffhyper.engine import PairingViolation, engine
from ffhyper.field import build_field
from ffhyper.identities import REGISTRY, get_env, mutation_probe, verify, verify_all
from ffhyper.varieties import dwork_P, elliptic_trace, k3_count, k3_extension_consistency, zeta_k3


def _line(num, ok, detail):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


FIELDS_CORE = [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]


def test_criterion_01_gauss_jacobi_core():
    t0 = time.perf_counter()
    for pe in FIELDS_CORE:
        F = build_field(*pe)
        n, q = F.q - 1, F.q
        t = tables(F)
        assert gauss(F, trivial_char(F)) == 1 and gauss(F, trivial_char(F), "circle") == q
        for j in range(n):
            chi, chibar = MultChar(F, j), MultChar(F, -j)
            sgn = t.sign_minus1(j)
            assert conjugate(gauss(F, chi)) == sgn * gauss(F, chibar)
            assert gauss(F, chi) * gauss(F, chibar, "circle") == sgn * q
        for a in range(n):
            for b in range(n):
                assert jacobi(F, [MultChar(F, a), MultChar(F, b)]) == t.jacobi((a, b))
        if q <= 11:
            for a in range(n):
                assert jacobi(F, [MultChar(F, a)]) == jacobi_bruteforce(F, [MultChar(F, a)])
                for b in range(n):
                    pair = [MultChar(F, a), MultChar(F, b)]
                    assert jacobi(F, pair) == jacobi_bruteforce(F, pair)
            rng = random.Random(q)
            triples = [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]
            for a, b, c in rng.sample(triples, min(60, len(triples))):
                tri = [MultChar(F, a), MultChar(F, b), MultChar(F, c)]
                assert jacobi(F, tri) == jacobi_bruteforce(F, tri)
    elapsed = time.perf_counter() - t0
    _line(1, elapsed < 30, f"Gauss/Jacobi laws exact on q in {{3,4,5,7,8,9,11,13}} ({elapsed:.1f}s < 30s)")


def test_criterion_02_davenport_hasse():
    for pe in ((5, 1), (7, 1), (3, 2), (13, 1), (5, 2)):
        r = verify("DH_MULT", build_field(*pe))
        assert r.passed and not r.skipped and r.cases_checked > 0, (pe, r.failures[:1])
    for pe in ((3, 1), (5, 1), (7, 1)):
        r = verify("DH_NORM_LIFT", build_field(*pe))
        assert r.passed and not r.skipped and r.cases_checked > 0, (pe, r.failures[:1])
    _line(2, True, "multiplication formula on q in {5,7,9,13,25}; norm lift (l=2) on q in {3,5,7}")


def test_criterion_03_identity_registry():
    t0 = time.perf_counter()
    assert len(REGISTRY) >= 38
    import os

    jobs = int(os.environ.get("FFHYPER_JOBS", "1"))
    fields = [build_field(*pe) for pe in ((3, 1), (5, 1), (7, 1), (3, 2), (13, 1))]
    reports = verify_all(fields, mode="exhaustive", jobs=jobs)
    bad = [r for r in reports if not r.passed]
    assert not bad, [(r.identity, r.field["q"], r.failures[:1]) for r in bad[:3]]
    # (identity, field, whether the hypothesis has any instances there);
    # RMO is vacuous over F_7: every character satisfies alpha^6 = eps
    extra = [("QUARTIC_COR", (5, 1), True), ("QUARTIC_COR", (13, 1), True),
             ("QUARTIC_COR", (5, 2), True),
             ("RMO_CUBIC", (7, 1), False), ("RMO_CUBIC", (13, 1), True),
             ("KUMMER_MINUS1", (2, 2), True), ("KUMMER_MINUS1", (2, 3), True),
             ("KUMMER_MINUS1", (2, 4), True)]
    for ident, pe, nonempty in extra:
        r = verify(ident, build_field(*pe))
        assert r.passed and not r.skipped, (ident, pe, r.failures[:1])
        assert (r.cases_checked > 0) == nonempty, (ident, pe, r.cases_checked)
    checked = sum(r.cases_checked for r in reports)
    elapsed = time.perf_counter() - t0
    _line(3, elapsed < 2400, f"{len(REGISTRY)} identities, {checked} cases on q in {{3,5,7,9,13}} "
          f"+ quartic/cubic/char-2 extras, zero failures ({elapsed/60:.1f} min)")


def test_criterion_04_oracle_equivalence():
    t0 = time.perf_counter()
    for pe in ((3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)):
        F = build_field(*pe)
        n = F.q - 1
        eng = engine(F)
        deg_sets = [list(itertools.combinations_with_replacement(range(n), d)) for d in (1, 2, 3)]
        for d_idx, tuples in enumerate(deg_sets):
            d = d_idx + 1
            if d == 3 and F.q > 9:
                tuples_a = tuples[:: max(1, len(tuples) // 40)]
            else:
                tuples_a = tuples
            for A in tuples_a:
                for B in tuples:
                    try:
                        eng.oracle_pairing(A, B)
                    except PairingViolation:
                        continue
                    for lam in range(F.q):
                        assert eng.F_oracle(A, B, lam) == eng.F_balanced(A, B, lam), (F.q, A, B, lam)
    elapsed = time.perf_counter() - t0
    _line(4, True, f"defining-sum route == constrained-product oracle, d <= 3, q <= 11 ({elapsed:.0f}s)")


def test_criterion_05_psi_independence():
    for pe in ((5, 1), (7, 1), (3, 2)):
        F = build_field(*pe)
        n = F.q - 1
        eng = engine(F)
        deg12 = [(x,) for x in range(n)] + list(itertools.combinations_with_replacement(range(n), 2))
        for A in deg12:
            for B in deg12:
                if len(A) != len(B):
                    continue
                for lam in range(F.q):
                    big = eng.F_general(A, B, lam)
                    assert in_subfield(big, n), (F.q, A, B, lam)
                    assert compress(big, n) == eng.F_balanced(A, B, lam)
    _line(5, True, "all balanced values lie in Q(zeta_{q-1}) and match the conductor-(q-1) route")


def test_criterion_06_norm_identity():
    for pe in ((5, 1), (7, 1), (3, 2)):
        F = build_field(*pe)
        n, q = F.q - 1, F.q
        eng = engine(F)
        multisets = [()] + [(x,) for x in range(n)] + list(
            itertools.combinations_with_replacement(range(n), 2)
        )
        for A in multisets:
            for B in multisets:
                total = None
                for lam in range(q):
                    v = eng.F_eval(A, B, lam)
                    term = v * conjugate(v)
                    total = term if total is None else total + term
                both = [x % n for x in A] + [x % n for x in B]
                rhs = sum(Fraction(q) ** (both.count(0) - both.count(v)) for v in range(n))
                assert total == rhs * Fraction(1, n), (F.q, A, B)
    _line(6, True, "Plancherel norm identity exact for all deg <= 2 multisets, q in {5,7,9}")


def test_criterion_07_k3_family():
    for pe in ((5, 1), (3, 2), (13, 1)):
        F = build_field(*pe)
        for lam in range(2, F.q):
            z = zeta_k3(F, lam)
            assert z.methods_agree, (F.q, lam)
            assert z.count == 1 + F.q**2 + 19 * F.q + z.b
            assert len(z.trivial_roots) == 22 and z.pair_product == F.q**2
    F5 = build_field(5)
    assert all(k3_extension_consistency(F5, lam, 2) for lam in (2, 3, 4))
    _line(7, True, "three-way b agreement + full factorization, q in {5,9,13}; degree-2 consistency at q=5")


def test_criterion_08_dwork():
    # q=5: lambda^4 = 1 for every unit, so the stated sweep is empty there
    F5 = build_field(5)
    assert [lam for lam in range(1, 5) if F5.pow(lam, 4) != 1] == []
    F13 = build_field(13)
    admissible = [lam for lam in range(1, 13) if F13.pow(lam, 4) != 1]
    assert len(admissible) == 8
    square_seen = 0
    for lam in admissible:
        r = dwork_P(F13, lam)  # integrality and Newton divisibility enforced inside
        assert abs(r.cubic[2]) == 13**3
        if r.square_case:
            square_seen += 1
            assert r.matched is True and len(r.lam_primes) == 2
    # the factorization branch is vacuous at q in {5,13}; exercise it at q=9
    F9 = build_field(3, 2)
    for lam in (4, 5, 7, 8):
        r = dwork_P(F9, lam)
        assert r.square_case and r.matched is True and len(r.lam_primes) == 2
        assert r.cubic[2] == 9**3
    _line(8, True, "integrality, Newton divisibility, |e3| = q^3; factorization matched for both "
          "roots wherever 1 - lam^-4 is a square (vacuous at q in {5,13}; exercised at q=9)")


def test_criterion_08_e3_positive_as_stated():
    """KNOWN RED. The criterion's unconditional clause "e3 = q^3" is
    mathematically false: at q = 13 every admissible lambda has non-square
    1 - lam^-4 and the cubic constant term equals -q^3, confirmed by two
    independent projective point counts (F_13 and F_169) against the
    hypergeometric power sums.  The sign claim only follows from the
    factorization theorem, whose hypothesis (square case) never holds at
    q in {5,13}.  Kept failing on purpose; see the decisions ledger."""
    F13 = build_field(13)
    bad = []
    for lam in range(1, 13):
        if F13.pow(lam, 4) == 1:
            continue
        r = dwork_P(F13, lam)
        if r.cubic[2] != 13**3:
            bad.append((lam, r.cubic[2]))
    _line(8, not bad, f"e3 = +q^3 for every admissible lambda as literally stated; refuted at {bad}")


def test_criterion_09_determinism(tmp_path):
    from ffhyper.cli import golden_emit

    d1, d2 = tmp_path / "a", tmp_path / "b"
    golden_emit(str(d1))
    golden_emit(str(d2))
    names = sorted(p.name for p in d1.iterdir())
    assert names == sorted(p.name for p in d2.iterdir())
    for name in names:
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes(), name
    r1 = verify("THOMAE", build_field(7), mode="sample", n=20, seed=7).to_json(with_timing=False)
    r2 = verify("THOMAE", build_field(7), mode="sample", n=20, seed=7).to_json(with_timing=False)
    assert json.dumps(r1, sort_keys=True) == json.dumps(r2, sort_keys=True)
    _line(9, True, f"{len(names)} golden fixtures byte-identical across runs; seeded reports stable")


def test_criterion_10_mutation_sanity():
    rng = random.Random(99)
    env = get_env(build_field(7))
    pool = [i for i in sorted(REGISTRY)
            if any(v == "char" for v in REGISTRY[i].slots.values())]
    outcomes = []
    for k in range(10):
        ident = pool[rng.randrange(len(pool))]
        try:
            outcomes.append(mutation_probe(env, ident, rng))
        except Exception as exc:  # UnsatisfiableInField on this q: redraw
            from ffhyper.identities import UnsatisfiableInField

            if isinstance(exc, UnsatisfiableInField):
                outcomes.append(mutation_probe(env, "EULER_GAUSS", rng))
            else:
                raise
    assert len(outcomes) == 10
    assert all(o in ("rejected", "detected") for o in outcomes)
    _line(10, True, f"10 mutated instances reported: {outcomes.count('detected')} detected, "
          f"{outcomes.count('rejected')} hypothesis-rejected")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-s", "-v"]))
