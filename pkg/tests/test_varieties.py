"""Elliptic traces, K3 counts, zeta data, quartic-surface power sums."""

import pytest

from ffhyper.field import build_field
from ffhyper.varieties import (
    BadLambda,
    NonIntegerPowerSum,
    dwork_P,
    elliptic_trace,
    k3_count,
    k3_extension_consistency,
    zeta_k3,
)


def test_elliptic_trace_examples():
    F5 = build_field(5)
    for lam in (2, 3, 4):
        et = elliptic_trace(F5, lam)
        assert et.methods_agree
        assert abs(et.a) <= 4  # Hasse: |a| <= 2 sqrt(5)
    # frozen values from the affine character sum
    assert elliptic_trace(F5, 2).a == 0
    assert elliptic_trace(F5, 3).a == -2
    assert elliptic_trace(F5, 4).a == -2
    with pytest.raises(BadLambda):
        elliptic_trace(F5, 0)
    with pytest.raises(BadLambda):
        elliptic_trace(F5, 1)


@pytest.mark.parametrize("pe", [(5, 1), (3, 2), (13, 1)])
def test_elliptic_two_paths_and_hasse(pe):
    F = build_field(*pe)
    for lam in range(2, F.q):
        if lam == 1:
            continue
        et = elliptic_trace(F, lam)
        assert et.methods_agree
        assert et.a * et.a <= 4 * F.q


@pytest.mark.parametrize("pe", [(5, 1), (3, 2), (13, 1)])
def test_k3_three_way_agreement(pe):
    F = build_field(*pe)
    q = F.q
    for lam in range(2, q):
        z = k3_count(F, lam)
        assert z.methods_agree, (q, lam)
        assert z.count == 1 + q * q + 19 * q + z.b
        assert z.b == z.u * (z.a * z.a - q)


def test_zeta_factor_structure():
    F5 = build_field(5)
    for lam in (2, 4):
        z = zeta_k3(F5, lam)
        # 1, q^2, nineteen q's, uq; the conjugate pair brings the total to 24
        assert len(z.trivial_roots) == 22
        assert z.trivial_roots[2:21] == (5,) * 19  # nineteen copies of q
        assert z.trivial_roots[0] == 1 and z.trivial_roots[1] == 25
        assert z.trivial_roots[-1] == z.u * 5
        assert z.pair_product == 25
        assert z.pair_sum == z.u * (z.a * z.a - 2 * 5)
    assert zeta_k3(F5, 4).u == -1  # both twist signs exercised
    assert zeta_k3(F5, 2).u == 1


def test_k3_extension_consistency_q5():
    F5 = build_field(5)
    for lam in (2, 3, 4):
        assert k3_extension_consistency(F5, lam, 2)


def test_dwork_q9_square_case_matches_both_roots():
    F9 = build_field(3, 2)
    admissible = [lam for lam in range(1, 9) if F9.pow(lam, 4) != 1]
    assert admissible  # 4 of them
    for lam in admissible:
        r = dwork_P(F9, lam)
        assert r.cubic[2] == 9**3
        assert r.square_case and r.matched is True
        assert len(r.lam_primes) == 2  # both roots tested


def test_dwork_q13_sweep():
    F13 = build_field(13)
    admissible = [lam for lam in range(1, 13) if F13.pow(lam, 4) != 1]
    assert len(admissible) == 8
    for lam in admissible:
        r = dwork_P(F13, lam)
        f1, f2, f3 = r.power_sums  # exact integers by construction
        e1, e2, e3 = r.cubic
        assert e1 == f1 and 2 * e2 == f1 * f1 - f2
        assert abs(e3) == 13**3
        # all admissible lambda at q=13 land in the non-square case
        assert not r.square_case and r.matched is None


def test_dwork_q13_frozen_oracle_values():
    """Power sums frozen from two independent projective point counts."""
    F13 = build_field(13)
    r = dwork_P(F13, 2)
    assert r.power_sums[:2] == (-19, -133)
    assert r.cubic == (-19, 247, -2197)


def test_dwork_bad_lambda():
    F13 = build_field(13)
    with pytest.raises(BadLambda):
        dwork_P(F13, 1)  # 1^4 = 1
    with pytest.raises(BadLambda):
        dwork_P(build_field(7), 2)  # 4 does not divide 6
