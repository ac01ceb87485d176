"""Both kernel backends must agree exactly, including past int64 range."""

import random

from ffhyper import _pykernel
from ffhyper import kernel


def _random_case(rng, n, bits):
    a = [rng.randrange(-(1 << bits), 1 << bits) for _ in range(n)]
    b = [rng.randrange(-(1 << bits), 1 << bits) for _ in range(n)]
    # monic modulus tail with small entries, like a cyclotomic polynomial
    phi_idx = sorted(rng.sample(range(n), max(1, n // 3)))
    phi_val = [rng.choice((-1, 1)) for _ in phi_idx]
    return a, b, phi_idx, phi_val


def test_backends_agree_small():
    rng = random.Random(7)
    for n in (1, 2, 4, 8, 48):
        for _ in range(25):
            a, b, pi, pv = _random_case(rng, n, 20)
            got = kernel.polymul_reduce(a, b, n, pi, pv)
            want = _pykernel.polymul_reduce(a, b, n, pi, pv)
            assert got == want


def test_backends_agree_huge_coefficients():
    # forces the compiled kernel onto its arbitrary-precision fallback
    rng = random.Random(11)
    for _ in range(5):
        a, b, pi, pv = _random_case(rng, 6, 200)
        got = kernel.polymul_reduce(a, b, 6, pi, pv)
        want = _pykernel.polymul_reduce(a, b, 6, pi, pv)
        assert got == want


def test_overflow_boundary():
    # products just around the int64 guard must stay exact
    rng = random.Random(13)
    for bits in (29, 30, 31, 32):
        a = [(1 << bits) - 1] * 8
        b = [-(1 << bits) + 3] * 8
        pi, pv = [0, 3], [1, -1]
        assert kernel.polymul_reduce(a, b, 8, pi, pv) == _pykernel.polymul_reduce(a, b, 8, pi, pv)


def test_reduce_matches_polynomial_division():
    # x^5 mod (x^2 - x - 1) -> Fibonacci coordinates
    got = kernel.poly_reduce([0, 0, 0, 0, 0, 1], 2, [0, 1], [-1, -1])
    assert got == [3, 5]
