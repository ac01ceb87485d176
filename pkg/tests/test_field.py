"""Field construction: deterministic tables, dlog/trace/norm laws, embeddings."""

import pytest

from ffhyper.field import (
    BoundExceeded,
    NonPrimeP,
    ZeroHasNoDlog,
    build_embedding,
    build_field,
)


def test_prime_field_examples():
    F3 = build_field(3)
    assert F3.q == 3 and F3.generator == 2
    F7 = build_field(7)
    assert F7.generator == 3
    assert F7.dlog(2) == 2  # 3^2 = 9 = 2 (mod 7)
    assert F7.dlog(6) == 3  # 3^3 = 27 = 6 (mod 7)
    assert F7.dlog(1) == 0 and F7.dlog(F7.generator) == 1


def test_extension_field_example():
    F9 = build_field(3, 2)
    # lexicographically smallest monic irreducible quadratic over F_3 is x^2 + 1
    assert F9.modulus == (1, 0, 1)
    assert F9.trace_table[1] == 2
    # root of the modulus: code 3 encodes x; Tr(x) = x + x^3 = 0 here
    assert F9.trace_table[3] == (F9.add(3, F9.pow(3, 3)))


def test_errors():
    with pytest.raises(NonPrimeP):
        build_field(6)
    with pytest.raises(BoundExceeded):
        build_field(2, 25)
    with pytest.raises(ZeroHasNoDlog):
        build_field(5).dlog(0)


@pytest.mark.parametrize("pe", [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (3, 2), (2, 3)])
def test_dlog_homomorphism_exhaustive(pe):
    F = build_field(*pe)
    n = F.q - 1
    for x in range(1, F.q):
        for y in range(1, F.q):
            assert F.dlog(F.mul(x, y)) == (F.dlog(x) + F.dlog(y)) % n


@pytest.mark.parametrize("pe", [(5, 1), (3, 2), (2, 3), (13, 1)])
def test_trace_linear_onto_frobenius(pe):
    F = build_field(*pe)
    tr = F.trace_table
    assert tr[0] == 0
    for x in range(F.q):
        for y in range(0, F.q, max(1, F.q // 7)):
            assert tr[F.add(x, y)] == (tr[x] + tr[y]) % F.p
        assert tr[F.pow(x, F.p)] == tr[x]  # Frobenius invariance
    assert any(tr[x] for x in range(F.q))  # onto F_p


@pytest.mark.parametrize("pe,l", [((3, 1), 2), ((5, 1), 2), ((3, 2), 2), ((2, 2), 2), ((3, 1), 4)])
def test_embedding_and_norm(pe, l):
    base = build_field(*pe)
    emb = build_embedding(base, l)
    ext = emb.ext
    assert emb.embed(0) == 0 and emb.embed(1) == 1
    # ring homomorphism on full multiplication and sampled additions
    for x in range(base.q):
        for y in range(base.q):
            assert emb.embed(base.mul(x, y)) == ext.mul(emb.embed(x), emb.embed(y))
            assert emb.embed(base.add(x, y)) == ext.add(emb.embed(x), emb.embed(y))
    # norm: multiplicative, nonzero on units, N(embed(x)) = x^l
    assert emb.norm(0) == 0 and emb.norm(1) == 1
    if ext.q <= 81:
        for x in range(1, ext.q):
            assert emb.norm(x) != 0
            for y in range(1, ext.q):
                assert emb.norm(ext.mul(x, y)) == base.mul(emb.norm(x), emb.norm(y))
    for x in range(base.q):
        assert emb.norm(emb.embed(x)) == base.pow(x, l)


def test_deterministic_rebuild():
    import ffhyper.field as field_mod

    F1 = build_field(3, 2)
    field_mod._FIELD_CACHE.clear()
    F2 = build_field(3, 2)
    assert F1.modulus == F2.modulus
    assert F1.generator == F2.generator
    assert F1.dlog_table == F2.dlog_table
    assert F1.trace_table == F2.trace_table


def test_norm_lift_example():
    F3 = build_field(3)
    emb = build_embedding(F3, 2)
    # the norm of the extension generator generates the base group
    assert emb.norm(emb.ext.generator) == F3.generator


def test_header_serialization():
    h = build_field(3, 2).header()
    assert h == {"p": 3, "e": 2, "q": 9, "modulus": [1, 0, 1], "generator": 4}
