"""Characters, Gauss and Jacobi sums, Pochhammer symbols."""

from fractions import Fraction

import pytest

from ffhyper.chars import (
    AddChar,
    MultChar,
    char_by_name,
    char_eval,
    gauss,
    gauss_table,
    jacobi,
    jacobi_bruteforce,
    pochhammer,
    quadratic_char,
    tables,
    trivial_char,
)
from ffhyper.cyclo import CycloNum, conjugate, embed_complex, in_subfield
from ffhyper.field import build_field

QS = [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]


@pytest.mark.parametrize("pe", QS)
def test_orthogonality(pe):
    F = build_field(*pe)
    n = F.q - 1
    for j in range(n):
        chi = MultChar(F, j)
        total = CycloNum.zero(n)
        for x in range(1, F.q):
            total = total + char_eval(chi, x)
        assert total == (n if j == 0 else 0)
    psi = AddChar(F)
    s = CycloNum.zero(F.p)
    for x in range(F.q):
        s = s + psi.eval(x)
    assert s == 0
    assert any(psi.eval(x) != 1 for x in range(F.q))  # nontrivial


def test_char_eval_basics():
    F7 = build_field(7)
    eps = trivial_char(F7)
    for x in range(1, 7):
        assert char_eval(eps, x) == 1
    for j in range(6):
        assert char_eval(MultChar(F7, j), 0) == 0
    phi = quadratic_char(F7)
    assert char_eval(phi, 2) == 1  # dlog(2) = 2 is even


@pytest.mark.parametrize("pe", QS)
def test_gauss_basic_properties(pe):
    """g(eps) = 1, g_circle(eps) = q; conjugation and reflection laws."""
    F = build_field(*pe)
    n, q = F.q - 1, F.q
    t = tables(F)
    assert gauss(F, trivial_char(F)) == 1
    assert gauss(F, trivial_char(F), "circle") == q
    for j in range(n):
        chi, chibar = MultChar(F, j), MultChar(F, -j)
        g = gauss(F, chi)
        sgn = t.sign_minus1(j)
        assert conjugate(g) == sgn * gauss(F, chibar)
        assert g * gauss(F, chibar, "circle") == sgn * q


def test_gauss_value_f3():
    F3 = build_field(3)
    g = gauss(F3, quadratic_char(F3))
    # canonical form of -zeta_3 + zeta_3^2 at conductor 6
    assert g.to_json() == {"m": 6, "coeffs": ["1/1", "-2/1"]}
    z = embed_complex(g)
    assert abs(z.real) < 1e-9 and abs(abs(z.imag) - 3**0.5) < 1e-9


@pytest.mark.parametrize("pe", QS)
def test_gauss_table_norm_sum(pe):
    """sum over j of g * conj(g) equals 1 + (q-2) q."""
    F = build_field(*pe)
    tab = gauss_table(F)
    total = CycloNum.zero(F.p * (F.q - 1))
    for g in tab:
        total = total + g * conjugate(g)
    assert total == 1 + (F.q - 2) * F.q


@pytest.mark.parametrize("pe", [(3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (11, 1)])
def test_jacobi_quotient_vs_bruteforce(pe):
    F = build_field(*pe)
    n = F.q - 1
    for a in range(n):
        for b in range(n):
            chis = [MultChar(F, a), MultChar(F, b)]
            assert jacobi(F, chis) == jacobi_bruteforce(F, chis)
    # n = 1 and a three-character sample
    for a in range(n):
        assert jacobi(F, [MultChar(F, a)]) == jacobi_bruteforce(F, [MultChar(F, a)])
    for a in range(0, n, 2):
        chis = [MultChar(F, a), MultChar(F, 1), MultChar(F, a + 1)]
        assert jacobi(F, chis) == jacobi_bruteforce(F, chis)


def test_jacobi_values():
    F5, F7 = build_field(5), build_field(7)
    assert jacobi(F5, [trivial_char(F5), trivial_char(F5)]) == -3
    assert jacobi(F7, [quadratic_char(F7), quadratic_char(F7)]) == -1
    assert jacobi(F7, [MultChar(F7, 2)]) == 1


@pytest.mark.parametrize("pe", [(5, 1), (7, 1), (3, 2)])
def test_pochhammer_laws(pe):
    F = build_field(*pe)
    n = F.q - 1
    eps = trivial_char(F)
    t = tables(F)
    for a in range(n):
        al = MultChar(F, a)
        assert pochhammer(F, al, eps) == 1
        assert pochhammer(F, al, eps, "circle") == 1
    for v in range(n):
        nu = MultChar(F, v)
        assert pochhammer(F, eps, nu) == gauss(F, nu)
        assert pochhammer(F, eps, nu, "circle") == gauss(F, nu, "circle") * Fraction(1, F.q)
        for a in range(n):
            al = MultChar(F, a)
            # (alpha)_nu (conj alpha)_conj nu circle = nu(-1)
            prod = pochhammer(F, al, nu) * pochhammer(F, al.conj(), nu.conj(), "circle")
            assert prod == t.sign_minus1(v)
            # chained shift law
            for b in range(0, n, max(1, n // 5)):
                be = MultChar(F, b)
                assert pochhammer(F, al, be * nu) == pochhammer(F, al, be) * pochhammer(F, al * be, nu)
    # psi-independence of the plain/circle ratio
    for a in range(n):
        for b in range(n):
            for v in range(n):
                val = pochhammer(F, MultChar(F, a), MultChar(F, v)) * _inv_circle(F, b, v)
                assert in_subfield(val, n)


def _inv_circle(F, b, v):
    t = tables(F)
    return t.gauss(b, circle=True) * t.inv_gauss(b + v, circle=True)


def test_duplication_formula():
    for pe in ((5, 1), (7, 1), (3, 2)):
        F = build_field(*pe)
        n = F.q - 1
        phi = n // 2
        t = tables(F)
        four = F.from_int(4)
        for a in range(n):
            lhs = t.gauss(2 * a)
            rhs = char_eval(MultChar(F, a), four) * t.gauss(a) * t.gauss(a + phi) * t.inv_gauss(phi)
            assert lhs == rhs


def test_char_by_name():
    F13 = build_field(13)
    assert char_by_name(F13, "e").j == 0
    assert char_by_name(F13, "phi").j == 6
    assert char_by_name(F13, "sigma").j == 3
    assert char_by_name(F13, "rho").j == 4
    assert char_by_name(F13, "w^5").j == 5
    with pytest.raises(ValueError):
        char_by_name(F13, "zeta")
    with pytest.raises(ValueError):
        char_by_name(build_field(7), "sigma")
