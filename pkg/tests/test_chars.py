"""Character group structure, the delta bookkeeping, iota/kappa, norm lifts."""

import random
from fractions import Fraction

import pytest

from hgff.chars import (
    MultChar,
    RationalParam,
    all_chars,
    char_value,
    delta_char,
    delta_elem,
    iota,
    kappa,
    lift_norm,
    quadratic,
    trivial,
)
from hgff.cyclo import CycloNum
from hgff.errors import IncompatibleCongruence, OrderDoesNotDivide
from hgff.fields import construct_field, extension
from hgff.identities.engine import fields_from_qs


def test_char_value_examples():
    F5 = construct_field(5)
    eps = trivial(F5)
    phi = quadratic(F5)
    assert char_value(eps, F5.zero()).is_zero()  # eps(0) = 0
    assert char_value(phi, F5.from_int(4)) == 1
    assert char_value(phi, F5.from_int(2)) == -1  # 2 is a non-residue mod 5


def test_group_structure():
    F7 = construct_field(7)
    for a in all_chars(F7):
        for b in all_chars(F7):
            assert (a * b).m == (a.m + b.m) % 6
        assert a.conj().m == (-a.m) % 6
        assert a.order() == 6 // __import__("math").gcd(a.m, 6)


def test_delta():
    F5 = construct_field(5)
    assert delta_char(trivial(F5)) == 1
    assert delta_char(quadratic(F5)) == 0
    assert delta_elem(F5.zero()) == 1
    assert delta_elem(F5.one()) == 0


def test_orthogonality_exhaustive():
    for q in (3, 4, 5, 7, 9, 11, 13, 25, 27, 49):
        (F,) = fields_from_qs([q])
        for chi in all_chars(F):
            total = CycloNum.zero(1)
            for x in F.units():
                total = total + char_value(chi, x)
            expected = (q - 1) * delta_char(chi)
            assert total == expected, (q, chi.m)


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 27])
def test_expansion_uniqueness(q):
    # random f reconstructed from its character coefficients plus delta(x) f(0)
    (F,) = fields_from_qs([q])
    rng = random.Random(q)
    M = q - 1
    f = {x.idx: CycloNum.zeta_pow(M, rng.randrange(M)) * rng.randrange(-3, 4)
         for x in F.elements()}
    coeffs = []
    for chi in all_chars(F):
        c = CycloNum.zero(1)
        for y in F.units():
            c = c + f[y.idx] * char_value(chi.conj(), y)
        coeffs.append(c * Fraction(1, M))
    for x in F.elements():
        recon = f[0] * delta_elem(x) if x.idx == 0 else CycloNum.zero(1)
        if x.idx == 0:
            recon = f[0]
        else:
            recon = CycloNum.zero(1)
        for chi, c in zip(all_chars(F), coeffs):
            recon = recon + c * char_value(chi, x)
        assert recon == f[x.idx], (q, x.idx)


@pytest.mark.parametrize("q", [5, 7, 9, 13, 27])
def test_delta_expansion(q):
    # sum over characters of chi(x/a)/(q-1) equals delta(x - a) for a != 0
    (F,) = fields_from_qs([q])
    M = q - 1
    for a in (F.one(), F.gen()):
        for x in F.elements():
            total = CycloNum.zero(1)
            if x.idx:
                ratio = x / a
                for chi in all_chars(F):
                    total = total + char_value(chi, ratio)
            total = total * Fraction(1, M)
            assert total == delta_elem(x - a)


def test_iota_examples():
    F5 = construct_field(5)
    assert iota(RationalParam(1, 2), F5) == quadratic(F5)
    assert iota(RationalParam(0, 1), F5) == trivial(F5)
    with pytest.raises(IncompatibleCongruence):
        iota(RationalParam(1, 3), F5)


def test_iota_addition():
    F13 = construct_field(13)
    for i in range(12):
        for j in range(12):
            lhs = iota(Fraction(i, 12), F13) * iota(Fraction(j, 12), F13)
            assert lhs == iota(Fraction(i + j, 12), F13)


def test_kappa_examples():
    F5 = construct_field(5)
    assert kappa(quadratic(F5), 2) == RationalParam(1, 2)
    assert kappa(trivial(F5), 4) == RationalParam(0, 1)
    F13 = construct_field(13)
    for i in (1, 5, 7, 11):
        assert kappa(iota(Fraction(i, 12), F13), 12) == RationalParam(i, 12)
    with pytest.raises(OrderDoesNotDivide):
        kappa(quadratic(F13), 3)


def test_lift_norm_examples():
    F5 = construct_field(5)
    phi = quadratic(F5)
    lifted = lift_norm(phi, 2)
    ext = extension(F5, 2)
    # on embedded base elements the lift is the r-th power of the value
    two = F5.from_int(2)
    assert char_value(lifted, ext.embed(two)) == char_value(phi, two) ** 2 == 1
    assert lift_norm(trivial(F5), 3).is_trivial()
    for m in range(4):
        for r in (2, 3):
            chi = MultChar(F5, m)
            assert lift_norm(chi, r).order() == chi.order()


def test_lift_norm_respects_norm_map():
    F9 = construct_field(3, 2)
    ext = extension(F9, 2)
    for m in range(8):
        chi = MultChar(F9, m)
        lifted = lift_norm(chi, 2)
        for x in ext.top.units():
            assert char_value(lifted, x) == char_value(chi, ext.norm(x))
