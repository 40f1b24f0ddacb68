"""Period functions: the two evaluation paths, normalization, primitivity,
the Greene/McCarthy comparison layer, and rational-parameter conversion."""

import itertools
import random
from fractions import Fraction

import pytest

from hgff.chars import MultChar, RationalParam, quadratic, trivial
from hgff.cyclo import CycloNum
from hgff.errors import IncompatibleCongruence
from hgff.fields import construct_field
from hgff.hyper import (
    HGSpec,
    f_normalized,
    greene_F,
    greene_period_relation,
    is_primitive,
    mccarthy_F,
    mccarthy_relation,
    normalizer,
    p1_0,
    period_direct,
    period_spectral,
    rational_spec,
    spec_from_exponents,
)
from hgff.identities.engine import fields_from_qs
from hgff.sums import cache_for


def test_p1_0_examples():
    F5 = construct_field(5)
    eps, phi = trivial(F5), quadratic(F5)
    assert p1_0(eps, F5.from_int(3)) == 1
    assert p1_0(phi, F5.one()).is_zero()
    assert p1_0(phi, F5.from_int(3)) == -1  # phi(-2) = phi(3) = -1


def test_period_examples():
    F5 = construct_field(5)
    spec = spec_from_exponents(F5, [2, 2], [0])
    assert period_direct(spec, F5.from_int(2)) == 2
    # lambda = 0 evaluates to the normalizing Jacobi sum
    c = cache_for(F5)
    for a1, a2, b1 in itertools.product(range(4), repeat=3):
        s = spec_from_exponents(F5, [a1, a2], [b1])
        assert period_direct(s, F5.zero()) == c.jacobi(a2, b1 - a2)
        # Gauss evaluation at lambda = 1
        assert period_direct(s, F5.one()) == c.jacobi(a2, b1 - a1 - a2)


@pytest.mark.parametrize("q", [5, 7, 9])
def test_spectral_equals_direct_n1_exhaustive(q):
    (F,) = fields_from_qs([q])
    M = q - 1
    for a1, a2, b1 in itertools.product(range(M), repeat=3):
        spec = spec_from_exponents(F, [a1, a2], [b1])
        for x in F.elements():
            assert period_direct(spec, x) == period_spectral(spec, x)


@pytest.mark.parametrize("q", [11, 13, 25])
def test_spectral_equals_direct_n1_sampled(q):
    (F,) = fields_from_qs([q])
    rng = random.Random(q)
    M = q - 1
    for _ in range(120):
        spec = spec_from_exponents(F, [rng.randrange(M), rng.randrange(M)],
                                   [rng.randrange(M)])
        x = F.element(rng.randrange(q))
        assert period_direct(spec, x) == period_spectral(spec, x)


@pytest.mark.parametrize("q", [5, 7])
def test_spectral_equals_direct_n2_sampled(q):
    (F,) = fields_from_qs([q])
    rng = random.Random(q)
    M = q - 1
    for _ in range(80):
        spec = spec_from_exponents(
            F, [rng.randrange(M) for _ in range(3)], [rng.randrange(M) for _ in range(2)])
        x = F.element(rng.randrange(q))
        assert period_direct(spec, x) == period_spectral(spec, x)


def test_spectral_equals_direct_n3_smoke():
    F5 = construct_field(5)
    rng = random.Random(1)
    for _ in range(12):
        spec = spec_from_exponents(
            F5, [rng.randrange(4) for _ in range(4)], [rng.randrange(4) for _ in range(3)])
        x = F5.element(rng.randrange(5))
        assert period_direct(spec, x) == period_spectral(spec, x)


def test_value_domain_integrality():
    # n=1 period values lie in Z[zeta_{q-1}]: integer canonical coefficients
    for q in (7, 9):
        (F,) = fields_from_qs([q])
        M = q - 1
        for a1, a2, b1 in itertools.product(range(M), repeat=3):
            spec = spec_from_exponents(F, [a1, a2], [b1])
            for x in F.elements():
                assert period_direct(spec, x).den == 1


def test_normalized_examples():
    F5 = construct_field(5)
    for a1, a2, b1 in itertools.product(range(4), repeat=3):
        spec = spec_from_exponents(F5, [a1, a2], [b1])
        assert f_normalized(spec, F5.zero()) == 1
    # upper-slot symmetry for primitive specs
    F7 = construct_field(7)
    for a1, a2, b1 in itertools.product(range(6), repeat=3):
        spec = spec_from_exponents(F7, [a1, a2], [b1])
        if not is_primitive(spec):
            continue
        swapped = spec_from_exponents(F7, [a2, a1], [b1])
        for x in F7.elements():
            assert f_normalized(spec, x) == f_normalized(swapped, x)


def test_imprimitive_first_slot_formula():
    # normalized value with trivial first upper slot, lambda != 0
    F7 = construct_field(7)
    c = cache_for(F7)
    one = F7.one()
    for b, cc in itertools.product(range(1, 6), repeat=2):
        spec = spec_from_exponents(F7, [0, b], [cc])
        for x in F7.units():
            expected = 1 - (c.chv(-cc, x) * c.chv(cc - b, x - one)
                            * c.jacobi_inv(b, cc - b))
            assert f_normalized(spec, x) == expected


def test_is_primitive_examples():
    F5 = construct_field(5)
    phi = quadratic(F5)
    eps = trivial(F5)
    assert is_primitive(HGSpec([phi, phi], [eps]))
    assert not is_primitive(HGSpec([eps, phi], [phi]))
    assert not is_primitive(HGSpec([phi, phi], [phi]))


@pytest.mark.parametrize("q", [5, 7, 9])
def test_greene_relation_exhaustive(q):
    (F,) = fields_from_qs([q])
    M = q - 1
    for a1, a2, b1 in itertools.product(range(M), repeat=3):
        spec = spec_from_exponents(F, [a1, a2], [b1])
        for x in F.elements():
            lhs, rhs = greene_period_relation(spec, x)
            assert lhs == rhs


@pytest.mark.parametrize("q", [13, 25, 27])
def test_greene_relation_sampled(q):
    (F,) = fields_from_qs([q])
    rng = random.Random(q)
    M = q - 1
    for _ in range(60):
        spec = spec_from_exponents(F, [rng.randrange(M), rng.randrange(M)],
                                   [rng.randrange(M)])
        x = F.element(rng.randrange(q))
        lhs, rhs = greene_period_relation(spec, x)
        assert lhs == rhs


@pytest.mark.parametrize("q", [5, 7, 9])
def test_mccarthy_relation_primitive(q):
    (F,) = fields_from_qs([q])
    M = q - 1
    for a1, a2, b1 in itertools.product(range(M), repeat=3):
        spec = spec_from_exponents(F, [a1, a2], [b1])
        if not is_primitive(spec):
            continue
        for x in F.elements():
            lhs, rhs = mccarthy_relation(spec, x)
            assert lhs == rhs


def test_mccarthy_zero_at_origin():
    F7 = construct_field(7)
    spec = spec_from_exponents(F7, [1, 2], [4])
    assert mccarthy_F(spec, F7.zero()).is_zero()
    assert greene_F(spec, F7.zero()).is_zero()


def test_rational_spec_examples():
    F5 = construct_field(5)
    spec = rational_spec([RationalParam(1, 2), RationalParam(1, 2)],
                         [RationalParam(1, 1)], F5)
    phi = quadratic(F5)
    assert list(spec.upper) == [phi, phi]
    assert spec.lower[0].is_trivial()
    F13 = construct_field(13)
    spec12 = rational_spec([RationalParam(1, 12), RationalParam(5, 12)],
                           [RationalParam(1, 1)], F13)
    assert spec12.upper[0].order() == 12 and spec12.upper[1].order() == 12
    assert spec12.upper[0].m == 1 and spec12.upper[1].m == 5
    with pytest.raises(IncompatibleCongruence):
        rational_spec([RationalParam(1, 3)], [], F5)


def test_weil_bound_witness():
    # |P|^2 <= 4q for primitive specs away from 0, 1 (diagnostic channel)
    for q in (5, 7, 9):
        (F,) = fields_from_qs([q])
        M = q - 1
        for a1, a2, b1 in itertools.product(range(M), repeat=3):
            spec = spec_from_exponents(F, [a1, a2], [b1])
            if not is_primitive(spec):
                continue
            for x in F.elements():
                if x.idx == 0 or x == F.one():
                    continue
                v = abs(period_direct(spec, x).to_complex())
                assert v * v <= 4 * q + 1e-6
