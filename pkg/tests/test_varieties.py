"""Point counts: brute enumeration vs the character-sum formula, the
Legendre family, generalized Legendre traces, and the genus formula."""

import math
import random

import pytest

from hgff.errors import DegenerateLambda, IncompatibleCongruence, NonIntegral
from hgff.fields import construct_field
from hgff.identities.engine import fields_from_qs
from hgff.varieties import (
    GLCurve,
    HGVariety,
    count_affine_brute,
    count_via_periods,
    genus,
    glc_trace,
    legendre_affine_brute,
    legendre_count,
)


def test_brute_example():
    F5 = construct_field(5)
    V = HGVariety(F5, 2, [1], [1], 1, F5.from_int(2))
    assert count_affine_brute(V) == 7
    assert count_via_periods(V) == 8


def test_zero_row_contributes_one_point():
    # x = 0 row of y^2 = x(1-x)(1-lam x) has exactly the point y = 0
    F7 = construct_field(7)
    for lam in F7.elements():
        V = HGVariety(F7, 2, [1], [1], 1, lam)
        brute = count_affine_brute(V)
        assert brute >= 1


def test_k_zero_requires_lam_zero():
    F7 = construct_field(7)
    V = HGVariety(F7, 3, [1], [1], 0, F7.zero())
    assert count_via_periods(V) == count_affine_brute(V) + 1
    with pytest.raises(ValueError):
        HGVariety(F7, 3, [1], [1], 0, F7.one())


def test_congruence_gate():
    F5 = construct_field(5)
    with pytest.raises(IncompatibleCongruence):
        count_via_periods(HGVariety(F5, 3, [1], [1], 1, F5.from_int(2)))


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25])
def test_legendre_formula_equals_brute(q):
    (F,) = fields_from_qs([q])
    for lam in F.elements():
        V = HGVariety(F, 2, [1], [1], 1, lam)
        assert count_via_periods(V) == count_affine_brute(V) + 1


def test_legendre_count_examples():
    F5 = construct_field(5)
    assert legendre_count(F5, F5.from_int(2)) == 8
    assert legendre_affine_brute(F5, F5.from_int(2)) == 7
    F7 = construct_field(7)
    lam = F7.from_int(3)
    assert legendre_count(F7, lam) == legendre_affine_brute(F7, lam) + 1
    with pytest.raises(DegenerateLambda):
        legendre_count(F5, F5.one())


@pytest.mark.parametrize("q", [5, 7, 9, 11, 13, 25, 49, 101])
def test_hasse_interval(q):
    (F,) = fields_from_qs([q])
    lo, hi = q + 1 - 2 * math.sqrt(q), q + 1 + 2 * math.sqrt(q)
    for lam in F.elements():
        if lam.idx == 0 or lam == F.one():
            continue
        n = legendre_count(F, lam)
        assert lo <= n <= hi


def test_glc_trace_examples():
    F5 = construct_field(5)
    C = GLCurve(F5, 2, 1, 1, 1, F5.from_int(2))
    assert glc_trace(C) == 5 + 1 - legendre_count_model(F5, F5.from_int(2))
    F13 = construct_field(13)
    C6 = GLCurve(F13, 6, 4, 3, 1, F13.from_int(2))
    t = glc_trace(C6)
    assert isinstance(t, int)
    assert abs(t) <= 2 * 2 * math.sqrt(13) + 1e-6  # phi(6) = 2 conjugate pairs
    with pytest.raises(DegenerateLambda):
        glc_trace(GLCurve(F13, 3, 1, 1, 1, F13.one()))


def legendre_count_model(F, lam):
    # #points of y^2 = x(1-x)(1-lam x) including one point at infinity
    V = HGVariety(F, 2, [1], [1], 1, lam)
    return count_affine_brute(V) + 1


def test_random_variety_sweep():
    rng = random.Random(3)
    F13 = construct_field(13)
    for N in (3, 4, 6):
        for _ in range(6):
            i, j = rng.randrange(1, N), rng.randrange(1, N)
            k = rng.randrange(1, N)
            lam = F13.element(rng.randrange(13))
            V = HGVariety(F13, N, [i], [j], k, lam)
            assert count_via_periods(V) == count_affine_brute(V) + 1


def test_two_dimensional_variety():
    F7 = construct_field(7)
    for lam in F7.elements():
        V = HGVariety(F7, 3, [1, 2], [2, 1], 1, lam)
        assert count_via_periods(V) == count_affine_brute(V) + 1


def test_genus_examples():
    assert genus(4, 1, 1, 1) == 3
    assert genus(2, 1, 1, 1) == 1
    assert genus(5, 3, 4, 4) == 4
    with pytest.raises(ValueError):
        genus(4, 0, 1, 1)


def test_genus_integral_on_valid_domain():
    # parity: the four gcds always sum to an even number, so the formula is
    # integral for every valid (N, i, j, k); the NonIntegral guard is defensive
    for N in range(2, 12):
        for i in range(1, N):
            for j in range(1, N):
                for k in range(1, N):
                    g = genus(N, i, j, k)
                    assert g >= 0
