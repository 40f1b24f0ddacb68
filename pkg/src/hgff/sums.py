"""Gauss sums, Jacobi sums, and the algebraic relations between them.

All values are exact CycloNums: Jacobi sums live at order q-1, Gauss sums
at order p(q-1) with the additive character zeta_p^Tr(x) built on the
canonical primitive root zeta_p = zeta_{p(q-1)}^(q-1).

A GaussJacobiCache owns one field's tables.  Inner loops accumulate
integer count vectors indexed by root-of-unity exponent and reduce once;
inverses of Gauss and Jacobi sums come from the reflection relations
(g(A)g(conj A) = qA(-1), J Jbar = q away from the degenerate cases), so
no polynomial gcd is ever needed on a hot path.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .chars import MultChar, chars_of_order_dividing, quadratic, trivial
from .cyclo import CycloNum, embed
from .errors import IncompatibleCongruence
from .fields import extension


class GaussJacobiCache:
    """Per-field cache of Gauss sums, Jacobi sums and their inverses."""

    def __init__(self, field):
        self.field = field
        q = field.q
        self.M = max(q - 1, 1)
        self.MG = field.p * self.M
        # dlog(1 - g^k) for k = 1..q-2 (k = 0 excluded: 1 - 1 = 0)
        ks = np.arange(1, q - 1, dtype=np.int64)
        xs = field._exp[ks]
        self._dl_x = ks
        self._dl_1mx = field._dlog[field._one_minus[xs]]
        self._tr = np.array(
            [field.trace_to_prime(field.exp(k)).idx for k in range(q - 1)],
            dtype=np.int64,
        )
        self._jac = {}
        self._gauss = {}
        self._jac_inv = {}

    def char(self, m):
        return MultChar(self.field, m)

    def sign(self, m):
        """chi_m(-1) as +-1."""
        q = self.field.q
        if q % 2 == 0:
            return 1
        return 1 if (m * (q - 1) // 2) % (q - 1) == 0 else -1

    # -- Jacobi sums --------------------------------------------------------

    def jacobi(self, a, b):
        """J(chi_a, chi_b) = sum over x of chi_a(x) chi_b(1-x), order q-1."""
        M = self.M
        key = (a % M, b % M)
        val = self._jac.get(key)
        if val is None:
            e = (key[0] * self._dl_x + key[1] * self._dl_1mx) % M
            counts = np.bincount(e, minlength=M)
            val = CycloNum.from_counts(M, counts)
            self._jac[key] = val
        return val

    def jacobi_inv(self, a, b):
        M = self.M
        key = (a % M, b % M)
        val = self._jac_inv.get(key)
        if val is None:
            a, b = key
            q = self.field.q
            if a == 0 and b == 0:
                val = CycloNum.from_rational(Fraction(1, q - 2))
            elif a == 0 or b == 0:
                val = CycloNum.from_rational(-1)
            elif (a + b) % M == 0:
                val = CycloNum.from_rational(-self.sign(a))
            else:
                val = self.jacobi(-a, -b) / q
            self._jac_inv[key] = val
        return val

    # -- Gauss sums ----------------------------------------------------------

    def gauss(self, m):
        """g(chi_m), order p(q-1)."""
        m = m % self.M
        val = self._gauss.get(m)
        if val is None:
            p, M, MG = self.field.p, self.M, self.MG
            # term exponent in zeta_MG: p*(m*k) + (q-1)*Tr(g^k)
            e = (p * ((m * np.arange(M, dtype=np.int64)) % M) + M * self._tr) % MG
            counts = np.bincount(e, minlength=MG)
            val = CycloNum.from_counts(MG, counts)
            self._gauss[m] = val
        return val

    def gauss_inv(self, m):
        m = m % self.M
        if m == 0:
            return CycloNum.from_rational(-1)
        return self.gauss(-m) * Fraction(self.sign(m), self.field.q)

    # -- derived quantities ---------------------------------------------------

    def binomial(self, a, b):
        """Finite-field binomial coefficient: -chi_b(-1) J(chi_a, conj chi_b)."""
        return self.jacobi(a, -b) * (-self.sign(b))

    def rising(self, a, b):
        """Finite-field rising factorial: g(chi_a chi_b) / g(chi_a)."""
        return self.gauss(a + b) * self.gauss_inv(a)

    def chv(self, m, x):
        """chi_m(x) as CycloNum of order q-1; x a FieldElement or encoding."""
        x = self.field.element(x)
        if x.idx == 0:
            return CycloNum.zero(1)
        return CycloNum.zeta_pow(self.M, (m * self.field.dlog(x)) % self.M)


@lru_cache(maxsize=None)
def cache_for(field):
    return GaussJacobiCache(field)


def gauss_sum(chi):
    return cache_for(chi.field).gauss(chi.m)


def jacobi_sum(chi1, chi2):
    chi1._check(chi2)
    return cache_for(chi1.field).jacobi(chi1.m, chi2.m)


def jacobi_from_gauss(chi1, chi2):
    """g(A)g(B)/g(AB) + (q-1)B(-1)delta(AB): an independent path to J(A,B)."""
    c = cache_for(chi1.field)
    q = chi1.field.q
    val = c.gauss(chi1.m) * c.gauss(chi2.m) * c.gauss_inv(chi1.m + chi2.m)
    if (chi1.m + chi2.m) % c.M == 0:
        val = val + (q - 1) * c.sign(chi2.m)
    return val


def binomial(chi_a, chi_b):
    return cache_for(chi_a.field).binomial(chi_a.m, chi_b.m)


def rising(chi_a, chi_b):
    return cache_for(chi_a.field).rising(chi_a.m, chi_b.m)


def gauss_sum_value_order(field, m, D=None):
    """g(chi_m) accumulated at order p*D, where the values of chi_m are
    D-th roots of unity.  D defaults to the exact order of chi_m; this is
    what makes extension-field Gauss sums of norm-lifted characters cheap.
    """
    p = field.p
    M = field.q - 1
    m = m % M
    if D is None:
        D = M // gcd(m, M)
    if (m * D) % M:
        raise ValueError("values of chi_m are not D-th roots of unity")
    step = (m * D // M) % D
    MG = p * D
    c = cache_for(field)
    ks = np.arange(M, dtype=np.int64)
    e = (p * ((step * ks) % D) + D * (c._tr % p)) % MG
    counts = np.bincount(e, minlength=MG)
    return CycloNum.from_counts(MG, counts)


def hasse_davenport_product_check(psi, m):
    """Exact check of the Gauss-sum multiplication relation at level m.

    Asserts  prod_{chi^m = eps} g(chi psi)
           = -g(psi^m) psi(m^-m) prod_{chi^m = eps} g(chi).
    Returns (ok, lhs, rhs).
    """
    F = psi.field
    if (F.q - 1) % m:
        raise IncompatibleCongruence(f"q = {F.q} is not 1 mod {m}")
    c = cache_for(F)
    lhs = CycloNum.one(1)
    rhs_prod = CycloNum.one(1)
    for chi in chars_of_order_dividing(F, m):
        lhs = lhs * c.gauss(chi.m + psi.m)
        rhs_prod = rhs_prod * c.gauss(chi.m)
    m_elem = F.from_int(m)
    m_pow = m_elem ** (-m)
    rhs = -(c.gauss(psi.m * m) * c.chv(psi.m, m_pow) * rhs_prod)
    return lhs == rhs, lhs, rhs


def hasse_davenport_lift_check(chi, r):
    """Exact check of g(A_r) = (-1)^(r-1) g(A)^r for the norm lift A_r."""
    from .chars import lift_norm

    F = chi.field
    top = extension(F, r).top
    lifted = lift_norm(chi, r)
    D = max(F.q - 1, 1)
    lhs = gauss_sum_value_order(top, lifted.m, D)
    g = gauss_sum_value_order(F, chi.m, D)
    rhs = CycloNum.one(1)
    for _ in range(r):
        rhs = rhs * g
    if (r - 1) % 2:
        rhs = -rhs
    return lhs == rhs, lhs, rhs
