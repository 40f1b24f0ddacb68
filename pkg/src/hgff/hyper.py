"""Period functions and normalized hypergeometric functions over F_q.

Two permanently independent evaluation paths are kept for the period
function: ``period_direct`` (the defining nested sum, vectorized over
F_q^n) and ``period_spectral`` (the character-spectrum formula built from
finite-field binomial coefficients).  The test suite asserts their
equality instead of trusting either alone.

Conventions: chi(0) = 0 for every character including the trivial one,
and the value of the period function at argument 0 is the product of its
normalizing Jacobi sums, so the normalized function is 1 at 0.
"""

from fractions import Fraction
from math import gcd

import numpy as np

from .chars import MultChar, iota
from .config import DEFAULT
from .cyclo import CycloNum
from .errors import BudgetExceeded, FieldMismatch
from .sums import cache_for


class HGSpec:
    """Ordered character data (A_1..A_{n+1}; B_1..B_n) on one field."""

    __slots__ = ("field", "upper", "lower")

    def __init__(self, upper, lower, field=None):
        if not upper or len(upper) != len(lower) + 1:
            raise ValueError("need n+1 upper and n lower characters")
        field = field or upper[0].field
        for chi in list(upper) + list(lower):
            if chi.field is not field:
                raise FieldMismatch("characters on different fields")
        self.field = field
        self.upper = tuple(upper)
        self.lower = tuple(lower)

    @property
    def n(self):
        return len(self.lower)

    def exponents(self):
        return tuple(c.m for c in self.upper), tuple(c.m for c in self.lower)

    def __repr__(self):
        up = ",".join(str(c.m) for c in self.upper)
        lo = ",".join(str(c.m) for c in self.lower)
        return f"HGSpec[{up};{lo}]@{self.field!r}"


def spec_from_exponents(field, upper_m, lower_m):
    return HGSpec([MultChar(field, m) for m in upper_m],
                  [MultChar(field, m) for m in lower_m], field)


def is_primitive(spec):
    """No upper character trivial or equal to a lower character."""
    for a in spec.upper:
        if a.is_trivial():
            return False
        for b in spec.lower:
            if a == b:
                return False
    return True


def p1_0(chi, x):
    """The no-lower-slot period: conj(chi)(1 - x)."""
    F = chi.field
    one_minus = F.one() - F.element(x)
    return cache_for(F).chv(-chi.m, one_minus)


def period_direct(spec, lam):
    """The period function by direct enumeration over F_q^n, exact.

    Cost O(q^n).  Exponents accumulate in an integer count vector at the
    smallest root-of-unity order the character values allow, then reduce
    once into the cyclotomic power basis.
    """
    F = spec.field
    q = F.q
    n = spec.n
    if q ** max(n, 1) > DEFAULT.sweep_max:
        raise BudgetExceeded(f"q^{n} = {q**n} exceeds sweep budget")
    lam = F.element(lam)
    um, lm = spec.exponents()
    if n == 0:
        return p1_0(spec.upper[0], lam)
    M = q - 1
    a_mul = [um[j + 1] % M for j in range(n)]          # at y_j
    b_mul = [(lm[j] - um[j + 1]) % M for j in range(n)]  # at 1 - y_j
    top = (-um[0]) % M                                   # at 1 - lam*prod(y)
    g = M
    for v in a_mul + b_mul + [top]:
        g = gcd(g, v)
    D = M // g
    dl, exp_t, one_minus = F._dlog, F._exp, F._one_minus
    ks = np.arange(M, dtype=np.int64)
    ys = exp_t[ks]
    e_axis, ok_axis = [], []
    for j in range(n):
        dl1m = dl[one_minus[ys]]
        e_axis.append(((a_mul[j] // g) * ks + (b_mul[j] // g) * np.maximum(dl1m, 0)) % D)
        ok_axis.append(dl1m >= 0)
    shape = [1] * n
    e_total = np.zeros(shape, dtype=np.int64)
    ok_total = np.ones(shape, dtype=bool)
    ksum = np.zeros(shape, dtype=np.int64)
    for j in range(n):
        sh = [1] * n
        sh[j] = M
        e_total = e_total + e_axis[j].reshape(sh)
        ok_total = ok_total & ok_axis[j].reshape(sh)
        ksum = ksum + ks.reshape(sh)
    if lam.idx != 0:
        dlam = F.dlog(lam)
        dl_last = dl[one_minus[exp_t[(ksum + dlam) % M]]]
        ok_total = ok_total & (dl_last >= 0)
        e_total = e_total + (top // g) * np.maximum(dl_last, 0)
    # lam = 0: the last factor is conj(A_1)(1) = 1 identically
    counts = np.bincount(e_total[ok_total] % D, minlength=D)
    if D == 1:
        return CycloNum.from_rational(int(counts[0]))
    return CycloNum.from_counts(D, counts)


def period_spectral(spec, lam):
    """The period function from the binomial-coefficient spectrum.

    (-1)^(n+1) (prod_i A_{i+1}B_i(-1)) / (q-1) times the sum over chi of
    binomial(A_1 chi, chi) prod_i binomial(A_{i+1} chi, B_i chi) chi(lam),
    plus the Jacobi product when lam = 0.  Must equal ``period_direct``
    on every input.
    """
    F = spec.field
    c = cache_for(F)
    q = F.q
    M = q - 1
    n = spec.n
    um, lm = spec.exponents()
    lam = F.element(lam)
    if lam.idx == 0:
        return normalizer(spec)
    dlam = F.dlog(lam)
    total = CycloNum.zero(M)
    for t in range(M):
        term = c.binomial(um[0] + t, t)
        for i in range(n):
            term = term * c.binomial(um[i + 1] + t, lm[i] + t)
        total = total + term * CycloNum.zeta_pow(M, (t * dlam) % M)
    sign = (-1) ** (n + 1)
    for i in range(n):
        sign *= c.sign(um[i + 1] + lm[i])
    return total * Fraction(sign, q - 1)


def normalizer(spec):
    """Product of the Jacobi sums that normalize the period function."""
    c = cache_for(spec.field)
    um, lm = spec.exponents()
    out = CycloNum.one(1)
    for i in range(spec.n):
        out = out * c.jacobi(um[i + 1], lm[i] - um[i + 1])
    return out


def normalizer_inv(spec):
    c = cache_for(spec.field)
    um, lm = spec.exponents()
    out = CycloNum.one(1)
    for i in range(spec.n):
        out = out * c.jacobi_inv(um[i + 1], lm[i] - um[i + 1])
    return out


def f_normalized(spec, lam):
    """The normalized hypergeometric function: period / Jacobi normalizer."""
    return period_direct(spec, lam) * normalizer_inv(spec)


def greene_F(spec, lam):
    """Greene's normalization, from its own defining spectrum.

    Greene's binomial coefficient is chi_b(-1) J(chi_a, conj chi_b) / q, so
    this value differs from the period function by an explicit q-power,
    sign, and delta bookkeeping; the conversion is asserted in tests.
    """
    F = spec.field
    c = cache_for(F)
    q = F.q
    M = q - 1
    um, lm = spec.exponents()
    lam = F.element(lam)
    if lam.idx == 0:
        return CycloNum.zero(1)
    dlam = F.dlog(lam)

    def binom_g(a, b):
        return c.jacobi(a, -b) * Fraction(c.sign(b), q)

    total = CycloNum.zero(M)
    for t in range(M):
        term = binom_g(um[0] + t, t)
        for i in range(spec.n):
            term = term * binom_g(um[i + 1] + t, lm[i] + t)
        total = total + term * CycloNum.zeta_pow(M, (t * dlam) % M)
    return total * Fraction(q, q - 1)


def mccarthy_F(spec, lam):
    """McCarthy's normalization, from its defining Gauss-sum spectrum."""
    F = spec.field
    c = cache_for(F)
    q = F.q
    M = q - 1
    n = spec.n
    um, lm = spec.exponents()
    lam = F.element(lam)
    if lam.idx == 0:
        return CycloNum.zero(1)
    dlam = F.dlog(lam)
    total = CycloNum.zero(1)
    for t in range(M):
        term = c.gauss(-t)
        for a in um:
            term = term * c.gauss(a + t) * c.gauss_inv(a)
        for b in lm:
            term = term * c.gauss(-(b + t)) * c.gauss_inv(-b)
        if (n + 1) % 2 and c.sign(t) < 0:
            term = -term
        total = total + term * CycloNum.zeta_pow(M, (t * dlam) % M)
    return total * Fraction(1, q - 1)


def greene_period_relation(spec, lam):
    """Both sides of the conversion between the period function and
    Greene's normalization: returns (lhs, rhs) that must be equal."""
    F = spec.field
    c = cache_for(F)
    um, lm = spec.exponents()
    lam = F.element(lam)
    lhs = period_direct(spec, lam)
    sign = 1
    for i in range(spec.n):
        sign *= c.sign(um[i + 1] + lm[i])
    rhs = greene_F(spec, lam) * (F.q ** spec.n) * sign
    if lam.idx == 0:
        rhs = rhs + normalizer(spec)
    return lhs, rhs


def mccarthy_relation(spec, lam):
    """Both sides of: normalized function = McCarthy + delta(lam), valid
    for primitive specs."""
    F = spec.field
    lam = F.element(lam)
    lhs = f_normalized(spec, lam)
    rhs = mccarthy_F(spec, lam)
    if lam.idx == 0:
        rhs = rhs + 1
    return lhs, rhs


def rational_spec(upper_params, lower_params, field):
    """Componentwise rational-parameter conversion into an HGSpec."""
    upper = [iota(a, field) for a in upper_params]
    lower = [iota(b, field) for b in lower_params]
    return HGSpec(upper, lower, field)
