"""Point counts on hypergeometric varieties and generalized Legendre curves.

Two bookkeepings are kept for every count: brute-force enumeration of the
affine model (no characters at all) and the character-sum formula
1 + q^n + sum of period functions.  The formula counts one extra point
(the point at infinity in the model's completion), so

    count_via_periods(V) == count_affine_brute(V) + 1

is asserted as a hard invariant; a mismatch means an evaluator bug.
"""

from math import gcd

import numpy as np

from .config import DEFAULT
from .errors import (
    BudgetExceeded,
    DegenerateLambda,
    IncompatibleCongruence,
    NonIntegral,
    NotInteger,
)
from .hyper import period_direct, spec_from_exponents

POINTS_AT_INFINITY = 1


class HGVariety:
    """Affine model y^N = prod x_s^{i_s} (1-x_s)^{j_s} (1 - lam x_1..x_n)^k."""

    __slots__ = ("field", "N", "i_exps", "j_exps", "k", "lam")

    def __init__(self, field, N, i_exps, j_exps, k, lam):
        if N < 2:
            raise ValueError("N must be >= 2")
        if len(i_exps) != len(j_exps) or not i_exps:
            raise ValueError("need matching exponent lists with n >= 1")
        if any(v < 1 for v in list(i_exps) + list(j_exps)):
            raise ValueError("coordinate exponents must be >= 1")
        if k < 0 or (k == 0 and field.element(lam).idx != 0):
            # an absent last factor only matches the character formula at lam = 0
            raise ValueError("k = 0 requires lam = 0")
        self.field = field
        self.N = N
        self.i_exps = tuple(i_exps)
        self.j_exps = tuple(j_exps)
        self.k = k
        self.lam = field.element(lam)

    @property
    def n(self):
        return len(self.i_exps)


class GLCurve:
    """Generalized Legendre curve y^N = x^i (1-x)^j (1 - lam x)^k."""

    __slots__ = ("field", "N", "i", "j", "k", "lam")

    def __init__(self, field, N, i, j, k, lam):
        if not (0 < i < N and 0 < j < N and 0 < k < N):
            raise ValueError("exponents must satisfy 0 < i,j,k < N")
        self.field = field
        self.N = N
        self.i, self.j, self.k = i, j, k
        self.lam = field.element(lam)

    def variety(self):
        return HGVariety(self.field, self.N, [self.i], [self.j], self.k, self.lam)


def _pow_vec(F, e):
    """v**e for every encoding v, as an int64 array (0**0 = 1)."""
    q = F.q
    if e == 0:
        return np.ones(q, dtype=np.int64)
    if e < 0:
        raise ValueError("negative exponents not supported in enumeration")
    out = np.zeros(q, dtype=np.int64)
    ks = np.arange(q - 1, dtype=np.int64)
    out[F._exp[ks]] = F._exp[(e * ks) % (q - 1)]
    return out


def _mul_vec(F, a, b):
    dl = F._dlog
    da, db = dl[a], dl[b]
    ok = (da >= 0) & (db >= 0)
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    idx = (np.maximum(da, 0) + np.maximum(db, 0)) % (F.q - 1)
    vals = F._exp[idx]
    return np.where(ok, vals, 0)


def count_affine_brute(V):
    """#{(x_1..x_n, y) : the affine equation holds}, by enumeration."""
    F = V.field
    q, n = F.q, V.n
    if q**n * V.N > DEFAULT.sweep_max:
        raise BudgetExceeded("enumeration exceeds sweep budget")
    if n > 3:
        raise BudgetExceeded("enumeration implemented for n <= 3")
    nsol = np.bincount(_pow_vec(F, V.N), minlength=q)
    all_v = np.arange(q, dtype=np.int64)
    one_minus = F._one_minus
    factors = []
    for s in range(n):
        f = _mul_vec(F, _pow_vec(F, V.i_exps[s])[all_v],
                     _pow_vec(F, V.j_exps[s])[one_minus[all_v]])
        factors.append(f)
    # broadcast the per-coordinate factors over the grid
    grid = factors[0].reshape([-1] + [1] * (n - 1))
    prod_x = all_v.reshape([-1] + [1] * (n - 1))
    for s in range(1, n):
        sh = [1] * n
        sh[s] = q
        grid = _mul_vec(F, grid, factors[s].reshape(sh))
        prod_x = _mul_vec(F, prod_x, all_v.reshape(sh))
    if V.lam.idx == 0:
        last_arg = np.full(prod_x.shape, F.one().idx, dtype=np.int64)
    else:
        lam_row = _mul_vec(F, np.full(1, V.lam.idx, dtype=np.int64), prod_x)
        last_arg = one_minus[lam_row]
    grid = _mul_vec(F, grid, _pow_vec(F, V.k)[last_arg])
    return int(nsol[grid.ravel()].sum())


def period_specs_for(V):
    """The (spec, m) list whose period values enter the counting formula."""
    F = V.field
    N = V.N
    if (F.q - 1) % N:
        raise IncompatibleCongruence(f"q = {F.q} is not 1 mod {N}")
    step = (F.q - 1) // N  # eta_N = chi_step, a fixed primitive order-N character
    out = []
    for m in range(1, N):
        upper = [(-m * V.k) * step] + [m * i * step for i in reversed(V.i_exps)]
        lower = [m * (i + j) * step
                 for i, j in zip(reversed(V.i_exps), reversed(V.j_exps))]
        out.append((spec_from_exponents(F, upper, lower), m))
    return out


def count_via_periods(V):
    """1 + q^n + sum over m of the period function values, as an integer.

    Individual period values are cyclotomic; only their sum over m is
    forced to be a rational integer, so extraction happens once at the end
    (NotInteger there signals an evaluator bug).
    """
    F = V.field
    total = None
    for spec, _ in period_specs_for(V):
        val = period_direct(spec, V.lam)
        total = val if total is None else total + val
    return 1 + F.q ** V.n + total.as_rational_integer()


def legendre_count(F, lam):
    """#E_lam(F_q) for y^2 = x(x-1)(x-lam): q + 1 + the quadratic period."""
    lam = F.element(lam)
    if lam.idx == 0 or lam == F.one():
        raise DegenerateLambda("lambda must avoid 0 and 1")
    phi_m = (F.q - 1) // 2
    if F.q % 2 == 0:
        raise IncompatibleCongruence("odd characteristic required")
    spec = spec_from_exponents(F, [phi_m, phi_m], [0])
    return F.q + 1 + period_direct(spec, lam).as_rational_integer()


def legendre_affine_brute(F, lam):
    """Affine points of y^2 = x(x-1)(x-lam) by enumeration (test oracle)."""
    q = F.q
    lam = F.element(lam)
    nsol = np.bincount(_pow_vec(F, 2), minlength=q)
    total = 0
    for x in range(q):
        v = F.mul_idx(x, F.mul_idx(F.sub_idx(x, F.one().idx),
                                   F.sub_idx(x, lam.idx)))
        total += int(nsol[v])
    return total


def glc_trace(C):
    """Trace of Frobenius on the primitive part of a generalized Legendre
    curve: minus the sum of period values over m coprime to N."""
    F = C.field
    N = C.N
    if (F.q - 1) % N:
        raise IncompatibleCongruence(f"q = {F.q} is not 1 mod {N}")
    lam = C.lam
    if lam.idx == 0 or lam == F.one():
        raise DegenerateLambda("lambda must avoid 0 and 1")
    step = (F.q - 1) // N
    total = 0
    for m in range(1, N):
        if gcd(m, N) != 1:
            continue
        spec = spec_from_exponents(
            F,
            [(-m * C.k) * step, m * C.i * step],
            [m * (C.i + C.j) * step],
        )
        total += period_direct(spec, lam)
    if isinstance(total, int):
        return -total
    return -total.as_rational_integer()


def genus(N, i, j, k):
    """Genus of the smooth model of y^N = x^i (1-x)^j (1-lam x)^k."""
    if not (1 <= i < N and 1 <= j < N and 1 <= k < N):
        raise ValueError("need 1 <= i,j,k < N")
    s = gcd(N, i + j + k) + gcd(N, i) + gcd(N, j) + gcd(N, k)
    if s % 2:
        raise NonIntegral("genus formula is not integral for these exponents")
    return 1 + N - s // 2
