"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A CycloNum stores a rational vector of length phi(M) in the power basis
1, zeta, ..., zeta^(phi(M)-1), reduced mod the M-th cyclotomic polynomial.
Internally the vector is an integer tuple over a single positive common
denominator, so the frequent all-integer case (character sums) never
touches Fraction.  Canonical form: gcd of all numerators and the
denominator is 1, hence two CycloNums of equal order are equal iff their
components are equal.

Sums of many roots of unity should be built with ``from_counts`` (an
integer count vector indexed by exponent mod M, reduced once at the end);
that is the fast path used by every character-sum inner loop.
"""

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .config import DEFAULT
from .errors import BudgetExceeded, DivisionByZero, NotAMultiple, NotInteger


def _poly_divexact(num, den):
    # exact division of integer polynomials, coefficients low to high
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[len(den) - 1 + k]
        if c % den[-1]:
            raise ArithmeticError("division is not exact")
        c //= den[-1]
        out[k] = c
        for i, d in enumerate(den):
            num[i + k] -= c * d
    if any(num):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M):
    """Integer coefficients (low to high) of the M-th cyclotomic polynomial.

    Computed by exact division of x^M - 1 by the product of the lower
    cyclotomic polynomials over proper divisors of M.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if totient(M) > DEFAULT.phi_max:
        raise BudgetExceeded(f"phi({M}) exceeds cyclotomic budget {DEFAULT.phi_max}")
    if M == 1:
        return (-1, 1)
    base = [0] * M + [1]
    base[0] = -1
    den = [1]
    for d in range(1, M):
        if M % d == 0:
            den = _poly_mul_int(den, cyclotomic_polynomial(d))
    return tuple(_poly_divexact(base, den))


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def totient(M):
    n, result, p = M, M, 2
    while p * p <= n:
        if n % p == 0:
            result -= result // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def _reduction_rows(M):
    """Rows k -> x^k mod Phi_M for k up to max(M, 2*phi(M)-1), as int tuples."""
    phi = cyclotomic_polynomial(M)
    d = len(phi) - 1
    top = [-c for c in phi[:-1]]  # x^d == top, since Phi_M is monic
    limit = max(M, 2 * d - 1)
    rows = [None] * limit
    for k in range(min(d, limit)):
        row = [0] * d
        row[k] = 1
        rows[k] = row
    if limit > d:
        rows[d] = list(top)
        for k in range(d + 1, limit):
            prev = rows[k - 1]
            row = [0] + prev[:-1]
            lead = prev[-1]
            if lead:
                for i in range(d):
                    row[i] += lead * top[i]
            rows[k] = row
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=None)
def _reduction_matrix(M):
    """numpy int64 matrix (M x phi(M)) mapping count vectors to the power basis."""
    rows = _reduction_rows(M)[:M]
    mat = np.array(rows, dtype=object)
    if max(int(abs(x)) for x in mat.flat) < (1 << 40):
        return np.array(rows, dtype=np.int64)
    return mat


@lru_cache(maxsize=None)
def _product_reduction(M):
    """(max_row_entry, int64 matrix) reducing exponents d..2d-2 mod Phi_M,
    used by the vectorized product fast path; None if entries overflow."""
    d = len(cyclotomic_polynomial(M)) - 1
    if d < 2:
        return None
    rows = _reduction_rows(M)[d:2 * d - 1]
    biggest = max(abs(x) for r in rows for x in r)
    if biggest >= (1 << 40):
        return None
    return biggest, np.array(rows, dtype=np.int64)


def _reduce_intvec(M, vec):
    """Reduce an integer coefficient list (any length) mod Phi_M to length phi(M)."""
    d = len(cyclotomic_polynomial(M)) - 1
    rows = _reduction_rows(M)
    out = list(vec[:d]) + [0] * (d - min(d, len(vec)))
    for k in range(d, len(vec)):
        c = vec[k]
        if c:
            row = rows[k]
            for i in range(d):
                out[i] += c * row[i]
    return out


def _fast_product(M, anum, bnum):
    """Reduced product of two coefficient vectors via int64 convolution, or
    None when overflow bounds cannot be guaranteed."""
    d = len(anum)
    if d < 2:
        return [anum[0] * bnum[0]]
    red = _product_reduction(M)
    if red is None:
        return None
    biggest, mat = red
    ma = max(abs(x) for x in anum)
    mb = max(abs(x) for x in bnum)
    # conv entries bounded by d*ma*mb; after reduction scaled by row entries
    if ma and mb and d * ma * mb * (biggest * (d - 1) + 1) >= (1 << 62):
        return None
    conv = np.convolve(np.array(anum, dtype=np.int64),
                       np.array(bnum, dtype=np.int64))
    low = conv[:d].copy()
    if conv.shape[0] > d:
        low += conv[d:] @ mat[: conv.shape[0] - d]
    return [int(x) for x in low]


def _normalize(num, den):
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = den
    for x in num:
        g = math.gcd(g, x)
        if g == 1:
            break
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


class CycloNum:
    """Immutable element of Q(zeta_M) in canonical reduced form."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order, num, den=1, _normalized=False):
        d = len(cyclotomic_polynomial(order)) - 1
        if len(num) != d:
            raise ValueError(f"coefficient vector must have length phi({order})={d}")
        if den == 0:
            raise DivisionByZero("zero denominator")
        if _normalized:
            object.__setattr__(self, "num", tuple(num))
            object.__setattr__(self, "den", den)
        else:
            n, dd = _normalize([int(x) for x in num], int(den))
            object.__setattr__(self, "num", n)
            object.__setattr__(self, "den", dd)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("CycloNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(M=1):
        return CycloNum(M, (0,) * (len(cyclotomic_polynomial(M)) - 1), 1, _normalized=False)

    @staticmethod
    def one(M=1):
        v = [0] * (len(cyclotomic_polynomial(M)) - 1)
        v[0] = 1
        return CycloNum(M, v, 1)

    @staticmethod
    def from_rational(r, M=1):
        r = Fraction(r)
        v = [0] * (len(cyclotomic_polynomial(M)) - 1)
        v[0] = r.numerator
        return CycloNum(M, v, r.denominator)

    @staticmethod
    def zeta_pow(M, k):
        """zeta_M ** k as a CycloNum of order M."""
        counts = [0] * M
        counts[k % M] = 1
        return CycloNum.from_counts(M, counts)

    @staticmethod
    def from_counts(M, counts):
        """Sum of counts[k] * zeta_M**k, reduced once.  counts has length M."""
        if len(counts) != M:
            raise ValueError("counts must have length M")
        mat = _reduction_matrix(M)
        if isinstance(counts, np.ndarray) and mat.dtype == np.int64:
            vec = np.asarray(counts, dtype=np.int64) @ mat
            return CycloNum(M, [int(x) for x in vec], 1)
        return CycloNum(M, _reduce_intvec(M, list(counts)), 1)

    # -- ring structure ----------------------------------------------------

    def _lift_pair(self, other):
        if not isinstance(other, CycloNum):
            other = CycloNum.from_rational(other)
        if self.order == other.order:
            return self, other
        M = self.order * other.order // math.gcd(self.order, other.order)
        return embed(self, M), embed(other, M)

    def __add__(self, other):
        a, b = self._lift_pair(other)
        g = math.gcd(a.den, b.den)
        lcm = a.den // g * b.den
        ma, mb = lcm // a.den, lcm // b.den
        num = [x * ma + y * mb for x, y in zip(a.num, b.num)]
        return CycloNum(a.order, num, lcm)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.order, [-x for x in self.num], self.den, _normalized=True)

    def __sub__(self, other):
        a, b = self._lift_pair(other)
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloNum(self.order, [x * other for x in self.num], self.den)
        if isinstance(other, Fraction):
            return CycloNum(self.order, [x * other.numerator for x in self.num],
                            self.den * other.denominator)
        a, b = self._lift_pair(other)
        num = _fast_product(a.order, a.num, b.num)
        if num is None:
            conv = _poly_mul_int(a.num, b.num)
            num = _reduce_intvec(a.order, conv)
        return CycloNum(a.order, num, a.den * b.den)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = CycloNum.one(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        phi = cyclotomic_polynomial(self.order)
        a = [Fraction(x, self.den) for x in self.num]
        inv = _poly_invert_mod(a, [Fraction(c) for c in phi])
        den = 1
        for c in inv:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in inv]
        num += [0] * (len(phi) - 1 - len(num))
        return CycloNum(self.order, num, den)

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise DivisionByZero("division by zero")
            return CycloNum(self.order, self.num, self.den * other)
        if isinstance(other, Fraction):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self * (1 / other)
        a, b = self._lift_pair(other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CycloNum.from_rational(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        a, b = self._lift_pair(other)
        return a.num == b.num and a.den == b.den

    __hash__ = None  # mixed-order equality makes a consistent hash impractical

    # -- involutions and views ----------------------------------------------

    def conj(self):
        """Complex conjugation, zeta_M -> zeta_M**-1."""
        M = self.order
        counts = [0] * M
        d = len(self.num)
        for k in range(d):
            if self.num[k]:
                counts[(M - k) % M] += self.num[k]
        c = CycloNum.from_counts(M, counts)
        return CycloNum(M, c.num, self.den * c.den)

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    def as_rational(self):
        if not self.is_rational():
            raise NotInteger(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    def as_rational_integer(self):
        r = self.as_rational()
        if r.denominator != 1:
            raise NotInteger(f"{self!r} is not a rational integer")
        return r.numerator

    def to_complex(self, precision=15):
        """Floating approximation via zeta_M = exp(2 pi i / M); diagnostic only."""
        import mpmath

        with mpmath.workdps(precision + 10):
            z = mpmath.exp(2j * mpmath.pi / self.order)
            acc = mpmath.mpc(0)
            pw = mpmath.mpc(1)
            for c in self.num:
                if c:
                    acc += c * pw
                pw *= z
            acc /= self.den
            return complex(acc)

    def to_json_dict(self):
        return {
            "order": self.order,
            "coeffs": [
                [str(f.numerator), str(f.denominator)]
                for f in (Fraction(n, self.den) for n in self.num)
            ],
        }

    def __repr__(self):
        if self.is_rational():
            return f"CycloNum({Fraction(self.num[0], self.den)})"
        return f"CycloNum(order={self.order}, num={self.num}, den={self.den})"


def _poly_invert_mod(a, mod):
    """Inverse of polynomial a modulo mod over Q, via extended Euclid."""

    def degree(p):
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def polydivmod(n, d):
        n = list(n)
        dn, dd = degree(n), degree(d)
        q = [Fraction(0)] * max(dn - dd + 1, 1)
        while dn >= dd >= 0:
            c = n[dn] / d[dd]
            q[dn - dd] = c
            for i in range(dd + 1):
                n[dn - dd + i] -= c * d[i]
            dn = degree(n)
        return q, n

    r0, r1 = list(mod), list(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while degree(r1) > 0:
        q, r = polydivmod(r0, r1)
        r0, r1 = r1, r
        qs = _poly_mul_frac(q, s1)
        s0, s1 = s1, [x - y for x, y in _zip_pad(s0, qs)]
    if degree(r1) < 0:
        raise DivisionByZero("element is a zero divisor (not invertible)")
    c = r1[0]
    return [x / c for x in s1]


def _poly_mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zip_pad(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def embed(a, M2):
    """Image of a under zeta_M -> zeta_M2**(M2/M); requires a.order | M2."""
    if M2 % a.order:
        raise NotAMultiple(f"{a.order} does not divide {M2}")
    if M2 == a.order:
        return a
    step = M2 // a.order
    counts = [0] * M2
    for k, c in enumerate(a.num):
        if c:
            counts[(k * step) % M2] += c
    lifted = CycloNum.from_counts(M2, counts)
    return CycloNum(M2, lifted.num, a.den * lifted.den)


def cyclo_arith(a, b, op):
    """Named-op entry point mirroring the arithmetic dunders."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def conj(a):
    return a.conj()


def as_rational_integer(a):
    return a.as_rational_integer()


def to_complex(a, precision=15):
    return a.to_complex(precision)
