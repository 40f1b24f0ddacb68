"""Multiplicative characters of F_q^x and rational-parameter conversion.

A character is an exponent class m mod (q-1) against the field's canonical
generator g: chi_m(g^k) = zeta_{q-1}^(m k), extended by chi(0) = 0 for
every character including the trivial one.  The iota map realizes a
reduced rational i/m as the character of exponent i(q-1)/m whenever
q = 1 (mod m); kappa is its left inverse.
"""

from fractions import Fraction
from math import gcd

from .cyclo import CycloNum
from .errors import (
    FieldMismatch,
    IncompatibleCongruence,
    OrderDoesNotDivide,
)
from .fields import extension


class MultChar:
    """Multiplicative character chi_m of F_q^x, m taken mod q-1."""

    __slots__ = ("field", "m")

    def __init__(self, field, m):
        self.field = field
        self.m = m % (field.q - 1) if field.q > 2 else 0

    def __mul__(self, other):
        self._check(other)
        return MultChar(self.field, self.m + other.m)

    def __pow__(self, n):
        return MultChar(self.field, self.m * n)

    def conj(self):
        return MultChar(self.field, -self.m)

    def inverse(self):
        return self.conj()

    def _check(self, other):
        if not isinstance(other, MultChar) or other.field is not self.field:
            raise FieldMismatch("characters on different fields")

    def __eq__(self, other):
        return (isinstance(other, MultChar) and other.field is self.field
                and other.m == self.m)

    def __hash__(self):
        return hash((id(self.field), self.m))

    def is_trivial(self):
        return self.m == 0

    def order(self):
        n = self.field.q - 1
        return n // gcd(self.m, n)

    def __call__(self, x):
        return char_value(self, x)

    def value_exponent(self, x):
        """Exponent k with chi(x) = zeta_{q-1}^k, or None when x = 0."""
        x = self.field.element(x)
        if x.idx == 0:
            return None
        return (self.m * self.field.dlog(x)) % (self.field.q - 1)

    def sign_at_minus_one(self):
        """chi(-1) as +-1."""
        F = self.field
        if F.p == 2:
            return 1
        e = self.value_exponent(F.from_int(-1))
        return 1 if e == 0 else -1

    def __repr__(self):
        return f"chi^{self.m}|{self.field!r}"


def trivial(field):
    return MultChar(field, 0)


def quadratic(field):
    if field.q % 2 == 0 or field.q < 3:
        raise IncompatibleCongruence("no quadratic character in even characteristic")
    return MultChar(field, (field.q - 1) // 2)


def all_chars(field):
    return (MultChar(field, m) for m in range(field.q - 1))


def chars_of_order_dividing(field, m):
    """Characters chi with chi^m trivial, enumerated as multiples of (q-1)/m."""
    n = field.q - 1
    if n % m:
        raise IncompatibleCongruence(f"q = {field.q} is not 1 mod {m}")
    step = n // m
    return (MultChar(field, step * k) for k in range(m))


def chars_of_exact_order(field, m):
    return (c for c in chars_of_order_dividing(field, m) if c.order() == m)


def char_value(chi, x):
    """chi(x) as a CycloNum of order q-1 (0 at x = 0)."""
    e = chi.value_exponent(x)
    if e is None:
        return CycloNum.zero(chi.field.q - 1 if chi.field.q > 2 else 1)
    return CycloNum.zeta_pow(max(chi.field.q - 1, 1), e)


def delta_char(chi):
    return 1 if chi.is_trivial() else 0


def delta_elem(x):
    return 1 if x.owner.element(x).idx == 0 else 0


class RationalParam:
    """Reduced rational i/m used as a hypergeometric parameter."""

    __slots__ = ("i", "m")

    def __init__(self, i, m=1):
        f = Fraction(i, m)
        self.i = f.numerator
        self.m = f.denominator

    @staticmethod
    def parse(text):
        if "/" in text:
            a, b = text.split("/")
            return RationalParam(int(a), int(b))
        return RationalParam(int(text), 1)

    def as_fraction(self):
        return Fraction(self.i, self.m)

    def __eq__(self, other):
        return (isinstance(other, RationalParam)
                and self.i == other.i and self.m == other.m)

    def __hash__(self):
        return hash((self.i, self.m))

    def __repr__(self):
        return f"{self.i}/{self.m}"


def iota(a, field):
    """Character of exponent i(q-1)/m realizing the rational parameter i/m.

    Requires q = 1 (mod m).  iota(1/2) is the quadratic character on every
    odd-characteristic field, and iota respects addition of parameters.
    """
    if isinstance(a, (Fraction, int)):
        a = RationalParam(Fraction(a).numerator, Fraction(a).denominator)
    n = field.q - 1
    if n % a.m:
        raise IncompatibleCongruence(f"q = {field.q} is not 1 mod {a.m}")
    return MultChar(field, a.i * (n // a.m))


def kappa(chi, m):
    """Left inverse of iota: the reduced i/m with iota(i/m) = chi."""
    n = chi.field.q - 1
    if m < 1 or m % chi.order():
        raise OrderDoesNotDivide(f"order {chi.order()} does not divide {m}")
    i = (chi.m * m // n) % m
    return RationalParam(i, m)


def lift_norm(chi, r):
    """chi composed with the norm map, as a character of F_{q^r}.

    For embedded x in F_q the lift takes the value chi(x)^r, and the order
    of the character is preserved.
    """
    ext = extension(chi.field, r)
    base, top = chi.field, ext.top
    ngen = ext.norm(top.gen())
    mprime = (ext.s * chi.m * base.dlog(ngen)) % (top.q - 1)
    return MultChar(top, mprime)
