"""Finite fields F_{p^e} with exp/log tables against a canonical generator.

Elements are encoded as integers 0..q-1: the base-p digit string of the
coefficient vector in the polynomial basis (constant term = least
significant digit).  The modulus is the lexicographically smallest monic
irreducible polynomial of degree e (coefficient tuples scanned in
ascending base-p order) and the generator is the element of order q-1
with the smallest encoding, so two constructions of the same field are
identical and character indexing is reproducible.
"""

import hashlib
from functools import lru_cache

import numpy as np

from .config import DEFAULT
from .errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    LogOfZero,
    NotASubfieldPair,
    NotPrime,
)


def is_prime(n):
    """Deterministic trial-division primality test (intended for n < 2**32)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomial helpers over F_p (coefficient lists, low to high) -----------

def _pmod(a, m, p):
    a = [x % p for x in a]
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for k in range(len(a) - 1, dm - 1, -1):
        c = (a[k] * inv_lead) % p
        if c:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - c * m[i]) % p
    while len(a) > dm:
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a

def _pmul(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)

def _ppow(a, n, m, p):
    result = [1]
    base = _pmod(list(a), m, p)
    while n:
        if n & 1:
            result = _pmul(result, base, m, p)
        base = _pmul(base, base, m, p)
        n >>= 1
    return result

def _pgcd(a, b, p):
    a = [x % p for x in a]
    b = [x % p for x in b]
    while any(b):
        a, b = b, _polyrem(a, b, p)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a

def _polyrem(a, b, p):
    a = list(a)
    while len(b) > 1 and b[-1] == 0:
        b = b[:-1]
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    for k in range(len(a) - 1, db - 1, -1):
        c = (a[k] * inv) % p
        if c:
            for i in range(db + 1):
                a[k - db + i] = (a[k - db + i] - c * b[i]) % p
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a

def _is_irreducible(f, p):
    """f monic of degree e; irreducible iff x^(p^e) == x mod f and
    gcd(x^(p^i) - x, f) = 1 for 1 <= i < e."""
    e = len(f) - 1
    if e == 1:
        return True
    xq = _ppow([0, 1], p ** e, f, p)
    if xq != [0, 1]:
        return False
    for i in range(1, e):
        xpi = _ppow([0, 1], p ** i, f, p)
        diff = list(xpi) + [0] * (2 - len(xpi))
        diff[1] = (diff[1] - 1) % p
        g = _pgcd(f, diff, p)
        if len(g) > 1:
            return False
    return True


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldElement:
    """Element of a FiniteField, wrapping its integer encoding."""

    __slots__ = ("owner", "idx")

    def __init__(self, owner, idx):
        self.owner = owner
        self.idx = int(idx)

    @property
    def coeffs(self):
        return self.owner.decode(self.idx)

    def is_zero(self):
        return self.idx == 0

    def _check(self, other):
        if not isinstance(other, FieldElement) or other.owner is not self.owner:
            raise FieldMismatch("elements belong to different fields")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.add_idx(self.idx, other.idx))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.sub_idx(self.idx, other.idx))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.mul_idx(self.idx, other.idx))

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(self.owner, self.owner.div_idx(self.idx, other.idx))

    def __neg__(self):
        return FieldElement(self.owner, self.owner.neg_idx(self.idx))

    def __pow__(self, n):
        return FieldElement(self.owner, self.owner.pow_idx(self.idx, n))

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and other.owner is self.owner
                and other.idx == self.idx)

    def __hash__(self):
        return hash((id(self.owner), self.idx))

    def __repr__(self):
        return f"{self.owner!r}({self.owner.format_element(self)})"


class FiniteField:
    """Immutable F_{p^e} with canonical modulus, generator and dlog tables."""

    def __init__(self, p, e):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if e < 1:
            raise ValueError("e must be >= 1")
        q = p ** e
        if q > DEFAULT.q_max:
            raise BudgetExceeded(f"q={q} exceeds field budget {DEFAULT.q_max}")
        self.p, self.e, self.q = p, e, q
        self.modulus = self._find_modulus()
        self._pow_digits = [p ** i for i in range(e)]
        self.generator_idx = self._find_generator()
        self._build_tables()

    def _find_modulus(self):
        if self.e == 1:
            return (0, 1)
        for c in range(self.q):
            f = list(self.decode(c)) + [1]
            if _is_irreducible(f, self.p):
                return tuple(f)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def decode(self, idx):
        digits = []
        for _ in range(self.e):
            idx, r = divmod(idx, self.p)
            digits.append(r)
        return tuple(digits)

    def encode(self, coeffs):
        idx = 0
        for c in reversed(list(coeffs)[: self.e]):
            idx = idx * self.p + (c % self.p)
        return idx

    # scalar index arithmetic -------------------------------------------------

    def add_idx(self, a, b):
        p = self.p
        out = 0
        for pk in self._pow_digits:
            out += (((a // pk) + (b // pk)) % p) * pk
        return out

    def neg_idx(self, a):
        p = self.p
        out = 0
        for pk in self._pow_digits:
            out += ((-(a // pk)) % p) * pk
        return out

    def sub_idx(self, a, b):
        return self.add_idx(a, self.neg_idx(b))

    def _mul_idx_poly(self, a, b):
        # used during construction, before dlog tables exist
        pa = list(self.decode(a))
        pb = list(self.decode(b))
        m = list(self.modulus)
        return self.encode(_pmul(pa, pb, m, self.p) + [0] * self.e)

    def mul_idx(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._dlog[a] + self._dlog[b]) % (self.q - 1)])

    def div_idx(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero field element")
        if a == 0:
            return 0
        return int(self._exp[(self._dlog[a] - self._dlog[b]) % (self.q - 1)])

    def inv_idx(self, a):
        return self.div_idx(self.encode([1]), a)

    def pow_idx(self, a, n):
        if a == 0:
            if n < 0:
                raise DivisionByZero("0 cannot be raised to a negative power")
            return 0 if n else self.encode([1])
        return int(self._exp[(self._dlog[a] * n) % (self.q - 1)])

    def _order_via_poly(self, a):
        n = self.q - 1
        order = n
        for ell in _prime_factors(n):
            while order % ell == 0:
                idx, k = self.encode([1]), order // ell
                base, m = a, k
                while m:
                    if m & 1:
                        idx = self._mul_idx_poly(idx, base)
                    base = self._mul_idx_poly(base, base)
                    m >>= 1
                if idx != self.encode([1]):
                    break
                order //= ell
        return order

    def _find_generator(self):
        target = self.q - 1
        for cand in range(1, self.q):
            if self._order_via_poly(cand) == target:
                return cand
        raise AssertionError("no generator found")  # unreachable

    def _build_tables(self):
        q = self.q
        exp = np.zeros(q - 1, dtype=np.int64)
        dlog = np.full(q, -1, dtype=np.int64)
        acc = self.encode([1])
        for k in range(q - 1):
            exp[k] = acc
            dlog[acc] = k
            acc = self._mul_idx_poly(acc, self.generator_idx)
        if acc != self.encode([1]):
            raise AssertionError("generator does not have order q-1")
        self._exp = exp
        self._dlog = dlog
        # 1 - x for every encoding, vectorized over base-p digits
        idxs = np.arange(q, dtype=np.int64)
        out = np.zeros(q, dtype=np.int64)
        rem = idxs.copy()
        for pk in self._pow_digits:
            out += ((-(rem % self.p)) % self.p) * pk
            rem //= self.p
        one = self.encode([1])
        self._one_minus = np.array([self.add_idx(int(v), one) for v in out],
                                   dtype=np.int64)

    # element-level API --------------------------------------------------------

    def zero(self):
        return FieldElement(self, 0)

    def one(self):
        return FieldElement(self, self.encode([1]))

    def element(self, value):
        """Element from an encoding index (0..q-1), coefficient list, or
        FieldElement.  For the arithmetic meaning of an integer (n mod p
        in the prime subfield) use ``from_int`` instead; the two agree on
        prime fields only."""
        if isinstance(value, FieldElement):
            if value.owner is not self:
                raise FieldMismatch("element from another field")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, self.encode(value))
        idx = int(value)
        if not 0 <= idx < self.q:
            raise ValueError(f"encoding {idx} out of range for {self!r}")
        return FieldElement(self, idx)

    def _int_embed(self, n):
        return self.encode([n % self.p])

    def from_int(self, n):
        """n (mod p) as a prime-subfield element."""
        return FieldElement(self, self._int_embed(n))

    def from_rational(self, num, den=1):
        a = self._int_embed(num)
        b = self._int_embed(den)
        return FieldElement(self, self.div_idx(a, b))

    def gen(self):
        return FieldElement(self, self.generator_idx)

    def exp(self, k):
        return FieldElement(self, int(self._exp[k % (self.q - 1)]))

    def dlog(self, x):
        x = self.element(x)
        if x.idx == 0:
            raise LogOfZero("discrete log of zero is undefined")
        return int(self._dlog[x.idx])

    def elements(self):
        return (FieldElement(self, i) for i in range(self.q))

    def units(self):
        return (FieldElement(self, int(self._exp[k])) for k in range(self.q - 1))

    def trace_to_prime(self, x):
        x = self.element(x)
        pf = prime_field(self.p)
        if self.e == 1:
            return FieldElement(pf, x.idx)
        acc, term = 0, x.idx
        for _ in range(self.e):
            acc = self.add_idx(acc, term)
            term = self.pow_idx(term, self.p)
        # the trace lies in the prime subfield: encoding is its constant digit
        assert acc < self.p
        return FieldElement(pf, acc)

    # formatting ---------------------------------------------------------------

    def format_element(self, x):
        x = self.element(x)
        if x.idx == 0:
            return "0"
        return f"g^{self.dlog(x)}"

    def parse_element(self, text):
        text = text.strip()
        if text.startswith("g^"):
            return self.exp(int(text[2:]))
        if "," in text:
            return self.element([int(t) for t in text.split(",")])
        if "/" in text:
            num, den = text.split("/")
            return self.from_rational(int(num), int(den))
        return self.from_int(int(text))

    def table_checksums(self):
        h_exp = hashlib.sha256(self._exp.tobytes()).hexdigest()[:16]
        h_log = hashlib.sha256(self._dlog.tobytes()).hexdigest()[:16]
        return {"exp": h_exp, "log": h_log}

    def modulus_str(self):
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("t" if c == 1 else f"{c}*t")
            else:
                terms.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"F_{self.q}" if self.e > 1 else f"F_{self.p}"


@lru_cache(maxsize=None)
def construct_field(p, e=1):
    """Canonical F_{p^e}; cached so field identity is object identity."""
    return FiniteField(p, e)


@lru_cache(maxsize=None)
def prime_field(p):
    return construct_field(p, 1)


def field_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def dlog(x):
    return x.owner.dlog(x)


def trace_to_prime(x):
    return x.owner.trace_to_prime(x)


class _Extension:
    """F_{q^r} over F_q, with the embedding g -> h cached."""

    def __init__(self, base, r):
        self.base = base
        self.r = r
        self.top = construct_field(base.p, base.e * r)
        self.s = (self.top.q - 1) // (base.q - 1)
        self._find_embedding()

    def _minpoly_of_generator(self):
        # prod over conjugates (x - g^(p^i)) with coefficients in F_p
        F = self.base
        conj = [F.pow_idx(F.generator_idx, F.p ** i) for i in range(F.e)]
        poly = [F.encode([1])]
        for c in conj:
            nxt = [0] * (len(poly) + 1)
            for i, a in enumerate(poly):
                nxt[i + 1] = F.add_idx(nxt[i + 1], a)
                nxt[i] = F.add_idx(nxt[i], F.mul_idx(a, F.neg_idx(c)))
            poly = nxt
        out = []
        for a in poly:
            assert a < F.p  # coefficients lie in the prime field
            out.append(a)
        return out

    def _find_embedding(self):
        F, T = self.base, self.top
        mp = self._minpoly_of_generator()
        best = None
        for u in range(1, F.q - 1 + 1):
            if u == F.q - 1 or _gcd_int(u, F.q - 1) == 1:
                if u == F.q - 1:
                    continue
                h_idx = T.pow_idx(T.generator_idx, self.s * u)
                acc = 0
                for c in reversed(mp):
                    acc = T.add_idx(T.mul_idx(acc, h_idx), T._int_embed(c))
                if acc == 0 and (best is None or h_idx < best[0]):
                    best = (h_idx, u)
        if best is None and F.q == 2:
            best = (T.encode([1]), 1)
        assert best is not None, "no embedding found"
        self.h_idx, self.u = best

    def embed(self, x):
        x = self.base.element(x)
        if x.idx == 0:
            return self.top.zero()
        k = self.base.dlog(x)
        return FieldElement(self.top, self.top.pow_idx(self.h_idx, k))

    def norm(self, x):
        """Norm F_{q^r} -> F_q: x^(1 + q + ... + q^(r-1)), pulled back."""
        x = self.top.element(x)
        if x.idx == 0:
            return self.base.zero()
        d2 = self.top.dlog(x)
        w, rem = divmod(d2 * self.s % (self.top.q - 1), self.s)
        assert rem == 0
        k = (w * pow(self.u, -1, self.base.q - 1)) % (self.base.q - 1)
        return self.base.exp(k)


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def extension(base, r):
    """The cached extension F_{q^r} / F_q with its embedding."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return _Extension(base, r)


def norm_to_subfield(x, target):
    """Norm of x down to `target`; x must live in an extension built over target."""
    top = x.owner
    if top is target:
        return x
    if top.e % target.e or top.p != target.p:
        raise NotASubfieldPair(f"{target!r} is not a subfield of {top!r}")
    ext = extension(target, top.e // target.e)
    if ext.top is not top:
        raise NotASubfieldPair("extension was not built over this base field")
    return ext.norm(x)
