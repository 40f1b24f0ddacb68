"""Sweep engine: verify identity records exactly over admissible tuples.

Each identity supplies an admissibility test, a tuple enumerator, and an
evaluator returning (lhs, main, delta) with the convention

    identity holds  <=>  lhs == main + delta.

``verify`` compares canonical exact values tuple by tuple; ``delta_audit``
re-runs the comparison with the delta part stripped, exhibiting exactly
where the correction terms are load-bearing.  Values may be CycloNums or
field elements (some identities live inside F_q itself).
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..chars import MultChar
from ..cyclo import CycloNum
from ..errors import UnknownIdentity
from ..fields import FieldElement, construct_field, is_prime
from ..hyper import spec_from_exponents, period_direct
from ..sums import cache_for

REGISTRY = {}


@dataclass
class IdentityRecord:
    id: str
    description: str
    evaluate: callable          # (ctx, tup) -> (lhs, main, delta or None)
    tuples: callable            # (ctx) -> list of tuple dicts
    status: str = "theorem"     # or "conjecture"
    mod: int = 1                # requires q = 1 (mod this)
    odd: bool = False           # requires odd q
    prime_only: bool = False    # stated for prime fields only
    applicable_extra: callable = None
    has_delta: bool = False

    def applicable(self, F):
        if self.mod > 1 and (F.q - 1) % self.mod:
            return False, f"q = {F.q} is not 1 mod {self.mod}"
        if self.odd and F.q % 2 == 0:
            return False, "q must be odd"
        if self.prime_only and F.e != 1:
            return False, "stated for prime fields only"
        if self.applicable_extra is not None:
            ok = self.applicable_extra(F)
            if not ok:
                return False, "side condition on the field fails"
        return True, ""


def register(rec):
    if rec.id in REGISTRY:
        raise ValueError(f"duplicate identity id {rec.id}")
    REGISTRY[rec.id] = rec
    return rec


def identity(id, *, desc, tuples, status="theorem", mod=1, odd=False,
             prime_only=False, applicable_extra=None, has_delta=False):
    """Decorator wiring an evaluator function into the registry."""

    def wrap(fn):
        register(IdentityRecord(
            id=id, description=desc, evaluate=fn, tuples=tuples,
            status=status, mod=mod, odd=odd, prime_only=prime_only,
            applicable_extra=applicable_extra, has_delta=has_delta))
        return fn

    return wrap


class EvalContext:
    """Per-field helper bundle with memoized period evaluations."""

    def __init__(self, F):
        self.F = F
        self.c = cache_for(F)
        self.q = F.q
        self.M = max(F.q - 1, 1)
        self._pmemo = {}
        self._gpair = {}

    # field-element helpers -------------------------------------------------

    def elem(self, r):
        if isinstance(r, FieldElement):
            return r
        r = Fraction(r)
        return self.F.from_rational(r.numerator, r.denominator)

    def delta(self, x):
        """delta(x): 1 at the zero element."""
        return 1 if self.elem(x).idx == 0 else 0

    def dchar(self, m):
        return 1 if m % self.M == 0 else 0

    def sqrt_list(self, x):
        x = self.elem(x)
        if x.idx == 0:
            return [self.F.zero()]
        k = self.F.dlog(x)
        if k % 2:
            return []
        h = k // 2
        return [self.F.exp(h), self.F.exp(h + self.M // 2)]

    def nth_roots(self, x, n):
        x = self.elem(x)
        if x.idx == 0:
            return [self.F.zero()]
        k = self.F.dlog(x)
        g = gcd(n, self.M)
        if k % g:
            return []
        step = self.M // g
        k0 = (k // g) * pow(n // g, -1, step) % step
        return [self.F.exp(k0 + j * step) for j in range(g)]

    # sums ------------------------------------------------------------------

    def chv(self, m, x):
        return self.c.chv(m, self.elem(x))

    def sign(self, m):
        return self.c.sign(m)

    def J(self, a, b):
        return self.c.jacobi(a, b)

    def Jinv(self, a, b):
        return self.c.jacobi_inv(a, b)

    def Jr(self, num, den):
        """Jacobi ratio J(num)/J(den)."""
        return self.c.jacobi(*num) * self.c.jacobi_inv(*den)

    def g(self, m):
        return self.c.gauss(m)

    def ginv(self, m):
        return self.c.gauss_inv(m)

    def gpair(self, a, b):
        """Memoized product g(chi_a) g(chi_b) (hot in convolution sweeps)."""
        key = (a % self.M, b % self.M)
        val = self._gpair.get(key)
        if val is None:
            val = self.c.gauss(key[0]) * self.c.gauss(key[1])
            self._gpair[key] = val
        return val

    @property
    def hphi(self):
        """Exponent of the quadratic character (odd q only)."""
        return self.M // 2

    # period functions --------------------------------------------------------

    def P(self, um, lm, x):
        x = self.elem(x)
        key = (tuple(m % self.M for m in um), tuple(m % self.M for m in lm), x.idx)
        val = self._pmemo.get(key)
        if val is None:
            spec = spec_from_exponents(self.F, key[0], key[1])
            val = period_direct(spec, x)
            self._pmemo[key] = val
        return val

    def FF(self, um, lm, x):
        val = self.P(um, lm, x)
        for i in range(len(lm)):
            val = val * self.c.jacobi_inv(um[i + 1], lm[i] - um[i + 1])
        return val

    def zero(self):
        return CycloNum.zero(1)

    def one(self):
        return CycloNum.one(1)


@lru_cache(maxsize=None)
def context_for(field):
    return EvalContext(field)


def _val_json(v):
    if isinstance(v, CycloNum):
        return v.to_json_dict()
    if isinstance(v, FieldElement):
        return v.owner.format_element(v)
    if isinstance(v, tuple):
        return [_val_json(x) for x in v]
    return v


def _tuple_json(F, tup):
    chars, args = {}, {}
    for k, v in tup.items():
        if isinstance(v, FieldElement):
            args[k] = F.format_element(v)
        else:
            chars[k] = v
    return {"chars": chars, "arg": args}


def _combine(main, delta):
    if delta is None:
        return main
    if isinstance(main, tuple):
        return tuple(m + d for m, d in zip(main, delta))
    return main + delta


def verify(id, F, mode="exhaustive", max_failures=32):
    """Run one identity over one field; returns a VerifyReport dict."""
    rec = REGISTRY.get(id)
    if rec is None:
        raise UnknownIdentity(id)
    ok, why = rec.applicable(F)
    base = {"id": id, "q": F.q, "status_kind": rec.status, "mode": _mode_str(mode)}
    if not ok:
        return {**base, "status": "inapplicable", "reason": why,
                "tuples_checked": 0, "failures": []}
    ctx = context_for(F)
    population = rec.tuples(ctx)
    tuples = _select(population, mode)
    failures = []
    checked = 0
    for tup in tuples:
        lhs, main, delta = rec.evaluate(ctx, tup)
        checked += 1
        rhs = _combine(main, delta)
        if lhs != rhs:
            if len(failures) < max_failures:
                failures.append({
                    **_tuple_json(F, tup),
                    "lhs": _val_json(lhs),
                    "rhs": _val_json(rhs),
                })
            else:
                failures.append("...")
                break
    if rec.status == "conjecture":
        status = "observed" if not failures else "refuted"
    else:
        status = "pass" if not failures else "fail"
    return {**base, "status": status, "tuples_checked": checked,
            "failures": failures}


def _mode_str(mode):
    if mode == "exhaustive":
        return "exhaustive"
    kind, n, seed = mode
    return f"sample:{n}:{seed}"


def _select(population, mode):
    if mode == "exhaustive":
        return population
    kind, n, seed = mode
    if kind != "sample":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    return [population[rng.randrange(len(population))] for _ in range(n)]


def verify_all(fields, mode="exhaustive", ids=None):
    """Every applicable registry entry over each field, sorted reports."""
    out = []
    names = sorted(ids if ids is not None else REGISTRY)
    for name in names:
        if name not in REGISTRY:
            raise UnknownIdentity(name)
        for F in fields:
            out.append(verify(name, F, mode))
    return out


def delta_audit(id, F):
    """Re-run an identity with its delta terms stripped.

    Returns the tuples that fail without the correction terms; an identity
    with no delta terms yields an empty diff.
    """
    rec = REGISTRY.get(id)
    if rec is None:
        raise UnknownIdentity(id)
    ok, why = rec.applicable(F)
    if not ok:
        return {"id": id, "q": F.q, "status": "inapplicable", "reason": why,
                "failures_without_delta": []}
    ctx = context_for(F)
    failures = []
    for tup in rec.tuples(ctx):
        lhs, main, delta = rec.evaluate(ctx, tup)
        if delta is None:
            continue
        if lhs != main:
            failures.append(_tuple_json(F, tup))
    return {"id": id, "q": F.q, "status": "audited",
            "failures_without_delta": failures}


def fields_from_qs(qs):
    out = []
    for q in qs:
        p, e = _split_prime_power(q)
        out.append(construct_field(p, e))
    return out


def _split_prime_power(q):
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise ValueError(f"{q} is not a prime power")
            e = 0
            n = q
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")
