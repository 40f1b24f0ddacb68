"""Algebraic hypergeometric identities (values given by explicit character
expressions in radicals of the argument), the square/product family around
them, the symmetric-square relation, and the involution checks."""

from fractions import Fraction
from itertools import product

from ..cyclo import CycloNum
from .engine import identity
from .defs_cubic import _two_sqrt_sum


def _ord_gt2_units(ctx):
    out = []
    for a in range(ctx.M):
        if (2 * a) % ctx.M:
            for k in range(ctx.M):
                out.append({"a": a, "x": ctx.F.exp(k)})
    return out


@identity("dihedral-1", desc="two-character value on square arguments, lower slot phi",
          odd=True, tuples=_ord_gt2_units)
def _dihedral1(ctx, t):
    a, z = t["a"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    lhs = ctx.FF([a, a + h], [h], z)
    rhs = _two_sqrt_sum(ctx, z, lambda w: ctx.chv(-2 * a, one + w))
    return lhs, rhs, None


@identity("dihedral-2", desc="two-character value on square arguments, lower slot A^2",
          odd=True, tuples=_ord_gt2_units)
def _dihedral2(ctx, t):
    a, z = t["a"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    half = ctx.F.from_rational(1, 2)
    lhs = ctx.FF([a, a + h], [2 * a], z)
    rhs = _two_sqrt_sum(ctx, one - z, lambda w: ctx.chv(-2 * a, (one + w) * half))
    return lhs, rhs, None


def _prod_tuples(ctx):
    M = ctx.M
    out = []
    for a, b in product(range(M), repeat=2):
        if all((2 * v) % M for v in (a, b, a + b, a - b)):
            for xi in range(ctx.q):
                out.append({"a": a, "b": b, "x": ctx.F.element(xi)})
    return out


@identity("product-2F1-1", desc="fusion of two dihedral-type functions, A^2 lower slots",
          odd=True, has_delta=True, tuples=_prod_tuples)
def _product1(ctx, t):
    a, b, z = t["a"], t["b"], t["x"]
    h = ctx.hphi
    lhs = ctx.FF([a, a + h], [2 * a], z) * ctx.FF([b, b + h], [2 * b], z)
    main = (ctx.FF([a + b, a + b + h], [2 * a + 2 * b], z)
            + ctx.chv(-2 * b, z * ctx.F.from_rational(1, 4))
            * ctx.FF([a - b, a - b + h], [2 * a - 2 * b], z))
    delta = CycloNum.zero(1)
    if ctx.delta(ctx.F.one() - z):
        delta = delta - ctx.chv(a + b, 4)
    return lhs, main, delta


@identity("product-2F1-2", desc="fusion of two dihedral-type functions, phi lower slots",
          odd=True, has_delta=True, tuples=_prod_tuples)
def _product2(ctx, t):
    a, b, z = t["a"], t["b"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    lhs = ctx.FF([a, a + h], [h], z) * ctx.FF([b, b + h], [h], z)
    main = (ctx.FF([a + b, a + b + h], [h], z)
            + ctx.chv(-2 * b, one - z) * ctx.FF([a - b, a - b + h], [h], z))
    delta = CycloNum.zero(1)
    if ctx.delta(z):
        delta = delta - 1
    return lhs, main, delta


@identity("slater-1521", desc="rational evaluation with repeated lower slot",
          tuples=lambda ctx: [{"a": a, "x": ctx.F.element(i)}
                              for a in range(1, ctx.M) for i in range(ctx.q)])
def _slater(ctx, t):
    a, z = t["a"], t["x"]
    one = ctx.F.one()
    lhs = ctx.FF([2 * a, a], [a], z)
    rhs = ctx.chv(-2 * a, one - z) - ctx.chv(-a, z) * ctx.J(a, -2 * a)
    return lhs, rhs, None


def _mth_tuples(ctx):
    out = []
    for m in (2, 3, 4):
        if ctx.M % m:
            continue
        e = ctx.M // m
        for a in range(ctx.M):
            if (m * a) % ctx.M:
                for xi in range(ctx.q):
                    out.append({"m": m, "a": a, "x": ctx.F.element(xi)})
    return out


@identity("mth-multiplication", desc="m-part multiplication identity on m-th power arguments",
          tuples=_mth_tuples)
def _mth(ctx, t):
    m, a, z = t["m"], t["a"], t["x"]
    e = ctx.M // m
    upper = [a + i * e for i in range(m)]
    lower = [i * e for i in range(1, m)]
    lhs = ctx.FF(upper, lower, z)
    one = ctx.F.one()
    if z.idx == 0:
        rhs = ctx.one()
    else:
        roots = ctx.nth_roots(z, m)
        if not roots:
            rhs = ctx.zero()
        else:
            rhs = CycloNum.zero(1)
            for w in roots:
                rhs = rhs + ctx.chv(-m * a, one - w)
    return lhs, rhs, None


def _eta12_arg_tuples(exclude):
    def gen(ctx):
        step = ctx.M // 12
        excl = {ctx.elem(v) for v in exclude}
        out = []
        for u in (1, 5, 7, 11):
            for xi in range(ctx.q):
                x = ctx.F.element(xi)
                if x not in excl:
                    out.append({"e": u * step, "x": x})
        return out
    return gen


@identity("eg18-gsq", desc="squared order-12 function via cube roots of the argument",
          mod=12, tuples=_eta12_arg_tuples([0, 1]))
def _eg18(ctx, t):
    e, lam = t["e"], t["x"]
    one = ctx.F.one()
    targ = lam / (lam - one)
    v1 = ctx.chv(8 * e, lam) * ctx.FF([3 * e, -3 * e], [4 * e], targ) ** 2
    v2 = ctx.FF([3 * e, -3 * e], [-4 * e], targ) ** 2
    roots = ctx.nth_roots(lam, 3)
    if roots and roots[0].idx:
        v3 = CycloNum.one(1)
        for i in range(3):
            for j in range(i + 1, 3):
                v3 = v3 + ctx.chv(6 * e, (one - roots[i]) * (one - roots[j]))
    else:
        v3 = ctx.chv(4 * e, lam)
    return (v1, v2), (v3, v3), None


def _clausen_tuples(ctx):
    M, h = ctx.M, ctx.hphi
    one = ctx.F.one()
    out = []
    for s, c in product(range(M), repeat=2):
        if c % M == h:
            continue
        if (2 * s) % M == 0 or (2 * s - c) % M == 0 or (2 * s - 2 * c) % M == 0:
            continue
        for xi in range(ctx.q):
            x = ctx.F.element(xi)
            if x != one:
                out.append({"s": s, "c": c, "x": x})
    return out


@identity("clausen", desc="square of a quadratic-type function as a three-slot function",
          odd=True, tuples=_clausen_tuples)
def _clausen(ctx, t):
    s, c, lam = t["s"], t["c"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    lhs = ctx.FF([c - s + h, s], [c], lam) ** 2
    extra = (ctx.J(-2 * s, 2 * c) * ctx.Jinv(-c, h)
             + ((ctx.q - 1) if c % ctx.M == 0 else 0))
    main = (ctx.FF([2 * c - 2 * s, 2 * s, c + h], [2 * c, c], lam)
            + ctx.chv(h, one - lam) * ctx.chv(-c, lam) * extra)
    return lhs, main, None


@identity("clausen-at-1", desc="value of the symmetric-square function at 1",
          odd=True,
          tuples=lambda ctx: [{"s": s, "c": c}
                              for s, c in product(range(ctx.M), repeat=2)
                              if c % ctx.M != ctx.hphi
                              and (2 * s) % ctx.M
                              and (2 * s - c) % ctx.M
                              and (2 * s - 2 * c) % ctx.M])
def _clausen1(ctx, t):
    s, c = t["s"], t["c"]
    M, h = ctx.M, ctx.hphi
    v = ctx.FF([2 * c - 2 * s, 2 * s, c + h], [2 * c, c], 1)
    m1 = CycloNum.zero(1)
    m2 = CycloNum.zero(1)
    for d in (s, s + h):
        core = ctx.J(d, c - 2 * s) * ctx.J(2 * s - c, h - d)
        m1 = m1 + core * ctx.Jinv(h, h + c) * ctx.Jinv(2 * s, 2 * c - 2 * s) * ctx.sign(h)
        m2 = m2 + core * ctx.Jinv(h + s, -c) * ctx.Jinv(s, -c)
    fsq = ctx.FF([c - s + h, s], [c], 1) ** 2
    jsq = (ctx.J(h, s) * ctx.Jinv(s, -c)) ** 2
    return (v, v, fsq), (m1, m2, jsq), None


@identity("ramanujan-quarter", desc="three-slot value at 1/4 from a CM curve",
          odd=True, applicable_extra=lambda F: F.q % 3 != 0,
          tuples=lambda ctx: [{}])
def _ram_quarter(ctx, t):
    h = ctx.hphi
    lhs = ctx.P([h, h, h], [0, 0], Fraction(1, 4))
    rhs = CycloNum.from_rational(ctx.q)
    if ctx.M % 3 == 0:
        e = ctx.M // 3
        rhs = rhs + ctx.J(h, e) ** 2 + ctx.J(h, -e) ** 2
    if ctx.sign(h) < 0:
        rhs = -rhs
    return lhs, rhs, None


@identity("ramanujan-eighth", desc="three-slot value at -1/8 from a CM curve",
          odd=True, applicable_extra=lambda F: F.q % 3 != 0,
          tuples=lambda ctx: [{}])
def _ram_eighth(ctx, t):
    h = ctx.hphi
    lhs = ctx.P([h, h, h], [0, 0], Fraction(-1, 8))
    rhs = CycloNum.from_rational(ctx.q)
    if ctx.M % 4 == 0:
        e = ctx.M // 4
        rhs = rhs + ctx.J(h, e) ** 2 + ctx.J(h, -e) ** 2
    s = ctx.chv(h, -2)
    return lhs, rhs * s, None


@identity("isogeny-trace", desc="order-12 period trace relation under a quadratic pullback",
          mod=12, tuples=_eta12_arg_tuples([0, 1, -1]))
def _isogeny(ctx, t):
    e, lam = t["e"], t["x"]
    one = ctx.F.one()
    h = ctx.hphi
    lhs = ctx.P([2 * e, 4 * e], [-2 * e], lam)
    arg = (ctx.F.from_int(-4) * lam) / ((one - lam) ** 2)
    rhs = (ctx.chv(-2 * e, one - lam) * ctx.J(4 * e, h) * ctx.Jinv(3 * e, -5 * e)
           * ctx.P([e, 3 * e], [-2 * e], arg))
    return lhs, rhs, None


@identity("r-eta-unit", desc="unit-modulus Jacobi-sum ratio at order 12",
          mod=12,
          tuples=lambda ctx: [{"e": u * (ctx.M // 12)} for u in (1, 5, 7, 11)])
def _r_eta(ctx, t):
    e = t["e"]
    r = ctx.J(2 * e, 5 * e) * ctx.Jinv(3 * e, 4 * e)
    return r * r.conj(), ctx.one(), None


def _phi_int(ctx, v):
    v = ctx.elem(v)
    if v.idx == 0:
        return 0
    return 1 if ctx.F.dlog(v) % 2 == 0 else -1


@identity("stanton-involution", desc="self-inverse rational map built from the quadratic character",
          odd=True, has_delta=True,
          tuples=lambda ctx: [{"x": ctx.F.element(i)} for i in range(ctx.q)])
def _stanton(ctx, t):
    z = t["x"]
    F = ctx.F
    one = F.one()
    two = F.from_int(2)

    def Gmap(w):
        eps = 0 if w.idx == 0 else 1
        return F.from_int(eps + _phi_int(ctx, one - w))

    def Fmap(w):
        return w * Gmap(w)

    ffz = Fmap(Fmap(z))
    gg = Gmap(z) * Gmap(z * Gmap(z))
    c1 = 1 + _phi_int(ctx, one - z)
    c2 = 1 + _phi_int(ctx, one - two * z)
    main = (z * F.from_int(c1 * c2), F.from_int(c1 * c2))
    d1 = F.zero()
    d2 = F.zero()
    if ctx.delta(one - z):
        d1 = d1 - F.from_int(_phi_int(ctx, -one))
        d2 = d2 - F.from_int(_phi_int(ctx, -one))
    if ctx.delta(z):
        d2 = d2 - F.from_int(3)
    return (ffz, gg), main, (d1, d2)
