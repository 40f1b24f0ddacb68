"""Cubic and higher-degree transformations: the two cubic three-slot
transforms and their evaluation corollaries, the Gessel-Stanton cubic and
its 3/4-evaluation, the elliptic-curve degree-6 transform, and the
order-24 algebraic evaluation."""

from fractions import Fraction
from itertools import product

from ..cyclo import CycloNum
from .engine import identity


def _bailey_tuples(ctx):
    M, h = ctx.M, ctx.hphi
    out = []
    for a, b in product(range(M), repeat=2):
        if all(v % M for v in (3 * a, b, 3 * a - 2 * b, 6 * a - 3 * b,
                               h + 3 * a - b, h + 3 * a - 3 * b)):
            for xi in range(ctx.q):
                out.append({"a": a, "b": b, "x": ctx.F.element(xi)})
    return out


def _bailey_delta_sum(ctx, a, b, sgn4):
    """Sum over the three cube-root characters entering the x = 1 term."""
    M, h = ctx.M, ctx.hphi
    e = M // 3
    den = ctx.ginv(h - b) * ctx.ginv(b - 3 * a) * ctx.ginv(3 * a)
    m4 = ctx.F.from_int(sgn4 * 4)
    total = CycloNum.zero(1)
    for j in range(3):
        x = (-a + j * e) % M
        term = ctx.gpair(-x, h - b - x) * ctx.g(b - 3 * a - x) * ctx.chv(-x, m4)
        total = total + term
    return total * den


@identity("bailey-cubic-1", desc="cubic transform with argument 27x^2/(4(1-x)^3)",
          mod=6, has_delta=True, tuples=_bailey_tuples)
def _bailey1(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    M, h = ctx.M, ctx.hphi
    e = M // 3
    one = ctx.F.one()
    omx = one - x
    if omx.idx == 0:
        lhs = ctx.zero()
    else:
        arg = (ctx.F.from_int(27) * x * x) / (ctx.F.from_int(4) * omx ** 3)
        lhs = ctx.chv(-3 * a, omx) * ctx.FF([a, a + e, a - e], [h + b, 3 * a - b], arg)
    main = ctx.FF([3 * a, b, h + 3 * a - b], [2 * b, 6 * a - 2 * b],
                  ctx.F.from_int(4) * x)
    delta = CycloNum.zero(1)
    if ctx.delta(x + ctx.F.from_int(2)):
        delta = delta - ctx.gpair(h, -3 * a) * ctx.ginv(h - b) * ctx.ginv(b - 3 * a)
    if ctx.delta(one - x):
        delta = delta - _bailey_delta_sum(ctx, a, b, -1)
    return lhs, main, delta


@identity("bailey-cubic-2", desc="cubic transform with argument 27x/(4(x-1)^3)",
          mod=6, has_delta=True, tuples=_bailey_tuples)
def _bailey2(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    M, h = ctx.M, ctx.hphi
    e = M // 3
    one = ctx.F.one()
    omx = one - x
    if omx.idx == 0:
        lhs = ctx.zero()
    else:
        arg = (ctx.F.from_int(27) * x) / (ctx.F.from_int(4) * (x - one) ** 3)
        lhs = ctx.chv(-3 * a, omx) * ctx.FF([a, a + e, a - e], [h + b, 3 * a - b], arg)
    main = ctx.FF([3 * a, 3 * a - 2 * b, 2 * b - 3 * a], [3 * a - b, h + b],
                  x * ctx.F.from_rational(1, 4))
    delta = CycloNum.zero(1)
    if ctx.delta(x + ctx.F.from_rational(1, 2)):
        delta = delta - (ctx.chv(3 * a, 2) * ctx.gpair(h, -3 * a)
                         * ctx.ginv(h - b) * ctx.ginv(b - 3 * a))
    if ctx.delta(one - x):
        delta = delta - _bailey_delta_sum(ctx, a, b, +1)
    return lhs, main, delta


def _bailey_pairs(ctx):
    M, h = ctx.M, ctx.hphi
    return [{"a": a, "b": b} for a, b in product(range(M), repeat=2)
            if all(v % M for v in (3 * a, b, 3 * a - 2 * b, 6 * a - 3 * b,
                                   h + 3 * a - b, h + 3 * a - 3 * b))]


@identity("bailey-eval-4", desc="three-slot evaluation at 4 from the cubic transform",
          mod=6, tuples=_bailey_pairs)
def _bailey_eval4(ctx, t):
    a, b = t["a"], t["b"]
    h = ctx.hphi
    lhs = ctx.FF([3 * a, b, h + 3 * a - b], [2 * b, 6 * a - 2 * b], 4)
    return lhs, _bailey_delta_sum(ctx, a, b, -1), None


@identity("bailey-eval-14", desc="three-slot evaluation at 1/4 from the cubic transform",
          mod=6, tuples=_bailey_pairs)
def _bailey_eval14(ctx, t):
    a, b = t["a"], t["b"]
    h = ctx.hphi
    lhs = ctx.FF([3 * a, 3 * a - 2 * b, 2 * b - 3 * a], [3 * a - b, h + b],
                 Fraction(1, 4))
    return lhs, _bailey_delta_sum(ctx, a, b, +1), None


def _bailey_degen_tuples(ctx):
    M = ctx.M
    e = M // 3
    out = []
    excl = {ctx.F.zero(), ctx.F.one(), ctx.F.from_rational(1, 4),
            ctx.F.from_rational(-1, 8)}
    elems = [ctx.F.element(i) for i in range(ctx.q) if ctx.F.element(i) not in excl]
    for ee in (e, 2 * e):
        for a in range(M):
            if (6 * a) % M:
                for x in elems:
                    out.append({"a": a, "e": ee, "x": x})
    return out


@identity("bailey-degenerate", desc="degenerate cubic transform for a 2-slot function",
          mod=3, odd=True, tuples=_bailey_degen_tuples)
def _bailey_degen(ctx, t):
    a, e, x = t["a"], t["e"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    lhs = ctx.FF([3 * a, e - a], [2 * a + h + e], x)
    om4x = one - ctx.F.from_int(4) * x
    arg = (ctx.F.from_int(-27) * x) / (om4x ** 3)
    rhs = ctx.chv(-3 * a, om4x) * ctx.FF([a, a + e], [2 * a + h + e], arg)
    return lhs, rhs, None


def _gs_tuples(ctx):
    return [{"a": a, "x": ctx.F.element(i)}
            for a in range(ctx.M) for i in range(ctx.q)]


@identity("gs-cubic", desc="cubic argument transform 27x(1-x)^2/4 vs 3x/4",
          odd=True, has_delta=True, tuples=_gs_tuples)
def _gs_cubic(ctx, t):
    a, x = t["a"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    arg1 = ctx.F.from_rational(27, 4) * x * (one - x) ** 2
    lhs = ctx.FF([a, -a], [h], arg1)
    main = ctx.FF([3 * a, -3 * a], [h], ctx.F.from_rational(3, 4) * x)
    s3 = ctx.chv(h, -3)       # phi(-3); exactly zero in characteristic 3
    delta = CycloNum.zero(1)
    if not s3.is_zero():
        if ctx.delta(x - one):
            delta = delta - s3
        if ctx.delta(x - ctx.F.from_rational(1, 3)):
            delta = delta - s3 * ctx.sign(a)
    return lhs, main, delta


def _gs34_tuples(ctx):
    M = ctx.M
    out = []
    for a, c in product(range(M), repeat=2):
        if all(v % M for v in (6 * a, 6 * c, 3 * (a + c), 3 * (c - a))):
            out.append({"a": a, "c": c})
    return out


@identity("gs-eval-34", desc="three-slot evaluation at 3/4 via cube-root cosets",
          mod=6, tuples=_gs34_tuples)
def _gs_eval34(ctx, t):
    a, c = t["a"], t["c"]
    M, h = ctx.M, ctx.hphi
    e = M // 3
    lhs = ctx.FF([3 * a, -3 * a, -c], [h, -3 * c], Fraction(3, 4))
    mids = []
    rights = []
    for ee in (e, 2 * e):
        total = CycloNum.zero(1)
        tot_r = CycloNum.zero(1)
        for j in range(3):
            bb = a + j * e
            total = (total + ctx.J(bb + c, ee) * ctx.J(-bb + c, -ee)
                     * ctx.Jinv(bb, c + ee) * ctx.Jinv(-bb, c - ee))
            tot_r = tot_r + ctx.J(bb + c, -bb + c)
        mids.append(total)
        rights.append(tot_r * ctx.Jinv(ee + c, c - ee) * ctx.sign(a))
    return (lhs, lhs, lhs), (mids[0], mids[1], rights[0]), None


def _bb_tuples(ctx):
    M = ctx.M
    e = M // 3
    out = []
    for ee in (e, 2 * e):
        for zi in range(ctx.q):
            z = ctx.F.element(zi)
            if (ctx.F.one() + ctx.F.from_int(2) * z).idx:
                out.append({"e": ee, "z": z})
    return out


@identity("bb-cubic", desc="3-isogeny cubic transform for the order-3 family",
          mod=3, tuples=_bb_tuples)
def _bb_cubic(ctx, t):
    e, z = t["e"], t["z"]
    one = ctx.F.one()
    a1 = one - z ** 3
    a2 = ((one - z) / (one + ctx.F.from_int(2) * z)) ** 3
    lhs = (ctx.P([e, 2 * e], [0], a1), ctx.FF([e, 2 * e], [0], a1))
    rhs = (ctx.P([e, 2 * e], [0], a2), ctx.FF([e, 2 * e], [0], a2))
    return lhs, rhs, None


def _ec6_tuples(ctx):
    M = ctx.M
    step = M // 12
    out = []
    one = ctx.F.one()
    excl = {-one, ctx.F.from_int(2), ctx.F.from_rational(1, 2)}
    for u in (1, 5, 7, 11):
        for li in range(ctx.q):
            lam = ctx.F.element(li)
            if lam in excl:
                continue
            if (lam * lam - lam + one).idx == 0:
                continue
            out.append({"e": u * step, "lam": lam})
    return out


@identity("ec-degree6", desc="degree-6 transform matching isomorphic elliptic curves",
          mod=12, tuples=_ec6_tuples)
def _ec6(ctx, t):
    e, lam = t["e"], t["lam"]
    F = ctx.F
    one = F.one()
    d = lam * lam - lam + one
    arg = (F.from_int(27) * lam * lam * (lam - one) ** 2) / (F.from_int(4) * d ** 3)
    h = ctx.hphi
    lhs = (ctx.P([e, 5 * e], [0], arg), ctx.FF([e, 5 * e], [0], arg))
    rhs = (ctx.sign(e) * ctx.chv(3 * e, d) * ctx.P([h, h], [0], lam),
           ctx.chv(3 * e, d) * ctx.FF([h, h], [0], lam))
    return lhs, rhs, None


def _two_sqrt_sum(ctx, z, fn):
    """((1 + phi(z))/2) * (fn(w) + fn(-w)) for w^2 = z, handled exactly:
    zero when z is a non-square, the averaged single term at z = 0."""
    z = ctx.elem(z)
    if z.idx == 0:
        return fn(ctx.F.zero())
    roots = ctx.sqrt_list(z)
    if not roots:
        return CycloNum.zero(1)
    return fn(roots[0]) + fn(roots[1])


def _deg24_tuples(ctx):
    M = ctx.M
    step = M // 24
    excl = {ctx.F.from_rational(-1, 8), ctx.F.from_rational(1, 4)}
    out = []
    for u in range(1, 24):
        if _coprime24(u):
            for xi in range(ctx.q):
                x = ctx.F.element(xi)
                if x not in excl:
                    out.append({"e": u * step, "x": x})
    return out


def _coprime24(u):
    from math import gcd
    return gcd(u, 24) == 1


@identity("deg24-234", desc="order-24 algebraic evaluation for the (2,3,4) family",
          mod=24, tuples=_deg24_tuples)
def _deg24(ctx, t):
    e, x = t["e"], t["x"]
    F = ctx.F
    one = F.one()
    om4x = one - F.from_int(4) * x
    arg = (F.from_int(-27) * x) / (om4x ** 3)
    lhs = ctx.FF([-e, 7 * e], [18 * e], arg)
    four = F.from_int(4)
    rhs = _two_sqrt_sum(ctx, one - x,
                        lambda w: ctx.chv(3 * e, (one + w) ** 2 / (four * om4x)))
    return lhs, rhs, None
