"""Quadratic transformation formulas, their auxiliary Jacobi-sum lemmas,
and the argument-symmetric transform family derived from them."""

from fractions import Fraction
from itertools import product

from ..cyclo import CycloNum
from .engine import identity
from .defs_basic import t_chars


def _pairs_with_args(cond=None, args=None):
    def gen(ctx):
        out = []
        elems = list(args(ctx)) if args else [ctx.F.element(i) for i in range(ctx.q)]
        for a, b in product(range(ctx.M), repeat=2):
            t = {"a": a, "b": b}
            if cond is not None and not cond(ctx, t):
                continue
            for x in elems:
                out.append({**t, "x": x})
        return out
    return gen


def _quad_cond(ctx, t):
    # D != phi and B != D
    return t["a"] % ctx.M != ctx.hphi and (t["b"] - t["a"]) % ctx.M != 0


@identity("quad-2F1", desc="quadratic argument transformation -4x/(1-x)^2",
          odd=True, has_delta=True,
          tuples=_pairs_with_args(cond=lambda ctx, t: _quad_cond(ctx, {"a": t["a"], "b": t["b"]})))
def _quad2f1(ctx, t):
    d, b = t["a"], t["b"]
    x = t["x"]
    c = 2 * d
    h = ctx.hphi
    one = ctx.F.one()
    omx = one - x
    if omx.idx == 0:
        lhs = ctx.zero()  # conj(C)(1-x) kills the left side at x = 1
    else:
        arg = (-(ctx.F.from_int(4) * x)) / (omx * omx)
        lhs = ctx.chv(-c, omx) * ctx.FF([d + h - b, d], [c - b], arg)
    main = ctx.FF([b, c], [c - b], x)
    delta = CycloNum.zero(1)
    if ctx.delta(one - x):
        delta = delta - ctx.Jr((c, -2 * b), (c, -b))
    if ctx.delta(one + x):
        delta = delta - ctx.Jr((-b, d + h), (c, -b))
    return lhs, main, delta


@identity("quad-lemma", desc="Jacobi-sum expansion behind the quadratic transform",
          odd=True, has_delta=True, tuples=t_chars(["d", "k", "x"]))
def _quad_lemma(ctx, t):
    d, k, x = t["d"], t["k"], t["x"]
    h = ctx.hphi
    c = 2 * d
    q = ctx.q
    lhs = ctx.J(-c - 2 * k, -x + k)
    main = (ctx.gpair(-x + k, c + k + x) * ctx.gpair(d, d + h)
            * ctx.chv(-k, 4) * ctx.ginv(d + k) * ctx.ginv(c)
            * ctx.g(-d - k + h) * Fraction(ctx.sign(x + d + h), q))
    delta = CycloNum.zero(1)
    if ctx.dchar(d + x + h) and ctx.dchar(d + k + h):
        delta = delta + Fraction((q - 1) ** 2, q)
    if ctx.dchar(d + k):
        delta = delta + (q - 1)
    return lhs, main, delta


@identity("quad-aux-44", desc="two Jacobi-sum ratio reductions used by the transform",
          odd=True,
          tuples=t_chars(["d", "b"], cond=lambda ctx, t:
                         (t["b"] - 2 * t["d"]) % ctx.M != 0
                         and (ctx.hphi + t["d"] - t["b"]) % ctx.M != 0
                         and (t["b"] - t["d"]) % ctx.M != 0))
def _quad_aux(ctx, t):
    d, b = t["d"], t["b"]
    c = 2 * d
    h = ctx.hphi
    lhs = (ctx.chv(-d, 4) * ctx.Jr((h - b, d), (d, d - b)),
           ctx.Jr((-b, d + h), (c, -b)))
    rhs = (ctx.Jr((c, -2 * b), (c, -b)),
           ctx.Jr((c - b, d + h), (c, d - b + h)))
    return lhs, rhs, None


def _not_half_one(ctx):
    one = ctx.F.one()
    half = ctx.F.from_rational(1, 2)
    return (ctx.F.element(i) for i in range(ctx.q)
            if ctx.F.element(i) != one and ctx.F.element(i) != half)


def _4z1z_tuples(ctx):
    out = []
    elems = list(_not_half_one(ctx))
    for a, b in product(range(ctx.M), repeat=2):
        if _quad_cond(ctx, {"a": a, "b": b}):
            for z in elems:
                out.append({"form": 1, "a": a, "b": b, "x": z})
        if (2 * a) % ctx.M and (2 * b) % ctx.M:
            for z in elems:
                out.append({"form": 2, "a": a, "b": b, "x": z})
    return out


@identity("quad-4z1z", desc="transform with argument 4z(1-z), both displays",
          odd=True, tuples=_4z1z_tuples)
def _quad4z(ctx, t):
    z = t["x"]
    one = ctx.F.one()
    arg = ctx.F.from_int(4) * z * (one - z)
    if t["form"] == 1:
        d, b = t["a"], t["b"]
        c = 2 * d
        h = ctx.hphi
        lhs = ctx.FF([d + h - b, d], [c - b], arg)
        rhs = ctx.FF([c - 2 * b, c], [c - b], z)
    else:
        a, b = t["a"], t["b"]
        h = ctx.hphi
        lhs = ctx.FF([a, b], [a + b + h], arg)
        rhs = ctx.FF([2 * a, 2 * b], [a + b + h], z)
    return lhs, rhs, None


def _km_quad_cond(ctx, t):
    a, b, M, h = t["a"], t["b"], ctx.M, ctx.hphi
    return b % M and (2 * b - a) % M and (a - b + h) % M


def _pm_one_excluded(ctx):
    one = ctx.F.one()
    return (ctx.F.element(i) for i in range(ctx.q)
            if ctx.F.element(i) != one and ctx.F.element(i) != -one)


@identity("kummer-quad", desc="Kummer quadratic transformation 4z/(1+z)^2",
          odd=True, tuples=_pairs_with_args(cond=_km_quad_cond, args=_pm_one_excluded))
def _kummer_quad(ctx, t):
    a, b, z = t["a"], t["b"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    opz = one + z
    arg = (ctx.F.from_int(4) * z) / (opz * opz)
    lhs = ctx.FF([a, b], [2 * b], arg)
    rhs = ctx.chv(2 * a, opz) * ctx.FF([a, a + h - b], [b + h], z * z)
    return lhs, rhs, None


def _eta4_tuples(ctx):
    M = ctx.M
    h = ctx.hphi
    out = []
    one = ctx.F.one()
    elems = [ctx.F.element(i) for i in range(ctx.q)
             if ctx.F.element(i).idx and ctx.F.element(i) != one
             and ctx.F.element(i) != -one]
    etas = [e for e in (M // 4, 3 * M // 4)]
    for eta in etas:
        for a, b in product(range(M), repeat=2):
            if (a + eta) % M and (b + eta) % M and (a - b + h) % M:
                for z in elems:
                    out.append({"eta": eta, "a": a, "b": b, "x": z})
    return out


@identity("kummer-quad-eta4", desc="order-4 twist of the Kummer quadratic transform",
          odd=True, mod=4, tuples=_eta4_tuples)
def _kummer_quad_eta4(ctx, t):
    e, a, b, z = t["eta"], t["a"], t["b"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    opz = one + z
    arg = (ctx.F.from_int(4) * z) / (opz * opz)
    lhs = ctx.FF([a + b, b + e], [h + 2 * b], arg)
    rhs = ctx.chv(2 * a + 2 * b, opz) * ctx.FF([a + b, a + e], [b - e], z * z)
    return lhs, rhs, None


def _as_tuples(ctx):
    M = ctx.M
    h = ctx.hphi
    one = ctx.F.one()
    half = ctx.F.from_rational(1, 2)
    elems = [ctx.F.element(i) for i in range(ctx.q)
             if ctx.F.element(i) not in (one, -one, half)]
    out = []
    for a, b in product(range(M), repeat=2):
        if (a % M and b % M and (b - 2 * a) % M
                and (3 * b - 2 * a) % M and (3 * b + h - a) % M
                and (a - 2 * b) % M):
            for x in elems:
                out.append({"a": a, "b": b, "x": x})
    return out


@identity("andrews-stanton", desc="argument symmetry 4x(1-x) vs -4x/(1-x)^2 for a cubic-type series",
          odd=True, tuples=_as_tuples)
def _andrews_stanton(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    h = ctx.hphi
    one = ctx.F.one()
    omx = one - x
    four = ctx.F.from_int(4)
    um = [a, b, a + h - b]
    lm = [2 * b, 2 * a - 2 * b]
    lhs = ctx.FF(um, lm, four * x * omx)
    rhs = ctx.chv(-2 * a, omx) * ctx.FF(um, lm, (-(four * x)) / (omx * omx))
    return lhs, rhs, None
