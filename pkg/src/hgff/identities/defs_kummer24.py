"""Linear-fractional relations between quadratic period functions: the
finite-field counterparts of the classical 24-solution symmetry group,
in both raw-period and normalized form.  All six slots hold for every
character triple and every argument; the delta bookkeeping at 0 and 1 is
part of the statements."""

from .engine import identity
from .defs_basic import t_chars

ALL3 = t_chars(["a", "b", "c"], arg="all")


def _inv_or_zero(ctx, x):
    # 1/x when it exists; the caller only uses it under a vanishing prefactor
    return ctx.F.one() / x if x.idx else None


@identity("kummer24-ind-1", desc="independent-solution relation at the same argument",
          tuples=ALL3, has_delta=True)
def _k1(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    main = ctx.sign(a + b + c) * ctx.chv(-c, x) * ctx.P([b - c, a - c], [-c], x)
    delta = ctx.J(b, c - b) if ctx.delta(x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-ind-2", desc="independent-solution relation at inverse argument",
          tuples=ALL3, has_delta=True)
def _k2(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    xinv = _inv_or_zero(ctx, x)
    if xinv is None:
        main = ctx.zero()  # prefactor conj(A)(0) vanishes
    else:
        main = (ctx.sign(a + b + c) * ctx.chv(-a, x)
                * ctx.P([a, a - c], [a - b], xinv))
    delta = ctx.J(b, c - b) if ctx.delta(x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-ind-3", desc="reflection to the complementary argument",
          tuples=ALL3)
def _k3(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    main = ctx.sign(b) * ctx.P([a, b], [a + b - c], ctx.F.one() - x)
    return lhs, main, None


def _ratio_arg(ctx, x):
    # x / (x - 1), defined away from x = 1
    den = x - ctx.F.one()
    return x / den if den.idx else None


@identity("kummer24-pfaff-euler-1", desc="first-slot Pfaff transformation",
          tuples=ALL3, has_delta=True)
def _k4(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    r = _ratio_arg(ctx, x)
    if r is None:
        main = ctx.zero()
    else:
        main = ctx.chv(-a, ctx.F.one() - x) * ctx.P([a, c - b], [c], r)
    delta = ctx.J(b, c - a - b) if ctx.delta(ctx.F.one() - x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-pfaff-euler-2", desc="second-slot Pfaff transformation",
          tuples=ALL3, has_delta=True)
def _k5(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    r = _ratio_arg(ctx, x)
    if r is None:
        main = ctx.zero()
    else:
        main = ctx.chv(-b, ctx.F.one() - x) * ctx.P([c - a, b], [c], r)
    delta = ctx.J(b, c - a - b) if ctx.delta(ctx.F.one() - x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-pfaff-euler-3", desc="Euler transformation",
          tuples=ALL3, has_delta=True)
def _k6(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.P([a, b], [c], x)
    main = (ctx.chv(c - a - b, ctx.F.one() - x)
            * ctx.P([c - a, c - b], [c], x))
    delta = ctx.J(b, c - a - b) if ctx.delta(ctx.F.one() - x) else ctx.zero()
    return lhs, main, delta


# -- normalized versions -------------------------------------------------------

@identity("kummer24-normalized-1", desc="normalized independent-solution relation",
          tuples=ALL3, has_delta=True)
def _n1(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    main = (ctx.sign(a + b + c) * ctx.chv(-c, x)
            * ctx.Jr((a - c, -a), (b, c - b))
            * ctx.FF([b - c, a - c], [-c], x))
    delta = ctx.one() if ctx.delta(x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-normalized-2", desc="normalized inverse-argument relation",
          tuples=ALL3, has_delta=True)
def _n2(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    xinv = _inv_or_zero(ctx, x)
    if xinv is None:
        main = ctx.zero()
    else:
        main = (ctx.sign(a + b + c) * ctx.chv(-a, x)
                * ctx.Jr((a - c, c - b), (b, c - b))
                * ctx.FF([a, a - c], [a - b], xinv))
    delta = ctx.one() if ctx.delta(x) else ctx.zero()
    return lhs, main, delta


@identity("kummer24-normalized-3", desc="normalized reflection relation",
          tuples=ALL3)
def _n3(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    main = (ctx.Jr((b, c - a - b), (b, c - b))
            * ctx.FF([a, b], [a + b - c], ctx.F.one() - x))
    return lhs, main, None


def _norm_pfaff_delta(ctx, t):
    return ctx.Jr((t["b"], t["c"] - t["a"] - t["b"]), (t["b"], t["c"] - t["b"]))


@identity("kummer24-normalized-4", desc="normalized first-slot Pfaff",
          tuples=ALL3, has_delta=True)
def _n4(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    r = _ratio_arg(ctx, x)
    main = (ctx.zero() if r is None
            else ctx.chv(-a, ctx.F.one() - x) * ctx.FF([a, c - b], [c], r))
    delta = (_norm_pfaff_delta(ctx, t) if ctx.delta(ctx.F.one() - x)
             else ctx.zero())
    return lhs, main, delta


@identity("kummer24-normalized-5", desc="normalized second-slot Pfaff",
          tuples=ALL3, has_delta=True)
def _n5(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    r = _ratio_arg(ctx, x)
    main = (ctx.zero() if r is None
            else ctx.chv(-b, ctx.F.one() - x) * ctx.FF([c - a, b], [c], r))
    delta = (_norm_pfaff_delta(ctx, t) if ctx.delta(ctx.F.one() - x)
             else ctx.zero())
    return lhs, main, delta


@identity("kummer24-normalized-6", desc="normalized Euler transformation",
          tuples=ALL3, has_delta=True)
def _n6(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = ctx.FF([a, b], [c], x)
    main = (ctx.chv(c - a - b, ctx.F.one() - x)
            * ctx.FF([c - a, c - b], [c], x))
    delta = (_norm_pfaff_delta(ctx, t) if ctx.delta(ctx.F.one() - x)
             else ctx.zero())
    return lhs, main, delta
