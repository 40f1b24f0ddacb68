"""Numerically observed identities.  These are swept exactly like theorems
but report "observed"/"refuted" and never gate anything; a refutation
would be interesting, not fatal."""

from itertools import product

from .engine import identity
from .defs_cubic import _two_sqrt_sum


@identity("cohen-4F3", desc="order-12 four-slot value at 1 via cubes of Jacobi sums",
          status="conjecture", mod=12, prime_only=True,
          tuples=lambda ctx: [{"e": u * (ctx.M // 12)} for u in (1, 5, 7, 11)])
def _cohen(ctx, t):
    e = t["e"]
    lhs = ctx.FF([4 * e, 8 * e, 3 * e, 9 * e], [0, 0, 0], 1)
    rhs = (-(ctx.J(4 * e, 4 * e) ** 3) - ctx.J(8 * e, 8 * e) ** 3
           + ctx.sign(e) * ctx.q)
    return lhs, rhs, None


def _nonzero_ok(*elems):
    return all(v.idx for v in elems)


def _not01(ctx, num, den):
    """num/den if defined and not 0 or 1, else None."""
    if den.idx == 0 or num.idx == 0:
        return None
    v = num / den
    return v if v != ctx.F.one() else None


def _tuyang466_tuples(ctx):
    F = ctx.F
    alphas = ctx.nth_roots(F.from_int(-3), 3)
    betas = ctx.sqrt_list(F.from_int(-2))
    if not alphas or not alphas[0].idx:
        return []
    step = ctx.M // 24
    out = []
    for al, be, u in product(alphas, betas, (1, 5, 7, 11, 13, 17, 19, 23)):
        for zi in range(ctx.q):
            out.append({"alpha": al, "beta": be, "e": u * step, "z": F.element(zi)})
    return out


def _tuyang_fg(ctx, al, be, z):
    F = ctx.F
    one = F.one()
    three = F.from_int(3)
    f = _not01(ctx,
               F.from_int(12) * al * z * (one - z) ** 2 * (one - F.from_int(9) * z * z),
               (one + al * z) ** 6)
    gden_poly = one + (F.from_int(4) + F.from_int(2) * be) * z \
        - (one + F.from_int(2) * be) * z * z
    g = _not01(ctx,
               F.from_int(-4) * (one + be) ** 4 * z
               * (one + (F.from_int(4) * be - F.from_int(7)) * z * z / three) ** 4,
               (one + z) * (one - three * z) * gden_poly ** 4)
    return f, g, gden_poly


@identity("tuyang-466", desc="order-24 transform between two Shimura-curve families",
          status="conjecture", mod=24, prime_only=True, tuples=_tuyang466_tuples)
def _tuyang466(ctx, t):
    F = ctx.F
    one = F.one()
    al, be, e, z = t["alpha"], t["beta"], t["e"], t["z"]
    f, g, gden = _tuyang_fg(ctx, al, be, z)
    if f is None or g is None:
        return ctx.zero(), ctx.zero(), None  # outside the stated domain
    lhs = (ctx.chv(3 * e, (one + z) * (one - F.from_int(3) * z))
           * ctx.chv(-6 * e, one + al * z)
           * ctx.FF([5 * e, 9 * e], [-6 * e], f))
    rhs = ctx.chv(ctx.hphi, gden) * ctx.FF([3 * e, 9 * e], [-6 * e], g)
    return lhs, rhs, None


@identity("tuyang-466b", desc="companion order-24 transform for the second form",
          status="conjecture", mod=24, prime_only=True, tuples=_tuyang466_tuples)
def _tuyang466b(ctx, t):
    F = ctx.F
    one = F.one()
    three = F.from_int(3)
    al, be, e, z = t["alpha"], t["beta"], t["e"], t["z"]
    f, g, gden = _tuyang_fg(ctx, al, be, z)
    if f is None or g is None:
        return ctx.zero(), ctx.zero(), None
    lhs = (ctx.chv(6 * e, (one - z) * (one + three * z) * (one + al * z))
           * ctx.chv(-9 * e, (one + z) * (one - three * z))
           * ctx.FF([11 * e, -9 * e], [-6 * e], f))
    rhs = ctx.chv(ctx.hphi, gden) * ctx.FF([9 * e, -9 * e], [6 * e], g)
    return lhs, rhs, None


def _eta_tuples(order, include_zero=True):
    def gen(ctx):
        from math import gcd
        step = ctx.M // order
        out = []
        for u in range(1, order):
            if gcd(u, order) == 1:
                for zi in range(0 if include_zero else 1, ctx.q):
                    out.append({"e": u * step, "z": ctx.F.element(zi)})
        return out
    return gen


@identity("tuyang-ord20", desc="order-20 quintic-argument transform",
          status="conjecture", mod=20, tuples=_eta_tuples(20, include_zero=False))
def _tuyang20(ctx, t):
    F = ctx.F
    one = F.one()
    e, z = t["e"], t["z"]
    if z.idx == 0:
        return ctx.zero(), ctx.zero(), None
    p1 = one - z - z * z
    p2 = one + F.from_int(4) * z - z * z
    f = _not01(ctx, F.from_int(64) * z * p1 ** 5, (one - z * z) * p2 ** 5)
    if f is None:
        return ctx.zero(), ctx.zero(), None
    lhs = ctx.FF([e, 5 * e], [-4 * e], f)
    rhs = (ctx.chv(e, one - z * z) * ctx.chv(5 * e, p2)
           * ctx.FF([6 * e, 8 * e], [-2 * e], z * z))
    return lhs, rhs, None


def _ord6_tuples(ctx):
    out = []
    e = ctx.M // 6
    F = ctx.F
    one, three = F.one(), F.from_int(3)
    excl = {one, -one, three, -three}
    for ee in (e, 5 * e):
        for a in range(ctx.M):
            if (6 * a) % ctx.M:
                for zi in range(ctx.q):
                    z = F.element(zi)
                    if z not in excl:
                        out.append({"e": ee, "a": a, "z": z})
    return out


@identity("tuyang-ord6", desc="order-6 cubic-argument transform with a free character",
          status="conjecture", mod=6, tuples=_ord6_tuples)
def _tuyang6(ctx, t):
    F = ctx.F
    one, three = F.one(), F.from_int(3)
    e, a, z = t["e"], t["a"], t["z"]
    h = ctx.hphi
    lhs = (ctx.chv(a + e, one + z) * ctx.chv(3 * a + h, one - z / three)
           * ctx.FF([2 * a + 2 * e, a + 2 * e], [3 * a], z * z))
    arg = (F.from_int(16) * z ** 3) / ((one + z) * (three - z) ** 3)
    rhs = ctx.FF([a + e, a + h], [2 * a], arg)
    return lhs, rhs, None


def _ord12_tuples(ctx):
    out = []
    step = ctx.M // 12
    for u in (1, 5, 7, 11):
        for a in range(ctx.M):
            if (12 * a) % ctx.M:
                for zi in range(ctx.q):
                    out.append({"e": u * step, "a": a, "z": ctx.F.element(zi)})
    return out


@identity("tuyang-ord12", desc="order-12 mixed cubic/quartic-argument transform",
          status="conjecture", mod=12, tuples=_ord12_tuples)
def _tuyang12(ctx, t):
    F = ctx.F
    one = F.one()
    e, a, z = t["e"], t["a"], t["z"]
    nine = F.from_int(9)
    t1 = _not01(ctx, F.from_int(-27) * z * z * (one - z), one - nine * z)
    t2 = _not01(ctx, F.from_int(-64) * z ** 3, (one - z) ** 3 * (one - nine * z))
    if t1 is None or t2 is None:
        return ctx.zero(), ctx.zero(), None
    lhs = (ctx.chv(9 * a + 9 * e, one - z)
           * ctx.FF([4 * a + 4 * e, 2 * a + 4 * e], [6 * a], t1))
    rhs = (ctx.chv(a + e, one - nine * z)
           * ctx.FF([3 * a + 3 * e, a + 3 * e], [4 * a], t2))
    return lhs, rhs, None


def _d233_tuples(ctx):
    step = ctx.M // 12
    F = ctx.F
    one, three = F.one(), F.from_int(3)
    out = []
    for u in (1, 5, 7, 11):
        for zi in range(ctx.q):
            z = F.element(zi)
            if z.idx and z != one and z != -one and (z * z + three).idx:
                out.append({"e": u * step, "z": z})
    return out


@identity("dihedral-233", desc="order-12 algebraic value for the (2,3,3) family",
          status="conjecture", mod=12, tuples=_d233_tuples)
def _d233(ctx, t):
    F = ctx.F
    one = F.one()
    e, z = t["e"], t["z"]
    h = ctx.hphi
    arg = (F.from_int(2) * z * (F.from_int(3) + z * z)) / ((one + z) ** 3)
    lhs = ctx.FF([-e, 3 * e], [h], arg)
    inner = one + z * z / F.from_int(3)
    two_opz = F.from_int(2) * (one + z)
    rhs = _two_sqrt_sum(ctx, inner, lambda w: ctx.chv(3 * e, (one + w) / two_opz))
    return lhs, rhs, None


def _vidunas_tuples(ctx):
    step = ctx.M // 12
    out = []
    for u in (1, 5, 7, 11):
        for ui in range(ctx.q):
            out.append({"e": u * step, "u": ctx.F.element(ui)})
    return out


@identity("vidunas", desc="order-12 constant-value identity on a degree-12 argument",
          status="conjecture", mod=12, tuples=_vidunas_tuples)
def _vidunas(ctx, t):
    F = ctx.F
    one = F.one()
    e, u = t["e"], t["u"]
    den = F.from_int(8) * u ** 3 - one
    if den.idx == 0:
        return ctx.zero(), ctx.zero(), None
    targ = _not01(ctx, (F.from_int(4) * u * (u ** 3 + one)) ** 3, den ** 3)
    if targ is None:
        return ctx.zero(), ctx.zero(), None
    lhs = ctx.FF([-e, 3 * e], [-4 * e], targ)
    rhs = ctx.chv(-3 * e, one - F.from_int(8) * u ** 3) * 2
    return lhs, rhs, None
