"""Evaluation formulas and character-sum identities with no transform step:
Gauss/Kummer evaluations, the Pfaff-Saalschutz family, the four-Gauss-sum
convolution, and the imprimitive/commutation relations."""

from itertools import product

from ..cyclo import CycloNum
from .engine import identity


def _ms(ctx):
    return range(ctx.M)


def _units(ctx):
    return (ctx.F.exp(k) for k in range(ctx.M))


def _elems(ctx):
    return (ctx.F.element(i) for i in range(ctx.q))


def t_chars(names, arg=None, cond=None):
    """Tuple enumerator over independent character exponents, optionally
    with an argument sweep ('all' elements, 'units', or a callable)."""

    def gen(ctx):
        out = []
        for ms in product(_ms(ctx), repeat=len(names)):
            tup = dict(zip(names, ms))
            if cond is not None and not cond(ctx, tup):
                continue
            if arg is None:
                out.append(tup)
            else:
                vals = {"all": _elems, "units": _units}.get(arg, arg)(ctx)
                for x in vals:
                    out.append({**tup, "x": x})
        return out

    return gen


# -- single evaluations ------------------------------------------------------

@identity("gauss-eval", desc="evaluation of the 2-slot period at 1",
          tuples=t_chars(["a", "b", "c"]))
def _gauss_eval(ctx, t):
    a, b, c = t["a"], t["b"], t["c"]
    lhs = ctx.P([a, b], [c], 1)
    return lhs, ctx.J(b, -a - b + c), None


@identity("kummer-eval-P", desc="period evaluation at -1 via two Jacobi sums",
          odd=True, tuples=t_chars(["b", "d"]))
def _kummer_eval_p(ctx, t):
    b, d = t["b"], t["d"]
    c = 2 * d
    lhs = ctx.P([b, c], [c - b], -1)
    h = ctx.hphi
    return lhs, ctx.J(d, -b) + ctx.J(d + h, -b), None


@identity("kummer-eval-F", desc="normalized evaluation at -1",
          odd=True, tuples=t_chars(["b", "d"]))
def _kummer_eval_f(ctx, t):
    b, d = t["b"], t["d"]
    c = 2 * d
    h = ctx.hphi
    lhs = ctx.FF([b, c], [c - b], -1)
    rhs = (ctx.J(d, -b) + ctx.J(-b, d + h)) * ctx.Jinv(c, -b)
    return lhs, rhs, None


@identity("pfaff-saalschutz-P", desc="balanced 3-slot period evaluation at 1",
          tuples=t_chars(["a", "b", "c", "d"]))
def _pfs_p(ctx, t):
    a, b, c, d = t["a"], t["b"], t["c"], t["d"]
    lhs = ctx.P([a, b, c], [d, a + b + c - d], 1)
    rhs = ctx.J(c, a - d) * ctx.J(b, c - d) * ctx.sign(b)
    delta = CycloNum.from_rational(-ctx.sign(b + d)) * ctx.J(d - b, -a)
    return lhs, rhs + delta, None


@identity("pfaff-saalschutz-J", desc="balanced evaluation written in Jacobi sums",
          tuples=t_chars(["a", "b", "c", "d"]))
def _pfs_j(ctx, t):
    from fractions import Fraction
    a, b, c, d = t["a"], t["b"], t["c"], t["d"]
    M = ctx.M
    total = CycloNum.zero(1)
    for x in range(M):
        term = ctx.J(a + x, -x) * ctx.J(b + x, -d - x) * ctx.J(c + x, d - a - b - c - x)
        if ctx.sign(c + x) < 0:
            term = -term
        total = total + term
    lhs = total * Fraction(1, ctx.q - 1)
    rhs = ctx.J(c, a - d) * ctx.J(b, c - d)
    rhs = rhs - ctx.J(d - b, -a) * ctx.sign(d)
    return lhs, rhs, None


@identity("helversen-pasotto", desc="four-Gauss-sum convolution identity",
          tuples=t_chars(["a", "b", "c", "d"]))
def _hp(ctx, t):
    from fractions import Fraction
    a, b, c, d = t["a"], t["b"], t["c"], t["d"]
    total = CycloNum.zero(1)
    for x in range(ctx.M):
        total = total + ctx.gpair(a + x, b + x) * ctx.gpair(c - x, d - x)
    lhs = total * Fraction(1, ctx.q - 1)
    main = (ctx.gpair(a + c, a + d) * ctx.gpair(b + c, b + d)
            * ctx.ginv(a + b + c + d))
    s = a + b + c + d
    delta = None
    if ctx.dchar(s):
        delta = CycloNum.from_rational(ctx.q * (ctx.q - 1) * ctx.sign(a + b))
    return lhs, main, delta


# -- quadratic Pfaff-Saalschutz ------------------------------------------------

def _qps_raw(ctx, a, b, c):
    """sum over chi of g(A chi^2) g(B chi) g(C conj chi) g(phi conj(ABC chi))
    g(conj chi) conj(chi)(-4)."""
    h = ctx.hphi
    m4 = ctx.F.from_int(-4)
    d4 = ctx.F.dlog(m4) if m4.idx else None
    total = CycloNum.zero(1)
    for x in range(ctx.M):
        term = (ctx.gpair(a + 2 * x, b + x) * ctx.gpair(c - x, h - a - b - c - x)
                * ctx.g(-x))
        if d4 is not None:
            term = term * CycloNum.zeta_pow(ctx.M, (-x * d4) % ctx.M)
        total = total + term
    return total


@identity("quad-pfaff-saalschutz-1", desc="quadratic balanced evaluation, generic case",
          odd=True,
          tuples=t_chars(["a", "b", "c"], cond=lambda ctx, t:
                         not (t["a"] % ctx.M == 0 and t["b"] % ctx.M == 0 and t["c"] % ctx.M == 0)
                         and (t["c"] + t["a"] - ctx.hphi) % ctx.M != 0
                         and (t["c"] + t["b"] - ctx.hphi) % ctx.M != 0))
def _qps1(ctx, t):
    from fractions import Fraction
    a, b, c = t["a"], t["b"], t["c"]
    h = ctx.hphi
    raw = _qps_raw(ctx, a, b, c)
    pref = (ctx.J(h + a + c, -a - b - 2 * c) * ctx.chv(c, 4)
            * Fraction(ctx.sign(a + b), ctx.q * (ctx.q - 1)) * ctx.ginv(h))
    lhs = pref * raw
    rhs = ctx.J(-a - b - 2 * c, a + 2 * c) * ctx.J(a, 2 * b + 2 * c)
    rhs = rhs - ctx.J(-a - b - 2 * c, h + a + c) * ctx.chv(a + 2 * c, 2)
    return lhs, rhs, None


@identity("quad-pfaff-saalschutz-2", desc="quadratic balanced evaluation, CB = phi",
          odd=True, tuples=t_chars(["a", "b"]))
def _qps2(ctx, t):
    from fractions import Fraction
    a, b = t["a"], t["b"]
    h = ctx.hphi
    c = h - b
    raw = _qps_raw(ctx, a, b, c)
    lhs = raw * Fraction(1, ctx.q - 1) * ctx.ginv(h)
    q = ctx.q
    rhs = (ctx.chv(b, 4) * ctx.J(b, b - a) * (q * ctx.sign(a + b))
           - ctx.chv(a, 2) * (q * ctx.sign(a + b)))
    delta = None
    if ctx.dchar(a):
        delta = ctx.J(b, h) * (-(q - 1) * ctx.sign(b))
    return lhs, rhs, delta


@identity("quad-pfaff-saalschutz-3", desc="quadratic balanced evaluation, CA = phi",
          odd=True, tuples=t_chars(["a", "b"]))
def _qps3(ctx, t):
    from fractions import Fraction
    a, b = t["a"], t["b"]
    h = ctx.hphi
    c = h - a
    raw = _qps_raw(ctx, a, b, c)
    lhs = raw * Fraction(1, ctx.q - 1) * ctx.ginv(h)
    q = ctx.q
    rhs = (-(ctx.chv(b, 4) * ctx.J(h, b) * ctx.J(a - 2 * b, h + b - a))
           - ctx.chv(a, 2) * (q * ctx.sign(a + b)))
    delta = CycloNum.zero(1)
    if ctx.dchar(a):
        delta = delta + q * (q - 1) * ctx.sign(b)
    if ctx.dchar(h + b):
        delta = delta - (q - 1) * ctx.sign(a + b)
    return lhs, rhs, delta


# -- imprimitive evaluations ---------------------------------------------------

def _nz(ctx):
    return (ctx.F.exp(k) for k in range(ctx.M))


@identity("imprimitive-P-1", desc="period with trivial first upper slot",
          tuples=t_chars(["b", "c"], arg="units"))
def _impP1(ctx, t):
    b, c, x = t["b"], t["c"], t["x"]
    lhs = ctx.P([0, b], [c], x)
    rhs = ctx.J(b, c - b) - ctx.chv(-c, x) * ctx.chv(c - b, x - ctx.F.one())
    return lhs, rhs, None


@identity("imprimitive-P-2", desc="period with equal second upper and lower slots",
          tuples=t_chars(["a", "b"], arg="units"))
def _impP2(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    lhs = ctx.P([a, b], [b], x)
    rhs = ctx.chv(-b, x) * ctx.J(b, -a) - ctx.chv(-a, ctx.F.one() - x)
    return lhs, rhs, None


@identity("imprimitive-P-3", desc="period with equal first upper and lower slots",
          tuples=t_chars(["a", "b"], arg="units"))
def _impP3(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    lhs = ctx.P([a, b], [a], x)
    one = ctx.F.one()
    rhs = ctx.chv(-b, x - one) * ctx.J(b, -a) - ctx.sign(b) * ctx.chv(-a, x)
    delta = None
    if ctx.delta(one - x) and ctx.dchar(b):
        delta = CycloNum.from_rational(ctx.q - 1)
    return lhs, rhs, delta


@identity("imprimitive-P-4", desc="period with trivial second upper slot",
          tuples=t_chars(["a", "c"], arg="units"))
def _impP4(ctx, t):
    a, c, x = t["a"], t["c"], t["x"]
    one = ctx.F.one()
    lhs = ctx.P([a, 0], [c], x)
    rhs = (ctx.chv(-c, -x) * ctx.chv(c - a, one - x) * ctx.J(c, -a)
           - 1)
    delta = None
    if ctx.delta(one - x) and ctx.dchar(c - a):
        delta = CycloNum.from_rational(ctx.q - 1)
    return lhs, rhs, delta


def _nontrivial(names):
    def cond(ctx, t):
        return all(t[n] % ctx.M for n in names)
    return cond


@identity("imprimitive-F-1", desc="normalized function with trivial first upper slot",
          tuples=t_chars(["b", "c"], arg="units", cond=_nontrivial(["b", "c"])))
def _impF1(ctx, t):
    b, c, x = t["b"], t["c"], t["x"]
    lhs = ctx.FF([0, b], [c], x)
    rhs = 1 - (ctx.chv(-c, x) * ctx.chv(c - b, x - ctx.F.one()) * ctx.Jinv(b, c - b))
    return lhs, rhs, None


@identity("imprimitive-F-2", desc="normalized function with B repeated below",
          tuples=t_chars(["a", "b"], arg="units", cond=_nontrivial(["a", "b"])))
def _impF2(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    lhs = ctx.FF([a, b], [b], x)
    rhs = ctx.chv(-a, ctx.F.one() - x) - ctx.chv(-b, x) * ctx.J(b, -a)
    return lhs, rhs, None


@identity("imprimitive-F-3", desc="normalized function with A repeated below",
          tuples=t_chars(["a", "b"], arg="units", cond=_nontrivial(["a", "b"])))
def _impF3(ctx, t):
    a, b, x = t["a"], t["b"], t["x"]
    lhs = ctx.FF([a, b], [a], x)
    rhs = ctx.chv(-b, ctx.F.one() - x) - ctx.chv(-a, x) * ctx.Jinv(-a, b)
    return lhs, rhs, None


@identity("imprimitive-F-4", desc="normalized function with trivial second upper slot",
          tuples=t_chars(["a", "c"], arg="units", cond=_nontrivial(["a", "c"])))
def _impF4(ctx, t):
    a, c, x = t["a"], t["c"], t["x"]
    one = ctx.F.one()
    lhs = ctx.FF([a, 0], [c], x)
    rhs = 1 - ctx.chv(-c, -x) * ctx.chv(c - a, one - x) * ctx.J(c, -a)
    delta = None
    if ctx.delta(one - x) and ctx.dchar(c - a):
        delta = CycloNum.from_rational(-(ctx.q - 1))
    return lhs, rhs, delta


# -- commutation / conjugation -------------------------------------------------

def _cc_cond(ctx, t):
    a, b, c = t["a"], t["b"], t["c"]
    M = ctx.M
    return a % M and b % M and (a - c) % M and (b - c) % M


@identity("commute-conjugate-1", desc="upper-slot symmetry of the period pair",
          tuples=t_chars(["a", "b", "c"], arg="all", cond=_cc_cond))
def _cc1(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    lhs = (ctx.J(a, c - a) * ctx.P([a, b], [c], x),
           ctx.FF([a, b], [c], x))
    rhs = (ctx.J(b, c - b) * ctx.P([b, a], [c], x),
           ctx.FF([b, a], [c], x))
    return lhs, rhs, None


@identity("commute-conjugate-2", desc="conjugation symmetry of the period pair",
          tuples=t_chars(["a", "b", "c"], arg=lambda ctx: (
              ctx.F.exp(k) for k in range(ctx.M)
              if ctx.F.exp(k) != ctx.F.one()), cond=_cc_cond))
def _cc2(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    one = ctx.F.one()
    pref = ctx.chv(-c, x) * ctx.chv(c - a - b, x - one)
    lhs = (ctx.P([a, b], [c], x), ctx.FF([a, b], [c], x))
    rhs = (pref * ctx.Jr((b, c - b), (a, c - a)) * ctx.P([-a, -b], [-c], x),
           pref * ctx.Jr((-b, b - c), (a, c - a)) * ctx.FF([-a, -b], [-c], x))
    return lhs, rhs, None


@identity("continuation-2x", desc="doubled period as a two-term 1/x continuation",
          tuples=t_chars(["a", "b", "c"], arg="units", cond=_cc_cond))
def _cont2x(ctx, t):
    a, b, c, x = t["a"], t["b"], t["c"], t["x"]
    xinv = ctx.F.one() / x
    s = ctx.sign(a + b + c)
    lhs = (ctx.P([a, b], [c], x) * 2, ctx.FF([a, b], [c], x) * 2)
    p_rhs = (ctx.chv(-a, x) * ctx.P([a, a - c], [a - b], xinv) * s
             + ctx.chv(-b, x) * ctx.Jr((b, c - b), (a, c - a))
             * ctx.P([b, b - c], [b - a], xinv) * s)
    f_rhs = (ctx.chv(-a, x) * ctx.Jr((a - c, c - b), (b, c - b))
             * ctx.FF([a, a - c], [a - b], xinv) * s
             + ctx.chv(-b, x) * ctx.Jr((c - a, b - c), (a, c - a))
             * ctx.FF([b, b - c], [b - a], xinv) * s)
    return lhs, (p_rhs, f_rhs), None
