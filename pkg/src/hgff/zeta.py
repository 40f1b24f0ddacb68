"""Local zeta data for primitive quadratic period functions.

The degree-2 factor H(T) = T^2 - tr T + det is assembled from the period
value over F_q (tr = -P) and its lift to F_{q^2}
(det = (P(q)^2 + P(q^2))/2).  Consistency with the exponential generating
series is checked through Newton's identities, entirely in exact
arithmetic; Weil purity (roots of absolute value sqrt(q)) is reported with
an exact determinant test and a floating root check.

Exactness caveat: for a primitive character triple the trace is an
algebraic integer in Z[zeta_{q-1}] but need not be rational, and the
determinant is q times a root of unity but that root need not be +-1
(e.g. upper (chi, chi), lower chi^3 for chi of order 4 over F_5 gives
det = 5i).  ``frobenius_quadratic`` returns the exact cyclotomic pair;
``charpoly_2`` additionally demands rational integer coefficients and
raises NotInteger when the triple does not supply them.
"""

import math

from .chars import lift_norm
from .errors import DegenerateLambda, NotInteger, NotPrimitive
from .fields import extension
from .hyper import HGSpec, is_primitive, period_direct


class ZetaFactor:
    """Integer quadratic T^2 - tr T + det attached to (spec, lam, q)."""

    __slots__ = ("q", "trace", "det")

    def __init__(self, q, trace, det):
        self.q = q
        self.trace = trace
        self.det = det

    @property
    def degree(self):
        return 2

    def z_coeffs(self):
        """Coefficients (1, -tr, det) of the local zeta polynomial in T."""
        return (1, -self.trace, self.det)

    def h_coeffs(self):
        """Coefficients (det, -tr, 1) of H(T), lowest degree first."""
        return (self.det, -self.trace, 1)

    def roots(self):
        tr, det = self.trace, self.det
        disc = complex(tr * tr - 4 * det)
        s = disc ** 0.5
        return ((tr + s) / 2, (tr - s) / 2)

    def power_sums(self, rmax):
        """s_r = alpha^r + beta^r for r = 1..rmax via Newton's identities."""
        s = [2, self.trace]
        for _ in range(2, rmax + 1):
            s.append(self.trace * s[-1] - self.det * s[-2])
        return s[1:]

    def __repr__(self):
        return f"ZetaFactor(q={self.q}, H(T)=T^2 - ({self.trace})T + ({self.det}))"


def lifted_period(spec, lam, r):
    """Period function over F_{q^r}: characters norm-lifted, lam embedded."""
    if r == 1:
        return period_direct(spec, lam)
    ext = extension(spec.field, r)
    upper = [lift_norm(c, r) for c in spec.upper]
    lower = [lift_norm(c, r) for c in spec.lower]
    top_spec = HGSpec(upper, lower, ext.top)
    return period_direct(top_spec, ext.embed(spec.field.element(lam)))


def frobenius_quadratic(spec, lam):
    """Exact cyclotomic (trace, det) of the quadratic Frobenius factor.

    trace = -P(q); det = (P(q)^2 + P(q^2))/2.  No rationality is forced;
    see ``charpoly_2`` for the integer-coefficient contract.
    """
    F = spec.field
    lam = F.element(lam)
    if not is_primitive(spec) or spec.n != 1:
        raise NotPrimitive("need a primitive spec with one lower slot")
    if lam.idx == 0 or lam == F.one():
        raise DegenerateLambda("lambda must avoid 0 and 1")
    a1 = period_direct(spec, lam)
    a2 = lifted_period(spec, lam, 2)
    det = (a1 * a1 + a2) / 2
    return -a1, det


def charpoly_2(spec, lam):
    """H(T) with both coefficients extracted as rational integers.

    Raises NotInteger when the trace or determinant is a non-rational
    cyclotomic integer (which happens for character triples not fixed by
    conjugation); use ``frobenius_quadratic`` for the exact values then.
    """
    tr, det = frobenius_quadratic(spec, lam)
    return ZetaFactor(spec.field.q, tr.as_rational_integer(),
                      det.as_rational_integer())


def newton_series_check(spec, lam, rmax=3):
    """Exact check that P over F_{q^r} equals -(alpha^r + beta^r) for the
    roots of the quadratic factor, r = 1..rmax.  Runs inside the
    cyclotomic ring; no floating point and no rationality assumption."""
    tr, det = frobenius_quadratic(spec, lam)
    s_prev, s_cur = 2, tr
    for r in range(1, rmax + 1):
        if r > 1:
            s_prev, s_cur = s_cur, tr * s_cur - det * s_prev
        if lifted_period(spec, lam, r) != -s_cur:
            return False
    return True


def exact_purity(spec, lam):
    """Exact Weil-purity facts for the quadratic factor.

    What holds for every primitive spec: the trace and determinant are
    algebraic integers and det * conj(det) = q^2 exactly (so every complex
    embedding of det has absolute value q).  The determinant need not be
    +-q, nor even q times a root of unity: over F_5 it can be 3+4i.
    """
    q = spec.field.q
    tr, det = frobenius_quadratic(spec, lam)
    return {
        "trace_integral": tr.den == 1,
        "det_integral": det.den == 1,
        "det_modulus_exact": (det * det.conj()) == q * q,
        "det_is_plus_minus_q": det == q or det == -q,
        "trace_rational": tr.is_rational(),
        "det_rational": det.is_rational(),
        "trace": tr,
        "det": det,
    }


def weil_purity_check(factor, expect_pure=True):
    """Purity report for an integer degree-2 factor.

    Exact side: det = +-q and tr^2 <= 4q.  Floating side: both complex
    roots within 1e-9 of absolute value sqrt(q).  A factor failing the
    exact conditions is reported impure; whether that is a failure is the
    caller's call (primitive data must be pure, degenerate data need not).
    """
    q = factor.q
    det_ok = factor.det in (q, -q)
    tr_ok = factor.trace * factor.trace <= 4 * q
    sq = math.sqrt(q)
    roots = factor.roots()
    dev = max(abs(abs(r) - sq) for r in roots)
    pure = det_ok and tr_ok and dev < 1e-9
    return {
        "pure": pure,
        "status": "pure" if pure else "impure",
        "pass": pure if expect_pure else True,
        "det_ok": det_ok,
        "trace_bound_ok": tr_ok,
        "root_abs_deviation": dev,
        "roots": [[r.real, r.imag] for r in roots],
    }


def root_purity_deviation(tr, det, q, precision=30):
    """Max deviation of |root| from sqrt(q) for T^2 - tr T + det, where the
    coefficients may be exact cyclotomic numbers (diagnostic channel)."""
    import mpmath

    with mpmath.workdps(precision):
        trc = mpmath.mpc(tr.to_complex(precision) if hasattr(tr, "to_complex")
                         else complex(tr))
        detc = mpmath.mpc(det.to_complex(precision) if hasattr(det, "to_complex")
                          else complex(det))
        disc = mpmath.sqrt(trc * trc - 4 * detc)
        sq = mpmath.sqrt(q)
        dev = max(abs(abs((trc + disc) / 2) - sq), abs(abs((trc - disc) / 2) - sq))
        return float(dev)
