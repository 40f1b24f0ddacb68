"""Acceptance suite: one section per exit criterion, exact tolerances.

Every check here is exhaustive-verification based at desk scale and prints
one PASS/FAIL line per criterion (run with -s to watch them live).  Two
sub-clauses are expected failures of the stated text, not of the code, and
are marked xfail with hand-checkable counterexample data:

* criterion 6's literal demand that the quadratic Frobenius factor have a
  rational integer trace and determinant +-q for *every* primitive spec
  (counterexamples: upper (chi,chi) lower eps over F_5 at lambda = g^3 has
  trace 2i; upper (chi,chi) lower chi^3 at lambda = g^1 has det = 5i, chi
  of order 4); the provable exact content (algebraic-integer trace,
  |det| = q exactly, root purity) is asserted for the full sweep;
* criterion 7's expectation that the order-24 two-family transforms are
  "observed": the stated formulas are refuted, and their classical
  counterparts already fail numerically at 30 digits for every root
  choice, so the source statement itself is defective.
"""

import itertools
import math
from fractions import Fraction

import pytest

from hgff.chars import MultChar, all_chars
from hgff.cyclo import CycloNum
from hgff.errors import BudgetExceeded
from hgff.fields import construct_field
from hgff.hyper import is_primitive, period_direct, period_spectral, spec_from_exponents
from hgff.identities import REGISTRY, delta_audit, verify
from hgff.identities.engine import context_for, fields_from_qs
from hgff.sums import (
    cache_for,
    hasse_davenport_lift_check,
    hasse_davenport_product_check,
    jacobi_from_gauss,
    jacobi_sum,
)
from hgff.varieties import HGVariety, count_affine_brute, count_via_periods, legendre_count
from hgff.zeta import exact_purity, frobenius_quadratic, lifted_period, root_purity_deviation

FOUNDATION_QS = (3, 4, 5, 7, 9, 11, 13, 25, 27, 49)


def report(criterion, ok, detail=""):
    line = f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


# -- criterion 1: foundation relations ----------------------------------------

def test_criterion_1_foundation_relations():
    checked = 0
    for q in FOUNDATION_QS:
        (F,) = fields_from_qs([q])
        c = cache_for(F)
        M = q - 1
        qc = CycloNum.from_rational(q)
        for m in range(M):
            g, gc = c.gauss(m), c.gauss(-m)
            s = c.sign(m)
            refl = qc * s - ((q - 1) if m == 0 else 0)
            assert g * gc == refl                                   # reflection
            assert (g * gc) * (CycloNum.from_rational(Fraction(s, q))
                               + Fraction(q - 1, q) * (1 if m == 0 else 0)) == 1
            assert gc * g == qc * s + ((q - 1) * g if m == 0 else CycloNum.zero(1))
            assert (g * Fraction(s, q) - Fraction(q - 1, q) * (1 if m == 0 else 0)) * gc == 1
            checked += 4
        for a in range(M):
            for b in range(M):
                assert jacobi_from_gauss(MultChar(F, a), MultChar(F, b)) == c.jacobi(a, b)
                assert c.jacobi(a, -b) == c.jacobi(a, b - a) * c.sign(a)  # swap lemma
                checked += 2
            assert c.jacobi(a, -a) == -c.sign(a) + ((q - 1) if a % M == 0 else 0)
            assert c.jacobi(a, 0) == -1 + ((q - 1) if a % M == 0 else 0)
            checked += 2
        if q % 2:
            four = F.from_int(4)
            for a in range(1, M):
                assert c.jacobi(a, a) == c.chv(-a, four) * c.jacobi(a, M // 2)
                checked += 1
        # rising-factorial cocycle over all triples
        risings = {}
        for a in range(M):
            ginv = c.gauss_inv(a)
            for b in range(M):
                risings[(a, b)] = c.gauss(a + b) * ginv
        for a in range(M):
            for b1 in range(M):
                r1 = risings[(a, b1)]
                for b2 in range(M):
                    assert r1 * risings[((a + b1) % M, b2)] == risings[(a, (b1 + b2) % M)]
                    checked += 1
        for m in (2, 3):
            if M % m == 0:
                for psi in all_chars(F):
                    ok, _, _ = hasse_davenport_product_check(psi, m)
                    assert ok, (q, m, psi.m)
                    checked += 1
        for r in (2, 3):
            for chi in all_chars(F):
                try:
                    ok, _, _ = hasse_davenport_lift_check(chi, r)
                except BudgetExceeded:
                    break
                assert ok, (q, r, chi.m)
                checked += 1
    report(1, True, f"foundation relations, {checked} exact checks over q in {FOUNDATION_QS}")


# -- criterion 2: evaluator equivalence ----------------------------------------

def test_criterion_2_evaluator_equivalence():
    mismatches = 0
    total = 0
    for q in (5, 7, 9, 11, 13):
        (F,) = fields_from_qs([q])
        M = q - 1
        for a1, a2, b1 in itertools.product(range(M), repeat=3):
            spec = spec_from_exponents(F, [a1, a2], [b1])
            for x in F.elements():
                total += 1
                if period_direct(spec, x) != period_spectral(spec, x):
                    mismatches += 1
    for q in (5, 7):
        (F,) = fields_from_qs([q])
        M = q - 1
        for ms in itertools.product(range(M), repeat=5):
            spec = spec_from_exponents(F, list(ms[:3]), list(ms[3:]))
            for x in F.elements():
                total += 1
                if period_direct(spec, x) != period_spectral(spec, x):
                    mismatches += 1
    report(2, mismatches == 0,
           f"direct vs spectral, {total} evaluations, {mismatches} mismatches")


# -- criterion 3: point-count oracle -------------------------------------------

def test_criterion_3_point_counts():
    bad = 0
    total = 0
    for q in (5, 9, 13, 17, 25):
        (F,) = fields_from_qs([q])
        for lam in F.elements():
            V = HGVariety(F, 2, [1], [1], 1, lam)
            total += 1
            if count_via_periods(V) != count_affine_brute(V) + 1:
                bad += 1
    for N, n in ((3, 1), (4, 1), (6, 1), (3, 2)):
        for q in (7, 13):
            if (q - 1) % N:
                continue
            (F,) = fields_from_qs([q])
            if n == 1:
                combos = itertools.product(range(1, N), repeat=3)
                for i, j, k in combos:
                    for lam in F.elements():
                        V = HGVariety(F, N, [i], [j], k, lam)
                        total += 1
                        if count_via_periods(V) != count_affine_brute(V) + 1:
                            bad += 1
            else:
                for i1, i2, j1, j2, k in itertools.product(range(1, min(N, 3)), repeat=5):
                    for lam in F.elements():
                        V = HGVariety(F, N, [i1, i2], [j1, j2], k, lam)
                        total += 1
                        if count_via_periods(V) != count_affine_brute(V) + 1:
                            bad += 1
    F5 = construct_field(5)
    ono_ok = legendre_count(F5, F5.from_int(2)) == 8
    report(3, bad == 0 and ono_ok,
           f"{total} variety counts formula == brute + 1; F_5 lambda=2 count {legendre_count(F5, F5.from_int(2))}")


# -- criterion 4: identity registry --------------------------------------------

THEOREM_FIELDS = {
    # smallest field with admissible tuples, plus >= 2 more (non-prime where
    # the congruence allows); headline entries pinned by the criterion text
    "kummer24-ind-1": (3, 4, 5), "kummer24-ind-2": (3, 4, 5), "kummer24-ind-3": (3, 4, 5),
    "kummer24-pfaff-euler-1": (3, 4, 5), "kummer24-pfaff-euler-2": (3, 4, 5),
    "kummer24-pfaff-euler-3": (3, 4, 5),
    "kummer24-normalized-1": (3, 4, 5), "kummer24-normalized-2": (3, 4, 5),
    "kummer24-normalized-3": (3, 4, 5), "kummer24-normalized-4": (3, 4, 5),
    "kummer24-normalized-5": (3, 4, 5), "kummer24-normalized-6": (3, 4, 5),
    "helversen-pasotto": (3, 4, 5),
    "imprimitive-P-1": (3, 4, 5), "imprimitive-P-2": (3, 4, 5),
    "imprimitive-P-3": (3, 4, 5), "imprimitive-P-4": (3, 4, 5),
    "imprimitive-F-1": (3, 4, 5), "imprimitive-F-2": (3, 4, 5),
    "imprimitive-F-3": (3, 4, 5), "imprimitive-F-4": (3, 4, 5),
    "commute-conjugate-1": (3, 4, 5), "commute-conjugate-2": (3, 4, 5),
    "continuation-2x": (3, 4, 5),
    "gauss-eval": (3, 4, 5, 7),
    "kummer-eval-P": (3, 5, 9), "kummer-eval-F": (3, 5, 9),
    "pfaff-saalschutz-P": (3, 4, 5), "pfaff-saalschutz-J": (3, 4, 5),
    "quad-pfaff-saalschutz-1": (3, 5, 9), "quad-pfaff-saalschutz-2": (3, 5, 9),
    "quad-pfaff-saalschutz-3": (3, 5, 9),
    "dihedral-1": (5, 7, 9, 11, 13), "dihedral-2": (5, 7, 9, 11, 13),
    "product-2F1-1": (9, 11, 13), "product-2F1-2": (9, 11, 13),
    "slater-1521": (3, 4, 5), "mth-multiplication": (4, 5, 7, 9),
    "eg18-gsq": (13, 25, 37),
    "clausen": (5, 9, 13), "clausen-at-1": (5, 9, 13, 25),
    "ramanujan-quarter": (5, 7, 25), "ramanujan-eighth": (5, 7, 25),
    "bb-cubic": (4, 7, 13), "ec-degree6": (13, 25, 37),
    "quad-2F1": (3, 5, 9, 13, 25), "quad-lemma": (3, 5, 9),
    "quad-aux-44": (5, 9, 13), "quad-4z1z": (3, 5, 9),
    "kummer-quad": (3, 5, 9), "kummer-quad-eta4": (5, 9, 13),
    "gs-cubic": (3, 5, 7, 9, 11, 13), "gs-eval-34": (7, 13, 25, 37),
    "bailey-cubic-1": (7, 13, 25), "bailey-cubic-2": (7, 13, 25),
    "bailey-eval-4": (7, 13, 25), "bailey-eval-14": (7, 13, 25),
    "bailey-degenerate": (13, 19, 25),
    "andrews-stanton": (5, 13, 25),
    "deg24-234": (25,),
    "isogeny-trace": (13, 25, 37), "r-eta-unit": (13, 25, 37),
    "stanton-involution": (3, 5, 9),
}


def test_criterion_4_identity_registry():
    theorem_ids = sorted(k for k, v in REGISTRY.items() if v.status == "theorem")
    assert set(theorem_ids) == set(THEOREM_FIELDS)
    failures = []
    checked = 0
    for name in theorem_ids:
        for q in THEOREM_FIELDS[name]:
            (F,) = fields_from_qs([q])
            r = verify(name, F)
            checked += r["tuples_checked"]
            if r["status"] == "fail":
                failures.append((name, q, r["failures"][:1]))
            assert r["status"] in ("pass", "fail"), (name, q, r["status"])
    # headline sampled runs at larger fields, seed-fixed
    for q in (73, 97):
        (F,) = fields_from_qs([q])
        r = verify("deg24-234", F, ("sample", 10_000, 20260810))
        checked += r["tuples_checked"]
        if r["status"] == "fail":
            failures.append(("deg24-234", q, r["failures"][:1]))
    report(4, not failures,
           f"{len(theorem_ids)} theorem entries, {checked} tuples, failures: {failures}")


# -- criterion 5: delta-term necessity ------------------------------------------

def test_criterion_5_delta_audits():
    problems = []
    (F13,) = fields_from_qs([13])
    ctx = context_for(F13)

    def support(ident, F):
        rec = REGISTRY[ident]
        ctx_f = context_for(F)
        predicted = set()
        for tup in rec.tuples(ctx_f):
            lhs, main, delta = rec.evaluate(ctx_f, tup)
            if delta is not None and not _zero(delta):
                predicted.add(_norm_tuple(F, tup))
        audit = delta_audit(ident, F)
        got = {_norm_audit(F, f) for f in audit["failures_without_delta"]}
        return predicted, got

    # quad-2F1: failures exactly at x in {1, -1}
    pred, got = support("quad-2F1", F13)
    one = F13.one()
    xs = {F13.element(t[-1]) for t in got}
    if got != pred or not xs <= {one, -one}:
        problems.append("quad-2F1")
    # gs-cubic: x in {1, 1/3}
    pred, got = support("gs-cubic", F13)
    xs = {F13.element(t[-1]) for t in got}
    if got != pred or not xs <= {one, F13.from_rational(1, 3)}:
        problems.append("gs-cubic")
    # bailey-cubic-1: x in {-2, 1}
    pred, got = support("bailey-cubic-1", F13)
    xs = {F13.element(t[-1]) for t in got}
    if got != pred or not xs <= {F13.from_int(-2), one}:
        problems.append("bailey-cubic-1")
    report(5, not problems, f"delta support exact; problems: {problems}")


def _zero(v):
    if isinstance(v, tuple):
        return all(_zero(x) for x in v)
    try:
        return v.is_zero()
    except AttributeError:
        return v == 0


def _norm_tuple(F, tup):
    out = []
    for k in sorted(tup):
        v = tup[k]
        out.append(v.idx if hasattr(v, "idx") else v)
    return tuple(out)


def _norm_audit(F, fail):
    out = []
    merged = {**fail["chars"], **{k: F.parse_element(v).idx for k, v in fail["arg"].items()}}
    for k in sorted(merged):
        out.append(merged[k])
    return tuple(out)


# -- criterion 6: zeta purity -----------------------------------------------------

def _purity_sweep():
    rows = []
    for q in (5, 7, 9, 13):
        (F,) = fields_from_qs([q])
        M = q - 1
        for a, b, c in itertools.product(range(M), repeat=3):
            spec = spec_from_exponents(F, [a, b], [c])
            if not is_primitive(spec):
                continue
            for xi in range(q):
                x = F.element(xi)
                if x.idx == 0 or x == F.one():
                    continue
                rows.append((q, spec, x))
    return rows


def test_criterion_6_exact_purity_and_factorizations():
    bad = []
    rows = _purity_sweep()
    for q, spec, x in rows:
        rep = exact_purity(spec, x)
        ok = (rep["trace_integral"] and rep["det_integral"]
              and rep["det_modulus_exact"])
        if not ok or root_purity_deviation(rep["trace"], rep["det"], q) >= 1e-9:
            bad.append((q, spec, x.idx))
        if rep["trace_rational"] and rep["det_rational"]:
            # the literal contract holds on the fully rational subsweep
            from hgff.zeta import charpoly_2, weil_purity_check

            factor = charpoly_2(spec, x)
            if factor.det not in (q, -q) or not weil_purity_check(factor)["pass"]:
                bad.append((q, spec, x.idx, "det"))
    # the two degenerate factorization examples, exactly
    fact_ok = _factorization_examples_hold()
    report(6, not bad and fact_ok,
           f"{len(rows)} primitive factors: algebraic-integer trace, |det| = q exact, "
           f"roots within 1e-9; integer-trace subsweep has det = +-q; "
           f"degenerate factorizations exact")


def _factorization_examples_hold():
    for q in (5, 7, 9, 13):
        (F,) = fields_from_qs([q])
        c = cache_for(F)
        M = q - 1
        one = F.one()
        for a, b, cc in itertools.product(range(M), repeat=3):
            if (a - cc) % M == 0:
                continue
            j = c.jacobi(b, cc - a - b)
            spec = spec_from_exponents(F, [a, b], [cc])
            for r in (1, 2):
                expect = j ** r if r % 2 else -(j ** r)
                if lifted_period(spec, one, r) != expect:
                    return False
        h = M // 2
        minus_one = F.from_int(-1)
        for d in range(M):
            for b in range(M):
                if (2 * b - 2 * d) % M == 0:
                    continue
                j1, j2 = c.jacobi(d, -b), c.jacobi(d + h, -b)
                spec = spec_from_exponents(F, [b, 2 * d], [2 * d - b])
                for r in (1, 2):
                    expect = j1 ** r + j2 ** r
                    if r % 2 == 0:
                        expect = -expect
                    if lifted_period(spec, minus_one, r) != expect:
                        return False
    return True


@pytest.mark.xfail(strict=True, reason=(
    "spec defect: the trace of the quadratic Frobenius factor is an algebraic "
    "integer but not a rational one for conjugation-asymmetric specs (e.g. "
    "upper (chi,chi), lower eps, chi of order 4, q=5, lambda=g^3 gives trace "
    "2i), and det is only constrained to det*conj(det) = q^2 (values 5i and "
    "3+4i both occur over F_5); see the decisions ledger"))
def test_criterion_6_literal_integer_coefficients():
    for q, spec, x in _purity_sweep():
        tr, det = frobenius_quadratic(spec, x)
        assert tr.is_rational(), (q, spec, x.idx)
        assert det in (q, -q), (q, spec, x.idx)


# -- criterion 7: conjecture observation ------------------------------------------

def test_criterion_7_conjectures_observed():
    expectations = [
        ("cohen-4F3", (13, 37, 61)),
        ("tuyang-ord20", (41, 61)),
        ("tuyang-ord6", (13, 25)),
        ("tuyang-ord12", (25, 37)),
        ("vidunas", (13, 37)),
        ("dihedral-233", (13, 37)),
    ]
    bad = []
    total = 0
    for name, qs in expectations:
        for q in qs:
            (F,) = fields_from_qs([q])
            r = verify(name, F)
            total += r["tuples_checked"]
            if r["status"] != "observed":
                bad.append((name, q, r["status"]))
    report(7, not bad, f"conjectures observed over {total} tuples; anomalies: {bad}")


@pytest.mark.xfail(strict=True, reason=(
    "source-statement defect: the order-24 two-family transforms are refuted "
    "as printed, and their classical counterparts already fail numerically at "
    "30-digit precision for every root choice of x^3+3 and x^2+2, so the "
    "printed formulas cannot be the intended ones; see the decisions ledger"))
def test_criterion_7_order24_family_as_stated():
    (F,) = fields_from_qs([73])
    for name in ("tuyang-466", "tuyang-466b"):
        r = verify(name, F, ("sample", 200, 1))
        assert r["status"] == "observed", (name, r["status"])
