"""Command-line front end.

Subcommands: field, char, sums, eval, count, zeta, verify, report.
Machine-readable JSON goes to stdout (or --json / --csv files); output is
byte-identical across runs with the same argv and seed.  Exit codes:
0 = success / no theorem failures, 1 = theorem verification failure,
2 = usage error.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import identities
from .chars import MultChar, RationalParam, iota, kappa
from .errors import HgffError
from .fields import construct_field
from .hyper import (
    HGSpec,
    f_normalized,
    normalizer_inv,
    period_direct,
    rational_spec,
    spec_from_exponents,
)
from .identities.engine import fields_from_qs, verify, verify_all
from .sums import cache_for
from .varieties import (
    GLCurve,
    HGVariety,
    count_affine_brute,
    count_via_periods,
    glc_trace,
)
from .zeta import charpoly_2, frobenius_quadratic, lifted_period, weil_purity_check

DEFAULT_SWEEP_QS = (5, 7, 9, 11, 13)


def _emit(args, payload):
    text = json.dumps(payload, sort_keys=True, indent=2)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _field_for(q):
    (F,) = fields_from_qs([q])
    return F


def _parse_chars(F, text, rational):
    """Character list: exponents ("3" or "chi^3"), "order:N,index:k" pairs,
    or rationals i/m when --rational is given."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if rational:
            out.append(iota(RationalParam.parse(tok), F))
        elif tok.startswith("chi^"):
            out.append(MultChar(F, int(tok[4:])))
        elif tok.startswith("order:"):
            body = dict(part.split(":") for part in tok.split(";"))
            n = int(body["order"])
            k = int(body.get("index", 1))
            out.append(MultChar(F, k * ((F.q - 1) // n)))
        else:
            out.append(MultChar(F, int(tok)))
    return out


def _parse_rational_list(text):
    return [RationalParam.parse(tok.strip()) for tok in text.split(",")]


def cmd_field(args):
    F = construct_field(args.p, args.e)
    _emit(args, {
        "p": F.p, "e": F.e, "q": F.q,
        "modulus": list(F.modulus),
        "modulus_str": F.modulus_str(),
        "generator": F.format_element(F.gen()),
        "generator_coeffs": list(F.gen().coeffs),
        "checksums": F.table_checksums(),
    })
    return 0


def cmd_char(args):
    F = _field_for(args.q)
    rows = []
    for m in range(max(F.q - 1, 1)):
        chi = MultChar(F, m)
        order = chi.order()
        rows.append({
            "exponent": m,
            "order": order,
            "kappa": str(kappa(chi, order)),
        })
    _emit(args, {"q": F.q, "characters": rows})
    return 0


def cmd_sums(args):
    F = _field_for(args.q)
    c = cache_for(F)
    M = F.q - 1
    gauss = {str(m): c.gauss(m).to_json_dict() for m in range(M)}
    jacobi = {f"{a},{b}": c.jacobi(a, b).to_json_dict()
              for a in range(M) for b in range(M)}
    _emit(args, {"q": F.q, "zeta_p_convention": f"zeta_{F.p*M}^{M}",
                 "gauss": gauss, "jacobi": jacobi})
    return 0


def _build_spec(args, F):
    if args.rational:
        upper = _parse_rational_list(args.upper)
        lower = _parse_rational_list(args.lower) if args.lower else []
        return rational_spec(upper, lower, F)
    upper = _parse_chars(F, args.upper, False)
    lower = _parse_chars(F, args.lower, False) if args.lower else []
    return HGSpec(upper, lower, F)


def cmd_eval(args):
    F = _field_for(args.q)
    spec = _build_spec(args, F)
    lam = F.parse_element(args.lam)
    p_val = period_direct(spec, lam)
    f_val = p_val * normalizer_inv(spec)
    _emit(args, {
        "q": F.q,
        "upper": [c.m for c in spec.upper],
        "lower": [c.m for c in spec.lower],
        "lambda": F.format_element(lam),
        "period": p_val.to_json_dict(),
        "period_complex": _c2l(p_val.to_complex()),
        "normalized": f_val.to_json_dict(),
        "normalized_complex": _c2l(f_val.to_complex()),
    })
    return 0


def _c2l(z):
    return [z.real, z.imag]


def cmd_count(args):
    F = _field_for(args.q)
    lam = F.parse_element(args.lam)
    if args.model == "glc":
        V = HGVariety(F, args.N, [args.i], [args.j], args.k, lam)
        payload = {
            "model": "glc", "q": F.q, "N": args.N,
            "exponents": [args.i, args.j, args.k],
            "lambda": F.format_element(lam),
            "affine": count_affine_brute(V),
            "formula": count_via_periods(V),
        }
        curve = GLCurve(F, args.N, args.i, args.j, args.k, lam)
        try:
            payload["trace"] = glc_trace(curve)
        except HgffError as exc:
            payload["trace"] = None
            payload["trace_note"] = str(exc)
    else:
        i_exps = [int(t) for t in args.i.split(",")] if isinstance(args.i, str) else [args.i]
        j_exps = [int(t) for t in args.j.split(",")] if isinstance(args.j, str) else [args.j]
        V = HGVariety(F, args.N, i_exps, j_exps, args.k, lam)
        payload = {
            "model": "hgv", "q": F.q, "N": args.N,
            "i": i_exps, "j": j_exps, "k": args.k,
            "lambda": F.format_element(lam),
            "affine": count_affine_brute(V),
            "formula": count_via_periods(V),
        }
    _emit(args, payload)
    return 0


def cmd_zeta(args):
    F = _field_for(args.q)
    spec = _build_spec(args, F)
    lam = F.parse_element(args.lam)
    tr, det = frobenius_quadratic(spec, lam)
    payload = {
        "q": F.q,
        "upper": [c.m for c in spec.upper],
        "lower": [c.m for c in spec.lower],
        "lambda": F.format_element(lam),
        "convention": "trace(Frob) = -period",
        "trace_exact": tr.to_json_dict(),
        "det_exact": det.to_json_dict(),
    }
    try:
        factor = charpoly_2(spec, lam)
        rep = weil_purity_check(factor)
        payload.update({
            "trace": factor.trace,
            "det": factor.det,
            "poly": f"1 + ({-factor.trace})T + ({factor.det})T^2",
            "z_coeffs": list(factor.z_coeffs()),
            "roots": rep["roots"],
            "purity": rep,
        })
    except HgffError as exc:
        payload["poly"] = None
        payload["note"] = f"coefficients are not rational integers: {exc}"
    if args.rmax > 1:
        payload["lifted_periods"] = {
            str(r): lifted_period(spec, lam, r).to_json_dict()
            for r in range(1, args.rmax + 1)
        }
    _emit(args, payload)
    return 0


def _parse_mode(text):
    if text == "exhaustive":
        return "exhaustive"
    if text.startswith("sample:"):
        _, n, seed = text.split(":")
        return ("sample", int(n), int(seed))
    raise ValueError(f"bad mode {text!r}; use exhaustive or sample:N:SEED")


def _write_csv(path, reports):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "q", "status", "tuples_checked", "failures"])
        for r in reports:
            writer.writerow([r["id"], r["q"], r["status"],
                             r["tuples_checked"], len(r.get("failures", []))])


def _run_reports(ids, qs, mode, workers):
    jobs = sorted((name, q) for name in ids for q in qs)
    if workers > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            reports = pool.map(_one_job, [(name, q, mode) for name, q in jobs])
    else:
        reports = [_one_job((name, q, mode)) for name, q in jobs]
    return reports


def _one_job(job):
    name, q, mode = job
    return verify(name, _field_for(q), mode)


def cmd_verify(args):
    qs = [int(t) for t in args.q.split(",")] if args.q else list(DEFAULT_SWEEP_QS)
    mode = _parse_mode(args.mode)
    if args.id:
        ids = [args.id]
    else:
        ids = sorted(identities.REGISTRY)
    reports = _run_reports(ids, qs, mode, args.workers)
    payload = {
        "mode": args.mode,
        "qs": qs,
        "reports": reports,
        "theorem_failures": sum(1 for r in reports if r["status"] == "fail"),
        "conjecture_refutations": sum(1 for r in reports if r["status"] == "refuted"),
    }
    _emit(args, payload)
    if args.csv:
        _write_csv(args.csv, reports)
    for r in reports:
        if r["status"] == "refuted":
            print(f"NOTE: conjecture {r['id']} refuted at q={r['q']} "
                  f"(interesting, not fatal)", file=sys.stderr)
    return 1 if payload["theorem_failures"] else 0


def cmd_report(args):
    args.id = None
    return cmd_verify(args)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="hgff",
        description="Exact hypergeometric character sums over finite fields")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="field construction info")
    psub = p.add_subparsers(dest="fieldcmd", required=True)
    pi = psub.add_parser("info")
    pi.add_argument("p", type=int)
    pi.add_argument("e", type=int, nargs="?", default=1)
    pi.add_argument("--json")
    pi.set_defaults(fn=cmd_field)

    c = sub.add_parser("char", help="character table")
    csub = c.add_subparsers(dest="charcmd", required=True)
    ct = csub.add_parser("table")
    ct.add_argument("q", type=int)
    ct.add_argument("--json")
    ct.set_defaults(fn=cmd_char)

    s = sub.add_parser("sums", help="dump Gauss and Jacobi sum tables")
    s.add_argument("q", type=int)
    s.add_argument("--json")
    s.set_defaults(fn=cmd_sums)

    e = sub.add_parser("eval", help="evaluate the period and normalized functions")
    e.add_argument("--q", type=int, required=True)
    e.add_argument("--upper", required=True)
    e.add_argument("--lower", default="")
    e.add_argument("--lambda", dest="lam", required=True)
    e.add_argument("--rational", action="store_true")
    e.add_argument("--json")
    e.set_defaults(fn=cmd_eval)

    k = sub.add_parser("count", help="point counts on hypergeometric models")
    k.add_argument("model", choices=["glc", "hgv"])
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--N", type=int, required=True)
    k.add_argument("--i", required=True)
    k.add_argument("--j", required=True)
    k.add_argument("--k", type=int, required=True)
    k.add_argument("--lambda", dest="lam", required=True)
    k.add_argument("--json")

    def _count_dispatch(args):
        if args.model == "glc":
            args.i = int(args.i)
            args.j = int(args.j)
        return cmd_count(args)

    k.set_defaults(fn=_count_dispatch)

    z = sub.add_parser("zeta", help="quadratic Frobenius factor data")
    z.add_argument("--q", type=int, required=True)
    z.add_argument("--upper", required=True)
    z.add_argument("--lower", default="")
    z.add_argument("--lambda", dest="lam", required=True)
    z.add_argument("--rational", action="store_true")
    z.add_argument("--rmax", type=int, default=1)
    z.add_argument("--json")
    z.set_defaults(fn=cmd_zeta)

    v = sub.add_parser("verify", help="verify identities over fields")
    v.add_argument("--id")
    v.add_argument("--all", action="store_true")
    v.add_argument("--q")
    v.add_argument("--mode", default="exhaustive")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json")
    v.add_argument("--csv")
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("report", help="full sweep over the default field set")
    r.add_argument("--q")
    r.add_argument("--mode", default="exhaustive")
    r.add_argument("--workers", type=int, default=1)
    r.add_argument("--json")
    r.add_argument("--csv")
    r.set_defaults(fn=cmd_report)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        raise
    try:
        return args.fn(args)
    except HgffError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
