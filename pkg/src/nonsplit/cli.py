"""Command-line interface.

Exit codes: 0 success, 1 usage or input error, 2 internal consistency
failure (solver mismatch, peak at the search boundary).
"""

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

import mpmath

from . import numfield, plotting, tables
from .admissible import (AdmissiblePolynomial, generate_extremal, solve_lp,
                         solve_square_system, verify_admissible)
from .bounds import BaseFieldParams, BoundConfig, bound_report
from .errors import ConsistencyError, NonsplitError
from .exponent import DEFAULT_PRECISION, maximize_A
from .numfield import DEFAULT_PRIME_CAP, Variant
from .rational import fmt

ENV_PRECISION = "NONSPLIT_PRECISION_BITS"
ENV_PRIME_CAP = "NONSPLIT_PRIME_CAP"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _emit(args, text):
    if text is None:
        return
    if args.out and args.command != "figure":
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _precision(args):
    return args.precision_bits or _env_int(ENV_PRECISION, DEFAULT_PRECISION)


def _check_format(args, allowed):
    if args.format not in allowed:
        raise UsageError(f"--format {args.format} is not available for '{args.command}'")


def _cert_text(cert):
    s = f"certificate: {cert.verdict} ({cert.method})"
    if cert.witness is not None:
        s += f"; witness u0 = {fmt(cert.witness)}, Q(u0) = {fmt(cert.witness_value)}"
    return s


def cmd_poly(args):
    _check_format(args, ("text", "json"))
    d = args.degree
    if d == 1 or args.method == "both":
        P = generate_extremal(d)
    else:
        solver = solve_lp if args.method == "lp" else solve_square_system
        P = AdmissiblePolynomial((Fraction(1),) + solver(d))
    cert = verify_admissible(P)
    if args.format == "json":
        out = P.to_json()
        out["certificate"] = cert.to_json()
        return _dumps(out)
    lines = [f"P_{d}(x) = {P}", f"P_{d}(1) = {fmt(P.value_at_one)}"]
    lines += [f"a_{k} = {fmt(a)}" for k, a in enumerate(P.coeffs, 1)]
    lines.append(_cert_text(cert))
    return "\n".join(lines) + "\n"


def _read_candidate(args):
    if args.coeffs:
        return AdmissiblePolynomial(tuple(Fraction(c.strip()) for c in args.coeffs.split(",")))
    src = sys.stdin.read() if args.json == "-" else Path(args.json).read_text()
    return AdmissiblePolynomial.from_json(json.loads(src))


def cmd_verify(args):
    _check_format(args, ("text", "json"))
    P = _read_candidate(args)
    cert = verify_admissible(P)
    if args.format == "json":
        return _dumps({"polynomial": P.to_json(), "certificate": cert.to_json()})
    return f"P(x) = {P}\n{_cert_text(cert)}\n"


def cmd_exponent(args):
    _check_format(args, ("text", "json"))
    res = maximize_A(args.n, generate_extremal(args.degree), _precision(args))
    if args.format == "json":
        return _dumps(res.to_json())
    return (f"n = {res.n}, d = {res.degree}, precision = {res.precision_bits} bits\n"
            f"A        = {mpmath.nstr(res.A, 30)}\n"
            f"4A       = {mpmath.nstr(res.four_A, 30)}\n"
            f"lambda*  = {mpmath.nstr(res.lambda_star, 30)}\n")


def cmd_table(args):
    _check_format(args, ("text", "json", "csv"))
    rows = tables.table_rows(tuple(args.degrees), tuple(args.n), _precision(args), args.jobs)
    if args.format == "json":
        out = []
        for r in rows:
            item = {"n": r["n"]}
            for d in args.degrees:
                res = r[f"_exact_d{d}"]
                item[f"d{d}"] = dict(res.to_json(), four_A_printed=r[f"four_A_d{d}"],
                                     lambda_printed=r[f"lambda_d{d}"])
            out.append(item)
        return _dumps(out)
    if args.format == "csv":
        header = ["n"] + [c for d in args.degrees for c in (f"four_A_d{d}", f"lambda_d{d}")]
        lines = [",".join(header)] + [",".join(tables.row_cells(r, args.degrees)) for r in rows]
        return "\n".join(lines) + "\n"
    return tables.format_text(rows, args.degrees)


def cmd_figure(args):
    if args.format != "svg":
        raise UsageError("figure writes SVG; use --format svg")
    if not 2 <= args.n_min < args.n_max:
        raise UsageError(f"need 2 <= --n-min < --n-max, got {args.n_min}, {args.n_max}")
    out = Path(args.out or "figure1.svg")
    if not out.parent.is_dir():
        raise UsageError(f"cannot write figure to {out}: no such directory {out.parent}")
    ns, series = plotting.figure_data(args.n_min, args.n_max, precision=_precision(args))
    try:
        plotting.render_svg(out, ns, series)
        csv_path = out.with_suffix(".csv")
        plotting.write_csv(csv_path, ns, series)
    except OSError as exc:
        raise OSError(f"cannot write figure to {out}: {exc.strerror or exc}") from None
    return f"wrote {out}\nwrote {csv_path}\n"


def cmd_bound(args):
    _check_format(args, ("text", "json"))
    if args.DF < 1:
        raise UsageError("--DF must be >= 1")
    base = BaseFieldParams(args.nF, math.log(args.DF), not args.no_tower)
    cfg = BoundConfig(args.eps, args.eta, args.c1)
    P = generate_extremal(args.degree)
    log_DK = math.log(args.DK) if args.DK else None
    rep = bound_report(base, args.n, P, cfg, _precision(args), log_DK)
    if args.format == "json":
        return _dumps(rep)
    flag = lambda k: "" if rep["rigorous"].get(k, True) else "  [non-rigorous scale]"
    cmp_ = rep["comparison"]
    lines = [
        f"n = {args.n}, P = P_{args.degree}, epsilon = {args.eps}",
        f"4A(n,P)            = {rep['four_A']:.10g}   (lambda* = {rep['lambda']:.6g})",
        f"exponent of D_K    = {rep['exponent']:.10g}   (= 1/{1 / rep['exponent']:.6g})",
        f"(1+eps)/(4A)       = {rep['exponent_times_n_minus_1']:.10g}"
        + ("   < 5/12" if rep["below_5_12"] else "   >= 5/12"),
        f"N_F                = {rep['N_F']}",
        f"B_F                = {rep['B_F']:.10g}{flag('B_F')}",
        f"log X_0            = {rep['log_X0']:.10g}{flag('log_X0')}"
        + (f"   (X_0 = {math.exp(rep['log_X0']):.10g})" if rep["log_X0"] < 700 else ""),
        f"log C_F            = {rep['log_C_F_scale']:.10g}{flag('log_C_F_scale')}",
        f"log n^(3P(1)/A)    = {rep['log_non_galois_factor']:.10g}",
        f"Murty-Patankar     = {cmp_['murty_patankar']:.10g}   "
        f"(improvement x{rep['improvement_over_murty_patankar']:.4g})",
        f"X. Li 4A(n,P_1)    = {cmp_['li_4A']:.10g}   (exponent {cmp_['li_exponent']:.6g})",
    ]
    if cmp_["burgess"] is not None:
        lines.append(f"Burgess            = {cmp_['burgess']:.10g}")
    if "log_bound_D_K_power" in rep:
        lines.append(f"log D_K^exponent   = {rep['log_bound_D_K_power']:.10g}")
    lines += [f"note: {n}" for n in rep["notes"]]
    return "\n".join(lines) + "\n"


def cmd_field(args):
    _check_format(args, ("text", "json", "csv"))
    cap = args.cap or _env_int(ENV_PRIME_CAP, DEFAULT_PRIME_CAP)
    if args.poly:
        polys = [numfield.parse_polynomial(args.poly)]
    elif args.batch:
        with open(args.batch) as fh:
            polys = numfield.read_batch(fh)
    else:
        raise UsageError("give --poly or --batch")
    reports = numfield.run_batch(polys, args.degree, args.eps, Variant(args.variant), cap,
                                 _precision(args))
    if args.format == "csv":
        if args.out:
            with open(args.out, "w", newline="") as fh:
                numfield.write_csv(reports, fh)
        else:
            numfield.write_csv(reports, sys.stdout)
        return None
    reports = list(reports)
    if args.format == "json":
        data = [r.to_json() for r in reports]
        return _dumps(data[0] if args.poly else data)
    lines = []
    for r in reports:
        lp = "not-found" if r.least_prime is None else r.least_prime
        lines.append(f"{r.polynomial}: disc(f) = {r.disc_f}, variant = {r.variant.value}, "
                     f"least_prime = {lp}")
        if r.log_bound is not None:
            lines.append(f"  exponent = {r.bound_exponent_used:.10g}, log |disc f|^exponent = "
                         f"{r.log_bound:.10g}, least_prime <= bound: {r.within_bound} "
                         "(constant-free sanity comparison)")
        if r.flags:
            lines.append(f"  flags: {', '.join(r.flags)}")
    return "\n".join(lines) + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=None, choices=["text", "json", "csv", "svg"],
                        help="output format (default text; svg for figure)")
    common.add_argument("--precision-bits", type=_positive_int, default=None,
                        help=f"working precision (default {DEFAULT_PRECISION}, env {ENV_PRECISION})")
    common.add_argument("--out", default=None, help="write output to this path")

    parser = _Parser(prog="nonsplit", description=__doc__.split("\n")[0],
                     epilog=f"Environment: {ENV_PRECISION}, {ENV_PRIME_CAP}.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", parents=[common], help="extremal admissible polynomial P_d")
    p.add_argument("--degree", type=_positive_int, required=True)
    p.add_argument("--method", choices=["lp", "square", "both"], default="both")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("verify", parents=[common], help="certify admissibility of a polynomial")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--coeffs", help="comma-separated a_1,...,a_d, e.g. '1,3/2'")
    g.add_argument("--json", help="polynomial JSON file ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exponent", parents=[common], help="A(n, P_d) and its maximizer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=_positive_int, default=100)
    p.set_defaults(func=cmd_exponent)

    p = sub.add_parser("table", parents=[common], help="table of 4A(n, P_d)")
    p.add_argument("--degrees", type=_positive_int, nargs="+", default=list(tables.TABLE_DEGREES))
    p.add_argument("--n", type=int, nargs="+", default=list(tables.TABLE_N))
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", parents=[common], help="plot 4A(n, P_1) and 4A(n, P_100)")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("bound", parents=[common], help="exponent and field constants")
    p.add_argument("--nF", type=_positive_int, default=1)
    p.add_argument("--DF", type=int, default=1, help="|disc F|")
    p.add_argument("--no-tower", action="store_true",
                   help="F has no normal tower over Q (N_F = 4 n_F!)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=_positive_int, default=100)
    p.add_argument("--eps", type=float, default=0.0)
    p.add_argument("--eta", type=float, default=0.1)
    p.add_argument("--c1", type=float, default=0.5)
    p.add_argument("--DK", type=int, default=None, help="|disc K|, to report D_K^exponent")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("field", parents=[common], help="least non-split prime of Q[x]/(f)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--batch", help="file with one polynomial per line")
    p.add_argument("--variant", choices=[v.value for v in Variant], default="any")
    p.add_argument("--degree", type=_positive_int, default=100)
    p.add_argument("--eps", type=float, default=0.01)
    p.add_argument("--cap", type=int, default=None,
                   help=f"prime cap (default {DEFAULT_PRIME_CAP}, env {ENV_PRIME_CAP})")
    p.set_defaults(func=cmd_field)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "svg" if args.command == "figure" else "text"
    try:
        if args.command == "table" and any(n < 2 for n in args.n):
            raise UsageError("every --n must be >= 2")
        if args.command in ("exponent", "bound") and args.n < 2:
            raise UsageError("--n must be >= 2")
        text = args.func(args)
        _emit(args, text)
    except ConsistencyError as exc:
        print(f"nonsplit: consistency failure: {exc}", file=sys.stderr)
        return 2
    except (UsageError, NonsplitError, ValueError, OSError) as exc:
        print(f"nonsplit: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
