"""Command-line surface: construct, certify, scan, levelset, functional, verify-paper.

Exit codes: 0 success, 1 argument/parse failure, 2 infeasible construction
parameters, 3 verification failures.  Exact rationals serialize as
"num/den" strings, floating values as shortest round-trip decimals with the
precision (in bits) recorded alongside.  Identical inputs produce
byte-identical delimited outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from mpmath import mp

from . import acceptance, moduli
from .errors import CertificationError, FeasibilityError
from .grassmann import PencilCurve, PlueckerCurve, certify, wedge_pencil
from .paperlab import report_json
from .polynomials import UniPoly
from .scalars import SqrtSum, to_mpc


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; the contract wants 1
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(f"not a rational or decimal: {text!r} ({e})")


def _triple(text: str) -> tuple[Fraction, Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected three comma-separated values a,b,c")
    return tuple(_fraction(p) for p in parts)


def _range(text: str) -> tuple[Fraction, Fraction, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected lo:hi:n")
    return _fraction(parts[0]), _fraction(parts[1]), int(parts[2])


def _ser(x) -> object:
    if isinstance(x, int):
        return f"{x}/1"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, SqrtSum):
        return {"exact": str(x), "re": float(x), "im": 0.0}
    z = complex(to_mpc(x))
    return {"re": z.real, "im": z.imag}


def _ser_poly(p: UniPoly) -> list:
    return [_ser(c) for c in p.coeffs]


def _deser_poly(data: list, prec: int):
    coeffs = []
    with mp.workprec(prec):
        for c in data:
            if isinstance(c, str):
                coeffs.append(Fraction(c))
            else:
                coeffs.append(mp.mpc(c["re"], c["im"]))
    return UniPoly(coeffs)


def _write(path, text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _curve_json(cc: moduli.ConstructedCurve, precision: int) -> str:
    mp_ = cc.point
    doc = {
        "moduli": {
            "t0": _ser(mp_.t0), "t1": _ser(mp_.t1), "t6": _ser(mp_.t6),
            "t2": _ser(mp_.t2), "t3": _ser(mp_.t3), "t4": _ser(mp_.t4), "t5": _ser(mp_.t5),
            "g": _ser(mp_.g), "X2": _ser(mp_.x2), "Y2": _ser(mp_.y2), "Z2": _ser(mp_.z2),
            "count": moduli.count_solutions(mp_.t0, mp_.t1, mp_.t6),
        },
        "thetas": [float(t) for t in cc.solution.thetas],
        "pencil": [[_ser_poly(p) for p in row] for row in cc.pencil.rows],
        "plucker": [_ser_poly(p) for p in cc.plucker.coords],
        "certificate": cc.certificate.to_json_dict(),
        "precision_bits": precision,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_construct(args) -> int:
    precision = args.precision
    try:
        if args.family33 is not None:
            pen, info = moduli.family33_curve(float(args.family33))
            plucker = wedge_pencil(pen)
            cert = certify(plucker, tol=args.tol, precision_bits=precision,
                           w_closed=None, compute_w=False)
            doc = {
                "family33": info,
                "pencil": [[_ser_poly(p) for p in row] for row in pen.rows],
                "plucker": [_ser_poly(p) for p in plucker.coords],
                "certificate": cert.to_json_dict(),
                "precision_bits": precision,
            }
            _write(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
            return 0 if cert.curvature_constant else 2
        t0, t1, t6 = args.t
        cc = moduli.construct_curve(t0, t1, t6, branch=args.branch,
                                    precision=precision, tol=args.tol)
        _write(args.out, _curve_json(cc, precision))
        return 0
    except FeasibilityError as e:
        sys.stderr.write(f"infeasible: {e}\n")
        return 2
    except CertificationError as e:
        sys.stderr.write(f"certification failed: {e}\n")
        return 3


def cmd_certify(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    prec = args.precision or doc.get("precision_bits", 200)
    with mp.workprec(prec):
        if "pencil" in doc:
            rows = [[_deser_poly(p, prec) for p in row] for row in doc["pencil"]]
            curve = wedge_pencil(PencilCurve(*rows))
        else:
            curve = PlueckerCurve([_deser_poly(p, prec) for p in doc["plucker"]],
                                  normalize=False)
        cert = certify(curve, tol=args.tol, precision_bits=prec)
    _write(args.out, cert.to_json() + "\n")
    return 0 if cert.curvature_constant else 1


def cmd_scan(args) -> int:
    lo, hi, n = args.t0_range
    samples = moduli.scan(args.g, lo, hi, n, workers=args.workers)
    if args.format == "dat":
        lines = ["# " + moduli.SCAN_CSV_HEADER.replace(",", " ")]
        lines += [s.csv_row().replace(",", " ") for s in samples]
    else:
        lines = [moduli.SCAN_CSV_HEADER] + [s.csv_row() for s in samples]
    _write(args.out, "\n".join(lines) + "\n")
    if args.plot and args.out:
        from .plots import plot_scan
        plot_scan(samples, args.out + ".png", float(args.g))
    return 0


def cmd_levelset(args) -> int:
    if args.s is not None:
        grid = [args.s]
    else:
        lo, hi, n = args.s_range
        grid = [lo + (hi - lo) * k / (n - 1) for k in range(n)]
    rows = []
    header = "s,t1_upper,t1_lower,residual_upper,residual_lower"
    out_rows = []
    for s in grid:
        pt = moduli.level_set_s1(s)
        r1 = 0.0 if not pt.membership[0] else abs(float(pt.membership[0].to_mpf()))
        r2 = 0.0 if not pt.membership[1] else abs(float(pt.membership[1].to_mpf()))
        rows.append((float(s), pt.f1_float, pt.f2_float))
        out_rows.append(f"{float(s):.12g},{pt.f1_float:.12g},{pt.f2_float:.12g},{r1:.12g},{r2:.12g}")
    if args.format == "dat":
        text = "# " + header.replace(",", " ") + "\n" + "\n".join(r.replace(",", " ") for r in out_rows)
    else:
        text = header + "\n" + "\n".join(out_rows)
    _write(args.out, text + "\n")
    if args.plot and args.out:
        from .plots import plot_levelset
        plot_levelset(rows, args.out + ".png")
    return 0


def cmd_functional(args) -> int:
    t0, t1, t6 = args.t
    g = t1 ** 3 / (t0 ** 2 * t6)
    w = moduli.w_closed(t0, t1, g)
    doc = {
        "t": [_ser(t0), _ser(t1), _ser(t6)],
        "g": _ser(g),
        "w_closed_over_pi": _ser(w.pi_multiple),
        "w_closed": w.value,
    }
    if args.numeric:
        cc = moduli.construct_curve(t0, t1, t6, precision=args.precision)
        doc["w_numeric"] = cc.certificate.w_numeric
    _write(args.out, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_verify_paper(args) -> int:
    only = args.only.split(",") if args.only else None
    checks = acceptance.run_all(only=only, precision=args.precision)
    failing = [c for c in checks if not c.passed]
    for c in checks:
        sys.stdout.write(f"{'PASS' if c.passed else 'FAIL'}  {c.check_name}\n")
    if args.out:
        _write(args.out, report_json(checks) + "\n")
    sys.stdout.write(f"{len(checks) - len(failing)}/{len(checks)} checks passed\n")
    if failing:
        sys.stderr.write("failing checks: " + ", ".join(c.check_name for c in failing) + "\n")
        return 3
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="ccg25",
                     description="constantly curved degree-6 spheres in G(2,5): "
                                 "construction, certification, moduli scans")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--precision", type=int, default=200, help="working precision in bits")
        p.add_argument("--tol", type=float, default=1e-10, help="certification tolerance")
        p.add_argument("--out", default=None, help="output path (stdout when omitted)")

    p = sub.add_parser("construct", help="build and certify a curve from moduli parameters")
    p.add_argument("--t", type=_triple, help="t0,t1,t6 as rationals or decimals")
    p.add_argument("--family33", type=_fraction, default=None,
                   help="angle theta for the explicit one-parameter family")
    p.add_argument("--branch", type=int, default=0, choices=(0, 1))
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("certify", help="re-certify a curve JSON file")
    p.add_argument("input", help="curve JSON (pencil or plucker form)")
    common(p)
    p.set_defaults(func=cmd_certify, precision=None)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("scan", help="root scan of the moduli polynomial over a t0 grid")
    p.add_argument("--g", type=_fraction, required=True)
    p.add_argument("--t0-range", dest="t0_range", type=_range, required=True, help="lo:hi:n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "dat"), default="csv")
    p.add_argument("--plot", action=argparse.BooleanOptionalAction, default=True,
                   help="write a PNG figure next to the output file")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("levelset", help="the two t1 branches over t0 on the g = 1 level set")
    p.add_argument("--s", type=_fraction, default=None)
    p.add_argument("--s-range", dest="s_range", type=_range, default=(Fraction(1), Fraction(11, 6), 25))
    p.add_argument("--format", choices=("csv", "dat"), default="csv")
    p.add_argument("--plot", action=argparse.BooleanOptionalAction, default=True)
    common(p)
    p.set_defaults(func=cmd_levelset)

    p = sub.add_parser("functional", help="the closed-form bending-energy functional")
    p.add_argument("--t", type=_triple, required=True)
    p.add_argument("--numeric", action="store_true", help="also run the quadrature route")
    common(p)
    p.set_defaults(func=cmd_functional)

    p = sub.add_parser("verify-paper", help="run the complete verification suite")
    p.add_argument("--only", default=None, help="comma-separated check-group names")
    common(p)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct" and args.family33 is None and args.t is None:
        parser.exit(1, "ccg25 construct: error: need --t or --family33\n")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
