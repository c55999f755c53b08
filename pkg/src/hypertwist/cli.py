"""Command line front end.

    hypertwist twist --curve C.json --cocycle X.json [--m0 E | --m E] [--v E]
    hypertwist verify twist.json
    hypertwist convert --curve C.json --to geometric|hyperelliptic
    hypertwist s4 --cubic "1,-11,26,-16" --e 1
    hypertwist check-hyperelliptic twist.json

Text goes to stdout followed by the JSON result (only the JSON with
--json-only); --out writes the JSON to a file instead. Exit codes: 0 ok,
2 invalid input, 3 unsupported input, 4 internal failure.
"""

import argparse
import json
import sys

from . import serialize as ser
from .conics import has_hyperelliptic_model
from .errors import InvalidInput, TwistError
from .expr import parse_element, parse_matrix, parse_rational
from .models import GeometricModel, HyperellipticModel, to_geometric, to_hyperelliptic
from .s4 import s4_twist, validate_pol34
from .twist import compute_twist, verify_twist


def _load_curve_and_cocycle(args):
    curve = ser.curve_from_json(ser.load(args.curve))
    xi = ser.cocycle_from_json(ser.load(args.cocycle), curve)
    return curve, xi


def cmd_twist(args):
    with_step = _StepTag("input")
    with with_step:
        curve, xi = _load_curve_and_cocycle(args)
        M0 = parse_matrix(args.m0, 3) if args.m0 else None
        M = parse_matrix(args.m, 3) if args.m else None
        v = parse_element(args.v) if args.v else None
        if M0 is not None and M is not None:
            raise InvalidInput("give at most one of --m0 and --m")
    out = compute_twist(curve, xi, M0=M0, M=M, v=v)
    report = verify_twist(curve, xi, out)
    data = ser.output_to_json(out, report)
    lines = [
        "twist: %s" % out.normalized,
        "e = %d" % out.e,
        "M = %s" % _fmt_matrix(out.M),
        "v = %s" % out.v,
        "isomorphism: (X,Y,Z,t) -> (M(X,Y,Z), (%s) t)" % out.t_factor,
        "hyperelliptic model: %s" % (out.hyperelliptic_form or "none (conic has no rational point)"),
        "verified: %s" % ("yes" if report.passed else "NO"),
    ]
    if out.birational:
        lines.insert(1, "note: even genus, the model is birational to the twist")
    return lines, data, 0 if report.passed else 4


def cmd_verify(args):
    with _StepTag("input"):
        out, xi = ser.output_from_json(ser.load(args.path))
    report = verify_twist(out.curve, xi, out)
    data = ser.report_to_json(report)
    lines = ["verified: %s" % ("yes" if report.passed else "NO")] + report.messages
    if report.flipped():
        lines.append("differ by the hyperelliptic involution at %s" % report.flipped())
    return lines, data, 0 if report.passed else 4


def cmd_convert(args):
    with _StepTag("input"):
        curve = ser.curve_from_json(ser.load(args.curve))
    if args.to == "geometric":
        res = curve if isinstance(curve, GeometricModel) else to_geometric(curve)
    else:
        res = curve if isinstance(curve, HyperellipticModel) else to_hyperelliptic(curve)
    return [str(res)], ser.curve_to_json(res), 0


def cmd_s4(args):
    with _StepTag("input"):
        cubic = [parse_rational(c) for c in args.cubic.split(",")]
        e = parse_rational(args.e)
    P = validate_pol34(cubic)
    G = s4_twist(P, e)
    data = ser.curve_to_json(G)
    data["A"] = str(P.A)
    return [str(G)], data, 0


def cmd_check(args):
    with _StepTag("input"):
        obj = ser.load(args.path)
        if "normalized" in obj:
            G = ser.curve_from_json(obj["normalized"])
        else:
            G = ser.curve_from_json(obj)
    if isinstance(G, HyperellipticModel):
        ok = True
    else:
        ok = has_hyperelliptic_model(G)
    line = "hyperelliptic model over Q: %s" % ("yes" if ok else "no")
    data = {"hyperelliptic": ok}
    if ok and isinstance(G, GeometricModel):
        H = to_hyperelliptic(G)
        data["model"] = ser.curve_to_json(H)
        line += "\n" + str(H)
    return [line], data, 0


class _StepTag:
    """Label errors raised while reading input."""

    def __init__(self, step):
        self.step = step

    def __enter__(self):
        return self

    def __exit__(self, kind, exc, tb):
        if isinstance(exc, TwistError) and exc.step is None:
            exc.step = self.step
        return False


def _fmt_matrix(A):
    return "[" + "; ".join(", ".join(str(x) for x in r) for r in A.rows) + "]"


def build_parser():
    p = argparse.ArgumentParser(prog="hypertwist",
                                description="Twists of hyperelliptic curves over Q.")
    p.add_argument("--json-only", action="store_true", help="print only the JSON result")
    p.add_argument("--out", help="write the JSON result to this file")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("twist", help="twist a curve by a cocycle")
    t.add_argument("--curve", required=True)
    t.add_argument("--cocycle", required=True)
    t.add_argument("--m0", help="starting matrix for the averaging, e.g. '(1+i)*Id'")
    t.add_argument("--m", help="use this M directly, e.g. 'diag(i,i,1)'")
    t.add_argument("--v", help="use this v directly, e.g. 'i'")
    t.set_defaults(func=cmd_twist)

    v = sub.add_parser("verify", help="re-verify a stored twist")
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("convert", help="convert between curve models")
    c.add_argument("--curve", required=True)
    c.add_argument("--to", required=True, choices=["geometric", "hyperelliptic"])
    c.set_defaults(func=cmd_convert)

    s = sub.add_parser("s4", help="twist of y^2 = x^8 - 14x^4 + 1 from a cubic")
    s.add_argument("--cubic", required=True, help="coefficients, leading first")
    s.add_argument("--e", required=True)
    s.set_defaults(func=cmd_s4)

    h = sub.add_parser("check-hyperelliptic",
                       help="does a stored twist (or curve) have a model y^2 = f(x)?")
    h.add_argument("path")
    h.set_defaults(func=cmd_check)

    # accept the global flags after the subcommand as well
    for sp in (t, v, c, s, h):
        sp.add_argument("--json-only", action="store_true", default=argparse.SUPPRESS)
        sp.add_argument("--out", default=argparse.SUPPRESS)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines, data, code = args.func(args)
    except TwistError as exc:
        err = {"error": type(exc).__name__, "step": exc.step, "message": str(exc)}
        print("error: %s" % exc, file=sys.stderr)
        print(json.dumps(err, indent=2))
        return exc.exit_code
    text = ser.dumps(data)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if not args.json_only:
        for line in lines:
            print(line)
    if args.json_only or not args.out:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
