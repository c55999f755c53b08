"""JSON encodings of numbers, forms, models, cocycles and twist results.

Numbers are {"N": conductor, "c": ["p/q", ...]} in the power basis of
zeta_N; wherever a number is read, an expression string such as "1+i" or
"z10^3/5" is accepted too.
"""

import json
from fractions import Fraction

from .autos import GeomAutomorphism, MobiusAutomorphism
from .cocycle import cocycle_from_generators, group_generators
from .errors import InvalidInput
from .expr import parse, parse_element, parse_rational
from .field.cyclotomic import CycloElt, common_conductor, cyclo_field
from .field.matrix import Matrix
from .models import GeometricModel, HyperellipticModel
from .mpoly import TernaryForm


def _q(x):
    x = Fraction(x)
    return str(x)


def elt_to_json(x):
    if not isinstance(x, CycloElt):
        x = cyclo_field(1).rational(x)
    return {"N": x.N, "c": [_q(c) for c in x.coords]}


def elt_from_json(obj):
    if isinstance(obj, str):
        return parse_element(obj)
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        if isinstance(obj, float) and not obj.is_integer():
            raise InvalidInput("use a string for non-integer numbers")
        return cyclo_field(1).rational(int(obj))
    try:
        N = int(obj["N"])
        coords = [parse_rational(c) for c in obj["c"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput("malformed number %r" % (obj,)) from exc
    F = cyclo_field(N)
    if len(coords) > F.degree:
        raise InvalidInput("too many coordinates for conductor %d" % N)
    return F(coords)


def _lift_all(xs):
    N = common_conductor(*[x.N for x in xs]) if xs else 1
    return [x.change_field(N) if x.N != N else x for x in xs], N


def matrix_to_json(A):
    return [[elt_to_json(x) for x in r] for r in A.rows]


def matrix_from_json(obj, size=None):
    if isinstance(obj, str):
        A = parse(obj, size or 3)
        if not isinstance(A, Matrix):
            raise InvalidInput("%r is not a matrix" % obj)
    else:
        rows = [[elt_from_json(x) for x in r] for r in obj]
        flat, N = _lift_all([x for r in rows for x in r])
        it = iter(flat)
        A = Matrix([[next(it) for _ in r] for r in rows], N)
    if size is not None and A.n != size:
        raise InvalidInput("expected a %dx%d matrix" % (size, size))
    return A


def form_to_json(f):
    return [{"e": list(e), "c": elt_to_json(c)} for e, c in f.sorted_terms()]


def form_from_json(obj, degree=None):
    if isinstance(obj, str):
        raise InvalidInput("forms are given as lists of terms")
    terms = {}
    for t in obj:
        e = tuple(int(k) for k in t["e"])
        if len(e) != 3:
            raise InvalidInput("exponent %r is not a triple" % (t["e"],))
        terms[e] = elt_from_json(t["c"])
    vals, N = _lift_all(list(terms.values()))
    terms = dict(zip(terms, vals))
    if degree is None:
        if not terms:
            raise InvalidInput("empty form without a degree")
        degree = sum(next(iter(terms)))
    return TernaryForm(terms, degree, N)


def curve_to_json(C):
    if isinstance(C, HyperellipticModel):
        return {"model": "hyperelliptic", "genus": C.genus,
                "f": [_q(c) for c in C.f]}
    out = {"model": "geometric", "genus": C.genus, "F": form_to_json(C.F),
           "conic": form_to_json(C.conic)}
    if C.t_coeff != 1:
        out["e"] = _q(C.t_coeff)
    if C.birational:
        out["birational"] = True
    return out


def curve_from_json(obj):
    kind = obj.get("model")
    try:
        if kind == "hyperelliptic":
            f = [parse_rational(c) for c in obj["f"]]
            return HyperellipticModel.from_coefficients(f, obj.get("genus"))
        if kind == "geometric":
            F = form_from_json(obj["F"])
            Q = form_from_json(obj["conic"], 2)
            if not (F.is_rational() and Q.is_rational()):
                raise InvalidInput("curve coefficients must be rational")
            return GeometricModel(int(obj["genus"]), F.change_field(1),
                                  Q.change_field(1), parse_rational(obj.get("e", 1)))
    except KeyError as exc:
        raise InvalidInput("curve file lacks %s" % exc) from exc
    raise InvalidInput("unknown model kind %r" % kind)


def auto_to_json(A):
    if isinstance(A, MobiusAutomorphism):
        out = {"mobius": matrix_to_json(A.matrix)}
        if not A.is_exact():
            out["yFactor"] = elt_to_json(A.kappa)
        return out
    return {"matrix3": matrix_to_json(A.matrix), "tFactor": elt_to_json(A.lam)}


def auto_from_json(obj, curve):
    if "mobius" in obj:
        A = matrix_from_json(obj["mobius"], 2)
        y = elt_from_json(obj["yFactor"]) if "yFactor" in obj else None
        return MobiusAutomorphism(A, curve.genus, y)
    if "matrix3" in obj:
        d = curve.d if isinstance(curve, GeometricModel) else _degree(curve.genus)
        return GeomAutomorphism(matrix_from_json(obj["matrix3"], 3),
                                elt_from_json(obj["tFactor"]), d)
    raise InvalidInput("automorphism needs 'mobius' or 'matrix3'")


def _degree(g):
    return g + 1 if g % 2 else g + 2


def cocycle_from_json(obj, curve):
    try:
        N = int(obj["conductor"])
        gens = [(int(g["a"]), auto_from_json(g["auto"], curve))
                for g in obj["generators"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInput("malformed cocycle file: %s" % exc) from exc
    kw = {"genus": curve.genus} if isinstance(curve, HyperellipticModel) else {"d": curve.d}
    return cocycle_from_generators(N, gens, **kw)


def cocycle_to_json(xi, generators=None):
    """Generator form when ``generators`` is given, else every residue."""
    keys = generators if generators is not None else xi.group
    return {"conductor": xi.N,
            "generators": [{"a": a, "auto": auto_to_json(xi[a])} for a in keys]}


def output_to_json(out, report=None):
    data = {
        "curve": curve_to_json(out.curve),
        "cocycle": cocycle_to_json(out.cocycle, group_generators(out.cocycle.N)),
        "twisted": curve_to_json(out.twisted),
        "normalized": curve_to_json(out.normalized),
        "M": matrix_to_json(out.M),
        "v": elt_to_json(out.v),
        "e": out.e,
        "iso": {"M": matrix_to_json(out.M), "tFactor": elt_to_json(out.t_factor),
                "conductor": out.sqrt_conductor},
        "a": {str(a): elt_to_json(x) for a, x in out.a_cocycle.values.items()},
        "iota": {"conductor": out.iota.conductor, "trivialOn": out.iota.trivial_on()},
        "hyperelliptic": (curve_to_json(out.hyperelliptic_form)
                          if out.hyperelliptic_form is not None else None),
        "birational": out.birational,
        "provenance": out.provenance,
    }
    if report is not None:
        data["verification"] = report_to_json(report)
    return data


def report_to_json(report):
    return {"passed": report.passed, "rational": report.rational,
            "substitution": report.substitution, "consistent": report.consistent,
            "realization": {str(a): c.value for a, c in sorted(report.realization.items())},
            "messages": list(report.messages)}


def output_from_json(obj):
    """Enough of a TwistOutput to run verify_twist on."""
    from .twist import TwistOutput
    from .models import to_geometric
    try:
        curve = curve_from_json(obj["curve"])
        xi = cocycle_from_json(obj["cocycle"], curve)
        twisted = curve_from_json(obj["twisted"])
        M = matrix_from_json(obj["M"], 3)
        v = elt_from_json(obj["v"])
        e = int(obj["e"])
        s = elt_from_json(obj["iso"]["tFactor"])
    except KeyError as exc:
        raise InvalidInput("twist file lacks %s" % exc) from exc
    G = curve if isinstance(curve, GeometricModel) else to_geometric(curve)
    hyp = obj.get("hyperelliptic")
    out = TwistOutput(curve=curve, cocycle=xi, model=G, twisted=twisted,
                      normalized=(curve_from_json(obj["normalized"])
                                  if "normalized" in obj else twisted),
                      M=M, v=v, e=e, sqrt_v=None, t_factor=s,
                      sqrt_conductor=s.N, a_cocycle=None, xibar=None, iota=None,
                      hyperelliptic_form=curve_from_json(hyp) if hyp else None,
                      provenance=obj.get("provenance", {}))
    return out, xi


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False)


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput("cannot read %s: %s" % (path, exc.strerror)) from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput("%s is not valid JSON: %s" % (path, exc)) from exc
