"""Curve presentations: y^2 = f(x) and {e t^2 = F(x,y,z), Q(x,y,z) = 0}.

In the geometric model F has even degree d and t has weight d/2. For odd
genus d = g + 1 and the two models are isomorphic; for even genus
d = g + 2, F(x^2, y^2, x y) carries an extra factor y^2 and the geometric
model is only birational (one double point on the ramification locus).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import sympy

from .conics import diagonal_coefficients, has_rational_point, parametrize
from .errors import NotSeparable, SingularInput
from .field import upoly
from .field.arith import as_fraction, squarefree_part
from .mpoly import (TernaryForm, primitive_rational, reduce_mod_conic,
                    substitute_linear)


@dataclass(frozen=True)
class HyperellipticModel:
    genus: int
    f: tuple  # a_0 .. a_{2g+2}, Fractions

    def __post_init__(self):
        g = int(self.genus)
        if g < 2:
            raise NotSeparable("genus must be at least 2")
        coeffs = [as_fraction(c) for c in self.f]
        while len(coeffs) > 2 * g + 3 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > 2 * g + 3:
            raise NotSeparable("degree of f exceeds 2g+2")
        coeffs += [Fraction(0)] * (2 * g + 3 - len(coeffs))
        object.__setattr__(self, "genus", g)
        object.__setattr__(self, "f", tuple(coeffs))
        deg = upoly.degree(list(self.f))
        if deg not in (2 * g + 1, 2 * g + 2):
            raise NotSeparable("f has degree %d, expected %d or %d"
                               % (deg, 2 * g + 1, 2 * g + 2))
        p = upoly.trim(list(self.f))
        if upoly.degree(upoly.gcd(p, upoly.derivative(p))) > 0:
            raise NotSeparable("f is not separable")

    @classmethod
    def from_coefficients(cls, f, genus=None):
        f = [as_fraction(c) for c in f]
        deg = upoly.degree(f)
        if genus is None:
            genus = (deg - 1) // 2
        return cls(genus, tuple(f))

    def __str__(self):
        return "y^2 = %s" % format_univariate(self.f)


@dataclass(frozen=True)
class GeometricModel:
    """e t^2 = F on the conic Q = 0 (coefficients rational for curves over Q)."""

    genus: int
    F: TernaryForm
    conic: TernaryForm
    t_coeff: Fraction = Fraction(1)
    birational: bool = field(default=False)

    def __post_init__(self):
        object.__setattr__(self, "t_coeff", as_fraction(self.t_coeff))
        if self.F.degree % 2:
            raise SingularInput("F must have even degree")
        if self.conic.degree != 2:
            raise SingularInput("conic must be a quadric")
        if self.F.degree != expected_degree(self.genus):
            raise SingularInput("degree %d does not match genus %d"
                                % (self.F.degree, self.genus))
        if not self.birational and self.genus % 2 == 0:
            object.__setattr__(self, "birational", True)

    @property
    def d(self):
        return self.F.degree

    def __str__(self):
        return format_geometric(self)


def expected_degree(g):
    return g + 1 if g % 2 else g + 2


def format_univariate(f, var="x"):
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = as_fraction(f[k])
        if c == 0:
            continue
        mono = "" if k == 0 else var if k == 1 else "%s^%d" % (var, k)
        mag = abs(c)
        body = (mono if mag == 1 and mono else
                "%s*%s" % (mag, mono) if mono else str(mag))
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for s, b in terms[1:]:
        out += " %s %s" % (s, b)
    return out


def format_geometric(G, t="t"):
    e = G.t_coeff
    lhs = "%s^2" % t if e == 1 else "-%s^2" % t if e == -1 else "%s*%s^2" % (e, t)
    return "%s = %s, %s = 0" % (lhs, G.F, G.conic)


def to_geometric(H):
    """Geometric model on the conic z^2 = x y.

    F is characterized by F(a^2, b^2, a b) = b^(2d-2g-2) f_hom(a, b), so each
    a_n x^n becomes the monomial with (a^2)^i (b^2)^j (a b)^l = a^n b^(2d-n).
    """
    d = expected_degree(H.genus)
    terms = {}
    for n, c in enumerate(H.f):
        if c:
            e = _monomial_for(n, 2 * d)
            terms[e] = terms.get(e, 0) + c
    Q = TernaryForm.conic_xy()
    F, _ = reduce_mod_conic(TernaryForm(terms, d), Q)
    return GeometricModel(H.genus, F, Q)


def _monomial_for(n, total):
    """Exponents of X^i Y^j Z^l with (a^2)^i (b^2)^j (a b)^l = a^n b^(total-n)."""
    m = total - n
    l = n % 2
    i = (n - l) // 2
    j = (m - l) // 2
    return (i, j, l)


def binary_form_on_conic(G, T):
    """h(s) = (F o T)(s^2, 1, s) as a coefficient list (degree <= 2d)."""
    FT = substitute_linear(G.F, T)
    d = G.d
    h = [FT.field.zero() for _ in range(2 * d + 1)]
    for (i, j, l), c in FT.terms.items():
        h[2 * i + l] = h[2 * i + l] + c
    return h


def to_hyperelliptic(G):
    """A model y^2 = f(x) of the curve, via a rational point on the conic."""
    T, _ = parametrize(G.conic)
    h = [c.to_fraction() for c in binary_form_on_conic(G, T)]
    e = G.t_coeff
    h = [e * c for c in h]
    g = G.genus
    if g % 2 == 0:
        h = _move_double_root_to_infinity(h, 2 * G.d)
    h = upoly.trim(h)
    h = _clear_square_denominators(h)
    return HyperellipticModel(g, tuple(h) + (Fraction(0),) * (2 * g + 3 - len(h)))


def _move_double_root_to_infinity(h, n):
    """Even genus: the binary form of degree n = 2g+4 has one root of
    multiplicity 2 (or 3 when it is also a ramification point)."""
    h = upoly.trim(h)
    if upoly.degree(h) <= n - 2:
        return h
    g = upoly.gcd(h, upoly.derivative(h))
    if upoly.degree(g) == 1:
        r = -g[0]
    elif upoly.degree(g) == 2 and g[1] * g[1] == 4 * g[0]:
        r = -g[1] / 2
    else:
        raise SingularInput("expected exactly one multiple root")
    return upoly.compose_mobius(h, n, r)


def _clear_square_denominators(h):
    den = 1
    for c in h:
        den = den * c.denominator // gcd(den, c.denominator)
    h = [c * den * den for c in h]
    g = 0
    for c in h:
        g = gcd(g, c.numerator)
    _, root = squarefree_part(g) if g else (1, 1)
    return [c / (root * root) for c in h]


@dataclass(frozen=True)
class GeometricReport:
    valid: bool
    genus: int
    ramification_points: int
    birational: bool
    multiplicities: dict


def validate_geometric(G):
    """Check the ramification pattern of F on the conic.

    The conic is parametrized over Q when it has a rational point and over a
    quadratic field (through sympy) otherwise; the root multiplicities of the
    pulled-back binary form do not depend on that choice.
    """
    if G.conic.is_zero():
        raise SingularInput("zero conic")
    n = 2 * G.d
    Q = G.conic.change_field(1)
    if has_rational_point(Q):
        T, _ = parametrize(Q)
        ht = upoly.trim(binary_form_on_conic(G, T))
        if not ht:
            raise SingularInput("F vanishes identically on the conic")
        at_infinity = n - upoly.degree(ht)
        mult = upoly.squarefree_multiplicities(ht)
    else:
        mult, at_infinity = _multiplicities_over_quadratic_field(G)
    if at_infinity:
        mult[at_infinity] = mult.get(at_infinity, 0) + 1
    simple = mult.get(1, 0)
    g = G.genus
    if g % 2:
        ok = mult == {1: 2 * g + 2}
    else:
        # the double point either lies off the ramification locus or on it
        ok = mult in ({1: 2 * g + 2, 2: 1}, {1: 2 * g + 1, 3: 1})
    if not ok:
        raise SingularInput("ramification pattern %s does not fit genus %d"
                            % (mult, g))
    return GeometricReport(True, g, simple, g % 2 == 0, mult)


def _multiplicities_over_quadratic_field(G):
    """Root multiplicities of F on a conic without rational points.

    With Q o T proportional to z^2 - a x^2 - b y^2, lines through the point
    (1, 0, sqrt a) give (x, y, z) = ((b n^2 - m^2)/sqrt a, 2 m n, m^2 + b n^2);
    the binary form in m is factored over Q(sqrt a).
    """
    T, a, b = diagonal_coefficients(G.conic.change_field(1))
    r = sympy.sqrt(sympy.Rational(a.numerator, a.denominator))
    bq = sympy.Rational(b.numerator, b.denominator)
    m = sympy.Symbol("m")
    param = [(bq - m ** 2) / r, 2 * m, m ** 2 + bq]
    Tq = [[sympy.Rational(x.to_fraction().numerator, x.to_fraction().denominator)
           for x in row] for row in T.rows]
    xyz = [sum(Tq[i][j] * param[j] for j in range(3)) for i in range(3)]
    h = sympy.Integer(0)
    for (i, j, l), c in G.F.terms.items():
        q = c.to_fraction()
        h += sympy.Rational(q.numerator, q.denominator) * xyz[0] ** i * xyz[1] ** j * xyz[2] ** l
    poly = sympy.Poly(sympy.expand(h), m, extension=r)
    if poly.is_zero:
        raise SingularInput("F vanishes identically on the conic")
    _, factors = poly.sqf_list()
    mult = {}
    for f, k in factors:
        if f.degree() > 0:
            mult[k] = mult.get(k, 0) + f.degree()
    return mult, 2 * G.d - poly.degree()


def normalize_model(G):
    """Primitive integral conic and form; the content of F moves into e.

    e t^2 = F with F = c F0 becomes e' t'^2 = F0 where e' is the squarefree
    part of e c (t is rescaled by a rational).
    """
    _, Q0 = primitive_rational(G.conic)
    c, F0 = primitive_rational(G.F)
    e_new, _ = squarefree_part(G.t_coeff / c)
    return GeometricModel(G.genus, F0, Q0, Fraction(e_new), G.birational)


__all__ = ["HyperellipticModel", "GeometricModel", "to_geometric",
           "to_hyperelliptic", "validate_geometric", "normalize_model",
           "format_geometric"]
