"""Twists of y^2 = x^8 - 14x^4 + 1 parametrized by cubics T^3 + pT^2 + qT - A^4.

For a cubic with roots alpha and a squarefree e, the twist is

    e t^2 = sum alpha^2 (x + alpha y + alpha^2 z)^4,
        0 = sum alpha   (x + alpha y + alpha^2 z)^2.

Expanding, the coefficient of x^i y^j z^l is a multinomial times the power
sum p_{2+j+2l} (resp. p_{1+j+2l}), so the equations are rational without
ever computing the roots.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from sympy import integer_nthroot

from .conics import is_smooth
from .errors import ConstantNotMinusFourthPower, DegenerateConic, InvalidInput, NotSeparable
from .field.arith import as_fraction
from .models import GeometricModel, validate_geometric
from .mpoly import TernaryForm, monomials

MAX_POWER = 10


@dataclass(frozen=True)
class Pol34:
    p: Fraction
    q: Fraction
    r: Fraction
    A: Fraction

    @property
    def coefficients(self):
        return (Fraction(1), self.p, self.q, self.r)


def discriminant(p, q, r):
    return p * p * q * q - 4 * q ** 3 - 4 * p ** 3 * r - 27 * r * r + 18 * p * q * r


def _fourth_root(x):
    if x <= 0:
        return None
    a, ok_a = integer_nthroot(x.numerator, 4)
    b, ok_b = integer_nthroot(x.denominator, 4)
    return Fraction(a, b) if ok_a and ok_b else None


def validate_pol34(cubic):
    """Check a cubic (coefficients from the leading one down) lies in Pol_3^4."""
    c = [as_fraction(x) for x in cubic]
    while c and c[0] == 0:
        c.pop(0)
    if len(c) != 4:
        raise InvalidInput("expected a cubic, got %d coefficients" % len(c))
    lead = c[0]
    p, q, r = (x / lead for x in c[1:])
    if discriminant(p, q, r) == 0:
        raise NotSeparable("cubic has a repeated root")
    A = _fourth_root(-r)
    if A is None:
        raise ConstantNotMinusFourthPower("constant term %s is not -A^4" % r)
    return Pol34(p, q, r, A)


def power_sums(p, q, r, up_to):
    """p_0 .. p_k of the roots of T^3 + pT^2 + qT + r (Newton's identities)."""
    e1, e2, e3 = -as_fraction(p), as_fraction(q), -as_fraction(r)
    out = [Fraction(3), e1, e1 * e1 - 2 * e2]
    if up_to >= 3:
        out.append(e1 * out[2] - e2 * out[1] + 3 * e3)
    for k in range(4, up_to + 1):
        out.append(e1 * out[k - 1] - e2 * out[k - 2] + e3 * out[k - 3])
    return out[:up_to + 1]


def _multinomial(n, ks):
    out = factorial(n)
    for k in ks:
        out //= factorial(k)
    return out


def s4_forms(P):
    """(quartic, quadric) as rational ternary forms."""
    ps = power_sums(P.p, P.q, P.r, MAX_POWER)
    quartic = {m: _multinomial(4, m) * ps[2 + m[1] + 2 * m[2]] for m in monomials(4)}
    quadric = {m: _multinomial(2, m) * ps[1 + m[1] + 2 * m[2]] for m in monomials(2)}
    return TernaryForm(quartic, 4), TernaryForm(quadric, 2)


def s4_twist(P, e):
    """The genus-3 model {e t^2 = quartic, quadric = 0}."""
    e = as_fraction(e)
    if e == 0:
        raise InvalidInput("e must be nonzero")
    quartic, quadric = s4_forms(P)
    if not (quartic.is_rational() and quadric.is_rational()):
        raise AssertionError("power-sum expansion produced irrational coefficients")
    if not is_smooth(quadric):
        raise DegenerateConic("the quadric of %s has rank < 3" % (P.coefficients,))
    G = GeometricModel(3, quartic, quadric, e)
    validate_geometric(G)
    return G


__all__ = ["Pol34", "validate_pol34", "power_sums", "s4_forms", "s4_twist",
           "discriminant"]
