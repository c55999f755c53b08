"""The S4 family: power sums against literal substitution over the roots."""

import random
from fractions import Fraction

import pytest
import sympy as sp

from hypertwist.errors import ConstantNotMinusFourthPower, InvalidInput, NotSeparable
from hypertwist.models import validate_geometric
from hypertwist.s4 import power_sums, s4_forms, s4_twist, validate_pol34

X, Y, Z, T = sp.symbols("X Y Z T")


def literal_forms(roots):
    quartic = sp.expand(sum(a ** 2 * (X + a * Y + a ** 2 * Z) ** 4 for a in roots))
    quadric = sp.expand(sum(a * (X + a * Y + a ** 2 * Z) ** 2 for a in roots))
    return quartic, quadric


def as_sympy(f):
    return sp.Add(*[sp.Rational(c.to_fraction().numerator, c.to_fraction().denominator)
                    * X ** i * Y ** j * Z ** l for (i, j, l), c in f.terms.items()])


def random_rational_root_cubic(rng):
    while True:
        A = Fraction(rng.randint(1, 4), rng.randint(1, 3))
        r1 = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
        r2 = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
        r3 = A ** 4 / (r1 * r2)
        if len({r1, r2, r3}) == 3:
            return [r1, r2, r3]


def cubic_from_roots(roots):
    r1, r2, r3 = roots
    return [1, -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3]


@pytest.mark.parametrize("seed", range(10))
def test_power_sums_match_literal_substitution(seed):
    rng = random.Random(seed)
    roots = random_rational_root_cubic(rng)
    P = validate_pol34(cubic_from_roots(roots))
    quartic, quadric = s4_forms(P)
    lq, lc = literal_forms([sp.Rational(r.numerator, r.denominator) for r in roots])
    assert sp.expand(as_sympy(quartic) - lq) == 0
    assert sp.expand(as_sympy(quadric) - lc) == 0
    G = s4_twist(P, rng.choice([1, -1, 2, -3, 5]))
    assert validate_geometric(G).valid


def test_power_sums_newton():
    ps = power_sums(Fraction(-11), Fraction(26), Fraction(-16), 5)
    roots = [1, 2, 8]
    assert ps == [sum(r ** k for r in roots) for k in range(6)]


IRREDUCIBLE = [[1, 0, 1, -1], [1, 1, 0, -16], [1, -2, 3, -81], [1, 5, -7, -1],
               [1, Fraction(1, 2), 3, Fraction(-1, 16)]]


@pytest.mark.parametrize("cubic", IRREDUCIBLE)
def test_irreducible_cubics(cubic):
    poly = sp.Poly([sp.nsimplify(str(c)) for c in cubic], T)
    assert poly.is_irreducible
    P = validate_pol34(cubic)
    G = s4_twist(P, -1)
    assert G.F.is_rational() and G.conic.is_rational()
    assert validate_geometric(G).valid
    # numeric oracle over the complex roots
    roots = [complex(r) for r in sp.Poly(poly, T).nroots(n=40)]
    point = (0.3, -1.1, 0.7)
    x, y, z = point

    def num(f):
        return sum(complex(c.to_fraction()) * x ** i * y ** j * z ** l
                   for (i, j, l), c in f.terms.items())
    expected = sum(a ** 2 * (x + a * y + a * a * z) ** 4 for a in roots)
    assert abs(num(G.F) - expected) < 1e-8 * max(1, abs(expected))


def test_rejections():
    with pytest.raises(ConstantNotMinusFourthPower):
        validate_pol34([1, 0, -1, 0])
    with pytest.raises(ConstantNotMinusFourthPower):
        validate_pol34([1, 0, 0, -2])
    with pytest.raises(NotSeparable):
        validate_pol34(cubic_from_roots([Fraction(1), Fraction(1), Fraction(1)]))
    with pytest.raises(InvalidInput):
        validate_pol34([1, 2, 3])
    P = validate_pol34([1, -11, 26, -16])
    assert P.A == 2
    with pytest.raises(InvalidInput):
        s4_twist(P, 0)


def test_leading_coefficient_is_normalized():
    assert validate_pol34([2, -22, 52, -32]) == validate_pol34([1, -11, 26, -16])
