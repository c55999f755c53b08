"""Ternary forms: substitution against sympy expansion, reduction modulo a conic."""

import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertwist.field import Matrix, cyclo_field, galois_group
from hypertwist.mpoly import (TernaryForm, format_form, monomials, order_xyz,
                              primitive_rational, proportionality_scalar,
                              reduce_mod_conic, substitute_linear)

from helpers import random_cyclo

X, Y, Z = sp.symbols("X Y Z")


def to_sympy(f):
    return sp.Add(*[sp.Rational(c.to_fraction().numerator, c.to_fraction().denominator)
                    * X ** i * Y ** j * Z ** l for (i, j, l), c in f.terms.items()])


def from_sympy(expr, degree):
    p = sp.Poly(sp.expand(expr), X, Y, Z)
    return TernaryForm({m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()}, degree)


def rational_forms(degree):
    coeff = st.integers(-9, 9)
    return st.lists(coeff, min_size=len(monomials(degree)),
                    max_size=len(monomials(degree))).map(
        lambda cs: TernaryForm(dict(zip(monomials(degree), cs)), degree))


rational_matrices = st.lists(st.integers(-4, 4), min_size=9, max_size=9).map(
    lambda v: Matrix([v[0:3], v[3:6], v[6:9]]))


@settings(max_examples=60, deadline=None)
@given(f=rational_forms(3), A=rational_matrices)
def test_substitution_matches_sympy(f, A):
    r = [[int(A[i, j].to_fraction()) for j in range(3)] for i in range(3)]
    lin = [r[k][0] * X + r[k][1] * Y + r[k][2] * Z for k in range(3)]
    expected = sp.expand(to_sympy(f).subs({X: lin[0], Y: lin[1], Z: lin[2]},
                                          simultaneous=True))
    got = substitute_linear(f, A)
    assert sp.expand(to_sympy(got) - expected) == 0


def random_form(rng, degree, N):
    return TernaryForm({m: random_cyclo(rng, N, bound=3, allow_zero=True)
                        for m in monomials(degree)}, degree, N)


def random_matrix(rng, N):
    return Matrix([[random_cyclo(rng, N, bound=2, allow_zero=True) for _ in range(3)]
                   for _ in range(3)], N)


def test_substitution_is_multiplicative_and_compatible_with_evaluation():
    rng = random.Random(11)
    N = 8
    for _ in range(100):
        f, g = random_form(rng, 2, N), random_form(rng, 2, N)
        A = random_matrix(rng, N)
        assert substitute_linear(f * g, A) == substitute_linear(f, A) * substitute_linear(g, A)
    # evaluation oracle: (f o A)(p) = f(A p)
    for _ in range(10):
        f, A = random_form(rng, 3, N), random_matrix(rng, N)
        p = [random_cyclo(rng, N, bound=3, allow_zero=True) for _ in range(3)]
        assert substitute_linear(f, A)(*p) == f(*(A @ p))


def test_substitution_is_galois_equivariant():
    rng = random.Random(12)
    for N in (5, 8, 12):
        for _ in range(10):
            f, A = random_form(rng, 2, N), random_matrix(rng, N)
            for a in galois_group(N):
                assert substitute_linear(f, A).galois(a) == substitute_linear(f.galois(a), A.galois(a))


def test_substitution_composes():
    rng = random.Random(13)
    f = random_form(rng, 4, 4)
    A, B = random_matrix(rng, 4), random_matrix(rng, 4)
    assert substitute_linear(substitute_linear(f, A), B) == substitute_linear(f, A @ B)


@pytest.mark.parametrize("seed", range(10))
def test_reduction_identity_against_sympy(seed):
    rng = random.Random(seed)
    f = TernaryForm({m: rng.randint(-5, 5) for m in monomials(6)}, 6)
    Q = TernaryForm({m: rng.randint(-3, 3) for m in monomials(2)}, 2)
    if Q.is_zero():
        return
    nf, q = reduce_mod_conic(f, Q)
    assert sp.expand(to_sympy(f) - to_sympy(nf) - to_sympy(q) * to_sympy(Q)) == 0
    lm, _ = Q.leading_term()
    for e in nf.terms:
        assert not all(e[k] >= lm[k] for k in range(3))


def test_reduction_normal_form_is_canonical():
    Q = TernaryForm.conic_xy()
    rng = random.Random(5)
    f = random_form(rng, 4, 1)
    h = random_form(rng, 2, 1)
    a, _ = reduce_mod_conic(f, Q)
    b, _ = reduce_mod_conic(f + h * Q, Q)
    assert a == b


def test_reduction_with_xyz_order():
    Q = TernaryForm({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 2}, 2)
    f = TernaryForm({(4, 0, 0): 1}, 4)
    nf, _ = reduce_mod_conic(f, Q, order_xyz)
    assert all(e[0] < 2 for e in nf.terms)
    assert sp.expand(to_sympy(nf) - (Y ** 2 + 2 * Z ** 2) ** 2) == 0


def test_proportionality_scalar():
    Q = TernaryForm.conic_xy()
    f = from_sympy(X ** 2 + Y * Z, 2)
    i = cyclo_field(4).zeta()
    g = f.change_field(4) * i
    assert proportionality_scalar(g, f, Q) == i
    assert proportionality_scalar(f + Q * 5, f, Q) == 1
    assert proportionality_scalar(from_sympy(X ** 2, 2), f, Q) is None


def test_primitive_rational_and_format():
    f = from_sympy(Fraction(-4, 3) * X ** 2 + 2 * Y * Z, 2)
    c, f0 = primitive_rational(f)
    assert f0 * c == f
    assert all(x.to_fraction().denominator == 1 for x in f0.terms.values())
    assert format_form(from_sympy(Y ** 3 * Z + 3 * X ** 2 * Y * Z + X ** 3 * Z, 4)) \
        == "Y^3*Z + 3*X^2*Y*Z + X^3*Z"


def test_rejects_inhomogeneous_terms():
    with pytest.raises(ValueError):
        TernaryForm({(1, 0, 0): 1, (2, 0, 0): 1})
