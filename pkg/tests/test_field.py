"""Cyclotomic arithmetic checked against sympy and complex embeddings."""

import random
from fractions import Fraction

import mpmath
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from hypertwist.errors import FieldMismatch
from hypertwist.field import (Matrix, change_field, cyclo_field, cyclotomic_polynomial,
                              galois_group, kronecker_symbol, reconstruct_rational,
                              sqrt_cyclotomic, sqrt_rational, squarefree_part)
from hypertwist.field.arith import prime_discriminants
from hypertwist.field.cyclotomic import euler_phi

from helpers import random_cyclo

CONDUCTORS = [4, 5, 8, 10, 12]


def elements(N):
    F = cyclo_field(N)
    coord = st.fractions(min_value=-20, max_value=20, max_denominator=7)
    return st.lists(coord, min_size=F.degree, max_size=F.degree).map(F)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sp.Symbol("x")
    expected = sp.Poly(sp.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in expected]


@pytest.mark.parametrize("N", CONDUCTORS)
def test_zeta_has_order_n(N):
    z = cyclo_field(N).zeta()
    assert (z ** N).is_one()
    for k in range(1, N):
        assert not (z ** k).is_one()


@pytest.mark.parametrize("N", CONDUCTORS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ring_operations_match_embedding(N, data):
    x = data.draw(elements(N))
    y = data.draw(elements(N))
    cx, cy = complex(x.to_complex()), complex(y.to_complex())
    assert abs(complex((x * y).to_complex()) - cx * cy) < 1e-9 * (1 + abs(cx * cy))
    assert abs(complex((x + y).to_complex()) - (cx + cy)) < 1e-9 * (1 + abs(cx + cy))
    if not y.is_zero():
        q = x / y
        assert q * y == x


@pytest.mark.parametrize("N", CONDUCTORS)
def test_galois_composes_as_group(N):
    rng = random.Random(N)
    G = galois_group(N)
    for _ in range(200):
        x = random_cyclo(rng, N, allow_zero=True)
        a, b = rng.choice(G), rng.choice(G)
        assert x.galois(b).galois(a) == x.galois(a * b % N)


@pytest.mark.parametrize("N", CONDUCTORS)
@settings(max_examples=30, deadline=None)
@given(data=st.data())
def test_galois_is_a_ring_automorphism_and_matches_embedding(N, data):
    x = data.draw(elements(N))
    y = data.draw(elements(N))
    for a in galois_group(N):
        assert (x * y).galois(a) == x.galois(a) * y.galois(a)
        assert (x + y).galois(a) == x.galois(a) + y.galois(a)
        assert abs(complex(x.galois(a).to_complex()) - complex(x.to_complex(a))) < 1e-9 * (
            1 + abs(complex(x.to_complex(a))))


@pytest.mark.parametrize("N", CONDUCTORS)
def test_norm_is_rational_and_matches_sympy(N):
    rng = random.Random(100 + N)
    x_sym = sp.Symbol("x")
    phi = sp.Poly(sp.cyclotomic_poly(N, x_sym), x_sym)
    for _ in range(10):
        x = random_cyclo(rng, N)
        poly = sp.Poly(sum(sp.Rational(c.numerator, c.denominator) * x_sym ** k
                           for k, c in enumerate(x.coords)), x_sym)
        assert x.norm() == Fraction(str(sp.resultant(phi, poly)))


def test_cross_conductor_arithmetic_raises():
    with pytest.raises(FieldMismatch):
        cyclo_field(4).zeta() == cyclo_field(8).zeta()
    with pytest.raises(FieldMismatch):
        cyclo_field(4).zeta() + cyclo_field(5).zeta()


def test_change_field_embeds_and_descends():
    i = cyclo_field(4).zeta()
    z8 = cyclo_field(8).zeta()
    assert change_field(i, 8) == z8 ** 2
    assert change_field(z8 ** 2, 4) == i
    z12 = cyclo_field(12).zeta()
    assert change_field(z12 ** 3, 4) == i
    assert change_field(z12 ** 4, 3) == cyclo_field(3).zeta()


def test_odd_conductor_embeds_in_twice_itself():
    z5 = cyclo_field(5).zeta()
    z10 = cyclo_field(10).zeta()
    assert change_field(z5, 10) == z10 ** 2


@pytest.mark.parametrize("D", [d for d in range(-40, 41)
                               if d not in (0,) and d % 4 in (0, 1)])
def test_kronecker_matches_sympy_jacobi_for_odd_moduli(D):
    for n in range(1, 60, 2):
        assert kronecker_symbol(D, n) == sp.jacobi_symbol(D, n)


def test_kronecker_at_two():
    assert [kronecker_symbol(D, 2) for D in (1, 5, 8, 17, -3, -4)] == [1, -1, 0, 1, -1, 0]


def test_squarefree_part():
    assert squarefree_part(Fraction(-72, 5)) == (-10, Fraction(6, 5))
    d, c = squarefree_part(Fraction(50, 27))
    assert (d, c * c * d) == (6, Fraction(50, 27))


def test_prime_discriminants_of_eight():
    assert set(prime_discriminants(8)) == {1, -4, 8, -8}
    assert set(prime_discriminants(12)) == {1, -3, -4, 12}


@pytest.mark.parametrize("q", [2, -1, -2, 3, -3, 5, 6, -7, 10, Fraction(3, 4),
                               Fraction(-5, 9), 105])
def test_sqrt_rational_exact_and_minimal(q):
    r, M = sqrt_rational(q)
    assert r * r == q
    d, _ = squarefree_part(Fraction(q))
    disc = d if d % 4 == 1 else 4 * d
    assert M == abs(disc)


@pytest.mark.parametrize("N", [4, 5, 8, 12])
def test_sqrt_of_squares(N):
    rng = random.Random(7 * N)
    for _ in range(8):
        x = random_cyclo(rng, N, bound=3)
        r, M = sqrt_cyclotomic(x * x)
        assert r * r == change_field(x * x, M)
        assert r == change_field(x, M) or r == -change_field(x, M)


def test_sqrt_of_root_of_unity_times_rational():
    i = cyclo_field(4).zeta()
    r, M = sqrt_cyclotomic(i * 3)
    assert M % 8 == 0
    assert r * r == change_field(i * 3, M)


def test_reconstruct_rational():
    mpmath.mp.dps = 40
    x = mpmath.mpf(355) / 113
    assert reconstruct_rational(x, 1000) == Fraction(355, 113)


def test_euler_phi():
    for n in range(1, 100):
        assert euler_phi(n) == sp.totient(n)


def test_matrix_inverse_and_det():
    rng = random.Random(3)
    for _ in range(20):
        A = Matrix([[random_cyclo(rng, 8, allow_zero=True) for _ in range(3)]
                    for _ in range(3)], 8)
        if A.det().is_zero():
            continue
        assert A @ A.inverse() == Matrix.identity(3, 8)
        B = Matrix([[random_cyclo(rng, 8, allow_zero=True) for _ in range(3)]
                    for _ in range(3)], 8)
        assert (A @ B).det() == A.det() * B.det()
