"""Shared curves, cocycles and independent oracles for the test suite."""

from fractions import Fraction
from functools import lru_cache

import sympy as sp

from hypertwist.autos import MobiusAutomorphism
from hypertwist.cocycle import Cocycle, cocycle_from_generators
from hypertwist.field import Matrix, cyclo_field, galois_group, kronecker_symbol
from hypertwist.models import HyperellipticModel

I = cyclo_field(4).zeta()
Z8 = cyclo_field(8).zeta()
Z10 = cyclo_field(10).zeta()


def hyper(coeffs, genus=None):
    return HyperellipticModel.from_coefficients(coeffs, genus)


# the three worked examples

def example1():
    H = hyper([0, 1, 0, 0, 0, 3, 0, 1])
    alpha = MobiusAutomorphism(Matrix([[1, 0], [0, -1]]), 3, I)
    return H, cocycle_from_generators(4, [(3, alpha)])


def example1_zeta8():
    """Example 1 with the automorphism as the exact matrix diag(zeta8, -zeta8)."""
    H = hyper([0, 1, 0, 0, 0, 3, 0, 1])
    alpha = MobiusAutomorphism(Matrix.diag([Z8, -Z8]), 3)
    return H, alpha


def example2():
    H = hyper([1, 0, 0, 0, 14, 0, 0, 0, 1])
    alpha = MobiusAutomorphism(Matrix([[0, -I], [I, 0]]), 3)
    return H, cocycle_from_generators(4, [(3, alpha)])


def example3_alpha():
    z = Z10
    return MobiusAutomorphism(Matrix([[1, z - 1], [z * (1 - z), -z ** 2]]), 5,
                              -20 * z ** 2 + 35 * z - 20)


def example3():
    H = hyper([0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1])
    return H, cocycle_from_generators(10, [(3, example3_alpha())])


def example3_printed_M():
    z = Z10
    return Matrix([
        [z**3 + 3*z**2 - 2*z + 6, 2*z**3 - 4*z**2 + z + 2, -8*z**3 + 6*z**2 - 4*z + 2],
        [-z**3 - 3*z**2 + 2*z + 4, 3*z**3 - z**2 - z + 3, -2*z**3 + 4*z**2 + 4*z - 2],
        [3*z**3 - z**2 + 4*z - 2, 6*z**3 - 2*z**2 + 8*z - 4, -4*z**3 - 2*z**2 - 2*z + 1],
    ]) * Fraction(1, 5)


EX3_SEXTIC = {   # x-leading normal form printed for Example 3, exponents of X, Y, Z
    (1, 5, 0): Fraction(1875, 32), (1, 4, 1): Fraction(-3125, 16),
    (1, 3, 2): Fraction(625, 2), (1, 2, 3): Fraction(-1875, 4),
    (1, 1, 4): Fraction(3125, 8), (1, 0, 5): Fraction(-625, 4),
    (0, 6, 0): Fraction(3125, 32), (0, 5, 1): Fraction(-3125, 8),
    (0, 4, 2): Fraction(24375, 32), (0, 3, 3): Fraction(-1875, 2),
    (0, 2, 4): Fraction(11875, 16), (0, 1, 5): Fraction(-625, 2),
    (0, 0, 6): Fraction(625, 8),
}
EX3_CONIC = {(2, 0, 0): 2, (1, 1, 0): 3, (1, 0, 1): -2, (0, 2, 0): 3,
             (0, 1, 1): -4, (0, 0, 2): 3}


# synthetic diagonal cocycles: sigma_a -> rho^(c(1-a)) o iota^chi(a)

def _power(A, k, N):
    out = MobiusAutomorphism.identity(A.genus, N)
    for _ in range(k):
        out = out.compose(A)
    return out


def diagonal_cocycle(curve, N, m_root, kappa, c, D):
    """rho = (x -> m_root x, y -> kappa y); chi = Kronecker character of D."""
    g = curve.genus
    rho = MobiusAutomorphism(Matrix.diag([m_root, cyclo_field(N).one()], N), g,
                             kappa.change_field(N))
    iota = MobiusAutomorphism(Matrix.identity(2, N), g, -cyclo_field(N).one())
    images = {}
    for a in galois_group(N):
        img = _power(rho, (c * (1 - a)) % N, N)
        if D != 1 and kronecker_symbol(D, a) == -1:
            img = img.compose(iota)
        images[a] = img
    return Cocycle(N, images)


def synthetic_cases():
    """Ten (label, curve, cocycle) triples at conductors 4, 5, 8 and 12."""
    F4, F5, F8, F12 = (cyclo_field(n) for n in (4, 5, 8, 12))
    one = cyclo_field(1).one()
    c4 = hyper([1, 0, 0, 0, 14, 0, 0, 0, 1])
    c5 = hyper([0, -1, 0, 0, 0, 0, 11, 0, 0, 0, 0, 1])
    c8 = hyper([1, 0, 0, 0, 0, 0, 0, 0, 1])
    c8b = hyper([0, 1, 0, 0, 0, 1])
    c12 = hyper([1, 0, 0, 0, 0, 0, 1])
    c12b = hyper([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1])
    table = [
        ("N4 c1", c4, 4, F4.zeta(), one, 1, 1),
        ("N4 c1 chi-4", c4, 4, F4.zeta(), one, 1, -4),
        ("N4 c0 chi-4", c4, 4, F4.zeta(), one, 0, -4),
        ("N5 c1", c5, 5, F5.zeta(), F5.zeta(3), 1, 1),
        ("N5 c2 chi5", c5, 5, F5.zeta(), F5.zeta(3), 2, 5),
        ("N8 c1 chi8", c8, 8, F8.zeta(), one, 1, 8),
        ("N8 c3 chi-8", c8, 8, F8.zeta(), one, 3, -8),
        ("N8 g2 c1", c8b, 8, F8.zeta(2), F8.zeta(), 1, 1),
        ("N12 g2 c1 chi-3", c12, 12, F12.zeta(2), one, 1, -3),
        ("N12 c1 chi12", c12b, 12, F12.zeta(), one, 1, 12),
    ]
    out = []
    for label, curve, N, root, kappa, c, D in table:
        out.append((label, curve, diagonal_cocycle(curve, N, root, kappa, c, D)))
    return out


# oracles

@lru_cache(maxsize=None)
def sympy_zeta(N):
    return sp.exp(2 * sp.pi * sp.I / N)


def to_complex(x):
    return complex(x.to_complex())


def random_cyclo(rng, N, bound=5, allow_zero=False):
    F = cyclo_field(N)
    while True:
        x = F([Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
               for _ in range(F.degree)])
        if allow_zero or not x.is_zero():
            return x


def squarefree_range(bound):
    out = []
    for n in range(1, bound + 1):
        if all(n % (p * p) for p in range(2, int(n ** 0.5) + 1)):
            out += [n, -n]
    return sorted(out)


def conic_solvable_by_search(a, b, bound=50):
    """Whether z^2 = a x^2 + b y^2 has a nonzero solution with entries <= bound."""
    squares = {k * k for k in range(bound + 1)}
    for x in range(bound + 1):
        for y in range(bound + 1):
            if x == 0 and y == 0:
                continue
            if a * x * x + b * y * y in squares:
                return True
    return False
