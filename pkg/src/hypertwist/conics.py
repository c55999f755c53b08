"""Conics over Q: local symbols, rational points and parametrizations.

A conic is a rational ternary quadric. Points are found on the diagonal
form z^2 = a x^2 + b y^2 by Lagrange's descent, after a Hilbert-symbol
solvability check.
"""

import math
from fractions import Fraction

from sympy.ntheory import sqrt_mod

from .errors import DegenerateConic, NoRationalPoint
from .field.arith import as_fraction, factor, prime_support, squarefree_part
from .field.cyclotomic import common_conductor, cyclo_field
from .field.matrix import Matrix
from .field.sqrt import sqrt_rational
from .mpoly import TernaryForm, substitute_linear, symmetric_matrix

INF = "inf"


def _square_class_int(q):
    q = as_fraction(q)
    return q.numerator * q.denominator


def _split(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u, p):
    t = pow(u % p, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def hilbert_symbol(a, b, p):
    """Hilbert symbol (a, b)_p; ``p`` is a prime or ``"inf"``."""
    a, b = _square_class_int(a), _square_class_int(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol of zero")
    if p in (INF, math.inf, None, 0):
        return -1 if a < 0 and b < 0 else 1
    p = int(p)
    al, u = _split(a, p)
    be, v = _split(b, p)
    if p == 2:
        def eps(w):
            return ((w - 1) // 2) % 2

        def omega(w):
            return ((w * w - 1) // 8) % 2
        e = eps(u) * eps(v) + al * omega(v) + be * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if (al * be * ((p - 1) // 2)) % 2 else 1
    return sign * _legendre(u, p) ** be * _legendre(v, p) ** al


def bad_places(a, b):
    return [INF, 2] + [p for p in sorted(set(prime_support(a)) | set(prime_support(b)))
                       if p != 2]


def is_quaternion_trivial(a, b):
    """True iff z^2 = a x^2 + b y^2 has a nontrivial rational solution."""
    return all(hilbert_symbol(a, b, p) == 1 for p in bad_places(a, b))


def solve_conic(a, b):
    """A nontrivial rational (x, y, z) with z^2 = a x^2 + b y^2, or None.

    The returned triple is integral and primitive.
    """
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ValueError("degenerate diagonal conic")
    if not is_quaternion_trivial(a, b):
        return None
    da, ca = squarefree_part(a)
    db, cb = squarefree_part(b)
    X, Y, Z = _lagrange(da, db)
    sol = [Fraction(X) / ca, Fraction(Y) / cb, Fraction(Z)]
    sol = _primitive(sol)
    x, y, z = sol
    assert z * z == a * x * x + b * y * y and any(sol)
    return tuple(sol)


def _primitive(v):
    den = 1
    for q in v:
        den = den * q.denominator // math.gcd(den, q.denominator)
    ints = [int(q * den) for q in v]
    g = 0
    for n in ints:
        g = math.gcd(g, n)
    return [Fraction(n, g) for n in ints]


def _lagrange(a, b):
    """Integer solution of z^2 = a x^2 + b y^2 for squarefree a, b (solvable)."""
    if a == 1:
        return 1, 0, 1
    if b == 1:
        return 0, 1, 1
    if abs(a) > abs(b):
        y, x, z = _lagrange(b, a)
        return x, y, z
    if abs(b) == 1:
        raise AssertionError("unsolvable conic reached the descent")
    m = abs(b)
    t = sqrt_mod(a % m, m)
    if t is None:
        raise AssertionError("no square root of %d mod %d" % (a, m))
    if t > m // 2:
        t -= m
    k, r = divmod(t * t - a, b)
    assert r == 0 and k != 0
    k0, s = squarefree_part(k)
    s = int(s)
    x0, y0, z0 = _lagrange(a, k0)
    # (z0 + x0 sqrt a)(t + sqrt a) has norm b (k0 y0 s)^2
    return z0 + x0 * t, k0 * y0 * s, z0 * t + a * x0


# general ternary quadrics

def diagonalize(Q):
    """Rational T and diagonal entries d with Q o T = d0 x^2 + d1 y^2 + d2 z^2."""
    S = symmetric_matrix(Q)
    T = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]

    def apply(E):
        # S <- E^T S E, T <- T E
        nonlocal S, T
        S = _mul(_mul(_transpose(E), S), E)
        T = _mul(T, E)

    for k in range(3):
        if S[k][k] == 0:
            j = next((j for j in range(k + 1, 3) if S[j][j] != 0), None)
            if j is not None:
                E = _identity()
                E[k][k] = E[j][j] = Fraction(0)
                E[k][j] = E[j][k] = Fraction(1)
                apply(E)
            else:
                j = next((j for j in range(k + 1, 3) if S[k][j] != 0), None)
                if j is None:
                    continue
                E = _identity()
                E[j][k] = Fraction(1)
                apply(E)
        for j in range(k + 1, 3):
            if S[k][j] != 0:
                E = _identity()
                E[k][j] = -S[k][j] / S[k][k]
                apply(E)
    d = [S[k][k] for k in range(3)]
    assert all(S[i][j] == 0 for i in range(3) for j in range(3) if i != j)
    return Matrix(T), d


def _identity():
    return [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]


def _transpose(A):
    return [list(r) for r in zip(*A)]


def _mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)]
            for i in range(3)]


def diagonal_coefficients(Q):
    """(T, a, b) with Q o T proportional to z^2 - a x^2 - b y^2."""
    T, d = diagonalize(Q)
    if any(x == 0 for x in d):
        raise DegenerateConic("conic %s is singular" % Q)
    return T, -d[0] / d[2], -d[1] / d[2]


def is_smooth(Q):
    S = symmetric_matrix(Q)
    return Matrix(S).det() != 0


def find_rational_point(Q):
    """A rational point on the conic Q = 0, or None."""
    T, a, b = diagonal_coefficients(Q)
    sol = solve_conic(a, b)
    if sol is None:
        return None
    P = [x.to_fraction() for x in T @ list(sol)]
    P = _primitive(P)
    assert Q(*[cyclo_field(1).rational(c) for c in P]).is_zero()
    return tuple(P)


def has_rational_point(Q):
    _, a, b = diagonal_coefficients(Q)
    return is_quaternion_trivial(a, b)


def has_hyperelliptic_model(G):
    """Whether a geometric model (or a bare conic) admits a model y^2 = f(x)."""
    Q = G if isinstance(G, TernaryForm) else G.conic
    return has_rational_point(Q)


def quadratic_point(Q):
    """A point on Q over Q(sqrt a) for a small a, as CycloElt coordinates."""
    T, a, b = diagonal_coefficients(Q)
    ra, Ma = sqrt_rational(a)
    rb, Mb = sqrt_rational(b)
    if Ma <= Mb:
        v, M = [1, 0, ra], Ma
    else:
        v, M = [0, 1, rb], Mb
    return T.change_field(M) @ v


def parametrize_from_point(Q, P):
    """T (over the field of P) and c with Q o T = c (z^2 - x y).

    Lines through P sweep out the conic: the second intersection point on
    the line through P in direction a U + b V is quadratic in (a, b).
    """
    P = list(P)
    N = common_conductor(*[getattr(x, "N", 1) for x in P])
    F = cyclo_field(N)
    P = [x.change_field(N) if hasattr(x, "N") else F.rational(x) for x in P]
    S = symmetric_matrix(Q)

    def bil(u, v):
        acc = F.zero()
        for i in range(3):
            for j in range(3):
                if S[i][j] and not u[i].is_zero() and not v[j].is_zero():
                    acc = acc + u[i] * v[j] * S[i][j]
        return acc

    basis = [[F.rational(int(i == j)) for i in range(3)] for j in range(3)]
    U = V = None
    for i in range(3):
        for j in range(i + 1, 3):
            if Matrix([P, basis[i], basis[j]], N).det() != 0:
                U, V = basis[i], basis[j]
                break
        if U is not None:
            break
    BU, BV, BUV = bil(P, U), bil(P, V), bil(U, V)
    QU, QV = bil(U, U), bil(V, V)
    col_a2 = [2 * BU * U[k] - QU * P[k] for k in range(3)]
    col_b2 = [2 * BV * V[k] - QV * P[k] for k in range(3)]
    col_ab = [2 * BU * V[k] + 2 * BV * U[k] - 2 * BUV * P[k] for k in range(3)]
    T = Matrix([[col_a2[k], col_b2[k], col_ab[k]] for k in range(3)], N)
    QT = substitute_linear(Q, T)
    c = QT.coefficient((0, 0, 2))
    if c.is_zero() or QT != TernaryForm.conic_xy().change_field(N) * c:
        raise DegenerateConic("conic %s could not be parametrized" % Q)
    return T, c


def parametrize(Q, allow_quadratic=False):
    """(T, c) with Q o T = c (z^2 - x y); T rational when possible."""
    if Q == TernaryForm.conic_xy():
        return Matrix.identity(3), cyclo_field(1).one()
    P = find_rational_point(Q)
    if P is not None:
        return parametrize_from_point(Q, P)
    if not allow_quadratic:
        raise NoRationalPoint("conic %s has no rational point" % Q)
    return parametrize_from_point(Q, quadratic_point(Q))


__all__ = ["hilbert_symbol", "is_quaternion_trivial", "solve_conic",
           "diagonalize", "find_rational_point", "has_rational_point",
           "has_hyperelliptic_model", "parametrize", "parametrize_from_point",
           "quadratic_point", "factor"]
