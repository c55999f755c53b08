"""Integer and rational helpers: Kronecker symbols, squarefree parts,
fundamental discriminants and rational reconstruction."""

from fractions import Fraction
from math import isqrt

from sympy import factorint

from ..errors import InvalidInput


def as_fraction(q):
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q.strip())
    raise TypeError("not a rational: %r" % (q,))


def factor(n):
    """Prime factorization of a nonzero integer as {p: exponent} (sign dropped)."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    if n == 1:
        return {}
    return {int(p): int(k) for p, k in factorint(n).items()}


def prime_support(q):
    """Primes dividing the numerator or denominator of a rational."""
    q = as_fraction(q)
    return sorted(set(factor(q.numerator)) | set(factor(q.denominator)))


def kronecker_symbol(D, n):
    """Kronecker symbol (D/n) for arbitrary integers D, n."""
    D, n = int(D), int(n)
    if n == 0:
        return 1 if abs(D) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if D < 0:
            result = -result
    # factor out powers of two
    v = (n & -n).bit_length() - 1
    n >>= v
    if v:
        if D % 2 == 0:
            return 0
        if v % 2 and D % 8 in (3, 5):
            result = -result
    # Jacobi symbol (D/n) with n odd and positive
    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def squarefree_part(q):
    """Write q = d*c^2 with d a squarefree integer of the sign of q and c > 0.

    >>> squarefree_part(18)
    (2, Fraction(3, 1))
    """
    q = as_fraction(q)
    if q == 0:
        raise InvalidInput("squarefree part of 0")
    m = q.numerator * q.denominator
    d = -1 if m < 0 else 1
    for p, k in factor(m).items():
        if k % 2:
            d *= p
    c2 = q / d
    num, den = isqrt(c2.numerator), isqrt(c2.denominator)
    assert num * num == c2.numerator and den * den == c2.denominator
    return d, Fraction(num, den)


def is_rational_square(q):
    q = as_fraction(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rational_sqrt(q):
    """Exact nonnegative square root of a rational square."""
    q = as_fraction(q)
    if not is_rational_square(q):
        raise ValueError("%s is not a square in Q" % q)
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


def fundamental_discriminant(d):
    """Discriminant of Q(sqrt(d)) for a squarefree integer d != 1."""
    return d if d % 4 == 1 else 4 * d


def prime_discriminants(m):
    """Fundamental discriminants of conductor dividing m, as a list of ints.

    Every fundamental discriminant is a product of the prime discriminants
    -4, 8, -8 and p* = (-1)^((p-1)/2) p; at most one of the 2-adic ones.
    """
    m = abs(int(m))
    odd = [p if p % 4 == 1 else -p for p in factor(m) if p != 2] if m > 1 else []
    twos = [1]
    if m % 4 == 0:
        twos.append(-4)
    if m % 8 == 0:
        twos += [8, -8]
    out = []
    for mask in range(1 << len(odd)):
        base = 1
        for k, p in enumerate(odd):
            if mask >> k & 1:
                base *= p
        for t in twos:
            out.append(base * t)
    return sorted(set(out), key=lambda D: (abs(D), D))


def reconstruct_rational(x, H, tol=None):
    """Best rational approximation of x with denominator at most H.

    ``x`` may be anything ``Fraction`` accepts, or an mpmath real (converted
    exactly through its binary representation). If ``tol`` is given, return
    None when the approximation is farther than ``tol`` from x.
    """
    exact = _exact_real(x)
    r = exact.limit_denominator(int(H))
    if tol is not None and abs(exact - r) > tol:
        return None
    return r


def _exact_real(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    raw = getattr(x, "_mpf_", None)
    if raw is not None:  # mpmath.mpf: (sign, mantissa, exponent, bitcount)
        sign, man, exp, _ = raw
        if not man and exp:
            raise ValueError("not a finite real: %r" % (x,))
        val = Fraction(int(man)) * (Fraction(2) ** int(exp))
        return -val if sign else val
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(str(x))
