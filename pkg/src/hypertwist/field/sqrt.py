"""Square roots in the cyclotomic tower.

``sqrt_rational`` builds square roots of rationals from Gauss sums, so it is
exact and needs no search. ``sqrt_cyclotomic`` handles a general element:
if v = r * gamma^k * c^2 with r rational, gamma a generator of the roots of
unity of Q(zeta_N) and c in Q(zeta_N), then sqrt(v) lives in a cyclotomic
field. The factor c is found numerically and then verified exactly.
"""

import itertools
import random
from fractions import Fraction
from functools import lru_cache

import mpmath
from sympy import isprime

from ..errors import NotFoundInCyclotomicTower
from .arith import (as_fraction, factor, fundamental_discriminant,
                    is_rational_square, kronecker_symbol, prime_support,
                    rational_sqrt, reconstruct_rational, squarefree_part)
from .cyclotomic import (change_field, common_conductor, cyclo_field,
                         euler_phi, galois_group)

DEFAULT_PRECISION = 256
DEFAULT_HEIGHT = 2 ** 48
DEFAULT_CAP = 64          # largest admissible phi(M)
PRIME_BOUND = 97          # primes considered when decomposing v
NUMERIC_DEGREE_CAP = 24   # sign-pattern search is exponential in phi(N)/2


def normalize_sign(x):
    """Return +x or -x, whichever has positive first nonzero coordinate."""
    for c in x.nums:
        if c:
            return x if c > 0 else -x
    return x


@lru_cache(maxsize=None)
def gauss_sum(p):
    """sum_a (a/p) zeta_p^a; its square is p* = (-1)^((p-1)/2) p."""
    F = cyclo_field(p)
    acc = F.zero()
    for a in range(1, p):
        acc = acc + F.zeta(a) * kronecker_symbol(a, p)
    return acc


def _sqrt_squarefree(d):
    """(root, conductor) with root^2 = d for a squarefree integer d."""
    if d == 1:
        return cyclo_field(1).one(), 1
    parts = []
    sign = 1
    for p in sorted(factor(d)):
        if p == 2:
            continue
        parts.append(gauss_sum(p))
        if p % 4 == 3:
            sign = -sign
    want = -1 if d < 0 else 1
    if d % 2 == 0:
        z8 = cyclo_field(8).zeta()
        if sign == want:
            parts.append(z8 - z8 ** 3)      # sqrt(2)
        else:
            parts.append(z8 + z8 ** 3)      # sqrt(-2)
            sign = -sign
    if sign != want:
        parts.append(cyclo_field(4).zeta())  # sqrt(-1)
    M = common_conductor(*[x.N for x in parts])
    root = cyclo_field(M).one()
    for x in parts:
        root = root * change_field(x, M)
    assert M == abs(fundamental_discriminant(d))
    return root, M


def sqrt_rational(q):
    """Exact square root of a nonzero rational in its minimal cyclotomic field.

    Returns (root, M) with root at conductor M = |disc Q(sqrt q)| (1 for
    squares) and sign normalized.
    """
    q = as_fraction(q)
    d, c = squarefree_part(q)
    root, M = _sqrt_squarefree(d)
    root = normalize_sign(root * c)
    assert root * root == q
    return root, M


def _sqrt_root_of_unity(N, k):
    """(root, M) with root^2 = zeta_N^k."""
    k %= N
    if k % 2 == 0:
        return cyclo_field(N).zeta(k // 2), N
    if N % 2 == 1:
        return cyclo_field(N).zeta((k + N) // 2), N
    return cyclo_field(2 * N).zeta(k), 2 * N


def sqrt_cyclotomic(v, hint=None, precision=DEFAULT_PRECISION,
                    cap=DEFAULT_CAP):
    """Square root of v in some Q(zeta_M) with N | M.

    Returns (root, M) where root is at conductor M, root^2 equals v exactly
    and the sign convention of :func:`normalize_sign` applies. ``hint`` may
    be an element c of the field of v with v*c^2 rational; the root is then
    read off directly. Raises NotFoundInCyclotomicTower when no root is
    found with phi(M) <= cap.
    """
    if v.is_zero():
        raise ValueError("square root of zero requested")
    N = v.N
    if v.is_rational():
        root, M = sqrt_rational(v.to_fraction())
        return _finish(v, root, common_conductor(N, M), cap)

    if hint is not None:
        r = v * hint * hint
        if not r.is_rational():
            raise ValueError("hint does not move v into Q")
        rr, Mr = sqrt_rational(r.to_fraction())
        M = common_conductor(N, Mr)
        root = change_field(rr, M) / change_field(hint, M)
        return _finish(v, root, M, cap)

    # fast path: v = q * zeta_N^k
    F = v.field
    for k in range(N):
        w = v * F.zeta(-k)
        if w.is_rational():
            rq, Mq = sqrt_rational(w.to_fraction())
            rz, Mz = _sqrt_root_of_unity(N, k)
            M = common_conductor(N, Mq, Mz)
            root = change_field(rq, M) * change_field(rz, M)
            return _finish(v, root, M, cap)

    for r, k, M in _decomposition_candidates(v, cap):
        gamma = F.zeta() if N % 2 == 0 else -F.zeta()
        s = v / (gamma ** k * r)
        c = field_sqrt(s, precision)
        if c is None:
            continue
        rr, _ = sqrt_rational(r)
        root = change_field(rr, M) * change_field(c, M)
        if k:
            root = root * cyclo_field(2 * N).zeta().change_field(M)
        return _finish(v, root, M, cap)
    raise NotFoundInCyclotomicTower(
        "no square root of %s found in Q(zeta_M) with phi(M) <= %d" % (v, cap))


def _finish(v, root, M, cap):
    if euler_phi(M) > cap:
        raise NotFoundInCyclotomicTower(
            "square root of %s needs conductor %d beyond the cap" % (v, M))
    root = normalize_sign(change_field(root, M))
    if root * root != change_field(v, M):
        raise AssertionError("square root verification failed")
    return root, M


def _decomposition_candidates(v, cap):
    N = v.N
    primes = {2} | set(factor(N)) if N > 1 else {2}
    primes |= {p for p in prime_support(v.norm()) if p <= PRIME_BOUND}
    primes = sorted(primes)
    ks = (0, 1) if N % 2 == 0 else (0,)
    out = []
    for n in range(len(primes) + 1):
        for subset in itertools.combinations(primes, n):
            base = 1
            for p in subset:
                base *= p
            for r in (base, -base):
                M_r = 1 if r == 1 else abs(fundamental_discriminant(r))
                for k in ks:
                    M = common_conductor(N, M_r, 2 * N if k else 1)
                    if euler_phi(M) > cap:
                        continue
                    out.append((euler_phi(M), abs(r), r < 0, k, r, M))
    out.sort()
    return [(r, k, M) for _, _, _, k, r, M in out]


# squareness inside a fixed field

def field_sqrt(s, precision=DEFAULT_PRECISION):
    """Some c in the field of s with c^2 = s, or None if s is not a square."""
    N = s.N
    if s.is_rational():
        q = s.to_fraction()
        if is_rational_square(q):
            return s.field.rational(rational_sqrt(q))
        return None
    if not _passes_residue_sieve(s):
        return None
    phi = s.field.degree
    if phi > NUMERIC_DEGREE_CAP:
        return None
    for prec in (precision, 2 * precision):
        c = _numeric_sqrt(s, prec)
        if c is not None:
            return c
    return None


@lru_cache(maxsize=None)
def _sieve_primes(N, count=4):
    """Primes p = 1 mod N with a primitive N-th root of unity mod p."""
    out = []
    p = 1 + N * (1 + 1000 // N)
    while len(out) < count:
        if isprime(p):
            rng = random.Random(p)
            while True:
                h = rng.randrange(2, p - 1)
                r = pow(h, (p - 1) // N, p)
                if all(pow(r, N // q, p) != 1 for q in factor(N)):
                    break
            out.append((p, r))
        p += N
    return tuple(out)


def _passes_residue_sieve(s):
    """Necessary condition: s is a square modulo every split prime tested."""
    N = s.N
    for p, r in _sieve_primes(N):
        if s.den % p == 0:
            continue
        den_inv = pow(s.den, -1, p)
        for a in galois_group(N):
            ra = pow(r, a, p)
            val = 0
            x = 1
            for c in s.nums:
                val = (val + c * x) % p
                x = x * ra % p
            val = val * den_inv % p
            if val and pow(val, (p - 1) // 2, p) != 1:
                return False
    return True


@lru_cache(maxsize=None)
def _embedding_data(N, prec):
    with mpmath.workprec(prec):
        reps = galois_group(N)
        phi = len(reps)
        V = mpmath.matrix(phi, phi)
        for row, a in enumerate(reps):
            z = mpmath.expjpi(mpmath.mpf(2 * a) / N)
            for k in range(phi):
                V[row, k] = z ** k
        return reps, V ** -1


def _numeric_sqrt(s, prec):
    N = s.N
    reps, Vinv = _embedding_data(N, prec)
    phi = len(reps)
    index = {a: n for n, a in enumerate(reps)}
    half = [a for a in reps if 2 * a < N]
    tol = Fraction(1, 2 ** (prec // 2))
    with mpmath.workprec(prec):
        roots = {a: mpmath.sqrt(s.to_complex(a)) for a in half}
        for signs in itertools.product((1, -1), repeat=max(len(half) - 1, 0)):
            signs = (1,) + signs
            w = mpmath.matrix(phi, 1)
            for sg, a in zip(signs, half):
                w[index[a], 0] = sg * roots[a]
                w[index[N - a], 0] = mpmath.conj(sg * roots[a])
            x = Vinv * w
            coords = []
            for k in range(phi):
                q = reconstruct_rational(mpmath.re(x[k, 0]), DEFAULT_HEIGHT, tol)
                if q is None:
                    break
                coords.append(q)
            else:
                c = s.field(coords)
                if c * c == s:
                    return c
    return None
