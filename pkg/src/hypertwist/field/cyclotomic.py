"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored as an integer coordinate vector over a common positive
denominator, in the power basis 1, zeta, ..., zeta^(phi(N)-1). Every field
is a cached singleton, so conductors can be compared cheaply.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..errors import FieldMismatch, NotInSubfield
from .arith import as_fraction


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_phi(n):
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, lowest degree first (integers)."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num, den):
    """Divide integer polynomials (den monic); assert zero remainder."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, b in enumerate(den):
                num[k + j] -= c * b
    assert not any(num), "inexact cyclotomic division"
    return q


def galois_group(n):
    """Residues a in [1, n) coprime to n; the group {1} when n is 1 or 2."""
    if n <= 2:
        return [1]
    return [a for a in range(1, n) if gcd(a, n) == 1]


def restrict(a, n):
    """Image of a residue under (Z/mZ)* -> (Z/nZ)*, as a representative."""
    if n <= 2:
        return 1
    return a % n


class CycloField:
    """Q(zeta_N). Obtain instances through :func:`cyclo_field`."""

    def __init__(self, N):
        self.N = N
        self.minpoly = cyclotomic_polynomial(N)
        self.degree = len(self.minpoly) - 1
        phi = self.degree
        # powers[j]: sparse coordinates of zeta^j for 0 <= j < N
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(N):
            powers.append(tuple((k, c) for k, c in enumerate(vec) if c))
            vec = self._times_zeta(vec)
        self.powers = powers

    def _times_zeta(self, vec):
        phi = self.degree
        top = vec[-1]
        out = [0] + vec[:-1]
        if top:
            for k in range(phi):
                out[k] -= top * self.minpoly[k]
        return out

    def __repr__(self):
        return "CycloField(%d)" % self.N

    def __reduce__(self):
        return (cyclo_field, (self.N,))

    def zero(self):
        return CycloElt(self, (0,) * self.degree, 1)

    def one(self):
        return self.rational(1)

    def rational(self, q):
        q = as_fraction(q)
        nums = [0] * self.degree
        nums[0] = q.numerator
        return CycloElt(self, tuple(nums), q.denominator)

    def zeta(self, k=1):
        k %= self.N
        nums = [0] * self.degree
        for idx, c in self.powers[k]:
            nums[idx] = c
        return CycloElt(self, tuple(nums), 1)

    def __call__(self, coords):
        """Element from a list of rational power-basis coordinates."""
        coords = [as_fraction(c) for c in coords]
        if len(coords) > self.degree:
            # reduce a longer polynomial in zeta
            acc = self.zero()
            for k, c in enumerate(coords):
                if c:
                    acc = acc + self.zeta(k) * c
            return acc
        coords += [Fraction(0)] * (self.degree - len(coords))
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(c.numerator * (den // c.denominator) for c in coords)
        return CycloElt(self, nums, den)


@lru_cache(maxsize=None)
def cyclo_field(N):
    N = int(N)
    if N < 1:
        raise ValueError("conductor must be positive")
    return CycloField(N)


def _field_of(N_or_field):
    if isinstance(N_or_field, CycloField):
        return N_or_field
    return cyclo_field(N_or_field)


class CycloElt:
    """An element of Q(zeta_N), immutable."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field, nums, den=1):
        field = _field_of(field)
        nums = tuple(int(c) for c in nums)
        if len(nums) != field.degree:
            raise ValueError("expected %d coordinates" % field.degree)
        if den < 0:
            nums = tuple(-c for c in nums)
            den = -den
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = gcd(den, *nums)
        if g != 1:
            nums = tuple(c // g for c in nums)
            den //= g
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "nums", nums)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("CycloElt is immutable")

    # construction helpers
    @classmethod
    def from_rational(cls, q, N=1):
        return _field_of(N).rational(q)

    @classmethod
    def zeta(cls, N, k=1):
        return _field_of(N).zeta(k)

    # basic properties
    @property
    def N(self):
        return self.field.N

    @property
    def coords(self):
        return tuple(Fraction(c, self.den) for c in self.nums)

    def is_zero(self):
        return not any(self.nums)

    def is_rational(self):
        return not any(self.nums[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational: %s" % self)
        return Fraction(self.nums[0], self.den)

    def is_one(self):
        return self.is_rational() and self.nums[0] == self.den

    # coercion
    def _coerce(self, other):
        if isinstance(other, CycloElt):
            if other.field is not self.field:
                raise FieldMismatch(
                    "conductors differ: %d vs %d" % (self.N, other.N))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return CycloElt(self.field,
                            tuple(a + b for a, b in zip(self.nums, o.nums)),
                            self.den)
        g = gcd(self.den, o.den)
        ms, mo = o.den // g, self.den // g
        return CycloElt(self.field,
                        tuple(a * ms + b * mo for a, b in zip(self.nums, o.nums)),
                        self.den * ms)

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            return CycloElt(self.field,
                            tuple(a * q.numerator for a in self.nums),
                            self.den * q.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        phi, N = F.degree, F.N
        acc = [0] * (2 * phi - 1)
        for i, a in enumerate(self.nums):
            if a:
                for j, b in enumerate(o.nums):
                    if b:
                        acc[i + j] += a * b
        out = acc[:phi]
        for j in range(phi, 2 * phi - 1):
            c = acc[j]
            if c:
                for idx, p in F.powers[j % N]:
                    out[idx] += c * p
        return CycloElt(F, out, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % self.N)
        if self.is_rational():
            return self.field.rational(Fraction(self.den, self.nums[0]))
        # x^-1 = (product of the other conjugates) / norm
        prod = self.field.one()
        for a in galois_group(self.N)[1:]:
            prod = prod * self.galois(a)
        norm = (self * prod).to_fraction()
        return prod * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / as_fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, CycloElt):
            if other.field is not self.field:
                raise FieldMismatch(
                    "comparing elements of conductors %d and %d"
                    % (self.N, other.N))
            return self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            return (self.is_rational() and self.nums[0] == q.numerator
                    and self.den == q.denominator)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.nums[0], self.den))
        return hash((self.N, self.nums, self.den))

    def __bool__(self):
        return not self.is_zero()

    # Galois action and field changes
    def galois(self, a):
        """Image under zeta -> zeta^a."""
        F = self.field
        N = F.N
        a %= N
        if gcd(a, N) != 1 and N > 1:
            raise ValueError("%d is not a unit mod %d" % (a, N))
        if a == 1 % N or self.is_rational():
            return self
        out = [0] * F.degree
        for k, c in enumerate(self.nums):
            if c:
                for idx, p in F.powers[(a * k) % N]:
                    out[idx] += c * p
        return CycloElt(F, out, self.den)

    def conjugate(self):
        return self.galois(-1)

    def change_field(self, M):
        return change_field(self, M)

    def norm(self):
        prod = self.field.one()
        for a in galois_group(self.N):
            prod = prod * self.galois(a)
        return prod.to_fraction()

    # numerics
    def to_complex(self, a=1):
        """Value under the embedding zeta -> exp(2 pi i a / N), as mpmath mpc
        at the caller's working precision."""
        import mpmath
        z = mpmath.expjpi(mpmath.mpf(2 * a) / self.N)
        acc = mpmath.mpc(0)
        zk = mpmath.mpc(1)
        for c in self.nums:
            if c:
                acc += c * zk
            zk *= z
        return acc / self.den

    # printing
    def __repr__(self):
        return "CycloElt(%d, %s)" % (self.N, self)

    def __str__(self):
        return format_elt(self)


def _zeta_name(N):
    return "i" if N == 4 else "z%d" % N


def format_elt(x, name=None):
    """Human-readable form, e.g. '3/5*z10^3 + 1/5*z10 - 1/5'."""
    name = name or _zeta_name(x.N)
    terms = []
    for k in range(len(x.nums) - 1, -1, -1):
        c = Fraction(x.nums[k], x.den)
        if c == 0:
            continue
        mono = "" if k == 0 else name if k == 1 else "%s^%d" % (name, k)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = "%s*%s" % (mag, mono)
        else:
            body = str(mag)
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += " %s %s" % (sign, body)
    return out


# subfield changes

@lru_cache(maxsize=None)
def _embedding_images(N, M):
    """Coordinates at conductor M of zeta_N^k, k < phi(N), assuming N | M."""
    FM = cyclo_field(M)
    step = M // N
    return tuple(FM.powers[(k * step) % M] for k in range(cyclo_field(N).degree))


def _embed(x, M):
    FM = cyclo_field(M)
    imgs = _embedding_images(x.N, M)
    out = [0] * FM.degree
    for k, c in enumerate(x.nums):
        if c:
            for idx, p in imgs[k]:
                out[idx] += c * p
    return CycloElt(FM, out, x.den)


@lru_cache(maxsize=None)
def _descent_solver(N, M):
    """Row-reduced data for solving (embedding of Q(zeta_M)) * y = x in Q(zeta_N)."""
    phiN = cyclo_field(N).degree
    phiM = cyclo_field(M).degree
    imgs = _embedding_images(M, N)
    # columns: images of the basis of Q(zeta_M)
    cols = []
    for k in range(phiM):
        col = [Fraction(0)] * phiN
        for idx, p in imgs[k]:
            col[idx] = Fraction(p)
        cols.append(col)
    return cols


def _descend(x, M):
    cols = _descent_solver(x.N, M)
    target = list(x.coords)
    y = solve_rational_system(cols, target)
    if y is None:
        raise NotInSubfield("element %s of Q(zeta_%d) is not in Q(zeta_%d)"
                            % (x, x.N, M))
    return cyclo_field(M)(y)


def solve_rational_system(cols, target):
    """Solve sum_k y_k * cols[k] = target exactly over Q; None if inconsistent."""
    n = len(cols)
    m = len(target)
    # augmented matrix, rows indexed by equations
    A = [[cols[k][r] for k in range(n)] + [target[r]] for r in range(m)]
    piv_cols = []
    row = 0
    for col in range(n):
        pr = next((r for r in range(row, m) if A[r][col] != 0), None)
        if pr is None:
            continue
        A[row], A[pr] = A[pr], A[row]
        inv = 1 / A[row][col]
        A[row] = [v * inv for v in A[row]]
        for r in range(m):
            if r != row and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[row])]
        piv_cols.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if A[r][n] != 0:
            return None
    y = [Fraction(0)] * n
    for r, col in enumerate(piv_cols):
        y[col] = A[r][n]
    return y


def change_field(x, M):
    """Represent x at conductor M (embedding, descent, or both through gcd)."""
    if isinstance(x, (int, Fraction)):
        return cyclo_field(M).rational(x)
    M = int(M)
    N = x.N
    if M == N:
        return x
    if x.is_rational():
        return cyclo_field(M).rational(x.to_fraction())
    if M % N == 0:
        return _embed(x, M)
    if N % M == 0:
        return _descend(x, M)
    g = gcd(N, M)
    return _embed(_descend(x, g), M)


def common_conductor(*Ns):
    out = 1
    for n in Ns:
        out = out * n // gcd(out, n)
    return out


def trace_over_subgroup(x, H):
    """Sum of the conjugates of x over a subgroup H of (Z/NZ)*."""
    N = x.N
    Hs = sorted({restrict(a, N) for a in H})
    hset = set(Hs)
    for a in Hs:
        for b in Hs:
            if restrict(a * b, N) not in hset:
                raise ValueError("residues %s are not a subgroup mod %d" % (Hs, N))
    acc = x.field.zero()
    for a in Hs:
        acc = acc + x.galois(a)
    return acc
