"""Curve automorphisms in Moebius form and in geometric form.

A Moebius automorphism is a pair (A, kappa) acting on the weighted
coordinates (a : b : Y) of y^2 = f(x) by (a, b, Y) -> (A (a, b), kappa Y);
in affine terms x -> (alpha x + beta)/(gamma x + delta) and
y -> kappa y/(gamma x + delta)^(g+1). When kappa is omitted it defaults to
det A, the usual exact-matrix convention.

A geometric automorphism of {e t^2 = F, Q = 0} is a pair (N, lam) acting by
p -> N p, t -> lam t. Pairs (N, lam) and (c N, c^(d/2) lam) are the same map.
"""

import enum
from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput, TransportError
from .field.cyclotomic import (CycloElt, change_field, common_conductor,
                               cyclo_field)
from .field.matrix import Matrix
from .field.sqrt import sqrt_rational
from .mpoly import TernaryForm, reduce_mod_conic, substitute_linear


class Comparison(str, enum.Enum):
    EQUAL = "equal"
    IOTA = "differ_by_iota"
    DISTINCT = "distinct"


def _lift_pair(x, y):
    """Move two objects with change_field to a common conductor."""
    if x.N == y.N:
        return x, y
    M = common_conductor(x.N, y.N)
    return x.change_field(M), y.change_field(M)


@dataclass(frozen=True)
class MobiusAutomorphism:
    matrix: Matrix
    genus: int
    y_factor: CycloElt = None

    def __post_init__(self):
        if self.matrix.n != 2:
            raise InvalidInput("Moebius matrices are 2x2")
        if self.matrix.det().is_zero():
            raise InvalidInput("singular Moebius matrix")
        if self.y_factor is not None:
            k = self.y_factor
            if not isinstance(k, CycloElt):
                k = self.matrix.field.rational(k)
            if k.N != self.matrix.N:
                M = common_conductor(k.N, self.matrix.N)
                object.__setattr__(self, "matrix", self.matrix.change_field(M))
                k = change_field(k, M)
            if k.is_zero():
                raise InvalidInput("zero y-factor")
            object.__setattr__(self, "y_factor", k)

    @property
    def N(self):
        return self.matrix.N

    @property
    def kappa(self):
        return self.y_factor if self.y_factor is not None else self.matrix.det()

    def is_exact(self):
        return self.y_factor is None or self.y_factor == self.matrix.det()

    @classmethod
    def identity(cls, genus, N=1):
        return cls(Matrix.identity(2, N), genus)

    def compose(self, other):
        """self o other."""
        a, b = _lift_pair(self, other)
        return MobiusAutomorphism(a.matrix @ b.matrix, a.genus,
                                  _explicit(a.kappa * b.kappa, a.matrix @ b.matrix))

    def inverse(self):
        y = None if self.y_factor is None else self.y_factor.inverse()
        return MobiusAutomorphism(self.matrix.inverse(), self.genus, y)

    def galois(self, s):
        y = None if self.y_factor is None else self.y_factor.galois(s)
        return MobiusAutomorphism(self.matrix.galois(s), self.genus, y)

    def change_field(self, M):
        y = None if self.y_factor is None else change_field(self.y_factor, M)
        return MobiusAutomorphism(self.matrix.change_field(M), self.genus, y)

    def compare(self, other):
        a, b = _lift_pair(self, other)
        c = a.matrix.scalar_ratio(b.matrix)
        if c is None:
            return Comparison.DISTINCT
        expected = c ** (a.genus + 1) * a.kappa
        if b.kappa == expected:
            return Comparison.EQUAL
        if b.kappa == -expected:
            return Comparison.IOTA
        return Comparison.DISTINCT

    def __str__(self):
        base = "mobius%s" % [[str(x) for x in r] for r in self.matrix.rows]
        if self.y_factor is not None and not self.is_exact():
            base += " y*(%s)" % self.y_factor
        return base


def _explicit(kappa, A):
    return None if kappa == A.det() else kappa


@dataclass(frozen=True)
class GeomAutomorphism:
    matrix: Matrix
    lam: CycloElt
    d: int

    def __post_init__(self):
        lam = self.lam
        if not isinstance(lam, CycloElt):
            lam = self.matrix.field.rational(lam)
        if lam.N != self.matrix.N:
            M = common_conductor(lam.N, self.matrix.N)
            object.__setattr__(self, "matrix", self.matrix.change_field(M))
            lam = change_field(lam, M)
        object.__setattr__(self, "lam", lam)

    @property
    def N(self):
        return self.matrix.N

    @classmethod
    def identity(cls, d, N=1):
        return cls(Matrix.identity(3, N), cyclo_field(N).one(), d)

    @classmethod
    def involution(cls, d, N=1):
        return cls(Matrix.identity(3, N), -cyclo_field(N).one(), d)

    def compose(self, other):
        a, b = _lift_pair(self, other)
        return GeomAutomorphism(a.matrix @ b.matrix, a.lam * b.lam, a.d)

    def galois(self, s):
        return GeomAutomorphism(self.matrix.galois(s), self.lam.galois(s), self.d)

    def change_field(self, M):
        return GeomAutomorphism(self.matrix.change_field(M),
                                change_field(self.lam, M), self.d)

    def inverse(self):
        return GeomAutomorphism(self.matrix.inverse(), self.lam.inverse(), self.d)

    def rescaled(self, c):
        """The same map written as (c N, c^(d/2) lam)."""
        return GeomAutomorphism(self.matrix * c, self.lam * c ** (self.d // 2),
                                self.d)

    def multiplier_for(self, exact):
        """lam' such that (exact, lam') is this map; exact must be c*N."""
        a, b = _lift_pair(self, GeomAutomorphism(exact, 1, self.d))
        c = a.matrix.scalar_ratio(b.matrix)
        if c is None:
            raise ValueError("matrix is not a rescaling of the automorphism")
        return a.lam * c ** (self.d // 2)

    def compare(self, other):
        return compare_automorphisms(self, other)

    def __str__(self):
        return "(%s, t -> (%s) t)" % ([[str(x) for x in r] for r in self.matrix.rows],
                                       self.lam)


def compare_automorphisms(A1, A2):
    """equal / differ_by_iota / distinct for two geometric automorphisms."""
    if A1.d != A2.d:
        raise ValueError("automorphisms of models with different degrees")
    a, b = _lift_pair(A1, A2)
    c = a.matrix.scalar_ratio(b.matrix)
    if c is None:
        return Comparison.DISTINCT
    expected = c ** (a.d // 2) * a.lam
    if b.lam == expected:
        return Comparison.EQUAL
    if b.lam == -expected:
        return Comparison.IOTA
    return Comparison.DISTINCT


# the embedding of PGL2 into the stabilizer of z^2 = x y

def sym2(A):
    """Action of A on (a^2, b^2, a b), without normalization."""
    al, be = A[0, 0], A[0, 1]
    ga, de = A[1, 0], A[1, 1]
    return Matrix([[al * al, be * be, 2 * al * be],
                   [ga * ga, de * de, 2 * ga * de],
                   [al * ga, be * de, be * ga + al * de]], A.N)


def psi_embed(A):
    """sym2(A)/det(A): multiplicative, Galois-equivariant, preserves z^2 - xy."""
    M = A.matrix if isinstance(A, MobiusAutomorphism) else A
    return sym2(M) * M.det().inverse()


def canonical_lift(P):
    """The representative of the projective class of P lying in psi's image."""
    a = P.rows
    if not a[2][0].is_zero():
        lam = 2 * a[2][0] / (a[0][0] * a[1][2] - a[0][2] * a[1][0])
    elif not a[2][1].is_zero():
        lam = 2 * a[2][1] / (a[1][1] * a[0][2] - a[1][2] * a[0][1])
    elif not a[2][2].is_zero():
        lam = a[2][2] / (a[0][0] * a[1][1] - a[0][1] * a[1][0])
    else:
        raise AssertionError("no case of the canonical lift applies")
    return P * lam


def build_B(a, b):
    """B with (z^2 - x y) o B = z^2 - a x^2 - b y^2."""
    ra, Ma = sqrt_rational(a)
    rb, Mb = sqrt_rational(-b)
    M = common_conductor(Ma, Mb)
    ra, rb = change_field(ra, M), change_field(rb, M)
    return Matrix([[ra, rb, 0], [ra, -rb, 0], [0, 0, 1]], M)


def conjugated_lift(B, P):
    """Lift of an automorphism P of a conic Q with (z^2 - x y) o B ~ Q.

    Computed as B^-1 canonical_lift(B P B^-1) B; the result preserves Q
    exactly and is returned at the conductor of P when it lies there.
    """
    Bl, Pl = _lift_pair(B, P)
    L = Bl.inverse() @ canonical_lift(Bl @ Pl @ Bl.inverse()) @ Bl
    if L.N != P.N:
        try:
            L = L.change_field(P.N)
        except InvalidInput:
            pass
    return L


def mobius_to_geometric(A, G):
    """Transport a Moebius automorphism to the model produced by to_geometric.

    With (X, Y, Z) = (a^2, b^2, a b), t equals Y for odd genus and b Y for
    even genus, where Y is the weighted y-coordinate. So (A, kappa) acts by
    sym2(A) and t -> kappa t (odd) or t -> delta kappa t (even, needs
    gamma = 0; otherwise t' / t is not constant).
    """
    if G.conic != TernaryForm.conic_xy():
        raise TransportError("transport needs the conic z^2 = x y")
    Am = A.matrix
    d = G.d
    if G.genus % 2:
        lam = A.kappa
    else:
        if not Am[1, 0].is_zero():
            raise TransportError(
                "even genus: the geometric model only carries automorphisms "
                "fixing infinity")
        lam = Am[1, 1] * A.kappa
    det = Am.det()
    result = GeomAutomorphism(psi_embed(Am), lam * det ** (-(d // 2)), d)
    if not validate_automorphism(G, result):
        raise TransportError("%s is not an automorphism of the curve" % A)
    return result


def validate_automorphism(G, A):
    """F o N = lam^2 F modulo the conic, and the conic is preserved."""
    N = A.matrix
    FN = substitute_linear(G.F, N)
    diff = FN - G.F.change_field(FN.N) * (A.lam * A.lam).change_field(FN.N)
    nf, _ = reduce_mod_conic(diff, G.conic)
    if not nf.is_zero():
        return False
    QN = substitute_linear(G.conic, N)
    Q = G.conic.change_field(QN.N)
    e, c = Q.leading_term()
    ratio = QN.coefficient(e) / c
    return not ratio.is_zero() and QN == Q * ratio


# the mu_e refinement

def compute_mu_e(g, aut_order):
    """e = e_2 e_3 with e_p = gcd(p, #Aut)^(v_p(g - 1))."""
    e = 1
    for p in (2, 3):
        v, n = 0, g - 1
        while n % p == 0:
            n //= p
            v += 1
        e *= gcd(p, aut_order) ** v
    return e


@dataclass(frozen=True)
class IotaClass:
    matrix2: Matrix
    e: int
    order: int


def lift_iota1(A, g, aut_order):
    """Rescale an exact Moebius matrix by a (g-1)-th root of unity so that
    its order-th power is a scalar in mu_e."""
    e = compute_mu_e(g, aut_order)
    n = (g - 1) // e
    if gcd(aut_order, n) != 1:
        raise InvalidInput("gcd(#Aut, (g-1)/e) must be 1")
    if not A.is_exact():
        raise InvalidInput("lift_iota1 needs an exact Moebius matrix")
    M = common_conductor(A.N, g - 1 if g > 2 else 1)
    Am = A.matrix.change_field(M)
    power = Matrix.identity(2, M)
    m = None
    for k in range(1, aut_order + 1):
        power = power @ Am
        if power.is_scalar() and (power[0, 0] ** (g - 1)).is_one():
            m = k
            break
    if m is None:
        raise InvalidInput("matrix has no finite order dividing %d" % aut_order)
    c = power[0, 0]
    zeta = cyclo_field(M).zeta(M // (g - 1)) if g > 2 else cyclo_field(M).one()
    a = next(k for k in range(g - 1) if zeta ** k == c)
    b = (-a * pow(m, -1, n)) % n if n > 1 else 0
    out = Am * zeta ** b
    return IotaClass(out, e, m)
