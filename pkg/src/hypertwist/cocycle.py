"""Cocycles Gal(Q(zeta_N)/Q) -> Aut(C), stored on every residue a mod N.

The Galois element sigma_a acts by zeta_N -> zeta_N^a. The cocycle
condition is xi(ab) = xi(a) o sigma_a(xi(b)).
"""

import itertools
from fractions import Fraction

from sympy import integer_nthroot

from .autos import (Comparison, GeomAutomorphism, MobiusAutomorphism,
                    canonical_lift, conjugated_lift, mobius_to_geometric)
from .errors import InconsistentGenerators, InvalidInput, VerificationFailed
from .field.cyclotomic import (change_field, cyclo_field, euler_phi,
                               galois_group, restrict)
from .field.matrix import Matrix
from .field.sqrt import field_sqrt

MAX_GROUP_ORDER = 64


def _at_conductor(x, N):
    if x.N == N:
        return x
    try:
        return x.change_field(N)
    except InvalidInput as exc:
        raise InvalidInput("%s is not defined over Q(zeta_%d)" % (x, N)) from exc


def _check_group(N):
    if N < 1:
        raise InvalidInput("conductor must be positive")
    if euler_phi(N) > MAX_GROUP_ORDER:
        raise InvalidInput("Galois group of order %d is beyond the supported size"
                           % euler_phi(N))


def _extend(N, gens, identity, compose, galois):
    """Close the generator images under xi(ab) = xi(a) o sigma_a(xi(b))."""
    images = {1: identity}
    frontier = [1]
    while frontier:
        a = frontier.pop()
        for b, img in gens:
            ab = restrict(a * b, N)
            if ab not in images:
                images[ab] = compose(images[a], galois(img, a))
                frontier.append(ab)
    if len(images) != len(galois_group(N)):
        raise InvalidInput("generators %s do not generate (Z/%dZ)*"
                           % ([b for b, _ in gens], N))
    return images


class Cocycle:
    """xi with values in automorphisms (geometric or Moebius) of one curve."""

    def __init__(self, N, images, validate=True):
        _check_group(N)
        self.N = int(N)
        self.images = {restrict(a, N): _at_conductor(x, self.N)
                       for a, x in images.items()}
        if set(self.images) != set(galois_group(self.N)):
            raise InvalidInput("cocycle must be given on all of (Z/%dZ)*" % N)
        if validate:
            self.validate()

    @property
    def group(self):
        return galois_group(self.N)

    @property
    def is_mobius(self):
        return isinstance(self.images[1], MobiusAutomorphism)

    def __getitem__(self, a):
        return self.images[restrict(a, self.N)]

    def failures(self):
        """Pairs (a, b) where the cocycle condition fails."""
        bad = []
        if self.images[1].compare(self._identity()) != Comparison.EQUAL:
            bad.append((1, 1))
        for a in self.group:
            for b in self.group:
                lhs = self[a * b]
                rhs = self[a].compose(self[b].galois(a))
                if lhs.compare(rhs) != Comparison.EQUAL:
                    bad.append((a, b))
        return bad

    def validate(self):
        bad = self.failures()
        if bad:
            raise InconsistentGenerators(
                "cocycle condition fails for (a, b) in %s" % bad[:4])
        return True

    def _identity(self):
        x = self.images[1]
        if isinstance(x, MobiusAutomorphism):
            return MobiusAutomorphism.identity(x.genus, self.N)
        return GeomAutomorphism.identity(x.d, self.N)

    def inflate(self, M):
        """The same cocycle seen on Gal(Q(zeta_M)/Q) for N | M."""
        if M % self.N:
            raise ValueError("%d is not a multiple of %d" % (M, self.N))
        return Cocycle(M, {a: self[a].change_field(M) for a in galois_group(M)},
                       validate=False)

    def __repr__(self):
        return "Cocycle(N=%d, %s)" % (self.N, {a: str(x) for a, x in self.images.items()})


def cocycle_from_generators(N, gens, genus=None, d=None):
    """Extend generator images multiplicatively and validate everything.

    ``gens`` is a list of (a, automorphism). For an empty list pass ``genus``
    (Moebius) or ``d`` (geometric) to fix the kind of the trivial cocycle.
    """
    _check_group(N)
    gens = [(restrict(a, N), _at_conductor(x, N)) for a, x in gens]
    if gens:
        x = gens[0][1]
        identity = (MobiusAutomorphism.identity(x.genus, N)
                    if isinstance(x, MobiusAutomorphism)
                    else GeomAutomorphism.identity(x.d, N))
    elif genus is not None:
        identity = MobiusAutomorphism.identity(genus, N)
    else:
        identity = GeomAutomorphism.identity(d, N)
    if not gens:
        return Cocycle(N, {a: identity for a in galois_group(N)})
    images = _extend(N, gens, identity, lambda p, q: p.compose(q),
                     lambda x, a: x.galois(a))
    return Cocycle(N, images)


def to_geometric_cocycle(xi, G):
    """Transport a Moebius cocycle to the model G = to_geometric(curve)."""
    if not xi.is_mobius:
        return xi
    return Cocycle(xi.N, {a: mobius_to_geometric(x, G) for a, x in xi.images.items()})


class MatrixCocycle:
    """A GL_n-valued cocycle with the exact condition M(ab) = M(a) sigma_a(M(b))."""

    def __init__(self, N, images, validate=True):
        _check_group(N)
        self.N = int(N)
        self.images = {restrict(a, N): _at_conductor(x, self.N)
                       for a, x in images.items()}
        if set(self.images) != set(galois_group(self.N)):
            raise InvalidInput("cocycle must be given on all of (Z/%dZ)*" % N)
        if validate:
            self.validate()

    @property
    def group(self):
        return galois_group(self.N)

    @property
    def n(self):
        return self.images[1].n

    def __getitem__(self, a):
        return self.images[restrict(a, self.N)]

    def failures(self):
        bad = []
        for a in self.group:
            for b in self.group:
                if self[a * b] != self[a] @ self[b].galois(a):
                    bad.append((a, b))
        return bad

    def validate(self):
        bad = self.failures()
        if bad:
            raise VerificationFailed("matrix cocycle condition fails at %s" % bad[:4])
        return True

    def __repr__(self):
        return "MatrixCocycle(N=%d, %s)" % (self.N, self.images)


def lift_cocycle_gl3(xi, B=None):
    """Canonical GL3 lift of the conic part of a geometric cocycle.

    With B = None the model's conic is z^2 = x y and the canonical lift is
    used directly; otherwise each image is lifted through B.
    """
    images = {}
    for a, x in xi.images.items():
        P = x.matrix
        L = canonical_lift(P) if B is None else conjugated_lift(B, P)
        if P.scalar_ratio(L.change_field(P.N) if L.N != P.N else L) is None:
            raise VerificationFailed("lift of sigma_%d is not projectively equal" % a)
        images[a] = L
    return MatrixCocycle(xi.N, images)


# GL2 liftability

def _roots_of_unity(N, n):
    """Elements c of Q(zeta_N) with c^n = 1."""
    F = cyclo_field(N)
    out = []
    for k in range(max(N, 1)):
        for c in (F.zeta(k), -F.zeta(k)):
            if (c ** n).is_one() and c not in out:
                out.append(c)
    return out


def exact_matrix(A):
    """cA with det(cA) as the y-factor and the same map, or None.

    Needs c^(g-1) = det(A)/kappa inside the field of A. Roots are taken by
    repeated square roots for the 2-part of g - 1 and only over Q for the
    odd part.
    """
    if A.is_exact():
        return A.matrix
    w = A.matrix.det() / A.kappa
    n = A.genus - 1
    while n % 2 == 0 and w is not None:
        w = field_sqrt(w)
        n //= 2
    if w is None:
        return None
    if n > 1:
        if not w.is_rational():
            return None
        q = w.to_fraction()
        r = _rational_root(q, n)
        if r is None:
            return None
        w = A.matrix.field.rational(r)
    return A.matrix * w


def _rational_root(q, n):
    if q < 0 and n % 2 == 0:
        return None
    a, exact_a = integer_nthroot(abs(q.numerator), n)
    b, exact_b = integer_nthroot(q.denominator, n)
    if not (exact_a and exact_b):
        return None
    return Fraction(a if q > 0 else -a, b)


def group_generators(N):
    group = galois_group(N)
    gens, span = [], {1}
    for a in group:
        if a in span:
            continue
        gens.append(a)
        span = _closure(span | {a}, N)
    return gens


def _closure(S, N):
    S = set(S)
    while True:
        new = {restrict(a * b, N) for a in S for b in S} | S
        if new == S:
            return S
        S = new


def gl2_candidates(xi, g):
    """For each generator, the exact matrices representing xi there."""
    N = xi.N
    scal = _roots_of_unity(N, g - 1)
    out = []
    for s in group_generators(N):
        base = exact_matrix(xi[s])
        out.append((s, [] if base is None else [base * c for c in scal]))
    return out


def try_lift_gl2(xi, g):
    """A GL2-valued cocycle lifting a Moebius cocycle over Q(zeta_N), or None.

    Exact matrices for a fixed automorphism differ by (g-1)-th roots of
    unity, so the search over generator images is finite.
    """
    if not xi.is_mobius:
        raise InvalidInput("GL2 lifting needs a cocycle in Moebius form")
    N = xi.N
    cands = gl2_candidates(xi, g)
    if any(not options for _, options in cands):
        return None
    for choice in itertools.product(*[options for _, options in cands]):
        gens = [(s, A) for (s, _), A in zip(cands, choice)]
        images = _extend(N, gens, Matrix.identity(2, N), lambda p, q: p @ q,
                         lambda x, a: x.galois(a))
        lift = MatrixCocycle(N, images, validate=False)
        if not lift.failures():
            return lift
    return None


def twisted_norm(A, s, N):
    """A sigma_s(A) sigma_s^2(A) ... over the cyclic group generated by s."""
    out = A
    a = restrict(s, N)
    while a != 1:
        out = out @ A.galois(a)
        a = restrict(a * s, N)
    return out


__all__ = ["Cocycle", "MatrixCocycle", "cocycle_from_generators",
           "to_geometric_cocycle", "lift_cocycle_gl3", "try_lift_gl2",
           "gl2_candidates", "twisted_norm", "exact_matrix"]
