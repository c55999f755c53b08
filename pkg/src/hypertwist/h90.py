"""Hilbert 90 by averaging.

For a cocycle c with values in GL_n(L) or L*, M = sum_sigma c(sigma) sigma(M0)
satisfies c(sigma) sigma(M) = M, i.e. c(sigma) = M sigma(M)^-1, as soon as
it is invertible. Most M0 work; the schedules below fix which one is used.
"""

import random

from .errors import AllCandidatesSingular, InvalidInput, VerificationFailed, ZeroScalar
from .field.cyclotomic import cyclo_field, euler_phi, galois_group, restrict
from .field.matrix import Matrix

SEED = 0x5EED
RANDOM_ATTEMPTS = 64


class ScalarCocycle:
    """a with a(xy) = a(x) sigma_x(a(y)), all values nonzero."""

    def __init__(self, N, values, validate=True):
        self.N = int(N)
        F = cyclo_field(self.N)
        self.values = {}
        for a, x in values.items():
            x = x if hasattr(x, "field") else F.rational(x)
            self.values[restrict(a, self.N)] = x.change_field(self.N)
        if set(self.values) != set(galois_group(self.N)):
            raise InvalidInput("scalar cocycle must be given on all of (Z/%dZ)*" % N)
        if any(x.is_zero() for x in self.values.values()):
            raise ZeroScalar("scalar cocycle has a zero value")
        if validate:
            self.validate()

    @property
    def group(self):
        return galois_group(self.N)

    def __getitem__(self, a):
        return self.values[restrict(a, self.N)]

    def is_trivial(self):
        return all(x.is_one() for x in self.values.values())

    def failures(self):
        return [(a, b) for a in self.group for b in self.group
                if self[a * b] != self[a] * self[b].galois(a)]

    def validate(self):
        bad = self.failures()
        if bad:
            raise VerificationFailed("scalar cocycle condition fails at %s" % bad[:4])
        return True

    def __repr__(self):
        return "ScalarCocycle(N=%d, %s)" % (self.N, {a: str(x) for a, x in self.values.items()})


def average(cocycle, X0):
    """sum_sigma c(sigma) sigma(X0) for a matrix or scalar cocycle."""
    acc = None
    for a in cocycle.group:
        term = cocycle[a] @ X0.galois(a) if isinstance(X0, Matrix) else cocycle[a] * X0.galois(a)
        acc = term if acc is None else acc + term
    return acc


def is_coboundary_of(cocycle, M):
    """c(sigma) sigma(M) = M for every sigma (exact)."""
    for a in cocycle.group:
        lhs = cocycle[a] @ M.galois(a) if isinstance(M, Matrix) else cocycle[a] * M.galois(a)
        if lhs != M:
            return False
    return True


def m0_schedule(N, n):
    """Yield (label, M0) in the fixed order used by h90_matrix."""
    F = cyclo_field(N)
    z = F.zeta()
    yield "identity", Matrix.identity(n, N)
    yield "diag(zeta,...,zeta,1)", Matrix.diag([z] * (n - 1) + [F.one()], N)
    for k in range(n):
        for l in range(n):
            if k != l:
                rows = [[F.one() if i == j else F.zero() for j in range(n)]
                        for i in range(n)]
                rows[k][l] = z
                yield "identity + zeta*E_%d%d" % (k + 1, l + 1), Matrix(rows, N)
    rng = random.Random(SEED)
    for attempt in range(RANDOM_ATTEMPTS):
        rows = [[F.rational(rng.randint(-3, 3)) + z * rng.randint(-3, 3)
                 for _ in range(n)] for _ in range(n)]
        yield "random #%d (seed 0x5EED)" % attempt, Matrix(rows, N)
    # entries in span{1, zeta} can average to a singular matrix for every
    # draw (e.g. diagonal cocycles whose entries trace to zero), so finish
    # with draws over the whole power basis
    deg = F.degree
    for attempt in range(RANDOM_ATTEMPTS):
        rows = [[F([rng.randint(-3, 3) for _ in range(deg)]) for _ in range(n)]
                for _ in range(n)]
        yield "full-basis random #%d (seed 0x5EED)" % attempt, Matrix(rows, N)


def h90_matrix(cocycle, M0=None):
    """(M, provenance) with cocycle(sigma) = M sigma(M)^-1 for all sigma."""
    N, n = cocycle.N, cocycle.n
    if M0 is not None:
        schedule = [("override", M0.change_field(N) if M0.N != N else M0)]
    else:
        schedule = m0_schedule(N, n)
    for label, X0 in schedule:
        M = average(cocycle, X0)
        if M.det().is_zero():
            continue
        if not is_coboundary_of(cocycle, M):
            raise VerificationFailed("averaged matrix is not a coboundary witness")
        return M, {"M0": label}
    if M0 is not None:
        raise InvalidInput("the given M0 averages to a singular matrix")
    raise AllCandidatesSingular("every M0 in the schedule gave a singular sum")


def v0_schedule(N):
    F = cyclo_field(N)
    z = F.zeta()
    yield "1", F.one()
    if N > 2:
        yield "zeta", z
        yield "1+zeta", F.one() + z
        for k in range(2, euler_phi(N)):
            yield "zeta^%d" % k, z ** k


def h90_scalar(a, v0=None):
    """(v, provenance) with a(sigma) = v / sigma(v) for all sigma."""
    N = a.N
    schedule = [("override", v0.change_field(N))] if v0 is not None else v0_schedule(N)
    for label, x0 in schedule:
        v = average(a, x0)
        if v.is_zero():
            continue
        if not is_coboundary_of(a, v):
            raise VerificationFailed("averaged scalar is not a coboundary witness")
        return v, {"v0": label}
    raise ZeroScalar("every v0 in the schedule averaged to zero")


__all__ = ["ScalarCocycle", "h90_matrix", "h90_scalar", "m0_schedule",
           "v0_schedule", "is_coboundary_of", "average"]
