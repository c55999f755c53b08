"""Twisting a hyperelliptic curve by a cocycle that factors through Q(zeta_N).

The pipeline, with the step numbers carried by errors:

1-2. geometric model {t^2 = F, Q = 0}
3-4. transport the cocycle to that model and lift its conic part to an
     exact GL3 cocycle xibar
5.   M with xibar(sigma) = M sigma(M)^-1
6.   the scalar cocycle a: sigma(F o M) = a(sigma) F o M modulo Q o M
7.   v with a(sigma) = v/sigma(v), and g = trace(v F o M)/[L:Q]
8.   the quadratic character measuring how (M, t/sqrt(v)) fails to realize
     xi; its field Q(sqrt e) gives the twist {e t^2 = g, Q o M = 0}
"""

from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .autos import (Comparison, GeomAutomorphism, MobiusAutomorphism,
                    build_B, compare_automorphisms, validate_automorphism)
from .cocycle import Cocycle, MatrixCocycle, lift_cocycle_gl3, to_geometric_cocycle
from .conics import diagonal_coefficients, has_hyperelliptic_model
from .errors import (InvalidInput, InvalidOverride, NoCharacterMatch,
                     NotProportional, NotFoundInCyclotomicTower, TwistError,
                     VerificationFailed, ZeroScalar)
from .field.arith import kronecker_symbol, prime_discriminants, squarefree_part
from .field.cyclotomic import (change_field, common_conductor, cyclo_field,
                               galois_group, restrict)
from .field.matrix import Matrix
from .field.sqrt import sqrt_cyclotomic, sqrt_rational
from .h90 import ScalarCocycle, h90_matrix, h90_scalar, is_coboundary_of
from .models import (GeometricModel, HyperellipticModel, normalize_model,
                     to_geometric, to_hyperelliptic)
from .mpoly import (TernaryForm, proportionality_scalar, reduce_mod_conic,
                    substitute_linear)


@contextmanager
def _step(n):
    try:
        yield
    except TwistError as exc:
        if exc.step is None:
            exc.step = n
        raise


@dataclass(frozen=True)
class IotaHom:
    """sigma_a -> trivial (True) / iota (False) on Gal(Q(zeta_M)/Q)."""

    conductor: int
    values: dict

    def trivial_on(self):
        return sorted(a for a, t in self.values.items() if t)

    def is_trivial(self):
        return all(self.values.values())


@dataclass
class TwistOutput:
    curve: object
    cocycle: Cocycle
    model: GeometricModel           # the curve the cocycle acts on
    twisted: GeometricModel         # {e t^2 = g, Q o M = 0}
    normalized: GeometricModel
    M: Matrix
    v: object
    e: int
    sqrt_v: object
    t_factor: object                # sqrt(e/v) at conductor sqrt_conductor
    sqrt_conductor: int
    a_cocycle: ScalarCocycle
    xibar: MatrixCocycle
    iota: IotaHom
    hyperelliptic_form: HyperellipticModel = None
    provenance: dict = field(default_factory=dict)

    @property
    def birational(self):
        return self.twisted.birational


@dataclass
class VerifyReport:
    rational: bool
    substitution: bool
    realization: dict               # a mod M' -> Comparison
    messages: list
    consistent: bool = True         # s^2 = e/v and e matches the model's t-coefficient

    @property
    def passed(self):
        return (self.rational and self.substitution and self.consistent and
                all(c == Comparison.EQUAL for c in self.realization.values()))

    def flipped(self):
        return sorted(a for a, c in self.realization.items() if c == Comparison.IOTA)


# steps 1-4

def geometric_setup(curve, xi):
    """(G, geometric cocycle, xibar, B) for a curve in either presentation."""
    with _step("1-2"):
        G = curve if isinstance(curve, GeometricModel) else to_geometric(curve)
    with _step("3-4"):
        if xi.is_mobius:
            if not isinstance(curve, HyperellipticModel):
                raise InvalidInput("Moebius cocycles need a hyperelliptic curve")
            xg = to_geometric_cocycle(xi, G)
        else:
            xg = xi
            for a, A in xg.images.items():
                if A.d != G.d:
                    raise InvalidInput("automorphism degree %d does not match d = %d"
                                       % (A.d, G.d))
                if not validate_automorphism(G, A):
                    raise InvalidInput("image of sigma_%d is not an automorphism" % a)
        B = conic_frame(G.conic)
        xibar = lift_cocycle_gl3(xg, B)
        for a in xibar.group:
            if substitute_linear(G.conic, xibar[a]) != G.conic.change_field(xibar.N):
                raise VerificationFailed("lift of sigma_%d moves the conic equation" % a)
    return G, xg, xibar, B


def conic_frame(Q):
    """None for z^2 - x y, else B with (z^2 - x y) o B proportional to Q."""
    if Q == TernaryForm.conic_xy():
        return None
    T, a, b = diagonal_coefficients(Q)
    B0 = build_B(a, b)
    return B0 @ T.inverse().change_field(B0.N)


# step 6

def compute_a_cocycle(F, M, conic, N):
    """a(sigma) with sigma(F o M) = a(sigma) F o M modulo (Q o M)."""
    QM = substitute_linear(conic, M)
    if not QM.is_rational():
        raise VerificationFailed("Q o M does not have rational coefficients")
    QM = QM.change_field(1)
    FM = substitute_linear(F, M)
    values = {}
    for a in galois_group(N):
        c = proportionality_scalar(FM.galois(a), FM, QM)
        if c is None:
            raise NotProportional("sigma_%d(F o M) is not a multiple of F o M" % a)
        if c.is_zero():
            raise ZeroScalar("a(sigma_%d) vanishes" % a)
        values[a] = c
    return ScalarCocycle(N, values), FM, QM


def t_multipliers(xg, xibar):
    """mu(sigma): the t-multiplier of xi(sigma) written over the matrix xibar(sigma)."""
    return ScalarCocycle(xg.N, {a: xg[a].multiplier_for(xibar[a]) for a in xg.group})


# step 7

def build_g(FM, v, QM, N):
    """trace(v F o M)/[L:Q], reduced modulo Q o M; a rational form."""
    vFM = FM * v.change_field(FM.N)
    acc = None
    group = galois_group(N)
    for a in group:
        term = vFM.galois(a)
        acc = term if acc is None else acc + term
    if not acc.is_rational():
        raise VerificationFailed("trace of v F o M is not rational")
    g = acc.change_field(1) * Fraction(1, len(group))
    g, _ = reduce_mod_conic(g, QM)
    return g


def primitive_element(v):
    """v times the rational that makes its coordinates coprime integers with
    a positive first nonzero coordinate."""
    nums = [x for x in v.nums]
    g = 0
    for x in nums:
        g = gcd(g, x)
    first = next(x for x in nums if x)
    scale = Fraction(v.den, g) if first > 0 else -Fraction(v.den, g)
    return v * scale


# step 8

def _embed(x, M):
    return change_field(x, M)


def iota_homomorphism(xg, xibar, sqrt_v, M1):
    """i(sigma) = (sigma(sqrt v)/sqrt v)/mu(sigma) on Gal(Q(zeta_M1)/Q).

    (M, t/sqrt v) sends the model e' t^2 = v F o M to the curve, and
    conjugating it by sigma gives (xibar(sigma), sigma(sqrt v)/sqrt v);
    i compares this with xi(sigma).
    """
    values = {}
    for a in galois_group(M1):
        ratio = sqrt_v.galois(a) / sqrt_v
        mu = _embed(xg[a].multiplier_for(xibar[a]), M1)
        q = ratio / mu
        if q.is_one():
            values[a] = True
        elif (-q).is_one():
            values[a] = False
        else:
            raise VerificationFailed("sigma_%d: xi_0 and xi differ by more than iota" % a)
    return IotaHom(M1, values)


def character_to_e(iota):
    """Squarefree e with i(sigma_a) = kronecker(D, a), D the discriminant of Q(sqrt e)."""
    for D in prime_discriminants(iota.conductor):
        if all((kronecker_symbol(D, a) == 1) == t for a, t in iota.values.items()):
            return 1 if D == 1 else squarefree_part(D)[0]
    raise NoCharacterMatch("the homomorphism i is not a quadratic character "
                           "of conductor dividing %d" % iota.conductor)


def compute_e(xg, xibar, v, hint=None):
    """(e, IotaHom, sqrt(v), M') for the twist; M' is the conductor of sqrt(v)."""
    sqrt_v, M1 = sqrt_cyclotomic(v, hint=hint)
    M1 = common_conductor(M1, xg.N)
    sqrt_v = change_field(sqrt_v, M1)
    iota = iota_homomorphism(xg, xibar, sqrt_v, M1)
    e = int(character_to_e(iota))
    return e, iota, sqrt_v, M1


def realizing_factor(e, v, sqrt_v, M1):
    """sqrt(e/v) = sqrt(e)/sqrt(v) at a conductor containing both."""
    re, Me = sqrt_rational(e)
    M2 = common_conductor(M1, Me)
    return change_field(re, M2) / change_field(sqrt_v, M2), M2


# the pipeline

def compute_twist(curve, xi, M0=None, M=None, v=None):
    """Twist of ``curve`` by ``xi`` (see the module docstring for the steps)."""
    G, xg, xibar, B = geometric_setup(curve, xi)
    N = xi.N
    prov = {}

    with _step(5):
        if M is not None:
            M = M.change_field(common_conductor(M.N, N))
            if M.N != N:
                M = M.change_field(N)
            if M.det().is_zero() or not is_coboundary_of(xibar, M):
                raise InvalidOverride("M does not satisfy xibar(sigma) sigma(M) = M")
            prov["M"] = "override"
        else:
            M, p = h90_matrix(xibar, M0)
            prov.update(p)

    with _step(6):
        a, FM, QM = compute_a_cocycle(G.F, M, G.conic, N)
        mu = t_multipliers(xg, xibar)
        for s in a.group:
            if a[s] != (mu[s] * mu[s]).inverse():
                raise VerificationFailed("a(sigma_%d) differs from mu^-2" % s)

    with _step(7):
        if v is not None:
            v = change_field(v, N) if v.N != N else v
            if v.is_zero() or not is_coboundary_of(a, v):
                raise InvalidOverride("v does not satisfy a(sigma) sigma(v) = v")
            prov["v"] = "override"
        else:
            v, p = h90_scalar(a)
            v = primitive_element(v)
            prov.update(p)

    with _step(8):
        u, _ = h90_scalar(mu)
        try:
            e, iota, sqrt_v, M1 = compute_e(xg, xibar, v, hint=u)
        except NotFoundInCyclotomicTower:
            if prov.get("v") == "override":
                raise
            r = (v * u * u).to_fraction()
            v = v * Fraction(1, squarefree_part(r)[0])
            prov["v_rescaled"] = True
            e, iota, sqrt_v, M1 = compute_e(xg, xibar, v, hint=u)
        s, M2 = realizing_factor(e, v, sqrt_v, M1)

    with _step(7):
        g = build_g(FM, v, QM, N)
        # e0 t^2 = F becomes e e0 t^2 = g (up to a rational square)
        e_tw = squarefree_part(e * G.t_coeff)[0]
        twisted = GeometricModel(G.genus, g, QM, Fraction(e_tw), G.birational)
        normalized = normalize_model(twisted)

    out = TwistOutput(curve=curve, cocycle=xi, model=G, twisted=twisted,
                      normalized=normalized, M=M, v=v, e=e, sqrt_v=sqrt_v,
                      t_factor=s, sqrt_conductor=M2, a_cocycle=a, xibar=xibar,
                      iota=iota, provenance=prov)
    with _step("verify"):
        report = verify_twist(curve, xi, out)
        if not report.passed:
            raise VerificationFailed("; ".join(report.messages) or
                                     "cocycle realization failed at %s" % report.flipped())
    if has_hyperelliptic_model(normalized):
        try:
            out.hyperelliptic_form = to_hyperelliptic(normalized)
        except TwistError:
            out.hyperelliptic_form = None
    return out


def verify_twist(curve, xi, out, t_factor=None, e=None):
    """Independent checks on a twist.

    (1) the twisted model has rational coefficients; (2) F o M = g/v modulo
    Q o M; (3) phi = (M, s t) with s = sqrt(e/v) realizes xi at every sigma
    of Gal(Q(zeta_M')/Q). ``t_factor`` or ``e`` replace the stored values.
    """
    msgs = []
    G = out.model if out.model is not None else (
        curve if isinstance(curve, GeometricModel) else to_geometric(curve))
    xg = xi if not xi.is_mobius else to_geometric_cocycle(xi, G)
    tw = out.twisted
    rational = tw.F.is_rational() and tw.conic.is_rational()
    if not rational:
        msgs.append("twisted model has irrational coefficients")

    M = out.M
    FM = substitute_linear(G.F, M)
    QM = substitute_linear(G.conic, M)
    v = change_field(out.v, FM.N)
    diff = FM * v - tw.F.change_field(FM.N)
    nf, _ = reduce_mod_conic(diff, QM)
    substitution = nf.is_zero()
    if not substitution:
        msgs.append("F o M - g/v is not in the ideal of Q o M")

    e_val = Fraction(out.e if e is None else e)
    s = out.t_factor if t_factor is None else t_factor
    if t_factor is None and e is not None:
        r, Mr = sqrt_rational(e_val / out.e)
        L = common_conductor(s.N, Mr)
        s = change_field(s, L) * change_field(r, L)
    L = common_conductor(s.N, out.v.N)
    sl = change_field(s, L)
    consistent = True
    if sl * sl != change_field(out.v, L).inverse() * e_val:
        consistent = False
        msgs.append("t-factor squared is not e/v")
    if e is None and squarefree_part(tw.t_coeff)[0] != squarefree_part(e_val * G.t_coeff)[0]:
        consistent = False
        msgs.append("e does not match the t-coefficient of the twisted model")
    M2 = common_conductor(s.N, xi.N, M.N)
    s = change_field(s, M2)
    Ml = M.change_field(M2)
    realization = {}
    for a in galois_group(M2):
        phi_sigma = GeomAutomorphism(Ml @ Ml.galois(a).inverse(), s / s.galois(a), G.d)
        target = xg[restrict(a, xg.N)].change_field(M2)
        realization[a] = compare_automorphisms(target, phi_sigma)
    return VerifyReport(rational, substitution, realization, msgs, consistent)


# the GL2 route

def twist_gl2_fastpath(H, lift, M0=None):
    """(twisted curve, realizing map) from an exact GL2 cocycle.

    With M = sum A(sigma) sigma(M0), the map (x, y) -> (M x, det(M) y/(cx+d)^(g+1))
    goes from y^2 = det(M)^-2 (cx+d)^(2g+2) f(M x) to the original curve.
    """
    M, prov = h90_matrix(lift, M0)
    g = H.genus
    n = 2 * g + 2
    N = M.N
    F = cyclo_field(N)
    (a, b), (c, d) = M.rows
    poly = [F.zero()] * (n + 1)
    for k, fk in enumerate(H.f):
        if not fk:
            continue
        term = _binom_product(a, b, k, c, d, n - k, F)
        for j, t in enumerate(term):
            poly[j] = poly[j] + t * fk
    det = M.det()
    inv2 = (det * det).inverse()
    poly = [p * inv2 for p in poly]
    if not all(p.is_rational() for p in poly):
        raise VerificationFailed("twisted polynomial is not rational")
    twisted = HyperellipticModel(g, tuple(p.to_fraction() for p in poly))
    phi = MobiusAutomorphism(M, g)
    for s in lift.group:
        A = lift[s]
        realized = phi.compose(phi.galois(s).inverse())
        if realized.compare(MobiusAutomorphism(A, g)) != Comparison.EQUAL:
            raise VerificationFailed("GL2 twist does not realize the cocycle at %d" % s)
    return twisted, phi, prov


def _binom_product(a, b, k, c, d, m, F):
    """Coefficients of (a x + b)^k (c x + d)^m."""
    def power(p, q, e):
        out = [F.one()]
        for _ in range(e):
            nxt = [F.zero()] * (len(out) + 1)
            for j, x in enumerate(out):
                nxt[j] = nxt[j] + x * q
                nxt[j + 1] = nxt[j + 1] + x * p
            out = nxt
        return out
    u, w = power(a, b, k), power(c, d, m)
    out = [F.zero()] * (len(u) + len(w) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(w):
            out[i + j] = out[i + j] + x * y
    return out


__all__ = ["TwistOutput", "IotaHom", "VerifyReport", "compute_twist",
           "verify_twist", "compute_a_cocycle", "build_g", "compute_e",
           "character_to_e", "iota_homomorphism", "twist_gl2_fastpath",
           "geometric_setup", "t_multipliers"]
