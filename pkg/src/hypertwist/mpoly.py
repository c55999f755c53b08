"""Homogeneous ternary forms over a cyclotomic field.

A form is a map from exponent triples (i, j, l), meaning x^i y^j z^l, to
nonzero CycloElt coefficients. Linear substitutions act on the variables:
(f o A)(x, y, z) = f(A (x, y, z)^T).
"""

from fractions import Fraction

from .errors import FieldMismatch
from .field.cyclotomic import CycloElt, change_field, common_conductor, cyclo_field
from .field.matrix import Matrix


def order_zyx(e):
    """Graded lex with z > y > x (the default)."""
    return (e[0] + e[1] + e[2], e[2], e[1], e[0])


def order_xyz(e):
    """Graded lex with x > y > z."""
    return (e[0] + e[1] + e[2], e[0], e[1], e[2])


DEFAULT_ORDER = order_zyx
VARS = ("X", "Y", "Z")


def monomials(d):
    """All exponent triples of total degree d, descending in the default order."""
    out = [(i, j, d - i - j) for i in range(d + 1) for j in range(d + 1 - i)]
    out.sort(key=DEFAULT_ORDER, reverse=True)
    return out


class TernaryForm:
    """Immutable homogeneous form of a fixed degree."""

    __slots__ = ("field", "degree", "terms")

    def __init__(self, terms, degree=None, N=None):
        terms = dict(terms)
        if N is None:
            Ns = [c.N for c in terms.values() if isinstance(c, CycloElt)]
            N = common_conductor(*Ns) if Ns else 1
        F = cyclo_field(N)
        clean = {}
        for e, c in terms.items():
            e = tuple(int(k) for k in e)
            if len(e) != 3 or min(e) < 0:
                raise ValueError("bad exponent %r" % (e,))
            if isinstance(c, CycloElt):
                if c.field is not F:
                    c = change_field(c, N)
            else:
                c = F.rational(c)
            if not c.is_zero():
                clean[e] = clean[e] + c if e in clean else c
                if clean[e].is_zero():
                    del clean[e]
        degs = {sum(e) for e in clean}
        if degree is None:
            if len(degs) != 1:
                raise ValueError("cannot infer the degree of %r" % (terms,))
            degree = degs.pop()
        elif degs and degs != {degree}:
            raise ValueError("form is not homogeneous of degree %d" % degree)
        object.__setattr__(self, "field", F)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryForm is immutable")

    # construction
    @classmethod
    def zero(cls, degree, N=1):
        return cls({}, degree, N)

    @classmethod
    def variable(cls, k, N=1):
        e = [0, 0, 0]
        e[k] = 1
        return cls({tuple(e): 1}, 1, N)

    @classmethod
    def linear(cls, coeffs, N=None):
        return cls({(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1],
                    (0, 0, 1): coeffs[2]}, 1, N)

    @classmethod
    def conic_xy(cls):
        """z^2 - x y."""
        return cls({(0, 0, 2): 1, (1, 1, 0): -1}, 2)

    @property
    def N(self):
        return self.field.N

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.field.zero())

    def sorted_terms(self, order=DEFAULT_ORDER):
        return sorted(self.terms.items(), key=lambda t: order(t[0]), reverse=True)

    def leading_term(self, order=DEFAULT_ORDER):
        if not self.terms:
            return None
        e = max(self.terms, key=order)
        return e, self.terms[e]

    def is_zero(self):
        return not self.terms

    def is_rational(self):
        return all(c.is_rational() for c in self.terms.values())

    # field handling
    def change_field(self, M):
        return TernaryForm({e: change_field(c, M) for e, c in self.terms.items()},
                           self.degree, M)

    def galois(self, a):
        return TernaryForm({e: c.galois(a) for e, c in self.terms.items()},
                           self.degree, self.N)

    def _unify(self, other):
        if other.field is self.field:
            return self, other
        M = common_conductor(self.N, other.N)
        if M not in (self.N, other.N):
            raise FieldMismatch("forms over conductors %d and %d"
                                % (self.N, other.N))
        return self.change_field(M), other.change_field(M)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        a, b = self._unify(other)
        if a.degree != b.degree:
            raise ValueError("adding forms of degrees %d and %d"
                             % (a.degree, b.degree))
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return TernaryForm(terms, a.degree, a.N)

    def __neg__(self):
        return TernaryForm({e: -c for e, c in self.terms.items()},
                           self.degree, self.N)

    def __sub__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TernaryForm):
            a, b = self._unify(other)
            out = {}
            for e1, c1 in a.terms.items():
                for e2, c2 in b.terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    t = c1 * c2
                    out[e] = out[e] + t if e in out else t
            return TernaryForm(out, a.degree + b.degree, a.N)
        if isinstance(other, CycloElt):
            if other.field is not self.field:
                if other.N % self.N == 0:
                    return self.change_field(other.N) * other
                other = change_field(other, self.N)
            return TernaryForm({e: c * other for e, c in self.terms.items()},
                               self.degree, self.N)
        if isinstance(other, (int, Fraction)):
            return TernaryForm({e: c * other for e, c in self.terms.items()},
                               self.degree, self.N)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, CycloElt):
            return self * c.inverse()
        return self * (1 / Fraction(c))

    def __pow__(self, k):
        result = TernaryForm({(0, 0, 0): 1}, 0, self.N)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TernaryForm):
            return NotImplemented
        if other.degree != self.degree:
            return False
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms)))

    def __call__(self, x, y, z):
        acc = None
        for (i, j, l), c in self.terms.items():
            t = c * x ** i * y ** j * z ** l
            acc = t if acc is None else acc + t
        return acc if acc is not None else self.field.zero()

    # substitutions
    def substitute_linear(self, A):
        return substitute_linear(self, A)

    def content(self):
        """Positive rational c with self/c primitive integral (rational forms)."""
        from math import gcd
        nums, dens = [], []
        for c in self.terms.values():
            q = c.to_fraction()
            nums.append(abs(q.numerator))
            dens.append(q.denominator)
        if not nums:
            return Fraction(1)
        g = 0
        for n in nums:
            g = gcd(g, n)
        lcm = 1
        for d in dens:
            lcm = lcm * d // gcd(lcm, d)
        return Fraction(g, lcm)

    def to_rational_dict(self):
        return {e: c.to_fraction() for e, c in self.terms.items()}

    def __repr__(self):
        return "TernaryForm(%s)" % format_form(self)

    def __str__(self):
        return format_form(self)


def substitute_linear(f, A):
    """f o A for a 3x3 Matrix A; f is moved to the field of A if needed."""
    if f.field is not A.field:
        M = common_conductor(f.N, A.N)
        f = f.change_field(M)
        if A.N != M:
            A = A.change_field(M)
    N = f.N
    lins = [TernaryForm.linear(A.rows[k], N) for k in range(3)]
    cache = [{0: TernaryForm({(0, 0, 0): 1}, 0, N), 1: lins[k]} for k in range(3)]

    def power(k, n):
        c = cache[k]
        if n not in c:
            c[n] = power(k, n - 1) * lins[k]
        return c[n]

    acc = {}
    for (i, j, l), c in f.terms.items():
        prod = power(0, i) * power(1, j) * power(2, l)
        for e, t in prod.terms.items():
            t = t * c
            acc[e] = acc[e] + t if e in acc else t
    return TernaryForm(acc, f.degree, N)


def _divides(m, e):
    return m[0] <= e[0] and m[1] <= e[1] and m[2] <= e[2]


def reduce_mod_conic(f, Q, order=DEFAULT_ORDER):
    """Divide f by the quadric Q: f = normal_form + multiplier * Q.

    The normal form has no monomial divisible by the leading monomial of Q
    in the given order. Returns (normal_form, multiplier).
    """
    if Q.degree != 2 or Q.is_zero():
        raise ValueError("reduction needs a nonzero quadric")
    if f.field is not Q.field:
        M = common_conductor(f.N, Q.N)
        f, Q = f.change_field(M), Q.change_field(M)
    N = f.N
    lm, lc = Q.leading_term(order)
    lc_inv = lc.inverse()
    rest = [(e, c) for e, c in Q.terms.items() if e != lm]
    rem = dict(f.terms)
    mult = {}
    while True:
        cands = [e for e in rem if _divides(lm, e)]
        if not cands:
            break
        e = max(cands, key=order)
        c = rem.pop(e) * lc_inv
        q = (e[0] - lm[0], e[1] - lm[1], e[2] - lm[2])
        mult[q] = mult[q] + c if q in mult else c
        for e2, c2 in rest:
            m = (q[0] + e2[0], q[1] + e2[1], q[2] + e2[2])
            t = -(c * c2)
            if m in rem:
                s = rem[m] + t
                if s.is_zero():
                    del rem[m]
                else:
                    rem[m] = s
            else:
                rem[m] = t
    nf = TernaryForm(rem, f.degree, N)
    mp = TernaryForm(mult, max(f.degree - 2, 0), N)
    return nf, mp


def proportionality_scalar(f, g, Q, order=DEFAULT_ORDER):
    """a with f = a*g modulo (Q), or None when no such scalar exists."""
    nf, _ = reduce_mod_conic(f, Q, order)
    ng, _ = reduce_mod_conic(g, Q, order)
    if ng.is_zero():
        raise ValueError("second form lies in the ideal of the conic")
    if nf.field is not ng.field:
        M = common_conductor(nf.N, ng.N)
        nf, ng = nf.change_field(M), ng.change_field(M)
    e, c = ng.leading_term(order)
    a = nf.coefficient(e) / c
    if nf == ng * a:
        return a
    return None


def format_coeff(c):
    if c.is_rational():
        return str(c.to_fraction())
    return "(%s)" % c


def format_form(f, names=VARS, order=DEFAULT_ORDER):
    """Readable form such as 'Y^3*Z + 3*X^2*Y*Z + X^3*Z'."""
    if f.is_zero():
        return "0"
    parts = []
    for e, c in f.sorted_terms(order):
        mono = "*".join(
            names[k] if e[k] == 1 else "%s^%d" % (names[k], e[k])
            for k in range(3) if e[k])
        if c.is_rational():
            q = c.to_fraction()
            sign = "-" if q < 0 else "+"
            mag = abs(q)
            if mono:
                body = mono if mag == 1 else "%s*%s" % (mag, mono)
            else:
                body = str(mag)
        else:
            sign = "+"
            body = format_coeff(c) + ("*" + mono if mono else "")
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def symmetric_matrix(Q):
    """Rational symmetric matrix S with Q(v) = v^T S v."""
    S = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in Q.terms.items():
        q = c.to_fraction()
        idx = [k for k in range(3) for _ in range(e[k])]
        if idx[0] == idx[1]:
            S[idx[0]][idx[0]] += q
        else:
            S[idx[0]][idx[1]] += q / 2
            S[idx[1]][idx[0]] += q / 2
    return S


def quadric_from_symmetric(S):
    terms = {}
    for i in range(3):
        for j in range(i, 3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            terms[tuple(e)] = S[i][j] if i == j else 2 * S[i][j]
    return TernaryForm(terms, 2)


def primitive_rational(f):
    """(c, f/c) with f/c primitive integral and leading coefficient positive."""
    c = f.content()
    lead = f.leading_term()[1].to_fraction()
    if lead < 0:
        c = -c
    return c, f * (1 / c)


__all__ = ["TernaryForm", "Matrix", "substitute_linear", "reduce_mod_conic",
           "proportionality_scalar", "order_zyx", "order_xyz", "monomials",
           "format_form", "symmetric_matrix", "quadric_from_symmetric",
           "primitive_rational"]
