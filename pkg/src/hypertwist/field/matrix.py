"""Small dense matrices (2x2, 3x3) over one cyclotomic field."""

from ..errors import FieldMismatch
from .cyclotomic import CycloElt, change_field, cyclo_field


def _elt(x, F):
    if isinstance(x, CycloElt):
        if x.field is not F:
            return change_field(x, F.N)
        return x
    return F.rational(x)


class Matrix:
    """Square matrix of CycloElt, all in the field of conductor ``N``."""

    __slots__ = ("field", "rows")

    def __init__(self, rows, N=None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if N is None:
            Ns = [x.N for r in rows for x in r if isinstance(x, CycloElt)]
            N = max(Ns) if Ns else 1
            for m in Ns:
                if N % m:
                    raise FieldMismatch("entries from incompatible fields")
        F = cyclo_field(N)
        object.__setattr__(self, "field", F)
        object.__setattr__(self, "rows",
                           tuple(tuple(_elt(x, F) for x in r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n, N=1):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], N)

    @classmethod
    def diag(cls, entries, N=None):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)]
                    for i in range(n)], N)

    @property
    def N(self):
        return self.field.N

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [x for r in self.rows for x in r]

    def _check(self, other):
        if other.field is not self.field:
            raise FieldMismatch("matrices over conductors %d and %d"
                                % (self.N, other.N))
        if other.n != self.n:
            raise ValueError("size mismatch")

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            self._check(other)
            n = self.n
            cols = list(zip(*other.rows))
            return Matrix([[_dot(self.rows[i], cols[j]) for j in range(n)]
                           for i in range(n)], self.N)
        # matrix times vector
        vec = [_elt(x, self.field) for x in other]
        return [_dot(r, vec) for r in self.rows]

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return self @ c
        c = _elt(c, self.field)
        return Matrix([[x * c for x in r] for r in self.rows], self.N)

    __rmul__ = __mul__

    def __add__(self, other):
        self._check(other)
        return Matrix([[a + b for a, b in zip(r, s)]
                       for r, s in zip(self.rows, other.rows)], self.N)

    def __sub__(self, other):
        self._check(other)
        return Matrix([[a - b for a, b in zip(r, s)]
                       for r, s in zip(self.rows, other.rows)], self.N)

    def __neg__(self):
        return self * -1

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return self.rows == other.rows

    def __hash__(self):
        return hash((self.N, self.rows))

    def det(self):
        r = self.rows
        if self.n == 1:
            return r[0][0]
        if self.n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        if self.n == 3:
            return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                    - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                    + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))
        raise NotImplementedError("determinants beyond 3x3")

    def adjugate(self):
        r = self.rows
        if self.n == 2:
            return Matrix([[r[1][1], -r[0][1]], [-r[1][0], r[0][0]]], self.N)
        if self.n == 3:
            def minor(i, j):
                rs = [k for k in range(3) if k != i]
                cs = [k for k in range(3) if k != j]
                return (r[rs[0]][cs[0]] * r[rs[1]][cs[1]]
                        - r[rs[0]][cs[1]] * r[rs[1]][cs[0]])
            return Matrix([[minor(j, i) * (-1) ** (i + j) for j in range(3)]
                           for i in range(3)], self.N)
        raise NotImplementedError("adjugates beyond 3x3")

    def inverse(self):
        d = self.det()
        if d.is_zero():
            raise ZeroDivisionError("singular matrix")
        return self.adjugate() * d.inverse()

    def is_invertible(self):
        return not self.det().is_zero()

    def transpose(self):
        return Matrix(list(zip(*self.rows)), self.N)

    def galois(self, a):
        return Matrix([[x.galois(a) for x in r] for r in self.rows], self.N)

    def change_field(self, M):
        return Matrix([[change_field(x, M) for x in r] for r in self.rows], M)

    def is_rational(self):
        return all(x.is_rational() for x in self.entries())

    def scalar_ratio(self, other):
        """c with other = c * self, or None."""
        self._check(other)
        c = None
        for a, b in zip(self.entries(), other.entries()):
            if a.is_zero():
                if not b.is_zero():
                    return None
                continue
            if c is None:
                c = b / a
        if c is None:
            return None
        return c if other == self * c else None

    def is_scalar(self):
        n = self.n
        d = self.rows[0][0]
        return all(self.rows[i][j] == (d if i == j else 0)
                   for i in range(n) for j in range(n))

    def __repr__(self):
        return "Matrix(%d, %s)" % (self.N, [[str(x) for x in r]
                                            for r in self.rows])


def _dot(u, v):
    acc = None
    for a, b in zip(u, v):
        if a.is_zero() or b.is_zero():
            continue
        t = a * b
        acc = t if acc is None else acc + t
    return acc if acc is not None else u[0].field.zero()


def as_rational_matrix(A):
    return [[x.to_fraction() for x in r] for r in A.rows]


def identity_like(A):
    return Matrix.identity(A.n, A.N)

