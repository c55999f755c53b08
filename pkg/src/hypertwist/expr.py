"""A small expression language for cyclotomic numbers and matrices.

Accepted: integers, rationals written with /, the names ``i`` (zeta_4),
``zN`` or ``z_N`` (zeta_N), ``Id`` (identity of the requested size),
``diag(...)``, nested lists for matrices, and + - * / with ^ or ** for
integer powers. Mixed conductors are lifted to their lcm.
"""

import ast
import re
from fractions import Fraction

from .errors import InvalidInput
from .field.cyclotomic import CycloElt, change_field, common_conductor, cyclo_field
from .field.matrix import Matrix

_ZETA = re.compile(r"^z_?(\d+)$")


class _Identity:
    pass


def _lift(*xs):
    N = common_conductor(*[x.N for x in xs])
    return [x.change_field(N) if x.N != N else x for x in xs]


def _as_matrix(x, n):
    if isinstance(x, _Identity):
        return Matrix.identity(n)
    return x


class _Evaluator:
    def __init__(self, size):
        self.size = size

    def eval(self, node):
        meth = getattr(self, "_" + type(node).__name__, None)
        if meth is None:
            raise InvalidInput("unsupported syntax: %s" % type(node).__name__)
        return meth(node)

    def _Expression(self, node):
        return self.eval(node.body)

    def _Constant(self, node):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise InvalidInput("only integer literals are allowed, got %r" % node.value)
        return cyclo_field(1).rational(node.value)

    def _Name(self, node):
        if node.id == "i":
            return cyclo_field(4).zeta()
        if node.id == "Id":
            return _Identity()
        m = _ZETA.match(node.id)
        if m:
            N = int(m.group(1))
            if N < 1:
                raise InvalidInput("zeta_0 is meaningless")
            return cyclo_field(N).zeta()
        raise InvalidInput("unknown name %r" % node.id)

    def _List(self, node):
        rows = [self.eval(r) for r in node.elts]
        if all(isinstance(r, list) for r in rows):
            flat = [x for r in rows for x in r]
            if any(not isinstance(x, CycloElt) for x in flat):
                raise InvalidInput("matrix entries must be numbers")
            if any(len(r) != len(rows) for r in rows):
                raise InvalidInput("matrix rows must form a square")
            flat = _lift(*flat) if flat else flat
            it = iter(flat)
            return Matrix([[next(it) for _ in r] for r in rows])
        return rows

    _Tuple = _List

    def _Call(self, node):
        if not isinstance(node.func, ast.Name) or node.func.id != "diag":
            raise InvalidInput("only diag(...) may be called")
        args = [self.eval(a) for a in node.args]
        if any(not isinstance(a, CycloElt) for a in args):
            raise InvalidInput("diag takes numbers")
        return Matrix.diag(_lift(*args))

    def _UnaryOp(self, node):
        x = self.eval(node.operand)
        if isinstance(node.op, ast.USub):
            return -_as_matrix(x, self.size)
        if isinstance(node.op, ast.UAdd):
            return x
        raise InvalidInput("unsupported unary operator")

    def _BinOp(self, node):
        a, b = self.eval(node.left), self.eval(node.right)
        op = type(node.op).__name__
        if op == "Pow":
            if not (isinstance(b, CycloElt) and b.is_rational()
                    and b.to_fraction().denominator == 1):
                raise InvalidInput("exponents must be integers")
            k = int(b.to_fraction())
            if isinstance(a, Matrix):
                out = Matrix.identity(a.n, a.N)
                base = a if k >= 0 else a.inverse()
                for _ in range(abs(k)):
                    out = out @ base
                return out
            return a ** k
        a, b = _as_matrix(a, self.size), _as_matrix(b, self.size)
        a, b = _lift(a, b)
        if op == "Add":
            return a + b
        if op == "Sub":
            return a - b
        if op in ("Mult", "MatMult"):
            if isinstance(a, Matrix) and isinstance(b, Matrix):
                return a @ b
            if isinstance(b, Matrix):
                return b * a
            return a * b
        if op == "Div":
            if isinstance(b, Matrix):
                raise InvalidInput("cannot divide by a matrix")
            return a * b.inverse()
        raise InvalidInput("unsupported operator %s" % op)


def parse(text, size=3):
    """Evaluate ``text`` to a CycloElt or a Matrix (``Id`` has the given size)."""
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise InvalidInput("cannot parse %r: %s" % (text, exc.msg)) from None
    out = _Evaluator(size).eval(tree)
    if isinstance(out, _Identity):
        out = Matrix.identity(size)
    if isinstance(out, list):
        raise InvalidInput("%r is a vector, not a number or matrix" % text)
    return out


def parse_element(text, N=None):
    x = parse(text)
    if not isinstance(x, CycloElt):
        raise InvalidInput("%r is not a number" % text)
    return change_field(x, common_conductor(x.N, N)) if N else x


def parse_matrix(text, size=3, N=None):
    x = parse(text, size)
    if not isinstance(x, Matrix):
        raise InvalidInput("%r is not a matrix" % text)
    if x.n != size:
        raise InvalidInput("expected a %dx%d matrix" % (size, size))
    return x.change_field(common_conductor(x.N, N)) if N else x


def parse_rational(text):
    x = parse_element(str(text))
    if not x.is_rational():
        raise InvalidInput("%r is not rational" % text)
    return Fraction(x.to_fraction())
