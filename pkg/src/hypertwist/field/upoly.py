"""Dense univariate polynomials over Q or a cyclotomic field.

Polynomials are lists of coefficients, lowest degree first, with elements
that support + - * / (Fraction or CycloElt). Zero is the empty list.
"""

from math import comb


def trim(p):
    p = list(p)
    while p and _is_zero(p[-1]):
        p.pop()
    return p


def _is_zero(c):
    return c == 0 if not hasattr(c, "is_zero") else c.is_zero()


def degree(p):
    return len(trim(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else None
        b = q[k] if k < len(q) else None
        out.append(a + b if a is not None and b is not None else
                   (a if a is not None else b))
    return trim(out)


def scale(p, c):
    return trim([a * c for a in p])


def sub(p, q):
    return add(p, scale(q, -1))


def mul(p, q):
    p, q = trim(p), trim(q)
    if not p or not q:
        return []
    out = [None] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if _is_zero(a):
            continue
        for j, b in enumerate(q):
            t = a * b
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    zero = p[0] * 0
    return trim([zero if c is None else c for c in out])


def derivative(p):
    return trim([p[k] * k for k in range(1, len(p))])


def divmod_poly(p, q):
    p, q = trim(p), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return [], p
    lead = q[-1]
    quot = [None] * (len(p) - len(q) + 1)
    rem = list(p)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + len(q) - 1] / lead
        quot[k] = c
        if not _is_zero(c):
            for j, b in enumerate(q):
                rem[k + j] = rem[k + j] - c * b
    return trim(quot), trim(rem[:len(q) - 1])


def monic(p):
    p = trim(p)
    if not p:
        return p
    lead = p[-1]
    return [c / lead for c in p]


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_poly(p, q)[1]
    return monic(p)


def squarefree_multiplicities(p):
    """Multiset of root multiplicities of p over an algebraic closure.

    Returns a dict {multiplicity: number of distinct roots} via Yun's
    algorithm (characteristic zero).
    """
    p = monic(p)
    out = {}
    if degree(p) < 1:
        return out
    dp = derivative(p)
    a = gcd(p, dp)
    b = divmod_poly(p, a)[0]
    c = divmod_poly(dp, a)[0]
    d = sub(c, derivative(b))
    k = 1
    while degree(b) > 0:
        a = gcd(b, d)
        b = divmod_poly(b, a)[0]
        c = divmod_poly(d, a)[0]
        d = sub(c, derivative(b))
        if degree(a) > 0:
            out[k] = out.get(k, 0) + degree(a)
        k += 1
    return out


def evaluate(p, x):
    acc = None
    for c in reversed(p):
        acc = c if acc is None else acc * x + c
    return acc


def compose_mobius(p, deg, r):
    """x^deg * p(r + 1/x): moves the root r of p to infinity."""
    # p(r + 1/x) * x^deg = sum_k c_k (r x + 1)^k x^(deg - k)
    zero = p[0] * 0
    out = [zero] * (deg + 1)
    for k, c in enumerate(p):
        if _is_zero(c):
            continue
        # (r x + 1)^k = sum_j binom(k, j) r^j x^j
        for j in range(k + 1):
            out[j + deg - k] = out[j + deg - k] + c * comb(k, j) * r ** j
    return trim(out)
