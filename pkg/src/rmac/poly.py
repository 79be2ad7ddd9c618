"""Integer polynomials as coefficient tuples, lowest degree first.

``(−1, 0, 1)`` is x² − 1. The zero polynomial is ``()``.
"""
from functools import lru_cache

from .arith import divisors, mobius

ONE = (1,)


def normalize(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(int(c) for c in p)


def mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def power(p, k):
    result = ONE
    for _ in range(k):
        result = mul(result, p)
    return result


def product(polys):
    result = ONE
    for p in polys:
        result = mul(result, p)
    return result


def substitute_power(p, d):
    """Return p(x**d)."""
    if not p:
        return ()
    out = [0] * ((len(p) - 1) * d + 1)
    for i, c in enumerate(p):
        out[i * d] = c
    return tuple(out)


def divexact(p, q):
    """Quotient of p by a monic q; raises if the remainder is nonzero."""
    p = list(normalize(p))
    q = normalize(q)
    if not q or q[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(p) < len(q):
        if any(p):
            raise ValueError("division is not exact")
        return ()
    quot = [0] * (len(p) - len(q) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = p[shift + len(q) - 1]
        quot[shift] = c
        if c:
            for i, b in enumerate(q):
                p[shift + i] -= c * b
    if any(p):
        raise ValueError("division is not exact")
    return normalize(quot)


def x_power_minus_one(k):
    return (-1,) + (0,) * (k - 1) + (1,)


@lru_cache(maxsize=None)
def cyclotomic(e):
    """The e-th cyclotomic polynomial."""
    num, den = ONE, ONE
    for d in divisors(e):
        mu = mobius(e // d)
        if mu == 1:
            num = mul(num, x_power_minus_one(d))
        elif mu == -1:
            den = mul(den, x_power_minus_one(d))
    return divexact(num, den)


def to_string(p, var="x"):
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
