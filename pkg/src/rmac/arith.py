"""Elementary number theory by trial division.

Inputs here are small (ring sizes up to a few dozen), so nothing
cleverer than trial division is warranted.
"""
from math import comb, gcd

__all__ = ["factorize", "divisors", "mobius", "totient", "ramanujan_sum", "comb", "gcd"]


def factorize(n):
    """Return ``{prime: exponent}`` for a positive integer ``n``."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n):
    """Sorted list of the positive divisors of ``n``."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n):
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n):
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def ramanujan_sum(q, k):
    """Sum of the k-th powers of the primitive q-th roots of unity."""
    g = gcd(q, k) if k else q
    return sum(mobius(q // d) * d for d in divisors(g))
