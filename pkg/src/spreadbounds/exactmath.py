"""Exact integer arithmetic for q-analogs.

Everything here works on Python ints, so values never overflow. No floating
point is used anywhere in the bound pipeline.
"""

import math

__all__ = [
    "q_pow",
    "q_bracket",
    "gaussian_binomial",
    "isqrt",
    "ceil_bound_term",
    "exact_div",
    "q_valuation",
]


def exact_div(a, b):
    """Return a // b, raising ArithmeticError if b does not divide a."""
    quotient, remainder = divmod(a, b)
    if remainder:
        raise ArithmeticError(f"{b} does not divide {a} (remainder {remainder})")
    return quotient


def q_pow(q, e):
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    return q**e


def q_bracket(a, q):
    """Number of projective points of F_q^a, i.e. (q^a - 1)/(q - 1)."""
    if a < 0:
        raise ValueError(f"a must be non-negative, got {a}")
    return exact_div(q_pow(q, a) - 1, q - 1)


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = 1
    den = 1
    for i in range(k):
        num *= q_pow(q, n - i) - 1
        den *= q_pow(q, i + 1) - 1
    return exact_div(num, den)


def isqrt(d):
    """Floor of the square root of d.

    Delegates to math.isqrt, which is an exact integer Newton iteration.
    """
    if d < 0:
        raise ValueError(f"isqrt of negative number {d}")
    return math.isqrt(d)


def ceil_bound_term(lam, d):
    """Exact value of ceil(lam - 1/2 - sqrt(d)/2).

    With s = isqrt(d) we have floor((1 + sqrt(d))/2) == (1 + s)//2 whether or
    not d is a perfect square, so the ceiling is lam - (1 + s)//2.
    """
    if d < 1:
        raise ValueError(f"d must be at least 1, got {d}")
    return lam - (1 + isqrt(d)) // 2


def q_valuation(value, q):
    """Largest f with q^f dividing value. Zero maps to 0 by convention."""
    if value == 0:
        return 0
    value = abs(value)
    f = 0
    while value % q == 0:
        value //= q
        f += 1
    return f
