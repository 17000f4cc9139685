"""Arbitrary-precision integer number theory primitives.

Pure functions over Python ints: Jacobi symbol, modular exponentiation,
exact integer square root, prime stepping, odd-part decomposition, and a
quadratic-residue census for small moduli.
"""

from __future__ import annotations

import math
from typing import NamedTuple

__all__ = [
    "OddFactorDecomp",
    "count_qnr",
    "gcd",
    "isqrt",
    "jacobi",
    "lof_tpow",
    "modexp",
    "next_prime",
]


class OddFactorDecomp(NamedTuple):
    """Decomposition z = delta * 2**t with delta odd."""

    delta: int
    t: int


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a | n) in {-1, 0, +1} for odd n >= 3.

    a may be any integer; it is reduced mod n first. Computed with the
    binary reciprocity loop, so neither argument is factored. Returns 0
    exactly when gcd(a, n) > 1.
    """
    if n < 3 or not n & 1:
        raise ValueError("jacobi: modulus must be odd and >= 3")
    a %= n
    result = 1
    while a:
        tz = (a & -a).bit_length() - 1
        if tz & 1 and n & 7 in (3, 5):
            result = -result
        a >>= tz
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a, n = n % a, a
    return result if n == 1 else 0


def modexp(base: int, exp: int, n: int) -> int:
    """base**exp mod n with the result in [0, n)."""
    if n < 2:
        raise ValueError("modexp: modulus must be >= 2")
    if exp < 0:
        raise ValueError("modexp: exponent must be >= 0")
    return pow(base % n, exp, n)


def isqrt(n: int) -> tuple[int, bool]:
    """(floor(sqrt(n)), exact) with exactness verified by multiplication."""
    if n < 0:
        raise ValueError("isqrt: negative input")
    s = math.isqrt(n)
    return s, s * s == n


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, 0) == 0."""
    return math.gcd(a, b)


def lof_tpow(z: int) -> OddFactorDecomp:
    """Split z >= 1 into (delta, t) with z = delta * 2**t and delta odd."""
    if z < 1:
        raise ValueError("lof_tpow: input must be >= 1")
    t = (z & -z).bit_length() - 1
    return OddFactorDecomp(z >> t, t)


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# Smallest composite that is a strong pseudoprime to every base above; the
# strong test with these bases is a primality proof strictly below it.
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981


def _is_prime_det(n: int) -> bool:
    """Deterministic primality for n below _MR_DETERMINISTIC_BOUND."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_DETERMINISTIC_BOUND:
        raise ValueError("next_prime: beyond the deterministic range")
    d, t = lof_tpow(n - 1)
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(t - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(p: int) -> int:
    """Smallest prime strictly greater than p."""
    if p < 2:
        return 2
    c = (p + 1) | 1
    while not _is_prime_det(c):
        c += 2
    return c


def count_qnr(n: int) -> tuple[int, int]:
    """Census of [1, n) by Jacobi symbol: (count of -1, count of +1).

    Requires n odd, >= 3, and not a perfect square; for such n both counts
    equal phi(n)/2. Exhaustive scan, intended for small n only.
    """
    if n < 3 or not n & 1:
        raise ValueError("count_qnr: modulus must be odd and >= 3")
    s = math.isqrt(n)
    if s * s == n:
        raise ValueError("count_qnr: modulus must not be a perfect square")
    neg = pos = 0
    for a in range(1, n):
        j = jacobi(a, n)
        if j < 0:
            neg += 1
        elif j > 0:
            pos += 1
    return neg, pos
