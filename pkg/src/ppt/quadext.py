"""Arithmetic in the quadratic extension ring Z_n[sqrt(q)].

Elements are pairs a + b*sqrt(q) with both coordinates reduced mod an odd
modulus n >= 3. Multiplication uses sqrt(q)**2 = q; no inverses are needed
by any caller, so none are provided.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["QuadCtx", "QuadInt", "conjugate", "norm", "quad_mul", "quad_pow"]


@dataclass(frozen=True)
class QuadCtx:
    """Ring context: odd modulus n >= 3 and the residue q under the radical."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 3 or not self.n & 1:
            raise ValueError("QuadCtx: modulus must be odd and >= 3")
        object.__setattr__(self, "q", self.q % self.n)

    def element(self, a: int, b: int) -> "QuadInt":
        return QuadInt(a, b, self)

    def one_plus_root(self) -> "QuadInt":
        return QuadInt(1, 1, self)


@dataclass(frozen=True)
class QuadInt:
    """Element a + b*sqrt(q) of Z_n[sqrt(q)]."""

    a: int
    b: int
    ctx: QuadCtx

    def __post_init__(self) -> None:
        n = self.ctx.n
        object.__setattr__(self, "a", self.a % n)
        object.__setattr__(self, "b", self.b % n)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.ctx.q})"


def _mul(a: int, b: int, c: int, d: int, q: int, n: int) -> tuple[int, int]:
    """(a + b*r)(c + d*r) with r*r = q, coordinates mod n."""
    return (a * c + b * d % n * q) % n, (a * d + b * c) % n


def _pow(a: int, b: int, q: int, n: int, e: int) -> tuple[int, int]:
    """(a + b*r)**e by left-to-right binary squaring."""
    if e == 0:
        return 1 % n, 0
    a %= n
    b %= n
    ra, rb = a, b
    for i in range(e.bit_length() - 2, -1, -1):
        ra, rb = (ra * ra + rb * rb % n * q) % n, 2 * ra * rb % n
        if (e >> i) & 1:
            ra, rb = (ra * a + rb * b % n * q) % n, (ra * b + rb * a) % n
    return ra, rb


def _pow_one_plus_root(q: int, n: int, e: int) -> tuple[int, int]:
    """(1 + sqrt(q))**e mod n; the multiply step degenerates to two adds."""
    if e == 0:
        return 1 % n, 0
    ra, rb = 1, 1
    for i in range(e.bit_length() - 2, -1, -1):
        ra, rb = (ra * ra + rb * rb % n * q) % n, 2 * ra * rb % n
        if (e >> i) & 1:
            ra, rb = (ra + rb * q) % n, (ra + rb) % n
    return ra, rb


def quad_mul(x: QuadInt, y: QuadInt) -> QuadInt:
    """Product of two elements of the same ring."""
    if x.ctx != y.ctx:
        raise ValueError("quad_mul: context mismatch")
    a, b = _mul(x.a, x.b, y.a, y.b, x.ctx.q, x.ctx.n)
    return QuadInt(a, b, x.ctx)


def quad_pow(x: QuadInt, e: int) -> QuadInt:
    """x**e for e >= 0 (x**0 is the ring identity)."""
    if e < 0:
        raise ValueError("quad_pow: exponent must be >= 0")
    a, b = _pow(x.a, x.b, x.ctx.q, x.ctx.n, e)
    return QuadInt(a, b, x.ctx)


def conjugate(x: QuadInt) -> QuadInt:
    """a + b*sqrt(q) -> a - b*sqrt(q)."""
    return QuadInt(x.a, -x.b, x.ctx)


def norm(x: QuadInt) -> int:
    """x times its conjugate: a**2 - q*b**2 mod n (multiplicative)."""
    n, q = x.ctx.n, x.ctx.q
    return (x.a * x.a - q * x.b * x.b) % n
