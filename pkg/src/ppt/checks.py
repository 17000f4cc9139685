"""Compositeness checks: Euler-criterion and binomial-congruence defects.

Each check returns the full defect rather than a boolean, so a nonzero
result doubles as a verifiable witness of compositeness. The polynomial
variants test the same binomial congruence modulo the canonical divisor
polynomials attached to a parameter m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import CanonicalParams
from .ntcore import jacobi
from .polyring import Poly, QuotientRing, mbec_remainder, poly_powmod
from .quadext import _pow_one_plus_root

__all__ = [
    "BccResult",
    "EccResult",
    "PgpcReport",
    "bcc",
    "ecc",
    "fgpc_check",
    "pgpc_check",
]


@dataclass(frozen=True)
class EccResult:
    """Euler-criterion defect q**((n-1)/2) - (q | n) mod n."""

    value: int

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class BccResult:
    """Binomial-congruence defect (1+sqrt(q))**n - 1 - sqrt(q)**n, mod n."""

    a: int
    b: int

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


def ecc(q: int, n: int) -> EccResult:
    """Euler-criterion defect of q at odd modulus n >= 3.

    Zero exactly when q**((n-1)/2) = (q | n) mod n. Raises when the Jacobi
    symbol vanishes, since gcd(q, n) > 1 already exposes a factor.
    """
    j = jacobi(q, n)
    if j == 0:
        raise ValueError("ecc: jacobi symbol is zero; gcd(q, n) is a factor")
    return EccResult((pow(q % n, (n - 1) >> 1, n) - j) % n)


def bcc(q: int, n: int) -> BccResult:
    """Binomial-congruence defect of q at odd modulus n >= 3.

    Computes (1 + sqrt(q))**n - 1 - sqrt(q)**n in Z_n[sqrt(q)], where
    sqrt(q)**n reduces to the scalar multiple q**((n-1)/2) * sqrt(q).
    """
    if n < 3 or not n & 1:
        raise ValueError("bcc: modulus must be odd and >= 3")
    q %= n
    a, b = _pow_one_plus_root(q, n, n)
    s = pow(q, (n - 1) >> 1, n)
    return BccResult((a - 1) % n, (b - s) % n)


@dataclass(frozen=True)
class PgpcReport:
    """Outcome of the four-condition polynomial battery for parameter m.

    Conditions are evaluated in order and short-circuit at the first
    failure; a condition that was never evaluated reads None. For the
    failing condition the offending remainder (and, for the fourth, the
    expected constant) is retained as the witness.
    """

    m: int
    cond1: bool | None
    cond2: bool | None
    cond3: bool | None
    cond4: bool | None
    failed: str | None
    witness: Poly | None
    expected: tuple[int, ...] | None

    @property
    def all_hold(self) -> bool:
        return (self.cond1, self.cond2, self.cond3, self.cond4) == (
            True,
            True,
            True,
            True,
        )


def _constant_expected(n: int, p_m: int) -> int:
    """Right-hand side of the fourth condition: 1, or (n | p_m) mod n."""
    if p_m == 2:
        return 1 % n
    return jacobi(n, p_m) % n


def pgpc_check(n: int, params: CanonicalParams) -> PgpcReport:
    """Four polynomial conditions at parameter m for odd n >= 3.

    1. (1+x)**n - 1 - x**n = 0 mod <Upsilon_m, n>
    2. (1+x)**n - 1 - x**n = 0 mod <Psi_m, n>
    3. x**(n**d - 1)        = 1 mod <Upsilon_m, n>, d = deg Upsilon_m
    4. x**(n**d - 1)        = c mod <Psi_m, n>, c as in _constant_expected
    """
    m = params.m
    ups = params.upsilon.reduced(n)
    psi = params.psi.reduced(n)

    r1 = mbec_remainder(n, ups)
    if not r1.is_zero:
        return PgpcReport(m, False, None, None, None, "cond1", r1, ())
    r2 = mbec_remainder(n, psi)
    if not r2.is_zero:
        return PgpcReport(m, True, False, None, None, "cond2", r2, ())

    e = n**params.d - 1
    x = Poly([0, 1], n)
    p3 = poly_powmod(QuotientRing(ups, n), x, e)
    if p3.coeffs != (1 % n,):
        return PgpcReport(m, True, True, False, None, "cond3", p3, (1 % n,))
    c = _constant_expected(n, params.p_m)
    p4 = poly_powmod(QuotientRing(psi, n), x, e)
    want = (c,) if c else ()
    if p4.coeffs != want:
        return PgpcReport(m, True, True, True, False, "cond4", p4, want)
    return PgpcReport(m, True, True, True, True, None, None, None)


def fgpc_check(n: int, params: CanonicalParams) -> tuple[bool, Poly]:
    """Single-condition variant: the binomial congruence mod <Psi_m, n>.

    Returns (holds, remainder); the remainder is the witness when it fails.
    """
    psi = params.psi.reduced(n)
    rem = mbec_remainder(n, psi)
    return rem.is_zero, rem
