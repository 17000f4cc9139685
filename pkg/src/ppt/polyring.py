"""Dense univariate polynomials over Z_n and quotient-ring arithmetic.

Coefficients are stored ascending by degree with the leading coefficient
nonzero; the zero polynomial has an empty coefficient tuple. A modulus of 0
denotes signed integer coefficients (used by the canonical constructions
before reduction at a concrete modulus).
"""

from __future__ import annotations

__all__ = [
    "Poly",
    "QuotientRing",
    "euler_poly_check",
    "mbec_remainder",
    "poly_mulmod",
    "poly_powmod",
]


class Poly:
    """Immutable dense polynomial; `coeffs` ascending, trailing term nonzero."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs, n: int = 0):
        if n < 0:
            raise ValueError("Poly: modulus must be >= 0")
        if n:
            cs = [c % n for c in coeffs]
        else:
            cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def reduced(self, n: int) -> "Poly":
        """The same polynomial with coefficients reduced mod n."""
        if n < 2:
            raise ValueError("Poly.reduced: modulus must be >= 2")
        return Poly(self.coeffs, n)

    def evaluate(self, x: int) -> int:
        """Value at x by Horner's rule (mod n when a modulus is set)."""
        acc = 0
        if self.n:
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % self.n
        else:
            for c in reversed(self.coeffs):
                acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.n == other.n

    def __hash__(self) -> int:
        return hash((self.coeffs, self.n))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, n={self.n})"

    def __str__(self) -> str:
        """Explicit form 'c_k*x^k + ... + c_0', suitable for certificates."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^{k}")
        return " + ".join(parts)

    def pretty(self, var: str = "x") -> str:
        """Human form with signs and implicit unit coefficients.

        Example: coefficients [7, 0, 14, 0, 7, 0, 1] render as
        'u^6 + 7u^4 + 14u^2 + 7' with var='u'.
        """
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                stem = var if k == 1 else f"{var}^{k}"
                body = stem if mag == 1 else f"{mag}{stem}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


class QuotientRing:
    """Z_n[x] / <divisor(x)> for a monic divisor of degree >= 1."""

    __slots__ = ("divisor", "n", "_div")

    def __init__(self, divisor: Poly, n: int | None = None):
        if n is None:
            n = divisor.n
        if n < 2:
            raise ValueError("QuotientRing: modulus must be >= 2")
        d = divisor if divisor.n == n else Poly(divisor.coeffs, n)
        if d.degree < 1:
            raise ValueError("QuotientRing: divisor degree must be >= 1")
        if d.coeffs[-1] != 1:
            raise ValueError("QuotientRing: divisor must be monic")
        object.__setattr__(self, "divisor", d)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_div", list(d.coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QuotientRing is immutable")

    def element(self, coeffs) -> Poly:
        """Coefficients reduced into the ring (mod n, then mod divisor)."""
        return Poly(_rem(_reduce_list(coeffs, self.n), self._div, self.n), self.n)

    def __repr__(self) -> str:
        return f"QuotientRing({self.divisor!r})"


def _reduce_list(coeffs, n: int) -> list[int]:
    out = [c % n for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _rem(p: list[int], div: list[int], n: int) -> list[int]:
    """Remainder of p modulo the monic divisor, destructive on p."""
    dd = len(div) - 1
    for i in range(len(p) - 1, dd - 1, -1):
        c = p[i]
        if c:
            p[i] = 0
            off = i - dd
            for j in range(dd):
                dj = div[j]
                if dj:
                    p[off + j] = (p[off + j] - c * dj) % n
    del p[dd:]
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul_lists(p1: list[int], p2: list[int], n: int) -> list[int]:
    """Schoolbook product; coefficients accumulated raw, reduced once."""
    if not p1 or not p2:
        return []
    out = [0] * (len(p1) + len(p2) - 1)
    for i, a in enumerate(p1):
        if a:
            for j, b in enumerate(p2):
                out[i + j] += a * b
    for i, v in enumerate(out):
        out[i] = v % n
    while out and out[-1] == 0:
        out.pop()
    return out


def _mulmod_lists(p1: list[int], p2: list[int], div: list[int], n: int) -> list[int]:
    return _rem(_mul_lists(p1, p2, n), div, n)


def _powmod_linear(c0: int, c1: int, e: int, div: list[int], n: int) -> list[int]:
    """(c0 + c1*x)**e mod <div, n>; the multiply step costs O(deg) only."""
    if e == 0:
        one = 1 % n
        return [one] if one else []
    c0 %= n
    c1 %= n
    if len(div) == 2:
        # Degree-1 divisor: x is congruent to a scalar.
        x0 = (-div[0]) % n
        v = pow((c0 + c1 * x0) % n, e, n)
        return [v] if v else []
    cur = [c0, c1]
    while cur and cur[-1] == 0:
        cur.pop()
    cur = _rem(cur, div, n)
    for i in range(e.bit_length() - 2, -1, -1):
        cur = _rem(_mul_lists(cur, cur, n), div, n)
        if (e >> i) & 1:
            nxt = [0] * (len(cur) + 1)
            for idx, v in enumerate(cur):
                if v:
                    nxt[idx] += c0 * v
                    nxt[idx + 1] += c1 * v
            for idx, v in enumerate(nxt):
                nxt[idx] = v % n
            cur = _rem(nxt, div, n)
    return cur


def _powmod_lists(base: list[int], e: int, div: list[int], n: int) -> list[int]:
    if len(base) <= 2:
        c0 = base[0] if base else 0
        c1 = base[1] if len(base) > 1 else 0
        return _powmod_linear(c0, c1, e, div, n)
    if e == 0:
        one = 1 % n
        return [one] if one else []
    cur = _rem(list(base), div, n)
    for i in range(e.bit_length() - 2, -1, -1):
        cur = _rem(_mul_lists(cur, cur, n), div, n)
        if (e >> i) & 1:
            cur = _rem(_mul_lists(cur, base, n), div, n)
    return cur


def _coerce(ring: QuotientRing, p: Poly, what: str) -> list[int]:
    """Poly -> reduced coefficient list in the ring; modulus must agree."""
    if p.n not in (0, ring.n):
        raise ValueError(f"{what}: modulus mismatch")
    coeffs = _reduce_list(p.coeffs, ring.n) if p.n == 0 else list(p.coeffs)
    return _rem(coeffs, ring._div, ring.n)


def poly_mulmod(ring: QuotientRing, p1: Poly, p2: Poly) -> Poly:
    """p1 * p2 reduced in the quotient ring."""
    a = _coerce(ring, p1, "poly_mulmod")
    b = _coerce(ring, p2, "poly_mulmod")
    return Poly(_mulmod_lists(a, b, ring._div, ring.n), ring.n)


def poly_powmod(ring: QuotientRing, base: Poly, e: int) -> Poly:
    """base**e reduced in the quotient ring, e >= 0."""
    if e < 0:
        raise ValueError("poly_powmod: exponent must be >= 0")
    b = _coerce(ring, base, "poly_powmod")
    return Poly(_powmod_lists(b, e, ring._div, ring.n), ring.n)


def mbec_remainder(n: int, d: Poly) -> Poly:
    """Remainder of (1+x)**n - 1 - x**n in Z_n[x]/<d(x)>.

    Zero exactly when the binomial congruence holds modulo d at modulus n.
    d must be monic of degree >= 1; integer-coefficient d is reduced mod n.
    """
    if n < 3 or not n & 1:
        raise ValueError("mbec_remainder: modulus must be odd and >= 3")
    ring = QuotientRing(d, n)
    div = ring._div
    a = _powmod_linear(1, 1, n, div, n)
    b = _powmod_linear(0, 1, n, div, n)
    out = [0] * max(len(a), len(b), 1)
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % n
    out[0] = (out[0] - 1) % n
    return Poly(out, n)


def euler_poly_check(n: int, q: int) -> int | None:
    """x**(n-1) in Z_n[x]/<x**2 - q> when constant, else None.

    For prime n with (q | n) nonzero the value is q**((n-1)/2) mod n by the
    reduction x**2 = q; a non-constant remainder is reported, not resolved.
    """
    if n < 3 or not n & 1:
        raise ValueError("euler_poly_check: modulus must be odd and >= 3")
    div = [(-q) % n, 0, 1]
    rem = _powmod_linear(0, 1, n - 1, div, n)
    if len(rem) > 1:
        return None
    return rem[0] if rem else 0
