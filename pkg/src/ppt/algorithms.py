"""Primality deciders built on quadratic non-residues and binomial congruences.

Three deciders share one verdict model:

* ppta_eqnr: picks an explicit quadratic non-residue q (deterministically
  from n mod 8 when possible, otherwise by scanning small primes) and tests
  the Euler criterion followed by the binomial congruence in Z_n[sqrt(q)].
* ppta_inr: for n != 1 mod 24 the non-residue is deterministic; otherwise a
  parameter search yields a divisor, a non-residue, or a prime power m whose
  canonical divisor polynomials drive a four-condition (or single-condition)
  polynomial battery.
* enhanced_mr: randomized hybrid; random bases serve either as Miller-Rabin
  bases or, once one is a non-residue, as the q for the two checks above.

Composite verdicts carry a mechanism object that re-verifies from its own
fields; prime verdicts name the basis (explicit non-residue or parameter m)
that certified them.
"""

from __future__ import annotations

import math
import os
import random
import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from . import ntcore as nt
from .canonical import canonical_params, find_qnr_or_m
from .checks import bcc, ecc, fgpc_check, pgpc_check
from .ntcore import jacobi, lof_tpow
from .polyring import Poly, QuotientRing, mbec_remainder, poly_powmod
from .quadext import _pow_one_plus_root

__all__ = [
    "BinomialWitness",
    "Even",
    "EulerWitness",
    "FermatWitness",
    "JacobiZeroFactor",
    "MrNontrivialRoot",
    "MrOutcome",
    "Outcome",
    "PerfectSquare",
    "PgpcViolation",
    "PrimeBasis",
    "QnrMrProbe",
    "QnrProbe",
    "QnrSearch",
    "TrivialFactor",
    "Verdict",
    "certificate",
    "default_qnr_iter_limit",
    "enhanced_mr",
    "find_qnr",
    "find_qnr_with_mr",
    "mechanism_from_json",
    "miller_rabin_base",
    "ppta_eqnr",
    "ppta_inr",
    "verify_certificate",
]


class Outcome(Enum):
    PRIME = "prime"
    COMPOSITE = "composite"
    NOT_APPLICABLE = "not_applicable"
    INCONCLUSIVE = "inconclusive"


# --------------------------------------------------------------- mechanisms


@dataclass(frozen=True)
class Even:
    """n is even and greater than 2."""

    kind = "even"

    def verify(self, n: int) -> bool:
        return n > 2 and n % 2 == 0

    def describe(self) -> str:
        return "even"


@dataclass(frozen=True)
class TrivialFactor:
    """A proper divisor found by direct residue screening."""

    p: int
    kind = "trivial_factor"

    def verify(self, n: int) -> bool:
        return 1 < self.p < n and n % self.p == 0

    def describe(self) -> str:
        return f"factor {self.p}"


@dataclass(frozen=True)
class PerfectSquare:
    """n = s**2 with s > 1."""

    s: int
    kind = "perfect_square"

    def verify(self, n: int) -> bool:
        return self.s > 1 and self.s * self.s == n

    def describe(self) -> str:
        return f"perfect square of {self.s}"


@dataclass(frozen=True)
class JacobiZeroFactor:
    """A probe shared a factor with n (vanishing Jacobi symbol)."""

    p: int
    kind = "jacobi_zero_factor"

    def verify(self, n: int) -> bool:
        return 1 < self.p < n and n % self.p == 0

    def describe(self) -> str:
        return f"shared factor {self.p}"


@dataclass(frozen=True)
class EulerWitness:
    """Nonzero Euler-criterion defect at a non-residue q."""

    q: int
    ecc_value: int
    kind = "euler_witness"

    def verify(self, n: int) -> bool:
        if jacobi(self.q, n) == 0:
            return False
        return self.ecc_value != 0 and ecc(self.q, n).value == self.ecc_value

    def describe(self) -> str:
        return f"euler defect {self.ecc_value} at q={self.q}"


@dataclass(frozen=True)
class BinomialWitness:
    """Nonzero binomial-congruence defect.

    Scalar form: (q, a, b) is the defect pair in Z_n[sqrt(q)].
    Polynomial form: `divisor` (ascending coefficients mod n) leaves the
    nonzero `remainder`; `divisor_kind` names which canonical polynomial it
    was reduced from, and `m` its parameter.
    """

    q: int | None = None
    a: int | None = None
    b: int | None = None
    divisor_kind: str | None = None
    divisor: tuple[int, ...] | None = None
    remainder: tuple[int, ...] | None = None
    m: int | None = None
    kind = "binomial_witness"

    def verify(self, n: int) -> bool:
        if self.q is not None:
            if (self.a, self.b) == (0, 0):
                return False
            got = bcc(self.q, n)
            return (got.a, got.b) == (self.a, self.b)
        if self.divisor is None or self.remainder is None:
            return False
        if not self.remainder:
            return False
        got_rem = mbec_remainder(n, Poly(self.divisor, n))
        return got_rem.coeffs == tuple(self.remainder)

    def describe(self) -> str:
        if self.q is not None:
            return f"binomial defect ({self.a}, {self.b}) at q={self.q}"
        return f"binomial defect mod {self.divisor_kind} (m={self.m})"


@dataclass(frozen=True)
class MrNontrivialRoot:
    """A square root of 1 other than +-1, found while squaring base**odd."""

    base: int
    b: int
    kind = "mr_nontrivial_root"

    def verify(self, n: int) -> bool:
        r = self.b % n
        return r not in (1, n - 1) and r * r % n == 1

    def describe(self) -> str:
        return f"nontrivial root of unity {self.b} (base {self.base})"


@dataclass(frozen=True)
class FermatWitness:
    """a**(n-1) != 1 mod n."""

    a: int
    kind = "fermat_witness"

    def verify(self, n: int) -> bool:
        return pow(self.a, n - 1, n) != 1

    def describe(self) -> str:
        return f"fermat witness {self.a}"


@dataclass(frozen=True)
class PgpcViolation:
    """First failing condition of the four-condition polynomial battery.

    `remainder` holds the offending residue (ascending coefficients mod n)
    and `expected` what a prime would have produced there: the empty tuple
    for the two binomial conditions, (1,) or the Jacobi constant for the
    power conditions.
    """

    m: int
    failed: str
    remainder: tuple[int, ...]
    expected: tuple[int, ...]
    kind = "pgpc_violation"

    def verify(self, n: int) -> bool:
        if tuple(self.remainder) == tuple(self.expected):
            return False
        params = canonical_params(self.m)
        ups = params.upsilon.reduced(n)
        psi = params.psi.reduced(n)
        if self.failed == "cond1":
            got = mbec_remainder(n, ups).coeffs
        elif self.failed == "cond2":
            got = mbec_remainder(n, psi).coeffs
        elif self.failed == "cond3":
            e = n**params.d - 1
            got = poly_powmod(QuotientRing(ups, n), Poly([0, 1], n), e).coeffs
        elif self.failed == "cond4":
            e = n**params.d - 1
            got = poly_powmod(QuotientRing(psi, n), Poly([0, 1], n), e).coeffs
        else:
            return False
        return got == tuple(self.remainder)

    def describe(self) -> str:
        return f"polynomial battery failed {self.failed} at m={self.m}"


_MECHANISMS = {
    cls.kind: cls
    for cls in (
        Even,
        TrivialFactor,
        PerfectSquare,
        JacobiZeroFactor,
        EulerWitness,
        BinomialWitness,
        MrNontrivialRoot,
        FermatWitness,
        PgpcViolation,
    )
}

Mechanism = (
    Even
    | TrivialFactor
    | PerfectSquare
    | JacobiZeroFactor
    | EulerWitness
    | BinomialWitness
    | MrNontrivialRoot
    | FermatWitness
    | PgpcViolation
)


# ------------------------------------------------------------ verdict model


@dataclass(frozen=True)
class QnrSearch:
    """Search bookkeeping: whether a scan ran, how long, and the q used.

    q is the non-residue the verdict relied on (also set on the
    deterministic branches, where needed is False); it is 0 whenever the
    run ended without one (factor, square, or polynomial-battery paths).
    """

    needed: bool
    iterations: int
    q: int


_NO_SEARCH = QnrSearch(False, 0, 0)


@dataclass(frozen=True)
class PrimeBasis:
    """What certified a prime verdict.

    kind 'pbpc': explicit non-residue q passed both scalar checks.
    kind 'pgpc': parameter m passed the four-condition battery.
    kind 'fgpc': parameter m passed the single-condition battery.
    """

    kind: str
    q: int = 0
    m: int = 0


@dataclass(frozen=True)
class Verdict:
    n: int
    outcome: Outcome
    mechanism: Mechanism | None
    prime_basis: PrimeBasis | None
    qnr_search: QnrSearch
    timings: dict = field(compare=False, hash=False, default_factory=dict)


def _verdict(
    n: int,
    outcome: Outcome,
    mechanism: Mechanism | None,
    basis: PrimeBasis | None,
    search: QnrSearch,
    t0: float,
) -> Verdict:
    return Verdict(
        n=n,
        outcome=outcome,
        mechanism=mechanism,
        prime_basis=basis,
        qnr_search=search,
        timings={"total_s": time.perf_counter() - t0},
    )


def _degenerate(n: int, t0: float, *, prime_three: bool) -> Verdict | None:
    """Common handling of n = 1, n = 2, optionally n = 3, and even n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return _verdict(n, Outcome.NOT_APPLICABLE, None, None, _NO_SEARCH, t0)
    if n == 2 or (prime_three and n == 3):
        return _verdict(n, Outcome.PRIME, None, None, _NO_SEARCH, t0)
    if not n & 1:
        return _verdict(n, Outcome.COMPOSITE, Even(), None, _NO_SEARCH, t0)
    return None


# ------------------------------------------------------------- miller-rabin


@dataclass(frozen=True)
class MrOutcome:
    """Result of one strong-pseudoprime round; value is the root or base."""

    witness: bool
    witness_kind: str | None = None
    value: int = 0


def miller_rabin_base(n: int, a: int) -> MrOutcome:
    """One strong-pseudoprime round at base a for odd n >= 3.

    Reports how compositeness surfaced: either a nontrivial square root of
    unity met while squaring a**delta, or a failed Fermat test.
    """
    if n < 3 or not n & 1:
        raise ValueError("miller_rabin_base: modulus must be odd and >= 3")
    delta, t = lof_tpow(n - 1)
    b = pow(a, delta, n)
    s = b
    for _ in range(t):
        s = b * b % n
        if s == 1 and b != 1 and b != n - 1:
            return MrOutcome(True, "nontrivial_root", b)
        b = s
    if s != 1:
        return MrOutcome(True, "fermat", a % n)
    return MrOutcome(False)


# ---------------------------------------------------------------- qnr scans

_probe_primes: list[int] = [3]


def _probe_prime(i: int) -> int:
    """The i-th odd prime (1-based): 3, 5, 7, 11, ..."""
    while len(_probe_primes) < i:
        _probe_primes.append(nt.next_prime(_probe_primes[-1]))
    return _probe_primes[i - 1]


def default_qnr_iter_limit(n: int) -> int:
    """Default probe budget: min(floor(sqrt(n)), 10**6)."""
    return min(math.isqrt(n), 10**6)


def _resolve_iter_limit(n: int, iter_limit: int | None) -> int:
    if iter_limit is None:
        env = os.environ.get("PPT_MAX_QNR_ITERS")
        iter_limit = int(env) if env else default_qnr_iter_limit(n)
    if iter_limit < 1:
        raise ValueError("iteration limit must be >= 1")
    return iter_limit


@dataclass(frozen=True)
class QnrProbe:
    """find_qnr outcome; iterates as (found_factor, p) for unpacking."""

    found_factor: bool
    p: int
    iterations: int

    def __iter__(self):
        return iter((self.found_factor, self.p))


def find_qnr(n: int, iter_limit: int | None = None) -> QnrProbe:
    """Scan odd primes 3, 5, 7, ... for a quadratic non-residue of n.

    Returns (found_factor=False, p) at the first prime with (p | n) = -1,
    or (found_factor=True, p) if a probe divides n first. The default probe
    budget is min(floor(sqrt(n)), 10**6), overridable by the argument or
    the PPT_MAX_QNR_ITERS environment variable; exhaustion raises.
    """
    if n < 3 or not n & 1:
        raise ValueError("find_qnr: n must be odd and >= 3")
    limit = _resolve_iter_limit(n, iter_limit)
    for i in range(1, limit + 1):
        p = _probe_prime(i)
        j = jacobi(p, n)
        if j == 0:
            return QnrProbe(True, p, i)
        if j == -1:
            return QnrProbe(False, p, i)
    raise RuntimeError(
        f"find_qnr: no quadratic non-residue among the first {limit} odd primes"
    )


@dataclass(frozen=True)
class QnrMrProbe:
    """find_qnr_with_mr outcome; iterates as (code, value).

    code 0: value is a quadratic non-residue of n.
    code 1: value is a probe prime dividing n.
    code 2: value is a nontrivial square root of 1 mod n.
    code 3: value is a Fermat witness for n.
    """

    code: int
    value: int
    iterations: int

    def __iter__(self):
        return iter((self.code, self.value))


def find_qnr_with_mr(n: int, iter_limit: int | None = None) -> QnrMrProbe:
    """Like find_qnr, but residue probes double as Miller-Rabin bases."""
    if n < 3 or not n & 1:
        raise ValueError("find_qnr_with_mr: n must be odd and >= 3")
    limit = _resolve_iter_limit(n, iter_limit)
    for i in range(1, limit + 1):
        p = _probe_prime(i)
        j = jacobi(p, n)
        if j == 0:
            return QnrMrProbe(1, p, i)
        if j == -1:
            return QnrMrProbe(0, p, i)
        out = miller_rabin_base(n, p)
        if out.witness:
            code = 2 if out.witness_kind == "nontrivial_root" else 3
            return QnrMrProbe(code, out.value if code == 2 else p, i)
    raise RuntimeError(
        f"find_qnr_with_mr: no quadratic non-residue among the first {limit} odd primes"
    )


# ----------------------------------------------------------- shared closing


def _pbpc_tail(n: int, q: int, search: QnrSearch, t0: float) -> Verdict:
    """Euler criterion then binomial congruence at non-residue q."""
    q %= n
    j = jacobi(q, n)
    h = pow(q, (n - 1) >> 1, n)
    ev = (h - j) % n
    if ev:
        mech = EulerWitness(q=q, ecc_value=ev)
        return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
    a, b = _pow_one_plus_root(q, n, n)
    wa, wb = (a - 1) % n, (b - h) % n
    if wa or wb:
        mech = BinomialWitness(q=q, a=wa, b=wb)
        return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
    basis = PrimeBasis("pbpc", q=q)
    return _verdict(n, Outcome.PRIME, None, basis, search, t0)


# ------------------------------------------------------------ the deciders


def ppta_eqnr(n: int, *, qnr_iter_limit: int | None = None) -> Verdict:
    """Decide n with an explicit quadratic non-residue.

    For n = 3, 5 mod 8 the non-residue is 2; for n = 7 mod 8 it is n - 2.
    Otherwise (n = 1 mod 8) a perfect-square screen runs and small primes
    are scanned; a vanishing Jacobi symbol along the way is a factor. The
    chosen q then passes through the Euler criterion and the binomial
    congruence; surviving both is decisive under the explicit-non-residue
    hypothesis.
    """
    t0 = time.perf_counter()
    deg = _degenerate(n, t0, prime_three=False)
    if deg is not None:
        return deg
    r8 = n & 7
    if r8 == 3 or r8 == 5:
        q = 2
    elif r8 == 7:
        q = n - 2
    else:
        s, exact = nt.isqrt(n)
        if exact:
            mech = PerfectSquare(s)
            return _verdict(n, Outcome.COMPOSITE, mech, None, _NO_SEARCH, t0)
        if (s + 1) * (s + 1) == n:
            mech = PerfectSquare(s + 1)
            return _verdict(n, Outcome.COMPOSITE, mech, None, _NO_SEARCH, t0)
        probe = find_qnr(n, qnr_iter_limit)
        if probe.found_factor:
            search = QnrSearch(True, probe.iterations, 0)
            mech = JacobiZeroFactor(probe.p)
            return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
        return _pbpc_tail(n, probe.p, QnrSearch(True, probe.iterations, probe.p), t0)
    return _pbpc_tail(n, q, QnrSearch(False, 0, q), t0)


def ppta_inr(n: int, mode: str = "pgpc") -> Verdict:
    """Decide n without scanning for a non-residue.

    For n != 1 mod 24 a non-residue is available deterministically (2,
    n - 2, or 3 according to n mod 8). For n = 1 mod 24 the parameter
    search either factors n, still finds a small non-residue, or produces
    the prime power m whose canonical divisor polynomials drive the
    four-condition battery (mode 'pgpc') or its single-condition variant
    (mode 'fgpc').
    """
    if mode not in ("pgpc", "fgpc"):
        raise ValueError("ppta_inr: mode must be 'pgpc' or 'fgpc'")
    t0 = time.perf_counter()
    deg = _degenerate(n, t0, prime_three=True)
    if deg is not None:
        return deg
    if n % 24 != 1:
        if n % 3 == 0:
            mech = TrivialFactor(3)
            return _verdict(n, Outcome.COMPOSITE, mech, None, _NO_SEARCH, t0)
        r8 = n & 7
        if r8 == 3 or r8 == 5:
            q = 2
        elif r8 == 7:
            q = n - 2
        else:
            q = 3
        return _pbpc_tail(n, q, QnrSearch(False, 0, q), t0)
    fr = find_qnr_or_m(n)
    if fr.divisor is not None:
        d = fr.divisor
        search = QnrSearch(True, fr.iterations, 0)
        mech = PerfectSquare(d) if d * d == n else TrivialFactor(d)
        return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
    if fr.qnr is not None:
        return _pbpc_tail(n, fr.qnr, QnrSearch(True, fr.iterations, fr.qnr), t0)
    params = canonical_params(fr.m)
    search = QnrSearch(True, fr.iterations, 0)
    if mode == "pgpc":
        rep = pgpc_check(n, params)
        if rep.all_hold:
            basis = PrimeBasis("pgpc", m=fr.m)
            return _verdict(n, Outcome.PRIME, None, basis, search, t0)
        mech = PgpcViolation(
            m=fr.m,
            failed=rep.failed,
            remainder=rep.witness.coeffs,
            expected=rep.expected,
        )
        return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
    ok, rem = fgpc_check(n, params)
    if ok:
        basis = PrimeBasis("fgpc", m=fr.m)
        return _verdict(n, Outcome.PRIME, None, basis, search, t0)
    mech = BinomialWitness(
        divisor_kind="psi",
        divisor=params.psi.reduced(n).coeffs,
        remainder=rem.coeffs,
        m=fr.m,
    )
    return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)


def enhanced_mr(n: int, max_random_iters: int = 64, rng_seed: int = 0) -> Verdict:
    """Randomized hybrid of Miller-Rabin rounds and the two scalar checks.

    For n != 1 mod 24 this is ppta_inr's deterministic branch. Otherwise
    random bases a in [5, n-5] are drawn: a vanishing Jacobi symbol yields
    a factor, a residue serves as a Miller-Rabin base, and the first
    non-residue becomes the q for the Euler and binomial checks. If every
    draw is a surviving residue the verdict is INCONCLUSIVE.
    """
    if max_random_iters < 1:
        raise ValueError("enhanced_mr: max_random_iters must be >= 1")
    t0 = time.perf_counter()
    deg = _degenerate(n, t0, prime_three=True)
    if deg is not None:
        return deg
    big_r = n % 24
    if big_r != 1:
        if math.gcd(big_r, 6) > 1:
            # n is odd here, so the shared factor with 24 can only be 3.
            mech = TrivialFactor(3)
            return _verdict(n, Outcome.COMPOSITE, mech, None, _NO_SEARCH, t0)
        r8 = big_r % 8
        if r8 == 3 or r8 == 5:
            q = 2
        elif r8 == 7:
            q = n - 2
        else:
            q = 3
        return _pbpc_tail(n, q, QnrSearch(False, 0, q), t0)
    s, exact = nt.isqrt(n)
    if exact:
        mech = PerfectSquare(s)
        return _verdict(n, Outcome.COMPOSITE, mech, None, _NO_SEARCH, t0)
    rng = random.Random(rng_seed)
    for i in range(1, max_random_iters + 1):
        a = rng.randint(5, n - 5)
        j = jacobi(a, n)
        if j == 0:
            search = QnrSearch(True, i, 0)
            mech = JacobiZeroFactor(math.gcd(a, n))
            return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
        if j == -1:
            return _pbpc_tail(n, a, QnrSearch(True, i, a % n), t0)
        out = miller_rabin_base(n, a)
        if out.witness:
            search = QnrSearch(True, i, 0)
            if out.witness_kind == "nontrivial_root":
                mech: Mechanism = MrNontrivialRoot(base=a, b=out.value)
            else:
                mech = FermatWitness(a=a)
            return _verdict(n, Outcome.COMPOSITE, mech, None, search, t0)
    search = QnrSearch(True, max_random_iters, 0)
    return _verdict(n, Outcome.INCONCLUSIVE, None, None, search, t0)


# ------------------------------------------------------------- certificates


def _mechanism_to_json(mech: Mechanism) -> dict[str, Any]:
    out: dict[str, Any] = {"kind": mech.kind}
    for name in mech.__dataclass_fields__:
        value = getattr(mech, name)
        if isinstance(value, tuple):
            value = list(value)
        if value is not None:
            out[name] = value
    return out


def mechanism_from_json(data: dict[str, Any]) -> Mechanism:
    """Rebuild a mechanism object from its certificate dictionary."""
    kind = data.get("kind")
    cls = _MECHANISMS.get(kind)
    if cls is None:
        raise ValueError(f"unknown mechanism kind: {kind!r}")
    kwargs = {}
    for name in cls.__dataclass_fields__:
        if name in data:
            value = data[name]
            if isinstance(value, list):
                value = tuple(value)
            kwargs[name] = value
    return cls(**kwargs)


def certificate(verdict: Verdict) -> dict[str, Any]:
    """JSON-ready dictionary carrying every field a re-check needs."""
    mech = verdict.mechanism
    basis = verdict.prime_basis
    out: dict[str, Any] = {
        "n": verdict.n,
        "outcome": verdict.outcome.value,
        "mechanism": _mechanism_to_json(mech) if mech is not None else None,
        "prime_basis": None,
        "qnr_search": {
            "needed": verdict.qnr_search.needed,
            "iterations": verdict.qnr_search.iterations,
            "q": verdict.qnr_search.q,
        },
        "timings": dict(verdict.timings),
    }
    if basis is not None:
        entry: dict[str, Any] = {"kind": basis.kind}
        if basis.kind == "pbpc":
            entry["q"] = basis.q
        else:
            entry["m"] = basis.m
        out["prime_basis"] = entry
    return out


def _verify_prime_basis(n: int, basis: dict[str, Any]) -> bool:
    kind = basis.get("kind")
    if kind == "pbpc":
        q = basis["q"]
        if jacobi(q, n) != -1:
            return False
        return ecc(q, n).is_zero and bcc(q, n).is_zero
    if kind in ("pgpc", "fgpc"):
        m = basis["m"]
        if nt.gcd(m, n) != 1 or n % m == 1:
            return False
        params = canonical_params(m)
        if kind == "pgpc":
            return pgpc_check(n, params).all_hold
        return fgpc_check(n, params)[0]
    return False


def verify_certificate(cert: dict[str, Any]) -> bool:
    """Re-check a certificate from its own fields.

    Composite: the mechanism must re-verify against n. Prime: the recorded
    basis conditions must hold (a degenerate small prime passes with no
    basis). Not-applicable requires n = 1; inconclusive makes no claim
    beyond consistency.
    """
    n = cert["n"]
    outcome = cert["outcome"]
    if outcome == "composite":
        mech_data = cert.get("mechanism")
        if not mech_data:
            return False
        try:
            mech = mechanism_from_json(mech_data)
            return mech.verify(n)
        except (ValueError, TypeError, KeyError):
            return False
    if outcome == "prime":
        basis = cert.get("prime_basis")
        if basis is None:
            return n in (2, 3)
        try:
            return _verify_prime_basis(n, basis)
        except (ValueError, KeyError):
            return False
    if outcome == "not_applicable":
        return n == 1
    if outcome == "inconclusive":
        return cert.get("mechanism") is None and cert.get("prime_basis") is None
    return False


ALGORITHMS: dict[str, Callable[[int], Verdict]] = {
    "eqnr": ppta_eqnr,
    "inr_pgpc": lambda n: ppta_inr(n, "pgpc"),
    "inr_fgpc": lambda n: ppta_inr(n, "fgpc"),
    "enhanced_mr": enhanced_mr,
}
