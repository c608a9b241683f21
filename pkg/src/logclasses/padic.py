"""Finite-precision arithmetic in the ell-adic integers.

Numbers are stored as an exact valuation plus a unit residue modulo
ell^N, where N is the digit precision of the ambient context.  Zero is
kept apart with an infinite-valuation sentinel so that algebraic zeros
(logarithms of roots of unity, for instance) stay exact instead of
degenerating into "valuation >= N".

The Iwasawa logarithm implemented here is the unique extension of the
ell-adic logarithm with log(ell) = 0: for x = ell^v * u it returns
log(u), and torsion units are sent to the exact zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import sqrt_mod_prime, valuation
from .errors import (
    DivisibleByEll,
    EvenValuationViolation,
    NotASquare,
    PrecisionExhausted,
    ZeroInput,
)
from sympy import isprime

#: how many times a guard-zone result is transparently recomputed at 2N
MAX_ESCALATIONS = 4

DEFAULT_PRECISION = 60
DEFAULT_GUARD = 10


@dataclass(frozen=True)
class PadicContext:
    """Ambient prime ell, digit precision N and guard band g < N.

    A computed valuation is only trusted when it is smaller than N - g;
    anything landing in [N - g, N) triggers recomputation at doubled
    precision, and raises PrecisionExhausted after MAX_ESCALATIONS
    doublings.
    """

    ell: int
    precision: int = DEFAULT_PRECISION
    guard: int = DEFAULT_GUARD

    def __post_init__(self) -> None:
        if self.ell < 3 or self.ell % 2 == 0 or not isprime(self.ell):
            raise ValueError(f"ell must be an odd prime, got {self.ell}")
        if not 0 < self.guard < self.precision:
            raise ValueError("guard must satisfy 0 < guard < precision")

    @property
    def modulus(self) -> int:
        return self.ell ** self.precision

    def with_precision(self, precision: int) -> "PadicContext":
        return PadicContext(self.ell, precision, self.guard)


class PadicNumber:
    """Value ell^v * u with u a unit residue modulo ell^N.

    Instances are immutable; arithmetic returns fresh numbers in the
    same context.  ``valuation`` is None exactly for the zero value.
    """

    __slots__ = ("ctx", "valuation", "unit")

    def __init__(self, ctx: PadicContext, val: int | None, unit: int | None):
        self.ctx = ctx
        if val is None:
            if unit not in (None, 0):
                raise ValueError("zero carries no unit part")
            self.valuation = None
            self.unit = None
            return
        unit = unit % ctx.modulus
        if unit % ctx.ell == 0:
            raise ValueError("unit part must be prime to ell")
        self.valuation = val
        self.unit = unit

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: PadicContext) -> "PadicNumber":
        return cls(ctx, None, None)

    @classmethod
    def from_int(cls, ctx: PadicContext, n: int) -> "PadicNumber":
        if n == 0:
            return cls.zero(ctx)
        v = valuation(n, ctx.ell)
        return cls(ctx, v, (n // ctx.ell**v) % ctx.modulus)

    # -- predicates / accessors --------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation is None

    def lift(self, digits: int | None = None) -> int:
        """Canonical residue of the value modulo ell^digits.

        Valid for digits <= N + v; the default returns the value modulo
        ell^N.  Negative valuations never occur in this package.
        """
        if digits is None:
            digits = self.ctx.precision
        if self.is_zero:
            return 0
        if self.valuation < 0:
            raise ValueError("negative valuation cannot be lifted to an integer")
        if digits > self.ctx.precision + self.valuation:
            raise ValueError("requested digits exceed stored precision")
        return (self.ctx.ell**self.valuation * self.unit) % self.ctx.ell**digits

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other: "PadicNumber") -> "PadicNumber":
        ctx = self.ctx
        if self.is_zero or other.is_zero:
            return PadicNumber.zero(ctx)
        return PadicNumber(ctx, self.valuation + other.valuation,
                           self.unit * other.unit % ctx.modulus)

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        return PadicNumber(self.ctx, self.valuation, -self.unit)

    def __add__(self, other: "PadicNumber") -> "PadicNumber":
        ctx = self.ctx
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        v = min(self.valuation, other.valuation)
        mod = ctx.ell ** (v + ctx.precision)
        total = (self.lift_raw(v + ctx.precision) + other.lift_raw(v + ctx.precision)) % mod
        if total == 0:
            return PadicNumber.zero(ctx)
        w = valuation(total, ctx.ell)
        return PadicNumber(ctx, w, total // ctx.ell**w)

    def __sub__(self, other: "PadicNumber") -> "PadicNumber":
        return self + (-other)

    def lift_raw(self, digits: int) -> int:
        # like lift() but without the honesty cap; internal use by __add__
        if self.is_zero:
            return 0
        return (self.ctx.ell**self.valuation * self.unit) % self.ctx.ell**digits

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PadicNumber):
            return NotImplemented
        return (self.ctx == other.ctx and self.valuation == other.valuation
                and self.unit == other.unit)

    def __hash__(self) -> int:
        return hash((self.ctx, self.valuation, self.unit))

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicNumber(0; ell={self.ctx.ell})"
        return (f"PadicNumber({self.ctx.ell}^{self.valuation} * {self.unit}"
                f" mod {self.ctx.ell}^{self.ctx.precision})")


# ---------------------------------------------------------------------------
# series kernel
# ---------------------------------------------------------------------------

def _log1p_residue(ell: int, z: int, prec: int) -> int:
    """log(1+z) mod ell^prec for z = 0 mod ell, by the alternating series.

    Terms are summed up to the first index where every later term has
    valuation >= prec, using v(z^k / k) >= k*v(z) - floor(log_ell k).
    The division by k is done with an exact floor division by ell^v(k)
    (computed at a raised working modulus) and a unit inverse.
    """
    z %= ell**prec
    if z == 0:
        return 0
    vz = valuation(z, ell)
    assert vz >= 1, "series requires v(z) >= 1"
    # number of terms: smallest K with (K+1)*vz - floor(log_ell(K+1)) >= prec
    terms = 1
    while True:
        k = terms + 1
        bound = k * vz
        kk = k
        while kk >= ell:
            kk //= ell
            bound -= 1
        if bound >= prec:
            break
        terms = k
    pad = 0
    kk = terms
    while kk:
        kk //= ell
        pad += 1
    big = ell ** (prec + pad)
    small = ell**prec
    zk = 1
    acc = 0
    for k in range(1, terms + 1):
        zk = zk * z % big
        e = 0
        k0 = k
        while k0 % ell == 0:
            k0 //= ell
            e += 1
        term = (zk // ell**e) * pow(k0, -1, small) % small
        acc = (acc + term if k % 2 == 1 else acc - term) % small
    return acc


def _log_unit_residue(ell: int, u: int, prec: int) -> int | None:
    """Iwasawa log of the unit u, mod ell^prec; None when u is torsion
    at this precision (u^(ell-1) = 1 mod ell^prec)."""
    mod = ell**prec
    z = (pow(u, ell - 1, mod) - 1) % mod
    if z == 0:
        return None
    s = _log1p_residue(ell, z, prec)
    return s * pow(ell - 1, -1, mod) % mod


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def iwasawa_log(ctx: PadicContext, x: PadicNumber) -> PadicNumber:
    """Iwasawa logarithm of x = ell^v * u, i.e. log(u), with log(ell) = 0.

    Units that are torsion at the stored precision map to the exact
    zero.  Otherwise the result carries its exact valuation; if that
    valuation falls into the guard zone the computation is redone at
    doubled precision (treating the stored unit residue as exact), and
    PrecisionExhausted is raised after MAX_ESCALATIONS doublings.
    """
    if x.is_zero:
        raise ZeroInput("iwasawa_log of zero")
    ell = ctx.ell
    u = x.unit
    prec = ctx.precision
    res = _log_unit_residue(ell, u, prec)
    if res is None:
        return PadicNumber.zero(ctx)
    for attempt in range(MAX_ESCALATIONS + 1):
        if attempt:
            prec *= 2
            res = _log_unit_residue(ell, u, prec)
        if res is None:
            continue
        v = valuation(res, ell)
        if v < prec - ctx.guard:
            return PadicNumber(ctx, v, res // ell**v)
    raise PrecisionExhausted(
        f"valuation of log not separated from infinity below ell^{prec}")


def hensel_sqrt(ctx: PadicContext, a: int) -> PadicNumber:
    """Square root of the unit a modulo ell^N by Newton lifting.

    Returns the branch whose residue mod ell is the smaller of the two;
    the other root is its negative.  Inputs divisible by ell are
    rejected: even-valuation squares reduce to this case by factoring
    out ell^(2k), odd valuations are not squares at all.
    """
    ell = ctx.ell
    if a % ell == 0:
        raise EvenValuationViolation(
            f"{a} is divisible by {ell}; reduce to a unit input first")
    if pow(a, (ell - 1) // 2, ell) != 1:
        raise NotASquare(f"{a} is not a square modulo {ell}")
    r = sqrt_mod_prime(a, ell)
    if ell - r < r:
        r = ell - r
    k = 1
    while k < ctx.precision:
        k = min(2 * k, ctx.precision)
        mod = ell**k
        r = (r + a * pow(r, -1, mod)) * pow(2, -1, mod) % mod
    assert r * r % ctx.modulus == a % ctx.modulus
    return PadicNumber(ctx, 0, r)


def teichmuller(ctx: PadicContext, a: int) -> PadicNumber:
    """The (ell-1)-st root of unity congruent to a mod ell.

    Computed as the limit of a, a^ell, a^(ell^2), ... which stabilizes
    after at most N steps modulo ell^N.
    """
    ell = ctx.ell
    if a % ell == 0:
        raise DivisibleByEll(f"{a} is divisible by {ell}")
    mod = ctx.modulus
    x = a % mod
    for _ in range(ctx.precision + 1):
        y = pow(x, ell, mod)
        if y == x:
            return PadicNumber(ctx, 0, x)
        x = y
    raise AssertionError("Teichmueller iteration failed to stabilize")


__all__ = [
    "PadicContext", "PadicNumber", "iwasawa_log", "hensel_sqrt",
    "teichmuller", "MAX_ESCALATIONS", "DEFAULT_PRECISION", "DEFAULT_GUARD",
]
