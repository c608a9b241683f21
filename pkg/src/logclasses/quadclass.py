"""Imaginary quadratic engine.

Class groups are realized through reduced binary quadratic forms with
Gauss composition on exact integers.  On top of that sit the order of
the prime class above ell, a generator of the corresponding prime
power (found by a Cornacchia descent on the norm equation, with plain
enumeration as a fallback), and the wild logarithmic datum obtained by
embedding the generator into Q_ell and comparing Iwasawa logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .arith import (
    ell_part,
    factorint,
    is_fundamental_discriminant,
    is_square,
    kronecker,
    solve_linmod,
    valuation,
)
from .errors import EllEqualsTwo, NotFundamental, PrecisionExhausted, SearchExhausted
from .padic import PadicContext, hensel_sqrt, _log_unit_residue
from sympy import divisors, isprime

Form = tuple[int, int, int]

#: plain-enumeration ceiling for the generator search fallback
_ENUMERATION_CAP = 2_000_000


def discriminant(f: Form) -> int:
    a, b, c = f
    return b * b - 4 * a * c


def is_reduced(f: Form) -> bool:
    a, b, c = f
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce_form(f: Form) -> Form:
    """Reduce a positive definite form; preserves the discriminant."""
    a, b, c = f
    d = discriminant(f)
    assert d < 0 and a > 0
    while True:
        if b > a or b <= -a:
            r = (a - b) // (2 * a)
            b2 = b + 2 * r * a
            c = a * r * r + b * r + c
            b = b2
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        out = (a, b, c)
        assert is_reduced(out) and discriminant(out) == d
        return out


def principal_form(d: int) -> Form:
    k = d & 1
    return (1, k, (k * k - d) // 4)


def compose(f1: Form, f2: Form) -> Form:
    """Gauss composition, reduced output."""
    if f1 == f2:
        return square(f1)
    a, b, c = f1
    aa, bb, cc = f2
    g = (b + bb) // 2
    h = -(b - bb) // 2
    w = math.gcd(math.gcd(a, aa), g)
    s = a // w
    t = aa // w
    u = g // w
    mu, nu = solve_linmod(t * u, h * u + s * c, s * t)
    lam = solve_linmod(t * nu, h - t * mu, s)[0]
    k = mu + nu * lam
    ll = (k * t - h) // s
    m = (t * u * k - h * u - c * s) // (s * t)
    return reduce_form((s * t, w * u - (k * t + ll * s), k * ll - w * m))


def square(f: Form) -> Form:
    a, b, c = f
    mu = solve_linmod(b, c, a)[0]
    return reduce_form((a * a, b - 2 * a * mu, mu * mu - (b * mu - c) // a))


def inverse(f: Form) -> Form:
    a, b, c = f
    return reduce_form((a, -b, c))


def form_pow(f: Form, n: int) -> Form:
    d = discriminant(f)
    if n < 0:
        f, n = inverse(f), -n
    r = reduce_form(principal_form(d))
    f = reduce_form(f)
    while n > 0:
        if n & 1:
            r = compose(r, f)
        n >>= 1
        if n:
            f = square(f)
    return r


def reduced_forms(d: int) -> list[Form]:
    """All reduced forms of discriminant d < 0, by direct enumeration."""
    out = []
    amax = math.isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(d % 2, a + 1, 2):
            q, r = divmod(b * b - d, 4 * a)
            if r != 0 or q < a:
                continue
            c = q
            if b == 0 or b == a or a == c:
                out.append((a, b, c))
            else:
                out.append((a, b, c))
                out.append((a, -b, c))
    return sorted(out)


class ClassGroup:
    """Form class group of a fundamental negative discriminant."""

    def __init__(self, d: int):
        if d >= 0 or not is_fundamental_discriminant(d):
            raise NotFundamental(f"{d} is not a fundamental negative discriminant")
        self.discriminant = d
        self.forms = tuple(reduced_forms(d))
        self.h = len(self.forms)
        self.identity = reduce_form(principal_form(d))

    def order_of(self, f: Form) -> int:
        """Order of the class of f, via the divisors of h."""
        f = reduce_form(f)
        for n in divisors(self.h):
            if form_pow(f, n) == self.identity:
                return int(n)
        raise AssertionError("element order must divide the class number")

    def exponent(self) -> int:
        return math.lcm(*[self.order_of(f) for f in self.forms])

    def structure(self) -> tuple[int, ...]:
        """Invariant factors (d_1, d_2, ...) with d_1 | d_2 | ...

        Per prime q | h, every class is projected to the q-Sylow part and
        the kernel sizes of repeated q-th powering are counted; the size
        ratios recover the partition of cyclic q-factors.
        """
        if self.h == 1:
            return ()
        per_prime: dict[int, list[int]] = {}
        for q in factorint(self.h):
            cof = self.h // ell_part(self.h, q)
            proj: dict[Form, int] = {}
            for f in self.forms:
                g = form_pow(f, cof)
                proj[g] = proj.get(g, 0) + 1
            sizes = []
            cur = {g: g for g in proj}
            while True:
                killed = sum(n for g, n in proj.items() if cur[g] == self.identity)
                sizes.append(killed)
                if killed == self.h:
                    break
                cur = {g: form_pow(cur[g], q) for g in cur}
            lams: list[int] = []
            for i in range(1, len(sizes)):
                ratio, rem = divmod(sizes[i], sizes[i - 1])
                assert rem == 0
                for j in range(valuation(ratio, q)):
                    if j < len(lams):
                        lams[j] += 1
                    else:
                        lams.append(1)
            per_prime[q] = lams
        rank = max(len(v) for v in per_prime.values())
        invariants = []
        for i in range(rank):
            d = 1
            for q, lams in per_prime.items():
                if i < len(lams):
                    d *= q ** lams[i]
            invariants.append(d)
        return tuple(sorted(invariants))


@lru_cache(maxsize=4096)
def class_group(d: int) -> ClassGroup:
    return ClassGroup(d)


def class_number(d: int) -> int:
    return class_group(d).h


# ---------------------------------------------------------------------------
# the prime above ell
# ---------------------------------------------------------------------------

def splitting_type(d: int, ell: int) -> str:
    if ell == 2 or ell % 2 == 0:
        raise EllEqualsTwo("ell must be an odd prime")
    if not isprime(ell):
        raise ValueError(f"{ell} is not prime")
    k = kronecker(d, ell)
    return {1: "split", -1: "inert", 0: "ramified"}[k]


def prime_form(d: int, ell: int) -> Form:
    """The form (ell, b, *) with the smallest b >= 0, b^2 = d mod 4 ell."""
    for b in range(0, 2 * ell):
        if (b - d) % 2 == 0 and (b * b - d) % (4 * ell) == 0:
            return (ell, b, (b * b - d) // (4 * ell))
    raise AssertionError("no prime form although ell is split")


@dataclass(frozen=True)
class PrimeClassData:
    split: str
    form: Form | None
    order: int | None        # full order w of [l] in the class group
    ell_power: int | None    # ell-part of w, as an integer power of ell


def prime_class_order(d: int, ell: int) -> PrimeClassData:
    """Splitting of ell in Q(sqrt(d)) and, when split, the order data of [l]."""
    split = splitting_type(d, ell)
    if split != "split":
        return PrimeClassData(split, None, None, None)
    group = class_group(d)
    f = reduce_form(prime_form(d, ell))
    w = group.order_of(f)
    return PrimeClassData(split, f, w, ell_part(w, ell))


# ---------------------------------------------------------------------------
# generators of l^w
# ---------------------------------------------------------------------------

def _cornacchia_4m(d: int, ell: int, w: int) -> tuple[int, int] | None:
    """Primitive (x, y) with x^2 + |d| y^2 = 4 ell^w, by the Euclid descent
    on a square root of d mod 4 ell^w.  Tries both root branches."""
    m = ell**w
    ctx = PadicContext(ell, max(w, 2), 1)
    r0 = hensel_sqrt(ctx, d).lift(max(w, 2)) % m
    four_m = 4 * m
    for root in (r0, (m - r0) % m):
        t = root
        if (t - d) % 2 != 0:
            t += m
        t %= 2 * m
        if t == 0:
            continue
        assert (t * t - d) % four_m == 0
        a0, a1 = 2 * m, t
        candidates = []
        while a1 > 0 and a1 * a1 > four_m:
            a0, a1 = a1, a0 % a1
        if a1 > 0:
            candidates.append(a1)
            candidates.append(a0 % a1)
        for x in candidates:
            if x <= 0:
                continue
            rem = four_m - x * x
            if rem <= 0 or rem % (-d) != 0:
                continue
            ysq = rem // (-d)
            if not is_square(ysq):
                continue
            y = math.isqrt(ysq)
            if y == 0 or (x % ell == 0 and y % ell == 0):
                continue
            return (x, y)
    return None


def _enumerate_norm(d: int, ell: int, w: int) -> tuple[int, int] | None:
    """Direct search over y of x^2 = 4 ell^w + d y^2 (d < 0)."""
    target = 4 * ell**w
    ymax = math.isqrt(target // (-d))
    if ymax > _ENUMERATION_CAP:
        return None
    for y in range(1, ymax + 1):
        xsq = target + d * y * y
        if xsq < 0:
            break
        if is_square(xsq):
            x = math.isqrt(xsq)
            if (x - y * d) % 2 == 0 and not (x % ell == 0 and y % ell == 0):
                return (x, y)
    return None


def generator_of_prime_power(d: int, ell: int, exponent: int) -> tuple[int, int]:
    """Integral alpha = (x + y sqrt(d))/2 with norm exactly ell^exponent and
    (alpha) a pure power of one prime above ell.

    The exponent is the order of [l] in the class group, so a solution
    must exist; SearchExhausted therefore signals an upstream bug.
    Purity holds because x, y are never both divisible by ell, and
    y != 0 rules out rational solutions.
    """
    sol = _cornacchia_4m(d, ell, exponent)
    if sol is None:
        sol = _enumerate_norm(d, ell, exponent)
    if sol is None:
        raise SearchExhausted(
            f"no generator with norm {ell}^{exponent} for discriminant {d}")
    x, y = sol
    assert x * x - d * y * y == 4 * ell**exponent
    assert (x - y * d) % 2 == 0
    return (x, y)


# ---------------------------------------------------------------------------
# the wild logarithmic datum
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WildDatum:
    """Per-(d, ell) ingredients of the wild logarithmic class computation.

    h_prime is the ell-part of the order of [l]; exponent is the full
    order w actually used in the norm equation (the prime-to-ell part
    of w scales the generator by an ell-adic unit exponent, leaving all
    valuations untouched).  wtilde_val is the valuation of the wild
    logarithmic order: v(log(sigma(alpha)) - log(sigma(alpha-bar)))
    minus one for the log(1+ell) normalizer.
    """

    ell: int
    discriminant: int
    h_prime: int
    exponent: int
    alpha: tuple[int, int]
    wtilde_val: int


def _embed_lambda_valuation(d: int, ell: int, x: int, y: int, w: int,
                            precision: int, guard: int, branch: int) -> int | None:
    """v(log sigma(alpha) - log sigma(alpha-bar)) at the given working
    precision, or None when the guard zone is hit."""
    ctx = PadicContext(ell, precision, guard)
    mod = ctx.modulus
    r = hensel_sqrt(ctx, d).lift() * branch % mod
    inv2 = pow(2, -1, mod)
    sa = (x + y * r) * inv2 % mod
    sb = (x - y * r) * inv2 % mod
    if sa % ell == 0:
        sa, sb = sb, sa
    assert sa % ell != 0
    assert sa * sb % mod == pow(ell, w, mod), "sigma(alpha) sigma(alpha-bar) != ell^w"
    assert valuation(sb, ell) == w
    unit_b = sb // ell**w
    eff = precision - w
    la = _log_unit_residue(ell, sa, eff)
    lb = _log_unit_residue(ell, unit_b, eff)
    la = 0 if la is None else la
    lb = 0 if lb is None else lb
    lam = (la - lb) % ell**eff
    if lam == 0:
        return None
    v = valuation(lam, ell)
    if v >= eff - guard:
        return None
    return v


def wild_datum(d: int, ell: int, ctx: PadicContext | None = None,
               branch: int = 1) -> WildDatum:
    """Embed the generator of l^w at one of the two places above ell and
    measure the logarithmic valuation difference of its conjugates.

    ``branch`` flips the square-root branch; the result is provably
    branch-invariant and a test asserts as much.
    """
    data = prime_class_order(d, ell)
    if data.split != "split":
        raise ValueError(f"ell = {ell} is {data.split} in Q(sqrt({d})); wild datum needs split")
    if ctx is None:
        ctx = PadicContext(ell)
    w = data.order
    x, y = generator_of_prime_power(d, ell, w)
    precision = max(ctx.precision, w + ctx.guard + 4)
    for _ in range(5):
        v = _embed_lambda_valuation(d, ell, x, y, w, precision, ctx.guard, branch)
        if v is not None:
            assert v >= 1, "Iwasawa logs of units live in ell Z_ell"
            return WildDatum(ell, d, data.ell_power, w, (x, y), v - 1)
        precision *= 2
    raise PrecisionExhausted(
        f"wild datum for (d={d}, ell={ell}) undetermined below ell^{precision}")


__all__ = [
    "Form", "discriminant", "is_reduced", "reduce_form", "principal_form",
    "compose", "square", "inverse", "form_pow", "reduced_forms",
    "ClassGroup", "class_group", "class_number", "splitting_type",
    "prime_form", "PrimeClassData", "prime_class_order",
    "generator_of_prime_power", "WildDatum", "wild_datum",
]
