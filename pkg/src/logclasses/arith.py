"""Exact big-integer helpers: valuations, symbols, discriminants, congruences.

Everything here is plain ``int`` arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math

from sympy import factorint, isprime
from sympy.ntheory import sqrt_mod
from sympy.ntheory.residue_ntheory import primitive_root


def valuation(n: int, p: int) -> int:
    """Exponent of p in n.  Raises for n = 0 (valuation is infinite)."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def ell_part(n: int, ell: int) -> int:
    """Largest power of ell dividing n."""
    return ell ** valuation(n, ell)


def prime_to_part(n: int, p: int) -> int:
    """n with all factors of p removed."""
    n = abs(n)
    while n % p == 0:
        n //= p
    return n


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def solve_linmod(a: int, b: int, m: int) -> tuple[int, int]:
    """Solve a*x = b (mod m); return (u, v) so the solutions are u + v*Z."""
    g, d, _ = xgcd(a, m)
    q, r = divmod(b, g)
    if r != 0:
        raise ValueError("linear congruence has no solution")
    return (q * d) % m, m // g


def crt(r1: int, m1: int, r2: int, m2: int) -> int:
    """x mod m1*m2 with x = r1 (mod m1), x = r2 (mod m2); moduli coprime."""
    g, u, _ = xgcd(m1, m2)
    if g != 1:
        raise ValueError("crt moduli must be coprime")
    return (r1 + (r2 - r1) * u % m2 * m1) % (m1 * m2)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending the Jacobi symbol to all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    k = 1
    if v % 2 == 1 and a % 8 in (3, 5):
        k = -1
    if n < 0:
        n = -n
        if a < 0:
            k = -k
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    return all(e == 1 for e in factorint(n).values())


def is_fundamental_discriminant(d: int) -> bool:
    """Fundamental discriminant test (either sign, d != 0, 1)."""
    if d in (0, 1):
        return False
    r = d % 4
    if r == 1:
        return is_squarefree(d)
    if r == 0:
        m = d // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def sqrt_mod_prime(a: int, p: int) -> int:
    """Smallest nonnegative square root of a mod the odd prime p."""
    r = sqrt_mod(a % p, p)
    if r is None:
        raise ValueError(f"{a} is not a square mod {p}")
    return int(r)


def smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo the odd prime power q."""
    g = primitive_root(q)
    if g is None:
        raise ValueError(f"no primitive root mod {q}")
    return int(g)


__all__ = [
    "valuation", "ell_part", "prime_to_part", "xgcd", "solve_linmod", "crt",
    "kronecker", "is_squarefree", "is_fundamental_discriminant", "is_square",
    "sqrt_mod_prime", "smallest_primitive_root", "factorint", "isprime",
]
