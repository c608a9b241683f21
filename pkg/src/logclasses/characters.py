"""Finite abelian groups, their complex characters, and ell-adic orbits.

Characters are stored with exact exponent arithmetic: a character of a
group with exponent m maps elements to powers of a fixed primitive
m-th root of unity, and only the exponents are ever manipulated.  An
ell-adic irreducible character is the Frobenius orbit of a complex
character under chi -> chi^ell; its degree is the orbit size.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

from .errors import ConjNotInvolution, NotASubgroup

Element = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups; elements are exponent tuples."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(o <= 0 for o in self.orders):
            raise ValueError("cyclic orders must be positive")

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.orders, 1)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.orders)

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % o for x, y, o in zip(a, b, self.orders))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % o for x, o in zip(a, self.orders))

    def scale(self, a: Element, k: int) -> Element:
        return tuple((x * k) % o for x, o in zip(a, self.orders))

    def element_order(self, a: Element) -> int:
        return reduce(math.lcm, (o // math.gcd(o, x) for x, o in zip(a, self.orders)), 1)

    def elements(self):
        return itertools.product(*(range(o) for o in self.orders))

    def subgroup(self, generators) -> frozenset[Element]:
        """Closure of the generators; always contains the identity."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = [tuple(g) for g in generators]
        while frontier:
            cur = frontier.pop()
            for g in gens:
                nxt = self.add(cur, g)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return frozenset(seen)

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.add(a, b) in s for a in s for b in s)


@dataclass(frozen=True)
class ComplexCharacter:
    """Character of a FiniteAbelianGroup with values in mu_m, m = exponent.

    ``images[i]`` is the exponent e with chi(g_i) = zeta_m^e for the
    i-th cyclic generator.  Well-definedness requires
    images[i] * orders[i] = 0 (mod m).
    """

    group: FiniteAbelianGroup
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.group.exponent
        if len(self.images) != len(self.group.orders):
            raise ValueError("one image per cyclic generator required")
        object.__setattr__(self, "images", tuple(e % m for e in self.images))
        for e, o in zip(self.images, self.group.orders):
            if e * o % m != 0:
                raise ValueError("character not well defined on generator")

    def value_exponent(self, a: Element) -> int:
        """e with chi(a) = zeta_m^e."""
        m = self.group.exponent
        return sum(e * x for e, x in zip(self.images, a)) % m

    def is_trivial_on(self, elems) -> bool:
        return all(self.value_exponent(a) == 0 for a in elems)

    @property
    def order(self) -> int:
        m = self.group.exponent
        return m // math.gcd(m, *self.images)

    def __mul__(self, other: "ComplexCharacter") -> "ComplexCharacter":
        if other.group != self.group:
            raise ValueError("characters live on different groups")
        return ComplexCharacter(self.group, tuple(a + b for a, b in zip(self.images, other.images)))

    def __pow__(self, k: int) -> "ComplexCharacter":
        return ComplexCharacter(self.group, tuple(e * k for e in self.images))

    def inverse(self) -> "ComplexCharacter":
        return self ** (-1)


def all_characters(group: FiniteAbelianGroup) -> list[ComplexCharacter]:
    """Every complex character, in lexicographic image order."""
    m = group.exponent
    ranges = [range(0, m, m // o) for o in group.orders]
    return [ComplexCharacter(group, imgs) for imgs in itertools.product(*ranges)]


@dataclass(frozen=True)
class LAdicCharacter:
    """Frobenius orbit of a complex character under chi -> chi^ell."""

    orbit: frozenset[ComplexCharacter]
    ell: int

    @property
    def degree(self) -> int:
        return len(self.orbit)

    @property
    def canonical(self) -> ComplexCharacter:
        return min(self.orbit, key=lambda c: c.images)

    @property
    def key(self) -> str:
        """Stable report key built from the canonical constituent."""
        return "phi(" + ",".join(str(e) for e in self.canonical.images) + ")"

    def __contains__(self, chi: ComplexCharacter) -> bool:
        return chi in self.orbit


def orbit_of(chi: ComplexCharacter, ell: int) -> LAdicCharacter:
    orbit = {chi}
    cur = chi**ell
    while cur != chi:
        orbit.add(cur)
        cur = cur**ell
    return LAdicCharacter(frozenset(orbit), ell)


def orbit_partition(chars, ell: int) -> list[LAdicCharacter]:
    """Partition a power-ell-closed character set into Frobenius orbits,
    sorted by canonical representative."""
    remaining = set(chars)
    orbits = []
    while remaining:
        chi = min(remaining, key=lambda c: c.images)
        phi = orbit_of(chi, ell)
        if not phi.orbit <= remaining:
            raise ValueError("character set is not closed under chi -> chi^ell")
        remaining -= phi.orbit
        orbits.append(phi)
    return orbits


def ladic_orbits(group: FiniteAbelianGroup, ell: int) -> list[LAdicCharacter]:
    """All complex characters of the group, partitioned into ell-orbits."""
    return orbit_partition(all_characters(group), ell)


def is_imaginary(phi: LAdicCharacter, conj: Element) -> bool:
    """True when every constituent sends the conjugation element to -1."""
    group = phi.canonical.group
    if group.add(conj, conj) != group.identity:
        raise ConjNotInvolution(f"{conj} does not square to the identity")
    m = group.exponent
    if m % 2 != 0:
        return False
    return all(chi.value_exponent(conj) == m // 2 for chi in phi.orbit)


def induced_multiplicity(phi: LAdicCharacter, subgroup) -> int:
    """Multiplicity (0 or 1) of phi in the character induced from the
    trivial character of the subgroup.

    Equals 1 exactly when the constituents are trivial on the subgroup;
    triviality is orbit-invariant, so one constituent is checked.
    """
    group = phi.canonical.group
    elems = frozenset(subgroup)
    if not group.is_subgroup(elems):
        raise NotASubgroup("induced_multiplicity needs a subgroup")
    return 1 if phi.canonical.is_trivial_on(elems) else 0


__all__ = [
    "FiniteAbelianGroup", "ComplexCharacter", "LAdicCharacter",
    "all_characters", "orbit_of", "orbit_partition", "ladic_orbits",
    "is_imaginary", "induced_multiplicity",
]
