"""Character-orbit machinery: orbit shapes, imaginarity, induced multiplicities."""

import itertools

import pytest

from logclasses.characters import (
    ComplexCharacter,
    FiniteAbelianGroup,
    all_characters,
    induced_multiplicity,
    is_imaginary,
    ladic_orbits,
)
from logclasses.errors import ConjNotInvolution, NotASubgroup


def all_subgroups(group):
    """Every subgroup of a small abelian group, as closures of <=3 generators."""
    elems = list(group.elements())
    found = set()
    for r in range(0, 4):
        for gens in itertools.combinations(elems, r):
            found.add(group.subgroup(gens))
    return found


def test_orbits_z2_ell3():
    orbits = ladic_orbits(FiniteAbelianGroup((2,)), 3)
    assert sorted(phi.degree for phi in orbits) == [1, 1]


def test_orbits_z6_ell5():
    # oracle: orbits of x -> 5x on Z/6 are {0}, {3}, {1,5}, {2,4}
    seen = set()
    orbit_sizes = []
    for x in range(6):
        if x in seen:
            continue
        orb = {x}
        y = 5 * x % 6
        while y not in orb:
            orb.add(y)
            y = 5 * y % 6
        seen |= orb
        orbit_sizes.append(len(orb))
    assert sorted(orbit_sizes) == [1, 1, 2, 2]

    orbits = ladic_orbits(FiniteAbelianGroup((6,)), 5)
    assert sorted(phi.degree for phi in orbits) == [1, 1, 2, 2]


def test_orbits_z4_ell3():
    orbits = ladic_orbits(FiniteAbelianGroup((4,)), 3)
    assert sorted(phi.degree for phi in orbits) == [1, 1, 2]


@pytest.mark.parametrize("orders,ell", [((2,), 3), ((6,), 5), ((4,), 3), ((2, 4), 5), ((3, 9), 7)])
def test_orbit_degrees_sum_to_group_order(orders, ell):
    group = FiniteAbelianGroup(orders)
    assert sum(phi.degree for phi in ladic_orbits(group, ell)) == group.order


def test_imaginary_quadratic_character():
    group = FiniteAbelianGroup((2,))
    quad, triv = None, None
    for phi in ladic_orbits(group, 3):
        if phi.canonical.order == 2:
            quad = phi
        else:
            triv = phi
    assert is_imaginary(quad, (1,))
    assert not is_imaginary(triv, (1,))


def test_imaginary_order_six_orbit():
    # (Z/7)^x as Z/6 with conjugation the cube of a generator
    group = FiniteAbelianGroup((6,))
    chi = ComplexCharacter(group, (1,))
    orbits = ladic_orbits(group, 5)
    phi = next(p for p in orbits if chi in p)
    assert phi.degree == 2
    assert chi.value_exponent((3,)) == 3  # zeta_6^3 = -1
    assert is_imaginary(phi, (3,))


def test_conj_must_be_involution():
    group = FiniteAbelianGroup((6,))
    phi = ladic_orbits(group, 5)[0]
    with pytest.raises(ConjNotInvolution):
        is_imaginary(phi, (2,))


def test_induced_multiplicity_examples():
    group = FiniteAbelianGroup((6,))
    orbits = ladic_orbits(group, 5)
    trivial_sub = group.subgroup([])
    order3 = group.subgroup([(2,)])
    assert len(order3) == 3

    for phi in orbits:
        assert induced_multiplicity(phi, trivial_sub) == 1

    chi2 = ComplexCharacter(group, (2,))   # order 3, nontrivial on order-3 subgroup
    chi3 = ComplexCharacter(group, (3,))   # order 2, trivial there
    phi2 = next(p for p in orbits if chi2 in p)
    phi3 = next(p for p in orbits if chi3 in p)
    # oracle by exponent arithmetic: chi2 on (2,) has exponent 4 != 0, chi3 has 6 = 0 mod 6
    assert chi2.value_exponent((2,)) == 4
    assert chi3.value_exponent((2,)) == 0
    assert induced_multiplicity(phi2, order3) == 0
    assert induced_multiplicity(phi3, order3) == 1


def test_imaginary_phi_vanishes_when_conj_in_subgroup():
    group = FiniteAbelianGroup((2, 6))
    conj = (1, 3)
    assert group.add(conj, conj) == group.identity
    for phi in ladic_orbits(group, 5):
        if not is_imaginary(phi, conj):
            continue
        for sub in all_subgroups(group):
            if conj in sub:
                assert induced_multiplicity(phi, sub) == 0


@pytest.mark.parametrize("orders,ell", [((6,), 5), ((4,), 3), ((2, 4), 7)])
def test_induction_dimension_count(orders, ell):
    # sum over orbits of degree * multiplicity = index of the subgroup
    group = FiniteAbelianGroup(orders)
    orbits = ladic_orbits(group, ell)
    for sub in all_subgroups(group):
        total = sum(phi.degree * induced_multiplicity(phi, sub) for phi in orbits)
        assert total == group.order // len(sub)


@pytest.mark.parametrize("orders,ell", [((6,), 5), ((12,), 5), ((2, 4), 3)])
def test_multiplicity_constant_on_orbit(orders, ell):
    group = FiniteAbelianGroup(orders)
    subs = all_subgroups(group)
    for phi in ladic_orbits(group, ell):
        for sub in subs:
            answers = {chi.is_trivial_on(sub) for chi in phi.orbit}
            assert len(answers) == 1


def test_not_a_subgroup_rejected():
    group = FiniteAbelianGroup((6,))
    phi = ladic_orbits(group, 5)[0]
    with pytest.raises(NotASubgroup):
        induced_multiplicity(phi, {(1,)})


def test_character_well_definedness_enforced():
    group = FiniteAbelianGroup((2, 4))
    with pytest.raises(ValueError):
        ComplexCharacter(group, (1, 0))  # order-2 generator cannot map to zeta_4


def test_orbit_listing_is_deterministic():
    group = FiniteAbelianGroup((2, 6))
    a = [phi.key for phi in ladic_orbits(group, 5)]
    b = [phi.key for phi in ladic_orbits(group, 5)]
    assert a == b
    assert len(set(a)) == len(a)
