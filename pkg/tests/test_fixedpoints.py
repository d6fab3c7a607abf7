import pytest

from errors import GroupError, InadmissibleGroupError, InvolutionError
from fixedpoints.counts import external_fixed_count, specific_fixed_count
from fixedpoints.fixed_sets import FujikiInput, fixed_surface_orbit_count, is_primitive_check
from fixedpoints.translate_sets import (
    build_translate_set,
    labels_well_defined,
    pair_generators,
    subgroup_multiplicities,
)
from fixedpoints.wreath import commutes_in_wreath, embed_pair, wreath_order_check
from involutions.involution import identity_involution, inversion_automorphism
from permcore.group import direct_product_of_cycles, elements_of_order, group_from_strings
from permcore.permutation import parse_permutation
from tests.test_data import FAST_ROW_KEYS


def abelian_input(*orders, n=2):
    G = direct_product_of_cycles(orders)
    return FujikiInput(G, inversion_automorphism(G), n=n, admissible=True)


@pytest.mark.parametrize("orders,expected", [
    ((2,), 2),
    ((3,), 1),
    ((4,), 2),
    ((2, 2), 4),
    ((2, 2, 2, 2), 16),
])
def test_orbit_count_for_inversion(orders, expected):
    assert fixed_surface_orbit_count(abelian_input(*orders)) == expected


def test_orbit_count_for_identity_on_s3():
    S3 = group_from_strings(["(0,1)", "(0,1,2)"], 3)
    data = FujikiInput(S3, identity_involution(S3))
    # F is {1} and the three transpositions, acted on by conjugation
    assert fixed_surface_orbit_count(data) == 2


def test_input_validation():
    G = direct_product_of_cycles((2,))
    other = direct_product_of_cycles((3,))
    with pytest.raises(InvolutionError):
        FujikiInput(G, inversion_automorphism(G), n=1)
    with pytest.raises(InvolutionError):
        FujikiInput(G, inversion_automorphism(other))


def test_primitivity_for_higher_n():
    assert is_primitive_check(abelian_input(3, n=3))
    S3 = group_from_strings(["(0,1)", "(0,1,2)"], 3)
    assert not is_primitive_check(FujikiInput(S3, identity_involution(S3), n=3))


def test_specific_fixed_counts():
    C6 = direct_product_of_cycles((6,))
    g = C6.generators[0]
    assert specific_fixed_count(C6, g) == 2
    assert specific_fixed_count(C6, g.power(2)) == 4
    assert specific_fixed_count(C6, g.power(3)) == 6

    C4 = direct_product_of_cycles((4,))
    assert specific_fixed_count(C4, C4.generators[0].power(2)) == 4
    assert specific_fixed_count(direct_product_of_cycles((2,)), direct_product_of_cycles((2,)).generators[0]) == 8

    C5 = direct_product_of_cycles((5,))
    with pytest.raises(InadmissibleGroupError):
        specific_fixed_count(C5, C5.generators[0])


def test_subgroup_multiplicities_and_pair_generators():
    C4 = direct_product_of_cycles((4,))
    square = C4.generators[0].power(2)
    assert subgroup_multiplicities(C4, square) == (1, 0)
    gens = pair_generators(C4, square, 4)
    assert len(gens) == 1
    assert gens[0].order() == 4


def test_translate_set_of_involution():
    data = abelian_input(2)
    g = data.group.generators[0]
    ts = build_translate_set(data, g, g)
    assert ts.size == 2
    assert ts.t == 1
    assert ts.minus == 0
    assert labels_well_defined(data, ts)


def test_translate_set_labels_are_coset_invariants():
    data = abelian_input(4)
    g = data.group.generators[0]
    ts = build_translate_set(data, g, g)
    assert ts.t == len(ts.cosets)
    assert labels_well_defined(data, ts)
    assert build_translate_set(data, g, g) is ts


def test_translate_set_requires_equal_orders():
    data = abelian_input(4)
    g = data.group.generators[0]
    with pytest.raises(GroupError):
        build_translate_set(data, g, g.power(2))


def test_external_fixed_count_for_c2():
    data = abelian_input(2)
    assert external_fixed_count(data, data.group.generators[0]) == 56


def test_wreath_group_order():
    S3 = group_from_strings(["(0,1)", "(0,1,2)"], 3)
    assert wreath_order_check(FujikiInput(S3, identity_involution(S3))) == 12
    assert wreath_order_check(abelian_input(4)) == 8


def test_wreath_embedding():
    data = abelian_input(4)
    g = data.group.generators[0]
    jg = embed_pair(data, g)
    assert jg.degree == 8
    assert jg.images[4:] == tuple(4 + i for i in g.inverse().images)
    assert not commutes_in_wreath(data, data.group.identity, g)
    assert commutes_in_wreath(data, data.group.identity, g.power(2))


def test_central_involution_with_no_specific_points(catalog):
    data = catalog.resolved("C2xS4").fujiki_input()
    z = parse_permutation("(4,5)", 6)
    # z lies in the four C_6 = <z> x C_3 and is the square of no element
    assert subgroup_multiplicities(data.group, z) == (0, 4)
    assert specific_fixed_count(data.group, z) == 0
    assert external_fixed_count(data, z) >= 0


def test_cyclic_subgroup_memo_lives_on_the_group():
    first = direct_product_of_cycles((2, 6))
    second = direct_product_of_cycles((2, 6))
    g = first.generators[1].power(3)
    assert subgroup_multiplicities(first, g) == subgroup_multiplicities(second, g)
    assert set(first.containing_cache) == {(4, g), (6, g)}
    assert first.containing_cache is not second.containing_cache


@pytest.mark.parametrize("name,label", FAST_ROW_KEYS, ids=lambda v: v or "-")
def test_wreath_order_law(catalog, name, label):
    data = catalog.resolved(name).fujiki_input(label)
    assert wreath_order_check(data) == 2 * data.group.order


@pytest.mark.parametrize("name,label", FAST_ROW_KEYS, ids=lambda v: v or "-")
def test_coset_labels_against_wreath_composition(catalog, name, label):
    data = catalog.resolved(name).fujiki_input(label)
    for k in (2, 3, 4, 6):
        for g in elements_of_order(data.group, k, modulo_inverse=True):
            ts = build_translate_set(data, g, g)
            assert labels_well_defined(data, ts)
            for coset in ts.cosets:
                assert commutes_in_wreath(data, coset.rep, g) == coset.commuting
