import pytest

from errors import InadmissibleGroupError
from fixedpoints.fixed_sets import FujikiInput
from involutions.involution import inversion_automorphism
from permcore.group import direct_product_of_cycles
from singularities.census import check_admissible, count_common, count_mid, count_rare, singularity_profile
from singularities.profile import PROFILE_FIELDS, SingularityProfile
from tests.test_data import FAST_ROW_KEYS, GOLDEN_ROWS

GOLDEN = {row.key: row for row in GOLDEN_ROWS}


def test_profile_parse_and_render():
    profile = SingularityProfile.parse("a2=45, a4=2")
    assert profile.a2 == 45
    assert profile.a4 == 2
    assert profile.as_list() == [45, 0, 2, 0, 0, 0, 0, 0]
    assert profile.legacy_list() == [45, 0, 2, 0, 0, 0, 0]
    assert profile.describe() == "a2=45, a4=2"
    assert SingularityProfile().describe() == "smooth"
    assert SingularityProfile.parse("b4sing=1,b6sing=2").key() == (0, 0, 0, 0, 0, 0, 1, 2)
    assert len(PROFILE_FIELDS) == 8


def test_profile_parse_rejects_unknown_type():
    with pytest.raises(ValueError):
        SingularityProfile.parse("a5=1")


@pytest.mark.parametrize("name,orders", [
    ("C2", (2,)),
    ("C3", (3,)),
    ("C2p2", (2, 2)),
    ("C4", (4,)),
    ("C6", (6,)),
    ("C2xC4", (2, 4)),
    ("C3p2", (3, 3)),
    ("C2xC6", (2, 2, 3)),
    ("C4p2", (4, 4)),
])
def test_abelian_profiles_match_reference(name, orders):
    G = direct_product_of_cycles(orders)
    data = FujikiInput(G, inversion_automorphism(G), admissible=True)
    assert singularity_profile(data).key() == GOLDEN[name].profile.key()


@pytest.mark.parametrize("orders", [(4,), (6,), (2, 4)])
def test_representative_choice_does_not_matter(orders):
    G = direct_product_of_cycles(orders)
    data = FujikiInput(G, inversion_automorphism(G), admissible=True)
    assert singularity_profile(data) == singularity_profile(data, prefer_greatest=True)


def test_grouped_counts(catalog):
    data = catalog.resolved("C2p2C4").fujiki_input()
    profile = singularity_profile(data)
    assert profile.legacy_list() == [10, 0, 6, 0, 0, 0, 0]
    assert count_common(data) == (10, 0)
    assert count_mid(data) == (6, 0)
    assert count_rare(data) == (0, 0, 0, 0)


def test_admissibility_checks():
    C5 = direct_product_of_cycles((5,))
    with pytest.raises(InadmissibleGroupError):
        check_admissible(FujikiInput(C5, inversion_automorphism(C5), admissible=True))
    C2 = direct_product_of_cycles((2,))
    with pytest.raises(InadmissibleGroupError):
        singularity_profile(FujikiInput(C2, inversion_automorphism(C2)))


@pytest.mark.parametrize("name,label", [k for k in FAST_ROW_KEYS if k[0] in
                                        ("S3", "D4", "A4", "D6", "C2xD4", "C2p2C4", "A33", "C3xS3")],
                         ids=lambda v: v or "-")
def test_representative_choice_on_nonabelian_groups(catalog, name, label):
    data = catalog.resolved(name).fujiki_input(label)
    assert singularity_profile(data) == singularity_profile(data, prefer_greatest=True)
