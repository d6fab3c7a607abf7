from fractions import Fraction

import pytest

from errors import FujikiError, InadmissibleGroupError
from invariants.fujiki import (
    fujiki_coefficient,
    historical_surds,
    quotient_multiplier,
    verification_constant,
    xiao_rank,
)
from invariants.rational import (
    format_rational,
    parse_rational,
    rational_root,
    square_root_result,
    squarefree_part,
)
from invariants.series import dimension_six_series, series_betti, series_report
from invariants.topology import assemble_invariants, chern_numbers, s_and_chi, verify_custom
from permcore.group import direct_product_of_cycles
from singularities.profile import SingularityProfile
from tests.test_data import (
    DIMENSION_SIX_B2,
    ERRATUM_CASE,
    GOLDEN_ROWS,
    HISTORICAL_SQUAREFREE,
    SERIES_B2,
    XIAO_RANKS,
)


def test_rational_roots():
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(-8, 3) == -2
    assert rational_root(2, 2) is None
    assert rational_root(Fraction(1, 2), 3) is None
    with pytest.raises(FujikiError):
        rational_root(-4, 2)
    with pytest.raises(FujikiError):
        rational_root(4, 1)


def test_squarefree_parts():
    assert squarefree_part(1278) == 142
    assert squarefree_part(Fraction(1, 2)) == 2
    assert squarefree_part(Fraction(9, 4)) == 1
    assert squarefree_part(0) == 0
    assert square_root_result(Fraction(9, 4)).value == Fraction(3, 2)
    irrational = square_root_result(12)
    assert not irrational.is_rational
    assert irrational.squarefree == 3


def test_rational_text():
    assert format_rational(Fraction(261, 2)) == "261/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert parse_rational(" 1015/24 ") == Fraction(1015, 24)


def test_erratum_fails_rationality():
    profile = SingularityProfile.parse(ERRATUM_CASE["profile"])
    invariants, root = verify_custom(profile, ERRATUM_CASE["b2"], parse_rational(ERRATUM_CASE["factor"]))
    assert invariants.b4 == ERRATUM_CASE["b4"]
    assert invariants.chi == ERRATUM_CASE["chi"]
    assert invariants.c4 == ERRATUM_CASE["c4"]
    assert invariants.S0_value == parse_rational(ERRATUM_CASE["S0"])
    assert invariants.c2_squared == ERRATUM_CASE["c2_squared"]
    assert root.radicand == ERRATUM_CASE["radicand"]
    assert root.squarefree == ERRATUM_CASE["squarefree"]
    assert not root.is_rational
    assert not invariants.verified


@pytest.mark.parametrize("row", GOLDEN_ROWS, ids=lambda r: r.key)
def test_invariants_reproduce_reference_row(catalog, row):
    _, b4, chi = s_and_chi(row.profile, row.b2)
    c4, c2_squared, _ = chern_numbers(row.profile, chi)
    assert (b4, chi) == (row.b4, row.chi)
    assert (c4, c2_squared) == (row.c4, row.c2_squared)
    assert verification_constant(catalog[row.group].order, c4, c2_squared).value == row.cbar


def test_assembled_invariants_for_c2():
    profile = SingularityProfile(a2=28)
    inv = assemble_invariants(profile, 16, 2)
    assert (inv.b4, inv.chi) == (178, 212)
    assert inv.c4 == 198
    assert inv.c2_squared == 576
    assert inv.cbar_c2 == 36
    assert inv.verified


def test_verification_constant_needs_rational_root():
    assert verification_constant(2, Fraction(198), Fraction(576)).value == 36
    assert not verification_constant(3, Fraction(198), Fraction(576)).is_rational


def test_a12_has_no_formulas():
    with pytest.raises(FujikiError):
        s_and_chi(SingularityProfile(a12=1), 5)


@pytest.mark.parametrize("case", XIAO_RANKS, ids=lambda c: c["group"])
def test_xiao_rank_of_catalog_groups(catalog, case):
    assert xiao_rank(catalog.group(case["group"])) == case["rank"]


def test_xiao_rank_rejects_non_symplectic_orders():
    with pytest.raises(InadmissibleGroupError):
        xiao_rank(direct_product_of_cycles((9,)))
    assert xiao_rank(direct_product_of_cycles((5,))) == 6


def test_fujiki_coefficients():
    assert fujiki_coefficient(1, 2) == 3
    assert fujiki_coefficient(2, 2) == 24
    assert quotient_multiplier(2, 2) == 8
    with pytest.raises(FujikiError):
        fujiki_coefficient(2, 1)


def test_historical_surds():
    rows = historical_surds()
    assert [r["squarefree"] for r in rows] == HISTORICAL_SQUAREFREE
    assert all(r["square"] == r["coefficient"] ** 2 * r["radicand"] for r in rows)


def test_series_betti_numbers():
    rows = {row["group"]: row["b2"] for row in series_betti(3)}
    assert rows == SERIES_B2


def test_series_pairs_are_distinct():
    report = series_report(10)
    assert len(report["rows"]) == 14
    assert len(report["pairs"]) == 14
    assert all(pair["distinct"] for pair in report["pairs"])
    with pytest.raises(ValueError):
        series_report(2)


def test_dimension_six_series():
    assert [row["b2"] for row in dimension_six_series()] == DIMENSION_SIX_B2
