"""Exact topological invariants and verification of Fujiki orbifolds."""

from invariants.rational import (
    Rational,
    RootResult,
    rational_root,
    squarefree_part,
    square_root_result,
    format_rational,
    parse_rational,
)
from invariants.fujiki import (
    rationality_criterion,
    verification_constant,
    fujiki_coefficient,
    quotient_multiplier,
    historical_surds,
    xiao_rank,
)
from invariants.topology import (
    InvariantSet,
    betti2,
    s_and_chi,
    chern_numbers,
    assemble_invariants,
    verify_custom,
)
from invariants.series import ABELIAN_SERIES, series_betti, series_report, dimension_six_series

__all__ = [
    'Rational', 'RootResult', 'rational_root', 'squarefree_part', 'square_root_result',
    'format_rational', 'parse_rational', 'rationality_criterion', 'verification_constant',
    'fujiki_coefficient', 'quotient_multiplier', 'historical_surds', 'xiao_rank',
    'InvariantSet', 'betti2', 's_and_chi', 'chern_numbers', 'assemble_invariants', 'verify_custom',
    'ABELIAN_SERIES', 'series_betti', 'series_report', 'dimension_six_series',
]
