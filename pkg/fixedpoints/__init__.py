"""Fixed-point combinatorics of the wreath action, expressed in (G, theta)."""

from fixedpoints.fixed_sets import FujikiInput, fixed_inversion_set, fixed_surface_orbit_count, is_primitive_check
from fixedpoints.translate_sets import (
    CosetLabel,
    TranslateSet,
    build_translate_set,
    labels_well_defined,
    pair_generators,
    subgroup_multiplicities,
)
from fixedpoints.counts import K3_FIXED_POINTS, specific_fixed_count, external_fixed_count
from fixedpoints.wreath import embed_pair, swap_factors, wreath_order_check, commutes_in_wreath

__all__ = [
    'FujikiInput', 'fixed_inversion_set', 'fixed_surface_orbit_count', 'is_primitive_check',
    'CosetLabel', 'TranslateSet', 'build_translate_set', 'labels_well_defined', 'pair_generators',
    'subgroup_multiplicities', 'K3_FIXED_POINTS', 'specific_fixed_count', 'external_fixed_count',
    'embed_pair', 'swap_factors', 'wreath_order_check', 'commutes_in_wreath',
]
