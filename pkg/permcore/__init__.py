"""Permutation algebra and finite-group machinery."""

from permcore.permutation import Perm, parse_permutation, format_permutation, format_cycles
from permcore.group import (
    GroupTable,
    close_group,
    close_elements,
    group_from_strings,
    cyclic_subgroup,
    canonical_generator,
    cyclic_subgroups_of_order,
    elements_of_order,
    right_coset_orbits,
    direct_product_of_cycles,
)
from permcore.bases import irredundant_generating_sets, is_irredundant, basis_size_range

__all__ = [
    'Perm', 'parse_permutation', 'format_permutation', 'format_cycles',
    'GroupTable', 'close_group', 'close_elements', 'group_from_strings',
    'cyclic_subgroup', 'canonical_generator', 'cyclic_subgroups_of_order',
    'elements_of_order', 'right_coset_orbits', 'direct_product_of_cycles',
    'irredundant_generating_sets', 'is_irredundant', 'basis_size_range',
]
