"""Valid involutions: construction, enumeration and classification."""

from involutions.involution import (
    InvolutionDescriptor,
    GroupInvolution,
    identity_involution,
    inversion_automorphism,
    conjugation_involution,
    extend_generator_inversion,
    is_valid_involution,
    inner_conjugator,
    is_inner_involution,
    product_restriction,
    involution_from_descriptor,
)
from involutions.enumeration import (
    enumerate_valid_involutions,
    symmetric_involutions,
    automorphism_elements,
    centralizer_elements,
)
from involutions.equivalence import (
    InvolutionClass,
    are_equivalent,
    inner_class_witness,
    classify_involutions,
    overgroup_bridge_search,
    classify_with_bridge_search,
)

__all__ = [
    'InvolutionDescriptor', 'GroupInvolution', 'identity_involution', 'inversion_automorphism',
    'conjugation_involution', 'extend_generator_inversion', 'is_valid_involution',
    'inner_conjugator', 'is_inner_involution', 'product_restriction', 'involution_from_descriptor',
    'enumerate_valid_involutions', 'symmetric_involutions', 'automorphism_elements',
    'centralizer_elements', 'InvolutionClass', 'are_equivalent', 'inner_class_witness',
    'classify_involutions', 'overgroup_bridge_search', 'classify_with_bridge_search',
]
