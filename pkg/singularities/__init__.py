"""Singularity census of S(G)^[2]_theta."""

from singularities.profile import PROFILE_FIELDS, SingularityProfile
from singularities.census import (
    ADMISSIBLE_ORDERS,
    check_admissible,
    count_rare,
    count_mid,
    count_common,
    singularity_profile,
)

__all__ = [
    'PROFILE_FIELDS', 'SingularityProfile', 'ADMISSIBLE_ORDERS', 'check_admissible',
    'count_rare', 'count_mid', 'count_common', 'singularity_profile',
]
