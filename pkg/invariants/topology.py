"""
Betti numbers, Euler characteristic and Chern numbers of S(G)^[2]_theta.
"""

import logging
from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict

from errors import FujikiError
from fixedpoints.fixed_sets import FujikiInput, fixed_surface_orbit_count
from invariants.fujiki import rationality_criterion, verification_constant
from invariants.rational import RootResult
from singularities.profile import SingularityProfile

logger = logging.getLogger(__name__)

# Contribution of each singularity type to s(X)
S_WEIGHTS = {"a2": 1, "a3": 2, "a4": 3, "a6": 5, "a8": 7, "b4": 4, "b6": 5}

# Correction of each type to c4 = chi - sum
C4_WEIGHTS = {
    "a2": Fraction(1, 2), "a3": Fraction(2, 3), "a4": Fraction(3, 4), "a6": Fraction(5, 6),
    "a8": Fraction(7, 8), "b4": Fraction(7, 8), "b6": Fraction(11, 12),
}

# Local contributions to S0
S0_WEIGHTS = {
    "a2": Fraction(1, 32), "a3": Fraction(2, 27), "a4": Fraction(9, 64), "a6": Fraction(329, 864),
    "a8": Fraction(41, 128), "b4": Fraction(25, 128), "b6": Fraction(545, 1728),
}


class InvariantSet(BaseModel):
    """Topological invariants of one orbifold."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    b2: int
    b3: int = 0
    b4: int
    chi: int
    s_value: int
    S0_value: Fraction
    c4: Fraction
    c2_squared: Fraction
    cbar_c2: Optional[Fraction] = None
    cbar_squarefree: Optional[int] = None

    @property
    def verified(self) -> bool:
        return self.cbar_c2 is not None


def betti2(data: FujikiInput, xiao_rank: int) -> int:
    """
    Second Betti number.

    Args:
        data: The (G, theta, n) input
        xiao_rank: Rank of the G-invariant part of H^2(S)

    Returns:
        rank + #(F/G) for n = 2, rank + 1 for n >= 3
    """
    if data.n >= 3:
        return xiao_rank + 1
    return xiao_rank + fixed_surface_orbit_count(data)


def _require_no_a12(profile: SingularityProfile) -> None:
    if profile.a12:
        logger.error(f"Profile with a12 = {profile.a12} has no invariant formulas")
        raise FujikiError("Singularities of type a12 are not covered by the invariant formulas")


def s_and_chi(profile: SingularityProfile, b2: int, b3: int = 0) -> Tuple[int, int, int]:
    """
    (s, b4, chi) from the singularities and b2.

    Raises:
        FujikiError: If the profile has a12 singularities
    """
    _require_no_a12(profile)
    s_value = -sum(weight * getattr(profile, name) for name, weight in S_WEIGHTS.items())
    b4 = 46 + 10 * b2 - b3 + s_value
    chi = 2 + 2 * b2 - 2 * b3 + b4
    return s_value, b4, chi


def chern_numbers(profile: SingularityProfile, chi: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(c4, c2^2, S0)."""
    _require_no_a12(profile)
    c4 = chi - sum(weight * getattr(profile, name) for name, weight in C4_WEIGHTS.items())
    s0 = sum((weight * getattr(profile, name) for name, weight in S0_WEIGHTS.items()), Fraction(0))
    c2_squared = 720 - 240 * s0 + c4 / 3
    return Fraction(c4), Fraction(c2_squared), s0


def assemble_invariants(profile: SingularityProfile, b2: int, order_G: int, b3: int = 0) -> InvariantSet:
    """Compute every invariant of one row, including the verification constant."""
    s_value, b4, chi = s_and_chi(profile, b2, b3)
    c4, c2_squared, s0 = chern_numbers(profile, chi)
    root = verification_constant(order_G, c4, c2_squared)
    return InvariantSet(
        b2=b2, b3=b3, b4=b4, chi=chi, s_value=s_value, S0_value=s0,
        c4=c4, c2_squared=c2_squared, cbar_c2=root.value, cbar_squarefree=root.squarefree,
    )


def verify_custom(profile: SingularityProfile, b2: int, fujiki_factor: Fraction,
                  b3: int = 0) -> Tuple[InvariantSet, RootResult]:
    """
    Run the rationality criterion on arbitrary orbifold data.

    Args:
        profile: Singularities of the orbifold
        b2: Second Betti number
        fujiki_factor: Fujiki constant C_X entering sqrt((7 c2^2 - 4 c4) C_X / 15)
        b3: Third Betti number

    Returns:
        The derived invariants and the root result
    """
    s_value, b4, chi = s_and_chi(profile, b2, b3)
    c4, c2_squared, s0 = chern_numbers(profile, chi)
    root = rationality_criterion(c4, c2_squared, fujiki_factor)
    invariants = InvariantSet(
        b2=b2, b3=b3, b4=b4, chi=chi, s_value=s_value, S0_value=s0,
        c4=c4, c2_squared=c2_squared, cbar_c2=root.value, cbar_squarefree=root.squarefree,
    )
    return invariants, root
