"""
Fujiki relation coefficients and the rationality criterion on c2.

For an irreducible symplectic orbifold X of dimension 4 with Fujiki
constant C_X the number sqrt((7 c2^2 - 4 c4) C_X / 15) is rational. For
S(G)^[2]_theta the relevant factor is 3|G|, giving
sqrt(|G| (7 c2^2 - 4 c4) / 5).
"""

import logging
import math
from fractions import Fraction
from typing import Dict, List

from errors import FujikiError, InadmissibleGroupError
from invariants.rational import RootResult, square_root_result, squarefree_part
from permcore.group import GroupTable

logger = logging.getLogger(__name__)

# Number of fixed points of a symplectic automorphism of a K3 surface by order
# (Lefschetz number of its action on cohomology).
SYMPLECTIC_FIXED_POINTS = {2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}

# Irrational values produced by previously published singularity data.
HISTORICAL_SURDS = [
    {"group": "C6", "coefficient": 1, "radicand": 3720},
    {"group": "C2xC4", "coefficient": 16, "radicand": 19},
    {"group": "C2xC6", "coefficient": 36, "radicand": 7},
    {"group": "C4p2", "coefficient": 8, "radicand": 210},
]


def rationality_criterion(c4: Fraction, c2_squared: Fraction, fujiki_factor: Fraction) -> RootResult:
    """sqrt((7 c2^2 - 4 c4) * C / 15) as a structured result."""
    radicand = (7 * Fraction(c2_squared) - 4 * Fraction(c4)) * Fraction(fujiki_factor) / 15
    return square_root_result(radicand)


def verification_constant(order_G: int, c4: Fraction, c2_squared: Fraction) -> RootResult:
    """
    C(c2) = sqrt(|G| (7 c2^2 - 4 c4) / 5).

    An absent value means the data cannot come from a genuine Fujiki orbifold.
    """
    result = rationality_criterion(c4, c2_squared, 3 * order_G)
    if not result.is_rational:
        logger.warning(f"Verification failed for |G| = {order_G}: squarefree part {result.squarefree}")
    return result


def fujiki_coefficient(order_G: int, n: int) -> Fraction:
    """
    Coefficient of (alpha^2)^n in the 2n-th power of the induced class:
    (2n)! |G| / (n! 2^n) * (|G|^(2n-3) ((n-1)!)^2)^n.
    """
    if n < 2 or order_G < 1:
        raise FujikiError(f"Fujiki coefficient needs n >= 2 and |G| >= 1, got n={n}, |G|={order_G}")
    head = Fraction(math.factorial(2 * n) * order_G, math.factorial(n) * 2 ** n)
    return head * (order_G ** (2 * n - 3) * math.factorial(n - 1) ** 2) ** n


def quotient_multiplier(order_H: int, n: int) -> int:
    """Factor |H|^(2n-1) relating the Fujiki relations of X and of its quotient by H."""
    if n < 1:
        raise FujikiError(f"Quotient multiplier needs n >= 1, got {n}")
    return order_H ** (2 * n - 1)


def historical_surds() -> List[Dict[str, int]]:
    """The published-data surds with their squarefree parts."""
    rows = []
    for entry in HISTORICAL_SURDS:
        value = entry["coefficient"] ** 2 * entry["radicand"]
        rows.append({**entry, "square": value, "squarefree": squarefree_part(value)})
    return rows


def xiao_rank(G: GroupTable) -> int:
    """
    Rank of H^2(S, Z)^G for a symplectic action, by averaging the Lefschetz
    numbers: (24 + sum over g != 1 of #Fix(g)) / |G| - 2.

    Raises:
        InadmissibleGroupError: For element orders with no symplectic realization
    """
    total = 24
    for g, k in G.element_orders.items():
        if k == 1:
            continue
        if k not in SYMPLECTIC_FIXED_POINTS:
            raise InadmissibleGroupError(f"No symplectic automorphism of a K3 surface has order {k}")
        total += SYMPLECTIC_FIXED_POINTS[k]
    if total % G.order:
        logger.error(f"Trace sum {total} not divisible by |G| = {G.order}")
        raise InadmissibleGroupError("Element orders are inconsistent with a symplectic action")
    return total // G.order - 2
