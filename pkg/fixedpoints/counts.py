"""
Specific fixed points n(g) on the surface and the off-diagonal count N(g).
"""

import logging

from errors import BudgetError, InadmissibleGroupError
from fixedpoints.fixed_sets import FujikiInput
from fixedpoints.translate_sets import build_translate_set, pair_generators, subgroup_multiplicities
from permcore.group import GroupTable
from permcore.permutation import Perm

logger = logging.getLogger(__name__)

# Number of fixed points of a symplectic automorphism of a K3 surface, by order.
K3_FIXED_POINTS = {2: 8, 3: 6, 4: 4, 6: 2}


def specific_fixed_count(G: GroupTable, g: Perm) -> int:
    """
    Number of points whose stabilizer is exactly <g>.

    Raises:
        InadmissibleGroupError: If order(g) is not 2, 3, 4 or 6
        BudgetError: If the count comes out negative
    """
    order = g.order()
    if order not in K3_FIXED_POINTS:
        raise InadmissibleGroupError(f"No specific fixed-point count for an element of order {order}")
    k4, k6 = subgroup_multiplicities(G, g)
    if order == 2:
        count = 8 - 2 * k6 - 4 * k4
    elif order == 3:
        count = 6 - 2 * k6
    else:
        count = K3_FIXED_POINTS[order]
    if count < 0:
        logger.error(f"Negative specific fixed-point count {count} for {g} (k4={k4}, k6={k6})")
        raise BudgetError(f"Negative specific fixed-point count for {g}")
    return count


def _budget(weight: int, value: int, what: str) -> int:
    """weight * value, where value must be nonnegative unless it weighs nothing."""
    if weight == 0:
        return 0
    if value < 0:
        logger.error(f"Budget exceeded: {what} = {value}")
        raise BudgetError(f"Coset count exceeds its fixed-point budget ({what} = {value})")
    return weight * value


def _pair_sum(data: FujikiInput, gens, g: Perm, budget: int) -> int:
    """Sum over ordered pairs i != j of budget * (budget - t(g_i, g_j))."""
    total = 0
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i == j:
                continue
            t = build_translate_set(data, gi, gj, g).t
            total += _budget(budget, budget - t, f"{budget} - t({gi},{gj})")
    return total


def external_fixed_count(data: FujikiInput, g: Perm, prefer_greatest: bool = False) -> int:
    """
    N(g): number of points of S x S, off the diagonal image, whose
    stabilizer in the wreath group is generated by a lift of g.

    Args:
        data: The (G, theta) input
        g: Element of order 2, 3, 4 or 6
        prefer_greatest: Choose the greater of {h, h^-1} for pair generators

    Returns:
        Nonnegative integer N(g)
    """
    G = data.group
    order = g.order()
    t = build_translate_set(data, g, g).t
    if order == 6:
        return _budget(2, 2 - t, "2 - t(g)")
    if order == 4:
        return _budget(4, 4 - t, "4 - t(g)")

    k4, k6 = subgroup_multiplicities(G, g)
    n = specific_fixed_count(G, g)
    if order == 3:
        gens6 = pair_generators(G, g, 6, prefer_greatest)
        return _budget(n, 6 + 2 * k6 - t, "6 + 2k6 - t(g)") + _pair_sum(data, gens6, g, 2)
    if order == 2:
        gens6 = pair_generators(G, g, 6, prefer_greatest)
        gens4 = pair_generators(G, g, 4, prefer_greatest)
        return (_budget(n, 8 + 2 * k6 + 4 * k4 - t, "8 + 2k6 + 4k4 - t(g)")
                + _pair_sum(data, gens6, g, 2)
                + _pair_sum(data, gens4, g, 4)
                + 16 * k6 * k4)
    raise InadmissibleGroupError(f"No external fixed-point count for an element of order {order}")
