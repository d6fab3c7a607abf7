"""
Closed-form census of the singularities of the Fujiki orbifold of (G, theta).

Every count is a sum over elements of G of order 2, 3, 4 or 6 (taken up to
inversion), built from the labelled translate sets, then divided by |G|.
The divisions must be exact.
"""

import logging
import time
from fractions import Fraction
from typing import Dict, List, Tuple

from errors import InadmissibleGroupError, IntegralityError
from fixedpoints.counts import external_fixed_count, specific_fixed_count
from fixedpoints.fixed_sets import FujikiInput
from fixedpoints.translate_sets import build_translate_set, pair_generators
from permcore.group import GroupTable, elements_of_order
from permcore.permutation import Perm
from singularities.profile import PROFILE_FIELDS, SingularityProfile

logger = logging.getLogger(__name__)

ADMISSIBLE_ORDERS = {1, 2, 3, 4, 6}


def _representatives(G: GroupTable, k: int, prefer_greatest: bool) -> List[Perm]:
    if not prefer_greatest:
        return elements_of_order(G, k, modulo_inverse=True)
    found = elements_of_order(G, k)
    return [g for g in found if g >= g.inverse()]


def _pair_counts(data: FujikiInput, gens: List[Perm], g: Perm) -> Tuple[int, int, int]:
    """Sums over ordered pairs i != j of c(+, not F), c(+, c, F) and minus."""
    plus_off_f = plus_comm_f = minus = 0
    for i, gi in enumerate(gens):
        for j, gj in enumerate(gens):
            if i == j:
                continue
            ts = build_translate_set(data, gi, gj, g)
            plus_off_f += ts.count(plus=True, meets_F=False)
            plus_comm_f += ts.count(plus=True, commuting=True, meets_F=True)
            minus += ts.minus
    return plus_off_f, plus_comm_f, minus


def _census_sums(data: FujikiInput, prefer_greatest: bool) -> Dict[str, Fraction]:
    G = data.group
    sums = {name: Fraction(0) for name in PROFILE_FIELDS}

    for g in _representatives(G, 4, prefer_greatest):
        ts = build_translate_set(data, g, g)
        sums["a8"] += 16 * ts.count(plus=True, commuting=True, meets_F=False)
        sums["b4"] += 16 * ts.count(plus=True, commuting=False, meets_F=False)
        sums["a4"] += 8 * ts.minus + 8 * (4 - ts.t)
        sums["a2"] += 64 * ts.count(plus=True, commuting=True, meets_F=True)

    for g in _representatives(G, 6, prefer_greatest):
        ts = build_translate_set(data, g, g)
        sums["a12"] += 12 * ts.count(plus=True, commuting=True, meets_F=False)
        sums["b6"] += 12 * ts.count(plus=True, commuting=False, meets_F=False)
        sums["a6"] += 6 * ts.minus + 6 * (2 - ts.t)
        sums["a3"] += 48 * ts.count(plus=True, commuting=True, meets_F=True)
        sums["a2"] += 12 * ts.count(plus=True, commuting=False, meets_F=True)

    for g in _representatives(G, 3, prefer_greatest):
        ts = build_translate_set(data, g, g)
        n = specific_fixed_count(G, g)
        big_n = external_fixed_count(data, g, prefer_greatest)
        gens6 = pair_generators(G, g, 6, prefer_greatest)
        off_f, comm_f, minus = _pair_counts(data, gens6, g)
        sums["a6"] += 3 * n * ts.count(plus=True, meets_F=False) + 6 * off_f
        sums["a3"] += (Fraction(3, 2) * big_n + Fraction(3, 2) * n * ts.minus + 3 * minus
                       + 6 * n * ts.count(plus=True, commuting=True, meets_F=True) + 12 * comm_f)

    for g in _representatives(G, 2, prefer_greatest):
        ts = build_translate_set(data, g, g)
        n = specific_fixed_count(G, g)
        big_n = external_fixed_count(data, g, prefer_greatest)
        off6, _, minus6 = _pair_counts(data, pair_generators(G, g, 6, prefer_greatest), g)
        off4, _, minus4 = _pair_counts(data, pair_generators(G, g, 4, prefer_greatest), g)
        sums["a4"] += 2 * n * ts.count(plus=True, meets_F=False) + 4 * off6 + 8 * off4
        sums["a2"] += big_n + n * ts.minus + 2 * minus6 + 4 * minus4

    return sums


def check_admissible(data: FujikiInput) -> None:
    """
    Raises:
        InadmissibleGroupError: If an element order falls outside {1,2,3,4,6}
            or the group is not flagged admissible
    """
    bad = sorted({k for k in data.group.element_orders.values() if k not in ADMISSIBLE_ORDERS})
    if bad:
        logger.error(f"Group of order {data.group.order} has elements of order {bad}")
        raise InadmissibleGroupError(f"Element orders {bad} are outside the admissible range")
    if not data.admissible:
        logger.error(f"Group of order {data.group.order} is not flagged admissible")
        raise InadmissibleGroupError("Group is not flagged admissible; the census does not apply")


def _census(data: FujikiInput, prefer_greatest: bool = False) -> Dict[str, int]:
    cached = data.census_cache.get(prefer_greatest)
    if cached is not None:
        return cached
    check_admissible(data)
    start = time.time()
    order = data.group.order
    counts = {}
    for name, total in _census_sums(data, prefer_greatest).items():
        value = total / order
        if value.denominator != 1:
            logger.error(f"{name} = {total}/{order} is not an integer")
            raise IntegralityError(f"Census value {name} = {value} is not an integer")
        counts[name] = int(value)
    logger.info(f"Census of group of order {order} done in {time.time() - start:.2f}s: {counts}")
    data.census_cache[prefer_greatest] = counts
    return counts


def count_rare(data: FujikiInput, prefer_greatest: bool = False) -> Tuple[int, int, int, int]:
    """(a8, a12, b4, b6)."""
    c = _census(data, prefer_greatest)
    return c["a8"], c["a12"], c["b4"], c["b6"]


def count_mid(data: FujikiInput, prefer_greatest: bool = False) -> Tuple[int, int]:
    """(a4, a6)."""
    c = _census(data, prefer_greatest)
    return c["a4"], c["a6"]


def count_common(data: FujikiInput, prefer_greatest: bool = False) -> Tuple[int, int]:
    """(a2, a3)."""
    c = _census(data, prefer_greatest)
    return c["a2"], c["a3"]


def singularity_profile(data: FujikiInput, prefer_greatest: bool = False) -> SingularityProfile:
    """
    Full singularity profile of the Fujiki orbifold of (G, theta) for n = 2.

    Args:
        data: Admissible (G, theta) input
        prefer_greatest: Use the greater of {g, g^-1} as representative
            (results must not depend on it)

    Returns:
        SingularityProfile with all eight counts

    Raises:
        InadmissibleGroupError: For groups outside the admissible list
        IntegralityError: If a census division is not exact
    """
    return SingularityProfile(**_census(data, prefer_greatest))
