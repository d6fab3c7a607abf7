"""
The abelian series S(G)^[n], n >= 3.

For n >= 3 only abelian G with inversion give primitive orbifolds, and
b2 = rank H^2(S)^G + 1. Two members with the same b2 are told apart by the
Fujiki constant: their ratio involves |H1|/|H2| to the power 1/n, so an
irrational n-th root certifies that they are not deformation equivalent.
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

from fixedpoints.fixed_sets import FujikiInput
from invariants.fujiki import xiao_rank
from invariants.rational import rational_root
from invariants.topology import betti2
from involutions.involution import inversion_automorphism
from permcore.group import direct_product_of_cycles

logger = logging.getLogger(__name__)

# Name and cyclic factors of each abelian series member.
ABELIAN_SERIES: List[Tuple[str, Tuple[int, ...]]] = [
    ("C2", (2,)),
    ("C3", (3,)),
    ("C4", (4,)),
    ("C5", (5,)),
    ("C6", (6,)),
    ("C7", (7,)),
    ("C8", (8,)),
    ("C2p2", (2, 2)),
    ("C2xC4", (2, 4)),
    ("C2xC6", (2, 6)),
    ("C3p2", (3, 3)),
    ("C4p2", (4, 4)),
    ("C2p3", (2, 2, 2)),
    ("C2p4", (2, 2, 2, 2)),
]

# Orbifolds S(C2^k)^[3], k = 1..4.
DIMENSION_SIX = ["C2", "C2p2", "C2p3", "C2p4"]


def series_betti(n: int = 3) -> List[Dict]:
    """b2 of S(G)^[n] for every member of the abelian series."""
    rows = []
    for name, factors in ABELIAN_SERIES:
        G = direct_product_of_cycles(factors)
        data = FujikiInput(G, inversion_automorphism(G), n=n)
        rank = xiao_rank(G)
        rows.append({"group": name, "order": G.order, "rank": rank, "b2": betti2(data, rank)})
    return rows


def series_report(max_n: int = 10) -> Dict[str, List[Dict]]:
    """
    b2 of every series member and, for each pair with equal b2, whether
    (|H1|/|H2|)^(1/k) is irrational for every 3 <= k <= max_n.

    Returns:
        {"rows": [...], "pairs": [...]}
    """
    if max_n < 3:
        raise ValueError(f"max_n must be at least 3, got {max_n}")
    rows = series_betti(3)
    pairs = []
    for first, second in combinations(rows, 2):
        if first["b2"] != second["b2"]:
            continue
        ratio = Fraction(first["order"], second["order"])
        rational_at = [k for k in range(3, max_n + 1) if rational_root(ratio, k) is not None]
        pairs.append({
            "first": first["group"],
            "second": second["group"],
            "b2": first["b2"],
            "ratio": ratio,
            "distinct": not rational_at,
        })
    logger.info(f"Series report: {len(rows)} members, {len(pairs)} equal-b2 pairs up to n = {max_n}")
    return {"rows": rows, "pairs": pairs}


def dimension_six_series() -> List[Dict]:
    """The four six-dimensional orbifolds S(C2^k)^[3] with their b2."""
    by_name = {row["group"]: row for row in series_betti(3)}
    return [{"group": name, "n": 3, "b2": by_name[name]["b2"]} for name in DIMENSION_SIX]
