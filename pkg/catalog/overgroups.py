"""
Overgroups used as equivalence bridges and search spaces.

Most overgroups are stored as generator lists in the catalog document. Two
are built here: the automorphism group of the Fermat quartic acting on the
64 points (i^a : i^b : i^c : 1), and the normalizer of a catalog group in
its full symmetric group.
"""

import logging
import time
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, Iterable, List

from catalog.models import OvergroupSpec
from errors import CatalogError, PermutationParseError
from permcore.group import GroupTable, close_elements, close_group
from permcore.permutation import Perm, parse_permutation

logger = logging.getLogger(__name__)

FERMAT_GROUP = "Ftilde"
SYMMETRIC_NORMALIZER = "N576"
# Overgroups with no stored generator list.
CODE_BUILT_OVERGROUPS = (FERMAT_GROUP, SYMMETRIC_NORMALIZER)

# Closure of u, v, w, t1, t2, t3: C_4^3 : S_4.
FERMAT_GROUP_ORDER = 1536
SYMMETRIC_NORMALIZER_ORDER = 576
# Catalog group whose normalizer in S_8 is SYMMETRIC_NORMALIZER.
SYMMETRIC_NORMALIZER_OF = "C2p4S3"


def _fermat_index(a: int, b: int, c: int) -> int:
    return a % 4 + 4 * (b % 4) + 16 * (c % 4)


def _fermat_map(rule) -> Perm:
    images = [0] * 64
    for c in range(4):
        for b in range(4):
            for a in range(4):
                images[_fermat_index(a, b, c)] = _fermat_index(*rule(a, b, c))
    return Perm.from_images(images)


def fermat_quartic_generators() -> Dict[str, Perm]:
    """
    Generators of the Fermat quartic automorphism group on 64 points.

    Point (i^a : i^b : i^c : 1) has index a + 4b + 16c. u, v, w multiply
    x, y, z by i; t1, t2, t3 swap (x, y), (y, z) and (z, t).
    """
    return {
        "u": _fermat_map(lambda a, b, c: (a + 1, b, c)),
        "v": _fermat_map(lambda a, b, c: (a, b + 1, c)),
        "w": _fermat_map(lambda a, b, c: (a, b, c + 1)),
        "t1": _fermat_map(lambda a, b, c: (b, a, c)),
        "t2": _fermat_map(lambda a, b, c: (a, c, b)),
        "t3": _fermat_map(lambda a, b, c: (a - c, b - c, -c)),
    }


@lru_cache(maxsize=1)
def fermat_quartic_group() -> GroupTable:
    start = time.time()
    group = close_group(list(fermat_quartic_generators().values()))
    logger.info(f"Fermat quartic group of order {group.order} built in {time.time() - start:.2f}s")
    if group.order != FERMAT_GROUP_ORDER:
        raise CatalogError(f"Fermat quartic group closed to order {group.order}, expected {FERMAT_GROUP_ORDER}")
    return group


def _greedy_generators(elements: Iterable[Perm], degree: int) -> List[Perm]:
    """A small generating list for a group given by its elements."""
    chosen: List[Perm] = []
    span: FrozenSet[Perm] = frozenset([Perm.identity(degree)])
    for g in sorted(elements):
        if g not in span:
            chosen.append(g)
            span = close_elements(chosen, degree)
    return chosen or [Perm.identity(degree)]


def symmetric_normalizer(G: GroupTable) -> GroupTable:
    """
    Normalizer of G in the symmetric group on its points.

    Scans every permutation of the points, so only small degrees are practical.
    """
    if G.degree > 9:
        raise CatalogError(f"Refusing a symmetric scan on {G.degree} points")
    start = time.time()
    found = set()
    for images in permutations(range(G.degree)):
        c = Perm.from_images(images)
        if G.normalized_by(c):
            found.add(c)
    elements = frozenset(found)
    logger.info(f"Normalizer of order {len(elements)} found in {time.time() - start:.2f}s")
    return GroupTable(_greedy_generators(elements, G.degree), elements)


def build_overgroup(spec: OvergroupSpec) -> GroupTable:
    """
    Close a stored overgroup and check its advertised order.

    Raises:
        CatalogError: On unparsable generators or an order mismatch
    """
    try:
        gens = [parse_permutation(s, spec.degree) for s in spec.generators]
    except PermutationParseError as e:
        raise CatalogError(f"Overgroup {spec.name}: {e}") from e
    group = close_group(gens)
    if spec.expected_order is not None and group.order != spec.expected_order:
        logger.error(f"Overgroup {spec.name} closed to order {group.order}, expected {spec.expected_order}")
        raise CatalogError(f"Overgroup {spec.name} has order {group.order}, expected {spec.expected_order}")
    return group


def builtin_overgroups(catalog=None) -> Dict[str, GroupTable]:
    """
    Every named overgroup: the stored ones, the Fermat quartic group and
    the symmetric normalizer of C_2^4 : S_3.

    Args:
        catalog: A loaded Catalog; the built-in one when omitted
    """
    if catalog is None:
        from catalog.loader import load_catalog
        catalog = load_catalog()
    return {name: catalog.overgroup(name) for name in catalog.overgroup_names()}
