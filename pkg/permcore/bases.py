"""Irredundant generating sets (bases) of a finite permutation group."""

import math
import logging
from typing import FrozenSet, Iterator, List, Optional, Tuple

from permcore.group import GroupTable, close_elements
from permcore.permutation import Perm

logger = logging.getLogger(__name__)


def _generates(family: List[Perm], G: GroupTable) -> bool:
    return len(close_elements(family, G.degree)) == G.order


def is_irredundant(family: List[Perm], G: GroupTable) -> bool:
    """True iff the family generates G and no proper subfamily does."""
    if not _generates(family, G):
        return False
    return all(not _generates(family[:i] + family[i + 1:], G) for i in range(len(family)))


def irredundant_generating_sets(G: GroupTable, max_size: Optional[int] = None) -> Iterator[Tuple[Perm, ...]]:
    """
    Yield every basis of G with at most ``max_size`` elements.

    Candidates are explored in canonical element order; an element already in
    the span of the previous choices is never added, and the search stops
    extending a family as soon as it spans G.

    Args:
        G: The group
        max_size: Largest family size (default floor(log2 |G|), an upper
            bound on the size of any basis)

    Yields:
        Tuples of generators in canonical order
    """
    if max_size is None:
        max_size = max(1, int(math.log2(G.order))) if G.order > 1 else 1
    candidates = [g for g in G.sorted_elements if not g.is_identity()]
    if G.order == 1:
        return

    def extend(chosen: List[Perm], span: FrozenSet[Perm], start: int):
        for i in range(start, len(candidates)):
            x = candidates[i]
            if x in span:
                continue
            family = chosen + [x]
            new_span = close_elements(family, G.degree)
            if len(new_span) == G.order:
                if is_irredundant(family, G):
                    yield tuple(family)
            elif len(family) < max_size:
                yield from extend(family, new_span, i + 1)

    yield from extend([], frozenset([G.identity]), 0)


def basis_size_range(G: GroupTable, max_size: Optional[int] = None) -> List[int]:
    """Sorted distinct sizes of the bases of G."""
    sizes = sorted({len(b) for b in irredundant_generating_sets(G, max_size)})
    logger.debug(f"Basis sizes for group of order {G.order}: {sizes}")
    return sizes
