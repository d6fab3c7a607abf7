"""
Enumeration of valid involutions.

Two methods are provided:

- ``bases``: every irredundant generating set is inverted and extended to an
  automorphism when possible.
- ``ambient``: every element of order at most 2 of an ambient group that
  normalizes G induces an involution by conjugation.
"""

import logging
import time
from typing import Iterator, List, Optional, Sequence, Union

from errors import InvolutionError
from involutions.involution import (
    GroupInvolution,
    conjugation_involution,
    extend_generator_inversion,
    is_valid_involution,
)
from permcore.bases import irredundant_generating_sets
from permcore.group import GroupTable
from permcore.permutation import Perm

logger = logging.getLogger(__name__)

METHOD_BASES = "bases"
METHOD_AMBIENT = "ambient"
MAX_SYMMETRIC_DEGREE = 9


def symmetric_involutions(degree: int) -> Iterator[Perm]:
    """All elements of order at most 2 of the symmetric group on ``degree`` points."""

    def matchings(points: List[int]):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for m in matchings(rest):
            yield m
        for i, partner in enumerate(rest):
            for m in matchings(rest[:i] + rest[i + 1:]):
                yield [(first, partner)] + m

    for pairs in matchings(list(range(degree))):
        yield Perm.from_cycles(pairs, degree)


def automorphism_elements(G: GroupTable, candidates: Sequence[Perm]) -> List[Perm]:
    """Candidates whose conjugation action preserves G."""
    return [c for c in candidates if G.normalized_by(c)]


def centralizer_elements(G: GroupTable, candidates: Sequence[Perm]) -> List[Perm]:
    """Candidates commuting with every element of G."""
    return [c for c in candidates if all(c * g == g * c for g in G.generators)]


def _dedupe(found: List[GroupInvolution]) -> List[GroupInvolution]:
    unique = {}
    for theta in found:
        unique.setdefault(theta.signature, theta)
    return [unique[key] for key in sorted(unique)]


def _enumerate_bases(G: GroupTable, max_size: Optional[int]) -> List[GroupInvolution]:
    found = []
    for family in irredundant_generating_sets(G, max_size):
        theta = extend_generator_inversion(G, family)
        if theta is not None:
            found.append(theta)
    return found


def _enumerate_ambient(G: GroupTable, ambient: Union[GroupTable, int, None]) -> List[GroupInvolution]:
    if isinstance(ambient, GroupTable):
        if ambient.degree != G.degree:
            raise InvolutionError(f"Ambient group acts on {ambient.degree} points, group on {G.degree}")
        orders = ambient.element_orders
        source = (c for c in ambient.sorted_elements if orders[c] <= 2)
    else:
        degree = G.degree if ambient is None else ambient
        if degree != G.degree:
            raise InvolutionError(f"Symmetric degree {degree} differs from group degree {G.degree}")
        if degree > MAX_SYMMETRIC_DEGREE:
            logger.error(f"Refusing exhaustive scan of the symmetric group on {degree} points")
            raise InvolutionError(
                f"Exhaustive ambient scan is limited to degree {MAX_SYMMETRIC_DEGREE}; supply an overgroup"
            )
        source = symmetric_involutions(degree)

    found = []
    for c in source:
        if not G.normalized_by(c):
            continue
        theta = conjugation_involution(G, c)
        if is_valid_involution(theta):
            found.append(theta)
    return found


def enumerate_valid_involutions(G: GroupTable, method: str = METHOD_BASES,
                                ambient: Union[GroupTable, int, None] = None,
                                max_size: Optional[int] = None) -> List[GroupInvolution]:
    """
    Enumerate the distinct valid involutions of G reachable by a method.

    Args:
        G: The group
        method: "bases" or "ambient"
        ambient: For the ambient method, an overgroup or a symmetric degree
            (defaults to the symmetric group on G's points)
        max_size: Largest basis size for the bases method

    Returns:
        Distinct valid involutions in canonical order

    Raises:
        InvolutionError: On unknown method or an oversized symmetric scan
    """
    start = time.time()
    if method == METHOD_BASES:
        found = _enumerate_bases(G, max_size)
    elif method == METHOD_AMBIENT:
        found = _enumerate_ambient(G, ambient)
    else:
        raise InvolutionError(f"Unknown enumeration method {method!r}")
    result = _dedupe(found)
    logger.info(f"Found {len(result)} valid involutions on a group of order {G.order} "
                f"via {method} in {time.time() - start:.2f}s")
    return result
