"""
The input triple (G, theta, n) and the fixed-inversion set F.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Tuple

from errors import InvolutionError
from involutions.involution import GroupInvolution, is_valid_involution
from permcore.group import GroupTable
from permcore.permutation import Perm

logger = logging.getLogger(__name__)


class FujikiInput:
    """
    A group, a valid involution on it and the dimension parameter n.

    ``admissible`` records that the group belongs to the curated list for
    which the singularity census holds; it is set by the catalog. Per-element
    translate sets are memoized on the instance.
    """

    def __init__(self, group: GroupTable, theta: GroupInvolution, n: int = 2, admissible: bool = False):
        if theta.group is not group and theta.group.elements != group.elements:
            raise InvolutionError("Involution is defined on a different group")
        if n < 2:
            raise InvolutionError(f"Dimension parameter n must be at least 2, got {n}")
        self.group = group
        self.theta = theta
        self.n = n
        self.admissible = admissible
        self.translate_cache: Dict[Tuple[Perm, Perm, Perm], object] = {}
        self.census_cache: Dict[bool, object] = {}

    def __repr__(self) -> str:
        return f"FujikiInput(order={self.group.order}, theta={self.theta.describe()}, n={self.n})"


def fixed_inversion_set(data: FujikiInput) -> FrozenSet[Perm]:
    """F = {g in G : theta(g) = g^-1}."""
    return data.theta.fixed_inversion_set


def fixed_surface_orbit_count(data: FujikiInput) -> int:
    """
    Number of orbits of F under g.h = theta(g) h g^-1.

    Orbits under G are orbits under its generators, so a breadth-first
    search over the generator action is enough.
    """
    theta = data.theta
    F = fixed_inversion_set(data)
    moves = [(theta(s), s.inverse()) for s in data.group.generators]
    seen = set()
    orbits = 0
    for start in sorted(F):
        if start in seen:
            continue
        orbits += 1
        seen.add(start)
        queue = deque([start])
        while queue:
            h = queue.popleft()
            for left, right in moves:
                k = left * h * right
                if k not in seen:
                    seen.add(k)
                    queue.append(k)
    if not seen <= F:
        logger.error("Orbit action left the fixed-inversion set")
        raise InvolutionError("Involution does not preserve its fixed-inversion set")
    return orbits


def is_primitive_check(data: FujikiInput) -> bool:
    """For n >= 3: True iff G is abelian and theta is valid."""
    return data.group.is_abelian and is_valid_involution(data.theta)
