"""
Finite permutation groups with a fully materialized element set.

Group orders met here stay below a few thousand on at most 64 points, so
closure is a plain breadth-first search with a hash set.
"""

import logging
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from errors import DegreeMismatchError, GroupError
from permcore.permutation import Perm, parse_permutation

logger = logging.getLogger(__name__)


class GroupTable:
    """
    A permutation group given by generators, together with all its elements.

    Apart from a memo of cyclic subgroups, instances are immutable after
    construction and safe to share between threads.
    """

    def __init__(self, generators: Sequence[Perm], elements: FrozenSet[Perm]):
        self.generators = tuple(generators)
        self.elements = elements
        self.degree = generators[0].degree
        self.identity = Perm.identity(self.degree)
        # (k, g) -> cyclic subgroups of order k containing g; lives as long as the group
        self.containing_cache: Dict[Tuple[int, Perm], List[FrozenSet[Perm]]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: Perm) -> bool:
        return item in self.elements

    def __iter__(self):
        return iter(self.sorted_elements)

    def __repr__(self) -> str:
        return f"GroupTable(order={self.order}, degree={self.degree}, generators={len(self.generators)})"

    @cached_property
    def sorted_elements(self) -> List[Perm]:
        """Elements in canonical (lexicographic images) order."""
        return sorted(self.elements)

    @cached_property
    def element_orders(self) -> Dict[Perm, int]:
        return {g: g.order() for g in self.elements}

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    @cached_property
    def center(self) -> FrozenSet[Perm]:
        return frozenset(z for z in self.elements if all(z * g == g * z for g in self.generators))

    def normalized_by(self, c: Perm) -> bool:
        """True iff c G c^-1 = G (checked on generators)."""
        if c.degree != self.degree:
            raise DegreeMismatchError(f"Element of degree {c.degree} against group of degree {self.degree}")
        c_inv = c.inverse()
        return all(c * g * c_inv in self.elements for g in self.generators)

    def is_subgroup_of(self, other: "GroupTable") -> bool:
        return self.degree == other.degree and all(g in other.elements for g in self.generators)

    def is_normal_in(self, other: "GroupTable") -> bool:
        return self.is_subgroup_of(other) and all(self.normalized_by(h) for h in other.generators)


def close_elements(generators: Iterable[Perm], degree: int) -> FrozenSet[Perm]:
    """Breadth-first closure of ``generators`` under right multiplication."""
    gens = list(generators)
    identity = Perm.identity(degree)
    seen: Set[Perm] = {identity}
    frontier = deque([identity])
    while frontier:
        x = frontier.popleft()
        for s in gens:
            y = x * s
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def close_group(generators: Sequence[Perm]) -> GroupTable:
    """
    Build the group generated by ``generators``.

    Args:
        generators: Nonempty list of permutations of a common degree

    Returns:
        GroupTable holding the full closure

    Raises:
        GroupError: If the generator list is empty
        DegreeMismatchError: If degrees differ
    """
    if not generators:
        raise GroupError("Cannot close an empty generator list")
    degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            logger.error(f"Generator {g} has degree {g.degree}, expected {degree}")
            raise DegreeMismatchError(f"Generators of mixed degree {g.degree} and {degree}")
    elements = close_elements(generators, degree)
    logger.debug(f"Closed {len(generators)} generators on {degree} points: order {len(elements)}")
    return GroupTable(generators, elements)


def group_from_strings(cycle_strings: Sequence[str], degree: int) -> GroupTable:
    """Convenience constructor from cycle-notation strings."""
    return close_group([parse_permutation(s, degree) for s in cycle_strings])


def cyclic_subgroup(g: Perm) -> FrozenSet[Perm]:
    powers = [Perm.identity(g.degree)]
    x = g
    while not x.is_identity():
        powers.append(x)
        x = x * g
    return frozenset(powers)


def canonical_generator(subgroup: FrozenSet[Perm]) -> Perm:
    """Least generator of a cyclic subgroup."""
    n = len(subgroup)
    return min(h for h in subgroup if h.order() == n)


def cyclic_subgroups_of_order(G: GroupTable, k: int) -> Set[FrozenSet[Perm]]:
    """All distinct cyclic subgroups <h> of G with order(h) = k."""
    if k < 2:
        raise GroupError(f"Cyclic subgroup order must be at least 2, got {k}")
    orders = G.element_orders
    return {cyclic_subgroup(h) for h in G.elements if orders[h] == k}


def elements_of_order(G: GroupTable, k: int, modulo_inverse: bool = False) -> List[Perm]:
    """
    Elements of order k in canonical order.

    With ``modulo_inverse`` only the lesser of each pair {g, g^-1} is kept;
    self-inverse elements are never halved.
    """
    orders = G.element_orders
    found = [g for g in G.sorted_elements if orders[g] == k]
    if not modulo_inverse:
        return found
    return [g for g in found if g <= g.inverse()]


def right_coset_orbits(S: Iterable[Perm], H: FrozenSet[Perm]) -> List[Perm]:
    """
    One canonical representative per right coset s·H contained in S.

    Raises:
        GroupError: If S is not a union of right cosets of H
    """
    remaining = set(S)
    reps = []
    for s in sorted(remaining):
        if s not in remaining:
            continue
        coset = {s * h for h in H}
        if not coset <= remaining:
            logger.error(f"Set of size {len(remaining)} is not a union of cosets of a subgroup of order {len(H)}")
            raise GroupError("Set is not closed under right multiplication by the subgroup")
        remaining -= coset
        reps.append(s)
    return reps


def direct_product_of_cycles(orders: Sequence[int]) -> GroupTable:
    """The abelian group C_k1 x C_k2 x ... as disjoint cycles on consecutive points."""
    degree = max(2, sum(orders))
    gens = []
    offset = 0
    for k in orders:
        gens.append(Perm.from_cycles([list(range(offset, offset + k))], degree))
        offset += k
    return close_group(gens)
