"""
Involutive automorphisms of a permutation group.

A ``GroupInvolution`` stores the full element-to-element map together with
where it came from (identity, inversion, conjugation by an ambient element
or a generator family inverted by it).
"""

import logging
from collections import deque
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from errors import GroupError, InvolutionError
from permcore.group import GroupTable, close_elements
from permcore.permutation import Perm, format_cycles, parse_permutation

logger = logging.getLogger(__name__)

IDENTITY = "identity"
INVERSION = "inversion"
CONJUGATION = "conjugation"
GENERATOR_FAMILY = "generator-family"


class InvolutionDescriptor(BaseModel):
    """Serializable provenance of an involution."""

    kind: str
    conjugator: Optional[str] = None
    family: Optional[List[str]] = None


class GroupInvolution:
    """An automorphism theta of G with theta o theta = id."""

    def __init__(self, group: GroupTable, mapping: Dict[Perm, Perm], descriptor: InvolutionDescriptor):
        self.group = group
        self.mapping = mapping
        self.descriptor = descriptor

    def __call__(self, g: Perm) -> Perm:
        return self.mapping[g]

    def __repr__(self) -> str:
        return f"GroupInvolution({self.describe()})"

    def describe(self) -> str:
        d = self.descriptor
        if d.kind == CONJUGATION:
            return f"conjugation by {d.conjugator}"
        if d.kind == GENERATOR_FAMILY:
            return "inverting " + " ".join(d.family or [])
        return d.kind

    @cached_property
    def signature(self) -> Tuple[Tuple[int, ...], ...]:
        """Images of the canonically ordered elements; equal maps share a signature."""
        return tuple(self.mapping[g].images for g in self.group.sorted_elements)

    def same_map(self, other: "GroupInvolution") -> bool:
        return self.signature == other.signature

    @cached_property
    def fixed_inversion_set(self) -> FrozenSet[Perm]:
        """F = {g : theta(g) = g^-1}."""
        return frozenset(g for g, t in self.mapping.items() if t == g.inverse())

    @cached_property
    def is_identity(self) -> bool:
        return all(g == t for g, t in self.mapping.items())

    def check(self) -> None:
        """
        Verify the automorphism and order-2 conditions.

        Raises:
            InvolutionError: If either condition fails
        """
        G = self.group
        if set(self.mapping) != set(G.elements) or set(self.mapping.values()) != set(G.elements):
            raise InvolutionError("Map is not a bijection of the group")
        for a in G.elements:
            ta = self.mapping[a]
            for s in G.generators:
                if self.mapping[a * s] != ta * self.mapping[s]:
                    logger.error(f"Homomorphism check failed for {a} * {s}")
                    raise InvolutionError("Map is not an automorphism")
        for s in G.generators:
            if self.mapping[self.mapping[s]] != s:
                raise InvolutionError("Map does not square to the identity")


def identity_involution(G: GroupTable) -> GroupInvolution:
    return GroupInvolution(G, {g: g for g in G.elements}, InvolutionDescriptor(kind=IDENTITY))


def inversion_automorphism(G: GroupTable) -> GroupInvolution:
    """
    The map g -> g^-1, an automorphism only for abelian G.

    Raises:
        InvolutionError: If G is not abelian
    """
    if not G.is_abelian:
        logger.error(f"Inversion requested on a non-abelian group of order {G.order}")
        raise InvolutionError("Inversion is an automorphism only on abelian groups")
    return GroupInvolution(G, {g: g.inverse() for g in G.elements}, InvolutionDescriptor(kind=INVERSION))


def conjugation_involution(G: GroupTable, c: Perm) -> GroupInvolution:
    """
    theta(g) = c g c^-1 for an ambient element c of order at most 2 normalizing G.

    Raises:
        InvolutionError: If c does not normalize G or c^2 acts nontrivially
    """
    if not G.normalized_by(c):
        raise InvolutionError(f"{c} does not normalize the group")
    c_inv = c.inverse()
    mapping = {g: c * g * c_inv for g in G.elements}
    if any(mapping[mapping[s]] != s for s in G.generators):
        raise InvolutionError(f"Conjugation by {c} is not involutive on the group")
    return GroupInvolution(G, mapping, InvolutionDescriptor(kind=CONJUGATION, conjugator=format_cycles(c)))


def extend_generator_inversion(G: GroupTable, family: Sequence[Perm]) -> Optional[GroupInvolution]:
    """
    Build the automorphism inverting every element of ``family``, if it exists.

    Starting from theta(id) = id and theta(g_i) = g_i^-1, every product
    x * g_i is assigned theta(x) * theta(g_i); a conflicting assignment or a
    non-bijective result means no such involution exists.

    Args:
        G: The group
        family: Generating family of G

    Returns:
        The involution, or None when the assignment is inconsistent

    Raises:
        GroupError: If the family does not generate G
    """
    if any(g not in G for g in family) or len(close_elements(family, G.degree)) != G.order:
        raise GroupError("Family does not generate the group")

    theta = {G.identity: G.identity}
    for g in family:
        if theta.get(g, g.inverse()) != g.inverse():
            return None
        theta[g] = g.inverse()
    queue = deque([G.identity])
    visited = {G.identity}
    while queue:
        x = queue.popleft()
        tx = theta[x]
        for g in family:
            y = x * g
            value = tx * theta[g]
            known = theta.get(y)
            if known is None:
                theta[y] = value
            elif known != value:
                return None
            if y not in visited:
                visited.add(y)
                queue.append(y)

    if len(set(theta.values())) != G.order:
        return None
    if any(theta[theta[g]] != g for g in family):
        return None
    descriptor = InvolutionDescriptor(kind=GENERATOR_FAMILY, family=[format_cycles(g) for g in family])
    return GroupInvolution(G, theta, descriptor)


def is_valid_involution(theta: GroupInvolution) -> bool:
    """True iff the elements inverted by theta generate the whole group."""
    F = theta.fixed_inversion_set
    return len(close_elements(F, theta.group.degree)) == theta.group.order


def inner_conjugator(theta: GroupInvolution) -> Optional[Perm]:
    """Return the least x in G with theta = conjugation by x, if any."""
    G = theta.group
    for x in G.sorted_elements:
        x_inv = x.inverse()
        if all(x * s * x_inv == theta(s) for s in G.generators):
            return x
    return None


def is_inner_involution(theta: GroupInvolution) -> bool:
    """True iff theta is conjugation by an element of its group."""
    return inner_conjugator(theta) is not None


def product_restriction(theta: GroupInvolution, factor: FrozenSet[Perm]) -> bool:
    """True iff theta restricts to inversion on the given (abelian) factor."""
    return all(theta(a) == a.inverse() for a in factor)


def involution_from_descriptor(G: GroupTable, descriptor: InvolutionDescriptor) -> GroupInvolution:
    """Rebuild an involution from its serialized provenance."""
    if descriptor.kind == IDENTITY:
        return identity_involution(G)
    if descriptor.kind == INVERSION:
        return inversion_automorphism(G)
    if descriptor.kind == CONJUGATION and descriptor.conjugator:
        return conjugation_involution(G, parse_permutation(descriptor.conjugator, G.degree))
    if descriptor.kind == GENERATOR_FAMILY and descriptor.family:
        family = [parse_permutation(s, G.degree) for s in descriptor.family]
        theta = extend_generator_inversion(G, family)
        if theta is None:
            raise InvolutionError(f"No involution inverts the family {descriptor.family}")
        return theta
    raise InvolutionError(f"Unknown involution descriptor {descriptor}")
