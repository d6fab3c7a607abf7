"""
Equivalence of valid involutions through bridge overgroups.

theta_1 and theta_2 on G are equivalent when some h_1, h_2 in an overgroup
normalizing G satisfy

    theta_2(h_1 g h_1^-1) = h_2 theta_1(g) h_2^-1    for all g in G,
    h_1 h_2^-1 in G  and  theta_2(h_1 h_2^-1) = (h_1 h_2^-1)^-1.

A witness proves equivalence. Failing to find one proves nothing.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from errors import DegreeMismatchError, GroupError
from involutions.involution import GroupInvolution
from permcore.group import GroupTable, close_elements, close_group
from permcore.permutation import Perm

logger = logging.getLogger(__name__)

Witness = Tuple[Perm, Perm]


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in items}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass
class InvolutionClass:
    """An equivalence class of involutions with its canonical representative."""

    representative: GroupInvolution
    members: List[GroupInvolution] = field(default_factory=list)

    @property
    def contains_identity(self) -> bool:
        return any(m.is_identity for m in self.members)


def _normalizing_elements(G: GroupTable, bridge: GroupTable) -> List[Perm]:
    return [h for h in bridge.sorted_elements if G.normalized_by(h)]


def are_equivalent(theta1: GroupInvolution, theta2: GroupInvolution, bridge: GroupTable) -> Optional[Witness]:
    """
    Search a witness (h_1, h_2) that theta1 and theta2 are equivalent.

    u = h_1 h_2^-1 runs over the elements of G inverted by theta2, then h_2
    over the elements of ``bridge`` normalizing G, both in canonical order.

    Args:
        theta1: First involution
        theta2: Second involution, on the same group
        bridge: Overgroup containing G

    Returns:
        (h_1, h_2) or None when the search is exhausted

    Raises:
        DegreeMismatchError: If the bridge acts on a different number of points
        GroupError: If the bridge does not contain G
    """
    G = theta1.group
    if bridge.degree != G.degree:
        raise DegreeMismatchError(f"Bridge acts on {bridge.degree} points, group on {G.degree}")
    if not G.is_subgroup_of(bridge):
        logger.error(f"Bridge of order {bridge.order} does not contain the group of order {G.order}")
        raise GroupError("Bridge does not contain the group")

    gens = G.generators
    h2_candidates = _normalizing_elements(G, bridge)
    targets = {h2: [h2 * theta1(g) * h2.inverse() for g in gens] for h2 in h2_candidates}
    for u in sorted(theta2.fixed_inversion_set):
        for h2 in h2_candidates:
            h1 = u * h2
            h1_inv = h1.inverse()
            if all(theta2(h1 * g * h1_inv) == t for g, t in zip(gens, targets[h2])):
                return h1, h2
    return None


def inner_class_witness(f1: Perm, f2: Perm) -> Witness:
    """Witness (id, f2 f1) that conjugations by f1 and f2 in G are equivalent."""
    return Perm.identity(f1.degree), f2 * f1


def _build_classes(cands: Sequence[GroupInvolution], uf: UnionFind) -> List[InvolutionClass]:
    groups: Dict[int, List[GroupInvolution]] = {}
    for i, theta in enumerate(cands):
        groups.setdefault(uf.find(i), []).append(theta)
    classes = []
    for members in groups.values():
        members = sorted(members, key=lambda t: t.signature)
        classes.append(InvolutionClass(representative=members[0], members=members))
    return sorted(classes, key=lambda c: c.representative.signature)


def classify_involutions(cands: Sequence[GroupInvolution],
                         bridges: Sequence[GroupTable] = ()) -> List[InvolutionClass]:
    """
    Group candidates into classes connected by equivalence witnesses.

    G itself is always tried as a bridge, before the supplied ones.
    """
    if not cands:
        return []
    G = cands[0].group
    if any(theta.group is not G and theta.group.elements != G.elements for theta in cands):
        raise GroupError("Candidates live on different groups")
    start = time.time()
    all_bridges = [G] + [b for b in bridges if b.elements != G.elements]
    uf = UnionFind(range(len(cands)))
    for i in range(len(cands)):
        for j in range(i + 1, len(cands)):
            if uf.find(i) == uf.find(j):
                continue
            for bridge in all_bridges:
                if are_equivalent(cands[i], cands[j], bridge) is not None:
                    uf.union(i, j)
                    break
    classes = _build_classes(cands, uf)
    logger.info(f"Classified {len(cands)} involutions into {len(classes)} classes "
                f"with {len(all_bridges)} bridges in {time.time() - start:.2f}s")
    return classes


def overgroup_bridge_search(G: GroupTable, H: GroupTable, theta1: GroupInvolution, theta2: GroupInvolution,
                            target_order: int, require_trivial_center: bool = False) -> Optional[Perm]:
    """
    Find h in H such that <G, h> has the target order, normalizes G and
    carries an equivalence witness between theta1 and theta2.

    Args:
        G: The group
        H: Search space containing G
        theta1: First involution
        theta2: Second involution
        target_order: Required order of <G, h>
        require_trivial_center: Only accept bridges with trivial center

    Returns:
        The least such h, or None
    """
    if not G.is_subgroup_of(H):
        raise GroupError("Search space does not contain the group")
    tried = set()
    for h in H.sorted_elements:
        if not G.normalized_by(h):
            continue
        elements = close_elements(G.generators + (h,), G.degree)
        if len(elements) != target_order or elements in tried:
            continue
        tried.add(elements)
        K = close_group(list(G.generators) + [h])
        if require_trivial_center and len(K.center) > 1:
            continue
        if are_equivalent(theta1, theta2, K) is not None:
            logger.debug(f"Bridge element {h} of order {target_order} links the involutions")
            return h
    return None


def classify_with_bridge_search(cands: Sequence[GroupInvolution], search_space: GroupTable, target_order: int,
                                require_trivial_center: bool = False) -> List[InvolutionClass]:
    """
    Classify with G as bridge, then merge remaining classes through
    bridges <G, h> found by ``overgroup_bridge_search``.
    """
    classes = classify_involutions(cands)
    if len(classes) <= 1:
        return classes
    G = cands[0].group
    index = {theta.signature: i for i, theta in enumerate(cands)}
    uf = UnionFind(range(len(cands)))
    for cls in classes:
        for member in cls.members:
            uf.union(index[cls.representative.signature], index[member.signature])
    reps = [cls.representative for cls in classes]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            a, b = index[reps[i].signature], index[reps[j].signature]
            if uf.find(a) == uf.find(b):
                continue
            if overgroup_bridge_search(G, search_space, reps[i], reps[j], target_order,
                                       require_trivial_center) is not None:
                uf.union(a, b)
    merged = _build_classes(cands, uf)
    logger.info(f"Bridge search reduced {len(classes)} classes to {len(merged)}")
    return merged
