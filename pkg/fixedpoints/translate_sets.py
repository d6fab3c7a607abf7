"""
Translate sets S_{g_i,g_j} and their labelled right cosets.

For g_i, g_j of equal order with <g_i> and <g_j> meeting in <g>,

    S = {s in G : s^-1 theta(g_j) s in {g_i, g_i^-1}}

is a union of right cosets s<g_i>. Each coset carries three labels:

- plus: theta(s a) s a lies in <g> for some a in <g_i>
- commuting: s g s^-1 = theta(g)
- meets_F: s lies in F<g_i>

All three are constant along a coset. The single-element set S_g is the
case g_i = g_j = g.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

from errors import GroupError
from fixedpoints.fixed_sets import FujikiInput, fixed_inversion_set
from permcore.group import GroupTable, canonical_generator, cyclic_subgroup, cyclic_subgroups_of_order, right_coset_orbits
from permcore.permutation import Perm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetLabel:
    rep: Perm
    plus: bool
    commuting: bool
    meets_F: bool


@dataclass
class TranslateSet:
    """Labelled right-coset partition of a translate set."""

    gi: Perm
    gj: Perm
    g: Perm
    size: int
    cosets: List[CosetLabel] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.cosets)

    def count(self, plus: Optional[bool] = None, commuting: Optional[bool] = None,
              meets_F: Optional[bool] = None) -> int:
        """Number of cosets matching every label that is not None."""
        return sum(
            1 for c in self.cosets
            if (plus is None or c.plus == plus)
            and (commuting is None or c.commuting == commuting)
            and (meets_F is None or c.meets_F == meets_F)
        )

    @property
    def minus(self) -> int:
        return self.count(plus=False)


def _subgroups_containing(G: GroupTable, k: int, g: Perm) -> List[FrozenSet[Perm]]:
    key = (k, g)
    found = G.containing_cache.get(key)
    if found is None:
        found = sorted((H for H in cyclic_subgroups_of_order(G, k) if g in H), key=canonical_generator)
        G.containing_cache[key] = found
    return found


def subgroup_multiplicities(G: GroupTable, g: Perm) -> tuple:
    """(k4, k6): numbers of cyclic subgroups of order 4 and 6 containing g."""
    return len(_subgroups_containing(G, 4, g)), len(_subgroups_containing(G, 6, g))


def pair_generators(G: GroupTable, g: Perm, k: int, prefer_greatest: bool = False) -> List[Perm]:
    """
    One generator per cyclic subgroup of order k containing g.

    For an order-3 g inside C6 the generator h with h^2 = g is taken;
    otherwise the lesser (or greater) of {h, h^-1}.
    """
    result = []
    for H in _subgroups_containing(G, k, g):
        gens = sorted(h for h in H if h.order() == k)
        if g.order() == 3 and k == 6:
            result.append(next(h for h in gens if h * h == g))
        else:
            pair = sorted({gens[0], gens[0].inverse()})
            result.append(pair[-1] if prefer_greatest else pair[0])
    return result


def _labels(data: FujikiInput, s: Perm, gi_group: FrozenSet[Perm], g_group: FrozenSet[Perm],
            g: Perm, theta_g: Perm, f_cosets: FrozenSet[Perm]) -> CosetLabel:
    theta = data.theta
    plus = any(theta(s * a) * (s * a) in g_group for a in gi_group)
    commuting = s * g * s.inverse() == theta_g
    return CosetLabel(rep=s, plus=plus, commuting=commuting, meets_F=s in f_cosets)


def build_translate_set(data: FujikiInput, gi: Perm, gj: Perm, g: Optional[Perm] = None) -> TranslateSet:
    """
    Build and label S_{g_i,g_j}.

    Args:
        data: The (G, theta) input
        gi: Element fixing the coset partition
        gj: Element whose image under theta is conjugated
        g: Generator of <g_i> meeting <g_j> (computed when omitted)

    Returns:
        TranslateSet with one CosetLabel per right <g_i>-coset

    Raises:
        GroupError: On unequal orders or a trivial intersection
    """
    key = (gi, gj, g)
    cached = data.translate_cache.get(key)
    if cached is not None:
        return cached

    G = data.group
    if gi.order() != gj.order():
        logger.error(f"Translate set requested for elements of orders {gi.order()} and {gj.order()}")
        raise GroupError("Translate set elements must have the same order")
    gi_group = cyclic_subgroup(gi)
    common = gi_group & cyclic_subgroup(gj)
    if len(common) == 1:
        raise GroupError("Translate set elements generate subgroups with trivial intersection")
    if g is None:
        g = canonical_generator(common)
    g_group = cyclic_subgroup(g)
    if not g_group <= common:
        raise GroupError(f"{g} does not lie in the intersection")

    theta = data.theta
    target = theta(gj)
    allowed = {gi, gi.inverse()}
    S = [s for s in G.sorted_elements if s.inverse() * target * s in allowed]
    f_cosets = frozenset(f * a for f in fixed_inversion_set(data) for a in gi_group)
    theta_g = theta(g)
    cosets = [
        _labels(data, s, gi_group, g_group, g, theta_g, f_cosets)
        for s in right_coset_orbits(S, gi_group)
    ]
    result = TranslateSet(gi=gi, gj=gj, g=g, size=len(S), cosets=cosets)
    data.translate_cache[key] = result
    return result


def labels_well_defined(data: FujikiInput, ts: TranslateSet) -> bool:
    """Recompute every label from every coset member and compare."""
    gi_group = cyclic_subgroup(ts.gi)
    g_group = cyclic_subgroup(ts.g)
    f_cosets = frozenset(f * a for f in fixed_inversion_set(data) for a in gi_group)
    theta_g = data.theta(ts.g)
    for label in ts.cosets:
        for a in gi_group:
            other = _labels(data, label.rep * a, gi_group, g_group, ts.g, theta_g, f_cosets)
            if (other.plus, other.commuting, other.meets_F) != (label.plus, label.commuting, label.meets_F):
                return False
    return True
