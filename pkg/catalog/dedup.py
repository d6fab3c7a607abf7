"""
Deformation deduplication of the orbifold table.

Proven equivalences collapse rows onto their first member. Remaining rows
that share b2 and singularities are flagged as candidate couples: nothing
computed here separates them, and nothing proves them equivalent.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from catalog.models import CANDIDATE_EQUIVALENT, PROVEN_EQUIVALENT, DeformationFact

logger = logging.getLogger(__name__)


@dataclass
class DedupResult:
    rows: list
    absorbed: Dict[str, str] = field(default_factory=dict)
    couples: List[DeformationFact] = field(default_factory=list)

    @property
    def lower_bound(self) -> int:
        """Minimum number of deformation classes among the kept rows."""
        return len(self.rows) - sum(len(c.members) - 1 for c in self.couples)


def _fingerprint(row) -> Tuple[int, tuple]:
    return row.b2, row.profile.key()


def deformation_dedup(rows: Sequence, facts: Sequence[DeformationFact]) -> DedupResult:
    """
    Collapse proven-equivalent rows and flag candidate couples.

    Args:
        rows: Objects with ``key``, ``b2`` and ``profile`` attributes, in table order
        facts: Deformation facts; only proven ones collapse rows

    Returns:
        DedupResult with kept rows in their original order
    """
    present = {row.key for row in rows}
    absorbed: Dict[str, str] = {}
    for fact in facts:
        if fact.kind != PROVEN_EQUIVALENT:
            continue
        survivor = fact.members[0]
        for member in fact.members[1:]:
            if member in present:
                absorbed[member] = survivor
                if survivor in present and _fingerprint_of(rows, member) != _fingerprint_of(rows, survivor):
                    logger.warning(f"Proven-equivalent rows {member} and {survivor} have different invariants")

    kept = [row for row in rows if row.key not in absorbed]
    clusters: Dict[Tuple[int, tuple], List[str]] = {}
    for row in kept:
        clusters.setdefault(_fingerprint(row), []).append(row.key)
    couples = [
        DeformationFact(kind=CANDIDATE_EQUIVALENT, members=keys, source="identical b2 and singularities")
        for keys in clusters.values() if len(keys) > 1
    ]
    result = DedupResult(rows=kept, absorbed=absorbed, couples=couples)
    logger.info(f"Dedup: {len(rows)} rows, {len(kept)} kept, {len(couples)} candidate couples, "
                f"at least {result.lower_bound} classes")
    return result


def _fingerprint_of(rows: Sequence, key: str):
    for row in rows:
        if row.key == key:
            return _fingerprint(row)
    return None


def headline(result: DedupResult, dimension_six: int) -> str:
    """``"29 + 4 = 33"`` style summary of the class count."""
    return f"{result.lower_bound} + {dimension_six} = {result.lower_bound + dimension_six}"
