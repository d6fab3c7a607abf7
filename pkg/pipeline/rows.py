"""
One row of the orbifold table: b2, singularities and derived invariants of
S(G)^[2]_theta for a catalog group and involution class.
"""

import hashlib
import logging
import time
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from catalog.golden import GoldenRow
from catalog.loader import ResolvedEntry
from catalog.models import row_key
from fixedpoints.fixed_sets import FujikiInput
from invariants.rational import format_rational
from invariants.topology import assemble_invariants, betti2
from singularities.census import singularity_profile
from singularities.profile import SingularityProfile
from utils.cache_decorator import cache_computation

logger = logging.getLogger(__name__)


class TableRow(BaseModel):
    """Computed invariants of one orbifold; ``verified`` iff C(c2) is rational."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    group: str
    involution_class: str = ""
    b2: int
    b4: int
    chi: int
    profile: SingularityProfile
    c4: Fraction
    c2_squared: Fraction
    cbar: Optional[Fraction] = None
    cbar_squarefree: Optional[int] = None

    @property
    def key(self) -> str:
        return row_key(self.group, self.involution_class)

    @property
    def verified(self) -> bool:
        return self.cbar is not None

    def cbar_text(self) -> str:
        if self.cbar is not None:
            return format_rational(self.cbar)
        return f"IRRATIONAL(squarefree={self.cbar_squarefree})"

    def to_record(self) -> Dict:
        """Flat record in table column order."""
        p = self.profile
        return {
            "group": self.group, "class": self.involution_class, "b2": self.b2,
            "a2": p.a2, "a3": p.a3, "a4": p.a4, "a6": p.a6, "a8": p.a8, "a12": p.a12,
            "b4sing": p.b4, "b6sing": p.b6, "b4": self.b4, "chi": self.chi,
            "c4": format_rational(self.c4), "c2sq": format_rational(self.c2_squared),
            "cbar": self.cbar_text(), "verified": self.verified,
        }


def profile_cache_key(data: FujikiInput) -> str:
    """Digest of the generators, the involution map and n."""
    h = hashlib.sha256()
    h.update(repr([g.images for g in data.group.generators]).encode())
    h.update(repr(data.theta.signature).encode())
    h.update(str(data.n).encode())
    return h.hexdigest()


@cache_computation(key_func=profile_cache_key)
def census_counts(data: FujikiInput) -> Dict[str, int]:
    return singularity_profile(data).model_dump()


def compute_row(resolved: ResolvedEntry, label: str = "") -> TableRow:
    """
    Compute one table row from scratch.

    Args:
        resolved: Materialized catalog entry
        label: Involution class label

    Returns:
        TableRow with every invariant
    """
    start = time.time()
    name = resolved.entry.name
    data = resolved.fujiki_input(label)
    b2 = betti2(data, resolved.rank)
    profile = SingularityProfile(**census_counts(data))
    inv = assemble_invariants(profile, b2, resolved.group.order)
    row = TableRow(
        group=name, involution_class=label, b2=b2, b4=inv.b4, chi=inv.chi, profile=profile,
        c4=inv.c4, c2_squared=inv.c2_squared, cbar=inv.cbar_c2, cbar_squarefree=inv.cbar_squarefree,
    )
    logger.info(f"Row {row.key} computed in {time.time() - start:.2f}s: b2={b2}, {profile.describe()}")
    return row


def golden_mismatches(row: TableRow, golden: GoldenRow) -> List[str]:
    """Names of the fields where ``row`` differs from the reference."""
    pairs = {
        "b2": (row.b2, golden.b2),
        "profile": (row.profile.key(), golden.profile.key()),
        "b4": (row.b4, golden.b4),
        "chi": (row.chi, golden.chi),
        "c4": (row.c4, golden.c4),
        "c2sq": (row.c2_squared, golden.c2_squared),
        "cbar": (row.cbar, golden.cbar),
    }
    return [name for name, (computed, expected) in pairs.items() if computed != expected]
