"""
Reference table of the 36 four-dimensional Fujiki orbifolds.

The table is a regression fixture: the pipeline recomputes every row and
compares, it never reads values from here.
"""

import json
import logging
import os
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict

from catalog.models import row_key
from errors import CatalogError
from invariants.rational import parse_rational
from singularities.profile import SingularityProfile

logger = logging.getLogger(__name__)

GOLDEN_PATH = os.path.join(os.path.dirname(__file__), "data", "golden.json")


class GoldenRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    group: str
    involution_class: str = ""
    b2: int
    profile: SingularityProfile
    b4: int
    chi: int
    c4: Fraction
    c2_squared: Fraction
    cbar: Fraction

    @property
    def key(self) -> str:
        return row_key(self.group, self.involution_class)


@lru_cache(maxsize=4)
def load_golden_rows(path: Optional[str] = None) -> List[GoldenRow]:
    """
    Read the reference table.

    Raises:
        CatalogError: If the file is missing or malformed
    """
    path = path or GOLDEN_PATH
    try:
        with open(path, 'r') as f:
            document = json.load(f)
        rows = []
        for group, label, b2, profile, b4, chi, c4, c2sq, cbar in document["rows"]:
            rows.append(GoldenRow(
                group=group, involution_class=label, b2=b2, profile=SingularityProfile.parse(profile),
                b4=b4, chi=chi, c4=parse_rational(c4), c2_squared=parse_rational(c2sq),
                cbar=parse_rational(cbar),
            ))
    except (OSError, KeyError, ValueError) as e:
        logger.error(f"Error loading reference table {path}: {e}")
        raise CatalogError(f"Cannot read reference table {path}: {e}") from e
    logger.debug(f"Loaded {len(rows)} reference rows from {path}")
    return rows


def golden_by_key(path: Optional[str] = None) -> Dict[str, GoldenRow]:
    return {row.key: row for row in load_golden_rows(path)}
