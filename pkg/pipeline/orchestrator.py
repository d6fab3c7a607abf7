"""
Table orchestration: computes every orbifold row, compares against the
reference table, deduplicates and re-derives involution classes.
"""

import concurrent.futures
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from catalog.dedup import DedupResult, deformation_dedup, headline
from catalog.golden import golden_by_key
from catalog.loader import Catalog, load_catalog
from config import Settings, load_settings
from invariants.series import dimension_six_series
from involutions.enumeration import METHOD_AMBIENT, METHOD_BASES, enumerate_valid_involutions
from involutions.equivalence import InvolutionClass, classify_involutions, classify_with_bridge_search
from pipeline.rows import TableRow, compute_row, golden_mismatches
from utils.cache_decorator import configure_cache

logger = logging.getLogger(__name__)


@dataclass
class TableReport:
    rows: List[TableRow]
    mismatches: Dict[str, List[str]] = field(default_factory=dict)
    dedup: Optional[DedupResult] = None
    dimension_six: List[Dict] = field(default_factory=list)
    golden_checked: bool = False

    @property
    def all_verified(self) -> bool:
        return all(row.verified for row in self.rows)

    @property
    def ok(self) -> bool:
        return self.all_verified and not self.mismatches

    @property
    def headline(self) -> Optional[str]:
        if self.dedup is None:
            return None
        return headline(self.dedup, len(self.dimension_six))


class FujikiTableRunner:
    """
    Computes the orbifold table for a catalog.

    Rows are computed in a thread pool and returned in catalog order, so
    output does not depend on scheduling.
    """

    def __init__(self, catalog: Optional[Catalog] = None, settings: Optional[Settings] = None):
        self.settings = settings or load_settings()
        self.catalog = catalog or load_catalog(self.settings.catalog_path)
        self.cache = configure_cache(self.settings.cache_enabled, self.settings.cache_dir, self.settings.cache_ttl)
        logger.info(f"FujikiTableRunner initialized with {len(self.catalog)} groups, "
                    f"{self.settings.max_workers} workers, cache {'on' if self.cache else 'off'}")

    def compute_row(self, name: str, label: str = "") -> TableRow:
        resolved = self.catalog.resolved(name)
        self.catalog.involution(name, label)
        return compute_row(resolved, label)

    def compute_rows(self, keys: Optional[Sequence[Tuple[str, str]]] = None) -> List[TableRow]:
        """
        Compute rows for the given (group, class) keys, all tabulated ones by default.
        """
        keys = list(keys) if keys is not None else self.catalog.table_keys()
        start_time = time.time()
        logger.info(f"Computing {len(keys)} rows")
        results: Dict[Tuple[str, str], TableRow] = {}
        with concurrent.futures.ThreadPoolExecutor(max_workers=self.settings.max_workers) as executor:
            futures = {executor.submit(self.compute_row, name, label): (name, label) for name, label in keys}
            for future in concurrent.futures.as_completed(futures):
                key = futures[future]
                try:
                    results[key] = future.result()
                except Exception as e:
                    logger.error(f"Row {key} failed: {e}")
                    raise
        logger.info(f"Computed {len(results)} rows in {time.time() - start_time:.2f}s")
        return [results[key] for key in keys]

    def check_golden(self, rows: Sequence[TableRow]) -> Dict[str, List[str]]:
        """Mismatching fields per row key; reference rows never computed count as 'missing'."""
        golden = golden_by_key()
        mismatches: Dict[str, List[str]] = {}
        computed = {row.key for row in rows}
        for row in rows:
            expected = golden.get(row.key)
            if expected is None:
                mismatches[row.key] = ["unexpected"]
                continue
            fields = golden_mismatches(row, expected)
            if fields:
                logger.warning(f"Row {row.key} differs from the reference in {', '.join(fields)}")
                mismatches[row.key] = fields
        for key in golden:
            if key not in computed:
                mismatches[key] = ["missing"]
        return mismatches

    def dedup(self, rows: Sequence[TableRow]) -> DedupResult:
        return deformation_dedup(rows, self.catalog.deformation_facts)

    def run(self, golden: bool = False, dedup: bool = False) -> TableReport:
        rows = self.compute_rows()
        report = TableReport(rows=rows, golden_checked=golden)
        if golden:
            report.mismatches = self.check_golden(rows)
        if dedup:
            report.dedup = self.dedup(rows)
            report.dimension_six = dimension_six_series()
        for row in rows:
            if not row.verified:
                logger.warning(f"Row {row.key} fails verification: squarefree part {row.cbar_squarefree}")
        return report

    def classify(self, name: str, method: Optional[str] = None,
                 bridge: Optional[str] = None) -> List[InvolutionClass]:
        """
        Re-derive the involution classes of a catalog group.

        Without overrides the entry's classification plan is followed: the
        enumeration method, the embedding and ambient group, and either
        fixed bridges or a bridge search. A bridge class count is an upper
        bound; distinct singularities then separate the survivors.

        Args:
            name: Catalog group
            method: Override the enumeration method ("bases" or "ambient")
            bridge: Override the bridges with a single named overgroup
        """
        start_time = time.time()
        plan = self.catalog[name].classification
        G = self.catalog.classification_group(name)
        method = method or plan.method
        if method == METHOD_AMBIENT:
            ambient = self.catalog.overgroup(plan.ambient) if plan.ambient else None
            cands = enumerate_valid_involutions(G, METHOD_AMBIENT, ambient=ambient)
        else:
            cands = enumerate_valid_involutions(G, METHOD_BASES)

        if bridge is not None:
            classes = classify_involutions(cands, [self.catalog.overgroup(bridge)])
        elif plan.search_space:
            space = self.catalog.overgroup(plan.search_space)
            classes = classify_with_bridge_search(cands, space, plan.target_order, plan.require_trivial_center)
        else:
            classes = classify_involutions(cands, [self.catalog.overgroup(b) for b in plan.bridges])
        logger.info(f"{name}: {len(cands)} valid involutions, {len(classes)} classes "
                    f"in {time.time() - start_time:.2f}s")
        return classes
