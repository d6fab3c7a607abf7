"""Row computation and table orchestration."""

from pipeline.rows import TableRow, compute_row, census_counts, golden_mismatches, profile_cache_key
from pipeline.orchestrator import FujikiTableRunner, TableReport

__all__ = [
    'TableRow', 'compute_row', 'census_counts', 'golden_mismatches', 'profile_cache_key',
    'FujikiTableRunner', 'TableReport',
]
