"""Curated admissible groups, overgroups, deformation facts and the reference table."""

from catalog.models import (
    SCHEMA_VERSION,
    PROVEN_EQUIVALENT,
    CANDIDATE_EQUIVALENT,
    row_key,
    InvolutionClassEntry,
    ClassificationPlan,
    CatalogEntry,
    DeformationFact,
    OvergroupSpec,
    EmbeddingSpec,
    CatalogDocument,
)
from catalog.golden import GoldenRow, load_golden_rows, golden_by_key
from catalog.overgroups import (
    fermat_quartic_generators,
    fermat_quartic_group,
    symmetric_normalizer,
    builtin_overgroups,
)
from catalog.loader import Catalog, ResolvedEntry, load_catalog
from catalog.dedup import DedupResult, deformation_dedup, headline

__all__ = [
    'SCHEMA_VERSION', 'PROVEN_EQUIVALENT', 'CANDIDATE_EQUIVALENT', 'row_key',
    'InvolutionClassEntry', 'ClassificationPlan', 'CatalogEntry', 'DeformationFact',
    'OvergroupSpec', 'EmbeddingSpec', 'CatalogDocument', 'GoldenRow', 'load_golden_rows',
    'golden_by_key', 'fermat_quartic_generators', 'fermat_quartic_group',
    'symmetric_normalizer', 'builtin_overgroups', 'Catalog', 'ResolvedEntry', 'load_catalog',
    'DedupResult', 'deformation_dedup', 'headline',
]
