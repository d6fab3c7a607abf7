"""
Loading and validation of the group catalog.

Every entry is checked when the catalog loads: the generators must close
to the advertised order, each stored involution must be a valid
involution, a stored invariant-lattice rank must agree with the trace
formula, and rank + #(F/G) must reproduce the reference b2.
"""

import json
import logging
import os
import threading
import time
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from catalog.golden import golden_by_key
from catalog.models import PROVEN_EQUIVALENT, CANDIDATE_EQUIVALENT, SCHEMA_VERSION, CatalogDocument, CatalogEntry, row_key
from catalog.overgroups import (
    CODE_BUILT_OVERGROUPS,
    FERMAT_GROUP,
    SYMMETRIC_NORMALIZER,
    SYMMETRIC_NORMALIZER_OF,
    SYMMETRIC_NORMALIZER_ORDER,
    build_overgroup,
    fermat_quartic_group,
    symmetric_normalizer,
)
from errors import CatalogError, FujikiError
from fixedpoints.fixed_sets import FujikiInput, fixed_surface_orbit_count
from invariants.fujiki import xiao_rank
from involutions.involution import GroupInvolution, involution_from_descriptor, is_valid_involution
from permcore.group import GroupTable, close_group
from permcore.permutation import parse_permutation

logger = logging.getLogger(__name__)

CATALOG_PATH = os.path.join(os.path.dirname(__file__), "data", "catalog.json")


@dataclass
class ResolvedEntry:
    """A catalog entry with its group and involutions materialized."""

    entry: CatalogEntry
    group: GroupTable
    rank: int
    involutions: Dict[str, GroupInvolution] = field(default_factory=dict)

    def fujiki_input(self, label: str = "", n: int = 2) -> FujikiInput:
        return FujikiInput(self.group, self.involutions[label], n=n, admissible=self.entry.admissible)


class Catalog:
    """
    Validated catalog. Read-only after load; overgroups and alternative
    embeddings are closed on first use.
    """

    def __init__(self, document: CatalogDocument, resolved: Dict[str, ResolvedEntry], source: str):
        self.document = document
        self.source = source
        self._resolved = resolved
        self._overgroup_specs = {spec.name: spec for spec in document.overgroups}
        self._embedding_specs = {spec.name: spec for spec in document.embeddings}
        self._overgroups: Dict[str, GroupTable] = {}
        self._embeddings: Dict[str, GroupTable] = {}
        self._lock = threading.RLock()

    @property
    def entries(self) -> List[CatalogEntry]:
        return self.document.entries

    @property
    def deformation_facts(self):
        return self.document.deformation_facts

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.document.entries)

    def __len__(self) -> int:
        return len(self.document.entries)

    def __contains__(self, name: str) -> bool:
        return name in self._resolved

    def __getitem__(self, name: str) -> CatalogEntry:
        return self.resolved(name).entry

    def resolved(self, name: str) -> ResolvedEntry:
        try:
            return self._resolved[name]
        except KeyError:
            raise CatalogError(f"Unknown group {name!r}") from None

    def group(self, name: str) -> GroupTable:
        return self.resolved(name).group

    def involution(self, name: str, label: str = "") -> GroupInvolution:
        resolved = self.resolved(name)
        if label not in resolved.involutions:
            raise CatalogError(f"Group {name} has no involution class {label!r}; "
                               f"known: {sorted(resolved.involutions)}")
        return resolved.involutions[label]

    def table_keys(self) -> List[Tuple[str, str]]:
        """(group, class label) of every tabulated orbifold, in catalog order."""
        return [(e.name, c.label) for e in self.entries if e.tabulated for c in e.involution_classes]

    def overgroup_names(self) -> List[str]:
        return list(self._overgroup_specs) + list(CODE_BUILT_OVERGROUPS)

    def embedding_names(self) -> List[str]:
        return list(self._embedding_specs)

    def overgroup(self, name: str) -> GroupTable:
        with self._lock:
            if name not in self._overgroups:
                self._overgroups[name] = self._build_overgroup(name)
            return self._overgroups[name]

    def embedding(self, name: str) -> GroupTable:
        with self._lock:
            if name not in self._embeddings:
                self._embeddings[name] = self._build_embedding(name)
            return self._embeddings[name]

    def _build_overgroup(self, name: str) -> GroupTable:
        start = time.time()
        if name == FERMAT_GROUP:
            group = fermat_quartic_group()
        elif name == SYMMETRIC_NORMALIZER:
            group = symmetric_normalizer(self.group(SYMMETRIC_NORMALIZER_OF))
            if group.order != SYMMETRIC_NORMALIZER_ORDER:
                raise CatalogError(f"Normalizer has order {group.order}, expected {SYMMETRIC_NORMALIZER_ORDER}")
        elif name in self._overgroup_specs:
            group = build_overgroup(self._overgroup_specs[name])
        else:
            raise CatalogError(f"Unknown overgroup {name!r}")
        logger.info(f"Built overgroup {name} of order {group.order} in {time.time() - start:.2f}s")
        return group

    def _build_embedding(self, name: str) -> GroupTable:
        if name in self._embedding_specs:
            spec = self._embedding_specs[name]
            group = close_group([parse_permutation(s, spec.degree) for s in spec.generators])
            target = spec.group
        else:
            raise CatalogError(f"Unknown embedding {name!r}")
        expected = self[target].order
        if group.order != expected:
            logger.error(f"Embedding {name} closed to order {group.order}, expected {expected}")
            raise CatalogError(f"Embedding {name} has order {group.order}, expected {expected}")
        return group

    def classification_group(self, name: str) -> GroupTable:
        """The embedding on which the classes of ``name`` are re-derived."""
        plan = self[name].classification
        return self.embedding(plan.embedding) if plan.embedding else self.group(name)


def _resolve_entry(entry: CatalogEntry) -> ResolvedEntry:
    try:
        gens = [parse_permutation(s, entry.degree) for s in entry.generators]
    except FujikiError as e:
        raise CatalogError(f"Entry {entry.name}: {e}") from e
    group = close_group(gens)
    if group.order != entry.order:
        logger.error(f"Entry {entry.name} closed to order {group.order}, expected {entry.order}")
        raise CatalogError(f"Entry {entry.name} generates a group of order {group.order}, not {entry.order}")
    if entry.abelian != group.is_abelian:
        raise CatalogError(f"Entry {entry.name} abelian flag disagrees with its group")

    rank = xiao_rank(group)
    if entry.xiao_rank is not None and entry.xiao_rank != rank:
        logger.error(f"Entry {entry.name}: stored rank {entry.xiao_rank}, trace formula gives {rank}")
        raise CatalogError(f"Entry {entry.name} stores rank {entry.xiao_rank} but the trace formula gives {rank}")

    labels = entry.class_labels()
    if len(set(labels)) != len(labels):
        raise CatalogError(f"Entry {entry.name} repeats an involution class label")
    involutions = {}
    for cls in entry.involution_classes:
        try:
            theta = involution_from_descriptor(group, cls.descriptor)
            theta.check()
        except FujikiError as e:
            raise CatalogError(f"Entry {entry.name} class {cls.label!r}: {e}") from e
        if not is_valid_involution(theta):
            raise CatalogError(f"Entry {entry.name} class {cls.label!r} is not a valid involution")
        involutions[cls.label] = theta
    return ResolvedEntry(entry=entry, group=group, rank=rank, involutions=involutions)


def _check_references(document: CatalogDocument, names: List[str]) -> None:
    known_groups = set(names)
    overgroups = {spec.name for spec in document.overgroups} | set(CODE_BUILT_OVERGROUPS)
    embeddings = {spec.name for spec in document.embeddings}
    for spec in document.embeddings:
        if spec.group not in known_groups:
            raise CatalogError(f"Embedding {spec.name} refers to unknown group {spec.group}")
    for entry in document.entries:
        plan = entry.classification
        if plan.method not in ("bases", "ambient"):
            raise CatalogError(f"Entry {entry.name} has unknown classification method {plan.method!r}")
        if plan.embedding and plan.embedding not in embeddings:
            raise CatalogError(f"Entry {entry.name} refers to unknown embedding {plan.embedding}")
        for name in [plan.ambient, plan.search_space, *plan.bridges]:
            if name and name not in overgroups:
                raise CatalogError(f"Entry {entry.name} refers to unknown overgroup {name}")
        if plan.search_space and not plan.target_order:
            raise CatalogError(f"Entry {entry.name} has a bridge search without a target order")


def _check_facts(document: CatalogDocument, resolved: Dict[str, ResolvedEntry]) -> None:
    absorbed = set()
    for fact in document.deformation_facts:
        if fact.kind not in (PROVEN_EQUIVALENT, CANDIDATE_EQUIVALENT):
            raise CatalogError(f"Unknown deformation fact kind {fact.kind!r}")
        for member in fact.members:
            group, _, label = member.partition(":")
            if group in resolved and label not in resolved[group].involutions:
                raise CatalogError(f"Deformation fact names unknown class {member}")
        if fact.kind == PROVEN_EQUIVALENT:
            absorbed.update(fact.members[1:])
    for entry in document.entries:
        if not entry.tabulated and not set(entry.row_keys()) <= absorbed:
            raise CatalogError(f"Entry {entry.name} is excluded from the table without a proven equivalence")


def _check_against_golden(resolved: Dict[str, ResolvedEntry]) -> None:
    """rank + #(F/G) must equal the reference b2 for every tabulated class."""
    golden = golden_by_key()
    for name, res in resolved.items():
        for label, theta in res.involutions.items():
            row = golden.get(row_key(name, label))
            if row is None:
                continue
            b2 = res.rank + fixed_surface_orbit_count(FujikiInput(res.group, theta))
            if b2 != row.b2:
                logger.error(f"{row.key}: rank {res.rank} + orbit count gives b2 = {b2}, reference {row.b2}")
                raise CatalogError(f"Entry {row.key} is inconsistent with the reference b2 = {row.b2}")


def load_catalog(path: Optional[str] = None, check_golden: bool = True) -> Catalog:
    """
    Load and validate a catalog document.

    Args:
        path: JSON catalog file; the built-in catalog when omitted
        check_golden: Cross-check b2 against the reference table

    Returns:
        Validated Catalog

    Raises:
        CatalogError: On schema violations or failed invariants
    """
    path = path or CATALOG_PATH
    start = time.time()
    try:
        with open(path, 'r') as f:
            raw = json.load(f)
        document = CatalogDocument.model_validate(raw)
    except (OSError, ValueError) as e:
        logger.error(f"Error loading catalog {path}: {e}")
        raise CatalogError(f"Cannot load catalog {path}: {e}") from e

    if document.schema_version != SCHEMA_VERSION:
        raise CatalogError(f"Unsupported catalog schema version {document.schema_version}")
    names = [e.name for e in document.entries]
    if len(set(names)) != len(names):
        raise CatalogError("Catalog repeats a group name")

    resolved = {entry.name: _resolve_entry(entry) for entry in document.entries}
    _check_references(document, names)
    _check_facts(document, resolved)
    if check_golden:
        _check_against_golden(resolved)

    logger.info(f"Loaded {len(resolved)} catalog entries from {path} in {time.time() - start:.2f}s")
    return Catalog(document, resolved, path)
