"""Schema of the group catalog document."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from involutions.involution import InvolutionDescriptor

SCHEMA_VERSION = 1

PROVEN_EQUIVALENT = "proven-equivalent"
CANDIDATE_EQUIVALENT = "candidate-equivalent"


def row_key(group: str, label: str = "") -> str:
    """``group`` for single-class groups, ``group:label`` otherwise."""
    return f"{group}:{label}" if label else group


class InvolutionClassEntry(BaseModel):
    label: str = Field(default="", description="Class label, empty when the group has a single class")
    descriptor: InvolutionDescriptor = Field(description="How to rebuild the class representative")


class ClassificationPlan(BaseModel):
    """How the involution classes of an entry are re-derived."""

    method: str = Field(default="bases", description="'bases' or 'ambient'")
    embedding: Optional[str] = Field(default=None, description="Alternative embedding to classify on")
    ambient: Optional[str] = Field(default=None, description="Overgroup scanned by the ambient method")
    bridges: List[str] = Field(default_factory=list, description="Overgroups tried as equivalence bridges")
    search_space: Optional[str] = Field(default=None, description="Overgroup searched for bridges <G, h>")
    target_order: Optional[int] = None
    require_trivial_center: bool = False


class CatalogEntry(BaseModel):
    """One admissible group with its embedding and involution classes."""

    name: str = Field(description="Short ASCII name, e.g. 'C2p2C4'")
    display: str = Field(default="", description="Conventional mathematical name")
    small_group_id: Tuple[int, int] = Field(description="(order, index) in the small groups library")
    degree: int = Field(ge=1, description="Number of points of the permutation embedding")
    generators: List[str] = Field(min_length=1, description="Cycle-notation generators")
    xiao_rank: Optional[int] = Field(default=None, description="Stored rank of H^2(S)^G; computed when absent")
    abelian: bool = False
    admissible: bool = True
    tabulated: bool = Field(default=True, description="False when the orbifold is excluded from the table")
    involution_classes: List[InvolutionClassEntry] = Field(min_length=1)
    classification: ClassificationPlan = Field(default_factory=ClassificationPlan)
    notes: List[str] = Field(default_factory=list)

    @property
    def order(self) -> int:
        return self.small_group_id[0]

    def class_labels(self) -> List[str]:
        return [c.label for c in self.involution_classes]

    def row_keys(self) -> List[str]:
        return [row_key(self.name, c.label) for c in self.involution_classes]


class DeformationFact(BaseModel):
    """
    Orbifolds known (or suspected) to be deformation equivalent.

    For proven facts the first member is the one kept in a deduplicated
    table; members may name orbifolds outside the catalog such as ``S[2]``.
    """

    kind: str = Field(description="'proven-equivalent' or 'candidate-equivalent'")
    members: List[str] = Field(min_length=2, description="Row keys, first member kept")
    source: str = ""


class OvergroupSpec(BaseModel):
    """A permutation group containing some catalog group, used as a bridge or search space."""

    name: str
    degree: int = Field(ge=1)
    generators: List[str] = Field(min_length=1)
    expected_order: Optional[int] = None
    contains: List[str] = Field(default_factory=list, description="Embeddings normalized by this group")
    notes: List[str] = Field(default_factory=list)


class EmbeddingSpec(BaseModel):
    """An alternative permutation embedding of a catalog group."""

    name: str
    group: str = Field(description="Catalog entry this embeds")
    degree: int = Field(ge=1)
    generators: List[str] = Field(min_length=1)
    notes: List[str] = Field(default_factory=list)


class CatalogDocument(BaseModel):
    schema_version: int
    entries: List[CatalogEntry]
    overgroups: List[OvergroupSpec] = Field(default_factory=list)
    embeddings: List[EmbeddingSpec] = Field(default_factory=list)
    deformation_facts: List[DeformationFact] = Field(default_factory=list)
