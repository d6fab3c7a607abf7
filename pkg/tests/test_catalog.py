import json
from types import SimpleNamespace

import pytest

from catalog.dedup import deformation_dedup, headline
from catalog.golden import load_golden_rows
from catalog.loader import load_catalog
from catalog.models import CANDIDATE_EQUIVALENT, PROVEN_EQUIVALENT, DeformationFact, row_key
from catalog.overgroups import (
    FERMAT_GROUP_ORDER,
    fermat_quartic_generators,
    fermat_quartic_group,
)
from errors import CatalogError
from fixedpoints.fixed_sets import fixed_surface_orbit_count
from singularities.profile import SingularityProfile
from tests.test_data import DEDUP_EXPECTED, GOLDEN_ROWS


def c2_entry(**overrides):
    entry = {
        "name": "C2", "small_group_id": [2, 1], "degree": 2, "generators": ["(0,1)"], "abelian": True,
        "involution_classes": [{"descriptor": {"kind": "inversion"}}],
    }
    entry.update(overrides)
    return entry


def write_catalog(tmp_path, entries, **extra):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps({"schema_version": 1, "entries": entries, **extra}))
    return str(path)


def test_builtin_catalog_shape(catalog):
    assert len(catalog) == 34
    assert "C2p2C4" in catalog
    assert catalog["C2p2C4"].xiao_rank == 5
    assert catalog.resolved("C2p2C4").rank == 5
    assert catalog["A33"].class_labels() == ["id", "not-id"]
    assert not catalog["C2p4"].tabulated


def test_table_keys_follow_reference_order(catalog):
    keys = [row_key(name, label) for name, label in catalog.table_keys()]
    assert len(keys) == 36
    assert keys == [row.key for row in GOLDEN_ROWS]


def test_hilbert_square_companion_b2(catalog):
    resolved = catalog.resolved("C2p4")
    assert resolved.rank + fixed_surface_orbit_count(resolved.fujiki_input()) == 23


def test_unknown_names(catalog):
    with pytest.raises(CatalogError):
        catalog.resolved("C5")
    with pytest.raises(CatalogError):
        catalog.involution("C2", "not-id")
    with pytest.raises(CatalogError):
        catalog.overgroup("Nowhere")


def test_minimal_catalog_loads(tmp_path):
    catalog = load_catalog(write_catalog(tmp_path, [c2_entry()]))
    assert len(catalog) == 1
    assert catalog.resolved("C2").rank == 14
    assert catalog.table_keys() == [("C2", "")]


@pytest.mark.parametrize("overrides", [
    {"small_group_id": [3, 1]},
    {"abelian": False},
    {"xiao_rank": 13},
    {"generators": ["(0,2)"]},
    {"involution_classes": [{"descriptor": {"kind": "outer"}}]},
    {"tabulated": False},
    {"classification": {"method": "orbits"}},
    {"classification": {"bridges": ["Nowhere"]}},
])
def test_invalid_entries_are_rejected(tmp_path, overrides):
    with pytest.raises(CatalogError):
        load_catalog(write_catalog(tmp_path, [c2_entry(**overrides)]))


def test_invalid_documents_are_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(CatalogError):
        load_catalog(str(bad))
    with pytest.raises(CatalogError):
        load_catalog(str(tmp_path / "missing.json"))
    path = tmp_path / "v2.json"
    path.write_text(json.dumps({"schema_version": 2, "entries": [c2_entry()]}))
    with pytest.raises(CatalogError):
        load_catalog(str(path))
    with pytest.raises(CatalogError):
        load_catalog(write_catalog(tmp_path, [c2_entry(), c2_entry()]))


def test_reference_b2_mismatch_is_rejected(tmp_path):
    entry = c2_entry(small_group_id=[3, 1], generators=["(0,1,2)"], degree=3, name="C3")
    catalog = load_catalog(write_catalog(tmp_path, [entry]))
    assert catalog.resolved("C3").rank == 10

    # a C2 stored under the C2p2 name disagrees with the reference b2
    path = write_catalog(tmp_path, [c2_entry(name="C2p2")])
    with pytest.raises(CatalogError):
        load_catalog(path)
    assert len(load_catalog(path, check_golden=False)) == 1


def test_golden_rows():
    rows = load_golden_rows()
    assert len(rows) == 36
    keys = [row.key for row in rows]
    assert "A33:id" in keys
    assert "C2p4" not in keys
    assert rows[0].profile == SingularityProfile(a2=28)


def test_dedup_of_reference_table(catalog):
    result = deformation_dedup(GOLDEN_ROWS, catalog.deformation_facts)
    assert len(result.rows) == DEDUP_EXPECTED["rows"]
    assert result.absorbed == DEDUP_EXPECTED["absorbed"]
    assert [c.members for c in result.couples] == DEDUP_EXPECTED["couples"]
    assert all(c.kind == CANDIDATE_EQUIVALENT for c in result.couples)
    assert result.lower_bound == DEDUP_EXPECTED["lower_bound"]
    assert headline(result, 4) == DEDUP_EXPECTED["headline"]


def test_dedup_keeps_first_member():
    profile = SingularityProfile(a2=1)
    rows = [SimpleNamespace(key=k, b2=3, profile=profile) for k in ("A", "B", "C")]
    facts = [DeformationFact(kind=PROVEN_EQUIVALENT, members=["B", "C"])]
    result = deformation_dedup(rows, facts)
    assert [r.key for r in result.rows] == ["A", "B"]
    assert result.absorbed == {"C": "B"}
    assert [c.members for c in result.couples] == [["A", "B"]]
    assert result.lower_bound == 1


def test_fermat_generators():
    gens = fermat_quartic_generators()
    assert sorted(gens) == ["t1", "t2", "t3", "u", "v", "w"]
    assert all(g.degree == 64 for g in gens.values())
    assert gens["u"].order() == 4
    assert gens["t1"].order() == 2


@pytest.mark.slow
def test_fermat_group_contains_the_64_point_embedding(catalog):
    assert fermat_quartic_group().order == FERMAT_GROUP_ORDER
    H = catalog.embedding("C4p2C3@64")
    assert H.order == 48
    assert H.degree == 64
    assert H.is_subgroup_of(catalog.overgroup("Ftilde"))


def test_declared_overgroups_and_embeddings(catalog):
    assert catalog.overgroup("AutA33").order == 432
    assert catalog.embedding("C2p2wrC2@C2p4C6").order == 32
    assert catalog.overgroup("C2p4C6@8").order == 96
    assert catalog.classification_group("C2p2wrC2").degree == 8


@pytest.mark.slow
def test_symmetric_normalizer(catalog):
    N = catalog.overgroup("N576")
    assert N.order == 576
    assert catalog.group("C2p4S3").is_normal_in(N)


def test_overgroup_and_embedding_names_do_not_collide(tmp_path):
    shared = "C2@2"
    path = write_catalog(
        tmp_path, [c2_entry()],
        overgroups=[{"name": shared, "degree": 4, "generators": ["(0,1)", "(2,3)"], "contains": ["C2"]}],
        embeddings=[{"name": shared, "group": "C2", "degree": 2, "generators": ["(0,1)"]}],
    )
    custom = load_catalog(path, check_golden=False)
    assert custom.embedding(shared).order == 2
    assert custom.overgroup(shared).order == 4
    assert custom.embedding(shared).degree == 2
