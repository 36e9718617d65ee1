import pytest

from spinr.abelian import FgAbGroup
from spinr.catalog import loads
from spinr.catalogfile import CatalogParseError
from spinr.liecat import NotInCatalogError, SimpleIdeal, so_group, so_pi1

MINIMAL = """
catalog_version: 1

group {
  name: "SO(4)"
  pi1 {
    free_rank: 0
    torsion: [2]
    generators: ["alpha"]
  }
  algebra {
    center_rank: 0
    ideal {
      kind: "so(3)"
      dim: 3
      min_orth_rep: 3
      provenance: "adjoint"
    }
    ideal {
      kind: "so(3)"
      dim: 3
      min_orth_rep: 3
      provenance: "adjoint"
    }
  }
  connected: true
  provenance: "standard"
}
"""


def test_so_pi1_formula():
    assert so_pi1(1).is_trivial()
    assert so_pi1(2) == FgAbGroup(1, ())
    for k in range(3, 12):
        assert so_pi1(k) == FgAbGroup(0, (2,))
    with pytest.raises(ValueError):
        so_pi1(0)


def test_so_group_algebra_profiles():
    assert so_group(1).algebra.dim == 0
    assert so_group(2).algebra.center_rank == 1
    g4 = so_group(4)
    assert [i.kind for i in g4.algebra.ideals] == ["so(3)", "so(3)"]
    for k in range(1, 13):
        assert so_group(k).algebra.dim == k * (k - 1) // 2
        assert so_group(k).connected
        assert so_group(k).provenance


def test_so_ideal_min_orth_constraint():
    assert so_group(3).algebra.ideals[0].min_orth_rep_dim == 3
    for k in range(5, 13):
        assert so_group(k).algebra.ideals[0].min_orth_rep_dim == k


def test_simple_ideal_invariants():
    with pytest.raises(ValueError):
        SimpleIdeal("tiny", 2, 3)
    with pytest.raises(ValueError):
        SimpleIdeal("weird", 3, 1)


def test_minimal_catalog_loads():
    cat = loads(MINIMAL)
    rec = cat.lookup("SO(4)")
    assert rec.pi1 == FgAbGroup(0, (2,))
    assert rec.algebra.dim == 6


def test_lookup_unknown_group_lists_available():
    cat = loads(MINIMAL)
    with pytest.raises(NotInCatalogError) as err:
        cat.lookup("E8")
    assert "SO(4)" in str(err.value)


def test_loader_rejects_wrong_so_pi1():
    bad = MINIMAL.replace("torsion: [2]", "torsion: [4]")
    with pytest.raises(CatalogParseError) as err:
        loads(bad)
    assert "pi1" in str(err.value)


def test_loader_rejects_wrong_so_ideal_data():
    bad = MINIMAL.replace("min_orth_rep: 3", "min_orth_rep: 2", 1)
    with pytest.raises(CatalogParseError):
        loads(bad)


def test_loader_rejects_missing_provenance():
    bad = MINIMAL.replace('provenance: "standard"', 'provenance: ""')
    with pytest.raises(CatalogParseError):
        loads(bad)


def test_loader_rejects_duplicate_group():
    bad = MINIMAL + MINIMAL.split("catalog_version: 1", 1)[1]
    with pytest.raises(CatalogParseError) as err:
        loads(bad)
    assert "duplicate" in str(err.value)


def test_loader_rejects_missing_version():
    with pytest.raises(CatalogParseError):
        loads("group {\n  name: \"X\"\n}\n".replace("group", "holonomy"))


def test_loader_rejects_unknown_record_type():
    with pytest.raises(CatalogParseError) as err:
        loads("catalog_version: 1\nwidget {\n  a: 1\n}\n")
    assert "widget" in str(err.value)


# --- bundled catalog sanity ---------------------------------------------------

def test_bundled_groups_match_formulas(catalog):
    for k in range(1, 13):
        rec = catalog.lookup(f"SO({k})")
        ref = so_group(k)
        assert rec.pi1 == ref.pi1
        assert rec.pi1.labels == ref.pi1.labels
        assert rec.algebra == ref.algebra


def test_bundled_records_connected_with_provenance(catalog):
    for rec in catalog.groups.values():
        assert rec.connected
        assert rec.provenance.strip()


def test_bundled_pi1_values(catalog):
    assert catalog.lookup("SU(4)").pi1.is_trivial()
    assert catalog.lookup("SO(2)").pi1 == FgAbGroup(1, ())
    assert catalog.lookup("U(3)").pi1 == FgAbGroup(1, ())
    assert catalog.lookup("Sp(2)·Sp(1)").pi1 == FgAbGroup(0, (2,))
    assert catalog.lookup("Sp(2)·U(1)").pi1 == FgAbGroup(1, ())
    assert catalog.lookup("G2").pi1.is_trivial()
    assert catalog.lookup("Spin(7)").pi1.is_trivial()


def test_name_normalisation_accepts_ascii_dot(catalog):
    assert catalog.lookup("Sp(2).Sp(1)").name == "Sp(2)·Sp(1)"


def test_algebra_dimensions(catalog):
    assert catalog.lookup("U(3)").algebra.dim == 9
    assert catalog.lookup("SU(3)").algebra.dim == 8
    assert catalog.lookup("Sp(2)").algebra.dim == 10
    assert catalog.lookup("G2").algebra.dim == 14
    assert catalog.lookup("Spin(9)").algebra.dim == 36
