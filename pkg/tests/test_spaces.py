import pytest

from spinr.catalog import loads
from spinr.lifting import LiftQuery, induce, lifts
from spinr.repcat import enumerate_homs
from spinr.spaces import (
    DIAGONAL_FAMILY_NAME,
    HypothesisError,
    canonical_structure,
    classify,
    holonomy_lift,
    invariant_spin_type,
    parity_nonzero,
)


# --- classify -------------------------------------------------------------------

def test_classify_four_sphere_quaternionic(catalog):
    c = classify(catalog, catalog.space("S4:SO(5)"), 3)
    assert len(c.classes) == 2
    assert c.count == 2
    assert c.complete
    labels = {cl.label for cl in c.classes}
    assert labels == {"factor1", "factor2"}


def test_classify_sp_sp_sphere_unique(catalog):
    c = classify(catalog, catalog.space("S11:Sp(3)·Sp(1)"), 3)
    assert c.count == 1
    assert c.complete


def test_classify_two_sphere_infinite_odd_family(catalog):
    c = classify(catalog, catalog.space("S2:SO(3)"), 2)
    assert c.count is None
    (cl,) = c.classes
    assert str(cl.constraint) == "s odd"
    assert c.complete


def test_classify_su_sphere_unique_untwisted(catalog):
    c = classify(catalog, catalog.space("S5:SU(3)"), 1)
    assert c.count == 1
    (cl,) = c.classes
    assert cl.family == "trivial"


def test_classify_u_sphere_spin_obstruction(catalog):
    c = classify(catalog, catalog.space("S11:U(6)"), 1)
    assert c.is_empty() and c.complete
    (rej,) = c.rejected
    assert rej.family == "trivial"
    ((gen, image),) = rej.witnesses
    assert gen == "center_loop"


def test_classify_sp_u1_congruence(catalog):
    for name in ("S3:Sp(1)·U(1)", "S11:Sp(3)·U(1)"):
        c = classify(catalog, catalog.space(name), 2)
        (cl,) = c.classes
        assert str(cl.constraint) == "s ≡ 2 mod 4"


def test_classify_negative_verdicts_with_proofs(catalog):
    c = classify(catalog, catalog.space("S4:SO(5)"), 2)
    assert c.is_empty() and c.complete
    assert "so(3) + so(3)" in c.certificate
    for n in (5, 6, 7):
        for r in range(2, n):
            c = classify(catalog, catalog.space(f"S{n}:SO({n + 1})"), r)
            assert c.is_empty() and c.complete, (n, r)
            assert c.rejected, (n, r)


def test_classify_refuses_disconnected_stabiliser(catalog):
    text = """
catalog_version: 1

group {
  name: "O(2)-like"
  pi1 {
    free_rank: 1
    torsion: []
    generators: ["loop"]
  }
  algebra {
    center_rank: 1
  }
  connected: false
  provenance: "two components"
}

group {
  name: "Ambient"
  pi1 {
    free_rank: 0
    torsion: []
    generators: []
  }
  algebra {
    center_rank: 3
  }
  connected: true
  provenance: "test"
}

space {
  name: "X2:Ambient"
  G: "Ambient"
  H: "O(2)-like"
  n: 2
  sigma_pi1_images: [1]
  provenance: "test"
}
"""
    cat = loads(text)
    with pytest.raises(HypothesisError):
        classify(cat, cat.space("X2:Ambient"), 1)


def test_classify_rejects_bad_rank(catalog):
    with pytest.raises(ValueError):
        classify(catalog, catalog.space("S2:SO(3)"), 0)


# --- invariant spin type -----------------------------------------------------------

TABLE = [
    ("S1:SO(2)", 1), ("S2:SO(3)", 2), ("S3:SO(4)", 3), ("S4:SO(5)", 3),
    ("S5:SO(6)", 5), ("S6:SO(7)", 6), ("S7:SO(8)", 7), ("S8:SO(9)", 8),
    ("S3:U(2)", 2), ("S5:U(3)", 2), ("S7:U(4)", 2), ("S11:U(6)", 2),
    ("S3:SU(2)", 1), ("S5:SU(3)", 1), ("S7:SU(4)", 1),
    ("S3:Sp(1)", 1), ("S7:Sp(2)", 1), ("S11:Sp(3)", 1),
    ("S3:Sp(1)·U(1)", 2), ("S7:Sp(2)·U(1)", 1), ("S11:Sp(3)·U(1)", 2),
    ("S3:Sp(1)·Sp(1)", 3), ("S7:Sp(2)·Sp(1)", 1), ("S11:Sp(3)·Sp(1)", 3),
    ("S6:G2", 1), ("S7:Spin(7)", 1), ("S15:Spin(9)", 1),
]


@pytest.mark.parametrize("name,expected", TABLE)
def test_invariant_spin_type_catalog(catalog, name, expected):
    res = invariant_spin_type(catalog, catalog.space(name))
    assert res.status == "exact"
    assert res.value == expected
    assert res.witnesses


def test_spin_type_bound_within_dimension(catalog):
    for space in catalog.spaces.values():
        res = invariant_spin_type(catalog, space)
        assert 1 <= res.lo <= res.hi <= space.n


# --- canonical structure --------------------------------------------------------------

def test_canonical_untwisted_for_spin_spaces(catalog):
    c = canonical_structure(catalog, catalog.space("S7:Spin(7)"))
    assert c.r == 1
    assert c.complete
    (cl,) = c.classes
    assert cl.family == "trivial"


def test_canonical_diagonal_for_round_spheres(catalog):
    for n in (3, 4, 5, 8):
        c = canonical_structure(catalog, catalog.space(f"S{n}:SO({n + 1})"))
        assert c.r == n
        (cl,) = c.classes
        assert cl.family == DIAGONAL_FAMILY_NAME
        assert not c.complete


def test_canonical_not_minimal(catalog):
    space = catalog.space("S11:Sp(3)·Sp(1)")
    c = canonical_structure(catalog, space)
    assert c.r == 11
    assert invariant_spin_type(catalog, space).value == 3
    q = LiftQuery(11, 11, space.sigma_pi1, space.sigma_pi1)
    assert lifts(q).lifts


def test_canonical_refused_below_dimension_three(catalog):
    for name in ("S1:SO(2)", "S2:SO(3)"):
        with pytest.raises(HypothesisError):
            canonical_structure(catalog, catalog.space(name))


def test_canonical_passes_lift_for_all_catalog_spaces(catalog):
    for space in catalog.spaces.values():
        if space.n < 3:
            continue
        c = canonical_structure(catalog, space)
        if parity_nonzero(space.sigma_pi1):
            assert c.r == space.n
            q = LiftQuery(space.n, space.n, space.sigma_pi1, space.sigma_pi1)
            assert lifts(q).lifts
        else:
            assert c.r == 1 and c.count == 1


# --- holonomy -------------------------------------------------------------------------

def test_holonomy_generic_always_lifts_at_own_rank(catalog):
    for m in range(3, 10):
        v = holonomy_lift(catalog, f"SO({m})", m, m)
        assert v.verdict == "yes"


def test_holonomy_quaternion_kaehler_no_rank_two(catalog):
    for k, m in ((0, 4), (1, 12)):
        group = f"Sp({2 * k + 1})·Sp(1)"
        v = holonomy_lift(catalog, group, m, 2)
        assert v.verdict == "no"
        assert v.complete


def test_holonomy_calabi_yau_spin(catalog):
    for k in (2, 3, 4):
        v = holonomy_lift(catalog, f"SU({k})", 2 * k, 1)
        assert v.verdict == "yes"


def test_holonomy_kaehler_complex_twist(catalog):
    for k in (2, 3, 4):
        v = holonomy_lift(catalog, f"U({k})", 2 * k, 2)
        assert v.verdict == "yes"
        constraint_classes = [c for c in v.via if c.constraint is not None]
        assert constraint_classes
        assert str(constraint_classes[0].constraint) == "s odd"


def test_holonomy_unknown_when_enumeration_incomplete(catalog):
    v = holonomy_lift(catalog, "U(2)", 4, 3)
    assert v.verdict == "unknown"
    assert not v.complete


def test_holonomy_unknown_record_rejected(catalog):
    from spinr.liecat import NotInCatalogError

    with pytest.raises(NotInCatalogError):
        holonomy_lift(catalog, "SO(5)", 17, 2)


# --- cross-construction consistency ----------------------------------------------------

def test_unique_untwisted_structures(catalog):
    for space in catalog.spaces.values():
        c = classify(catalog, space, 1)
        assert len(c.classes) in (0, 1), space.name


def test_extending_twist_gives_holonomy_lift(catalog):
    # a classification class whose family extends to the transitive
    # group yields a holonomy lift of that group at the same rank
    for k in (1, 2, 3):
        sphere = catalog.space(f"S{2 * k + 1}:U({k + 1})")
        c = classify(catalog, sphere, 2)
        (cl,) = c.classes
        assert cl.extends_to == f"U({k + 1})"
        v = holonomy_lift(catalog, f"U({k + 1})", 2 * k + 2, 2)
        assert v.verdict == "yes"


def test_holonomy_lift_implies_sphere_classes(catalog):
    # whenever the generic holonomy lifts, the corresponding sphere has
    # invariant structures at the same rank
    for n in range(3, 9):
        for r in range(1, n + 2):
            v = holonomy_lift(catalog, f"SO({n + 1})", n + 1, r)
            if v.verdict == "yes":
                c = classify(catalog, catalog.space(f"S{n}:SO({n + 1})"), r)
                assert not c.is_empty(), (n, r)


def test_monotone_in_rank_via_induced_twists(catalog):
    # a passing class at rank r keeps passing after pushing the twist
    # into any larger rank
    for name in ("S2:SO(3)", "S4:SO(5)", "S11:Sp(3)·U(1)", "S7:U(4)"):
        space = catalog.space(name)
        h = catalog.lookup(space.H)
        for r in range(1, min(space.n, 6) + 1):
            c = classify(catalog, space, r)
            for cl, fam in _concrete_classes(catalog, c):
                for s_val in ([None] if not fam.parameterized else cl.constraint.sample(2)):
                    phi = fam.pi1_map(h.pi1, r, s_val)
                    for bigger in range(r + 1, 10):
                        q = LiftQuery(
                            space.n, bigger, space.sigma_pi1, induce(phi, r, bigger)
                        )
                        assert lifts(q).lifts, (name, r, bigger)


def _concrete_classes(catalog, classification):
    space = catalog.space(classification.space)
    enum = enumerate_homs(catalog, space.H, classification.r)
    by_name = {fam.name: fam for fam in enum.families}
    return [(cl, by_name[cl.family]) for cl in classification.classes]
