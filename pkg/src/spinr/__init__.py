"""Exact decision procedures for invariant spin^r structures on
homogeneous spaces: fundamental-group bookkeeping, the parity lifting
criterion, representation-family catalogs and the sphere table."""

from .abelian import (
    AbElem,
    AbHom,
    FgAbGroup,
    Subgroup,
    compose,
    contains,
    direct_product,
    image_subgroup,
    mod2,
)
from .catalog import Catalog, load, load_default, loads
from .liecat import AlgebraProfile, CompactGroupRec, SimpleIdeal, so_group, so_pi1
from .lifting import LiftQuery, LiftVerdict, induce, lift_subgroup, lifts
from .repcat import EnumResult, OrthRepFamily, enumerate_homs, no_nontrivial_hom
from .spaces import (
    Classification,
    HomSpaceRec,
    SpinTypeResult,
    canonical_structure,
    classify,
    holonomy_lift,
    invariant_spin_type,
)

__version__ = "0.1.0"

__all__ = [
    "AbElem",
    "AbHom",
    "AlgebraProfile",
    "Catalog",
    "Classification",
    "CompactGroupRec",
    "EnumResult",
    "FgAbGroup",
    "HomSpaceRec",
    "LiftQuery",
    "LiftVerdict",
    "OrthRepFamily",
    "SimpleIdeal",
    "SpinTypeResult",
    "Subgroup",
    "canonical_structure",
    "classify",
    "compose",
    "contains",
    "direct_product",
    "enumerate_homs",
    "holonomy_lift",
    "image_subgroup",
    "induce",
    "invariant_spin_type",
    "lift_subgroup",
    "lifts",
    "load",
    "load_default",
    "loads",
    "mod2",
    "no_nontrivial_hom",
    "so_group",
    "so_pi1",
]
