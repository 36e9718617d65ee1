"""Compact connected Lie group records: fundamental groups with chosen
generators, plus the ideal structure of the Lie algebra.

Only two kinds of knowledge are encoded here.  Formulaic families
(the special orthogonal groups) are built by :func:`so_group`; every
other group ships as a catalog record whose fundamental group and
algebra profile carry a provenance citation.  The ideal profiles feed
the non-existence rule engine, which needs, for each simple ideal, its
dimension and the smallest dimension of a nontrivial real orthogonal
representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbGroup
from .catalogfile import CatalogParseError, Node


class NotInCatalogError(KeyError):
    def __init__(self, kind: str, name: str, available):
        self.name = name
        names = ", ".join(sorted(available))
        super().__init__(f"{kind} '{name}' not in catalog; available: {names}")

    def __str__(self):
        return self.args[0]


@dataclass(frozen=True)
class SimpleIdeal:
    """A simple ideal of a compact Lie algebra."""

    kind: str
    dim: int
    min_orth_rep_dim: int
    is_abelian: bool = False

    def __post_init__(self):
        if self.dim < 3:
            raise ValueError(f"simple ideal {self.kind} with dim {self.dim} < 3")
        if self.min_orth_rep_dim < 2:
            raise ValueError(
                f"simple ideal {self.kind}: min_orth_rep_dim "
                f"{self.min_orth_rep_dim} < 2"
            )


@dataclass(frozen=True)
class AlgebraProfile:
    """Centre dimension plus the list of simple ideals."""

    center_rank: int
    ideals: tuple[SimpleIdeal, ...] = ()

    @property
    def dim(self) -> int:
        return self.center_rank + sum(i.dim for i in self.ideals)

    def is_abelian(self) -> bool:
        return not self.ideals


@dataclass(frozen=True)
class CompactGroupRec:
    name: str
    pi1: FgAbGroup
    algebra: AlgebraProfile
    connected: bool
    provenance: str


# --- the SO(k) family, by formula --------------------------------------------

SO_GENERATOR = "alpha"  # the plane-rotation loop generating pi1(SO(k))

_SO_PI1_CITATION = (
    "pi1(SO(1)) = 1, pi1(SO(2)) = Z, pi1(SO(k)) = Z/2 for k >= 3; "
    "Hatcher, Algebraic Topology, Sec. 3.D / standard"
)


def so_pi1(k: int) -> FgAbGroup:
    """Fundamental group of SO(k) with its rotation-loop generator."""
    if k < 1:
        raise ValueError(f"SO(k) needs k >= 1, got {k}")
    if k == 1:
        return FgAbGroup(0, (), ())
    if k == 2:
        return FgAbGroup(1, (), (SO_GENERATOR,))
    return FgAbGroup(0, (2,), (SO_GENERATOR,))


def so_ideal(k: int) -> SimpleIdeal:
    """so(k) as a simple ideal; only defined for k = 3 and k >= 5."""
    if k == 3:
        return SimpleIdeal("so(3)", 3, 3)
    if k >= 5:
        return SimpleIdeal(f"so({k})", k * (k - 1) // 2, k)
    raise ValueError(f"so({k}) is not simple")


def so_algebra(k: int) -> AlgebraProfile:
    if k <= 1:
        return AlgebraProfile(0)
    if k == 2:
        return AlgebraProfile(1)
    if k == 4:
        return AlgebraProfile(0, (so_ideal(3), so_ideal(3)))
    return AlgebraProfile(0, (so_ideal(k),))


def so_group(k: int) -> CompactGroupRec:
    """Catalog record for SO(k), valid for every k >= 1."""
    return CompactGroupRec(
        name=f"SO({k})",
        pi1=so_pi1(k),
        algebra=so_algebra(k),
        connected=True,
        provenance=_SO_PI1_CITATION,
    )


# --- record construction from parsed catalog nodes ---------------------------

def _build_pi1(node: Node) -> FgAbGroup:
    free_rank = node.require_int("free_rank")
    torsion = node.require_list("torsion")
    for d in torsion:
        if isinstance(d, bool) or not isinstance(d, int):
            raise CatalogParseError(f"torsion entries must be integers: {d!r}", node.line)
    generators = tuple(node.str_list("generators"))
    try:
        return FgAbGroup(free_rank, tuple(torsion), generators)
    except ValueError as err:
        raise CatalogParseError(str(err), node.line) from err


def _build_ideal(node: Node) -> SimpleIdeal:
    try:
        return SimpleIdeal(
            kind=node.require_str("kind"),
            dim=node.require_int("dim"),
            min_orth_rep_dim=node.require_int("min_orth_rep"),
        )
    except ValueError as err:
        raise CatalogParseError(str(err), node.line) from err


def _build_algebra(node: Node) -> AlgebraProfile:
    return AlgebraProfile(
        center_rank=node.require_int("center_rank"),
        ideals=tuple(_build_ideal(c) for c in node.items("ideal")),
    )


def build_group(node: Node) -> CompactGroupRec:
    rec = CompactGroupRec(
        name=node.require_str("name"),
        pi1=_build_pi1(node.child("pi1")),
        algebra=_build_algebra(node.child("algebra")),
        connected=bool(node.get("connected", True)),
        provenance=node.require_str("provenance"),
    )
    if not rec.provenance.strip():
        raise CatalogParseError("empty provenance", node.line)
    _validate_group(rec, node)
    return rec


def _validate_group(rec: CompactGroupRec, node: Node):
    """Cross-checks applied at load time.

    SO entries must match the formulaic family exactly, which also
    pins min_orth_rep_dim(so(k)) = k for k >= 5 and 3 for so(3).
    """
    name = rec.name
    if name.startswith("SO(") and name.endswith(")"):
        k = int(name[3:-1])
        expected = so_group(k)
        if rec.pi1 != expected.pi1 or rec.pi1.labels != expected.pi1.labels:
            raise CatalogParseError(
                f"pi1 of {name} must match the standard value "
                f"{expected.pi1.describe()} with generator labels "
                f"{expected.pi1.labels}",
                node.line,
            )
        if rec.algebra != expected.algebra:
            raise CatalogParseError(
                f"algebra profile of {name} must be {expected.algebra}",
                node.line,
            )
    for ideal in rec.algebra.ideals:
        if ideal.kind.startswith("so(") and ideal.kind.endswith(")"):
            k = int(ideal.kind[3:-1])
            ref = so_ideal(k)
            if (ideal.dim, ideal.min_orth_rep_dim) != (ref.dim, ref.min_orth_rep_dim):
                raise CatalogParseError(
                    f"ideal {ideal.kind}: expected dim {ref.dim}, "
                    f"min_orth_rep {ref.min_orth_rep_dim}",
                    node.line,
                )
