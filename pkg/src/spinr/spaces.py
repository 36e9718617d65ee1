"""Homogeneous-space decisions: classification of invariant structures,
minimal twist rank, the canonical structure, and holonomy lifts.

A space record holds the group pair (G, H), the dimension, and the map
induced by the isotropy representation on fundamental groups.  For a
connected stabiliser, invariant rank-r structures modulo equivariant
equivalence correspond to conjugacy classes of homomorphisms
H -> SO(r) whose product with the isotropy passes the parity lifting
criterion, so everything below reduces to (a) enumerating families and
(b) running the lift test, exactly or symbolically in the family
parameter.

Results never overstate completeness: a classification built from an
uncertified enumeration is marked incomplete, and the minimal-rank scan
degrades to an honest interval instead of returning a wrong number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbHom, FgAbGroup
from .catalogfile import CatalogParseError, Node
from .lifting import LiftQuery, lifts, parity
from .liecat import so_pi1
from .repcat import (
    Congruence,
    OrthRepFamily,
    UNCONSTRAINED,
    enumerate_homs,
)


class HypothesisError(ValueError):
    """A theorem hypothesis is violated (disconnected stabiliser, small n)."""


DIAGONAL_FAMILY_NAME = "diagonal(isotropy)"


@dataclass(frozen=True)
class HomSpaceRec:
    """One homogeneous realisation, e.g. S7:Sp(2) for the 7-sphere."""

    name: str
    G: str
    H: str
    n: int
    sigma_pi1: AbHom
    provenance: str


@dataclass(frozen=True)
class HolonomyRec:
    """A holonomy group from the irreducible non-symmetric list, acting
    on an m-dimensional tangent space."""

    group: str
    m: int
    h_pi1: AbHom
    provenance: str


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class (or constrained family of classes) of
    invariant structures: a family reference plus, for parameterised
    families, the exact congruence the parameter must satisfy."""

    family: str
    label: str | None = None
    constraint: Congruence | None = None
    extends_to: str | None = None

    def render(self) -> str:
        if self.constraint is not None:
            return f"{self.family} [{self.constraint}]"
        if self.label and self.label != self.family:
            return f"{self.family}:{self.label}"
        return self.family


@dataclass(frozen=True)
class RejectedFamily:
    """A family that fails the lift test, with per-generator witnesses
    (generator label, image pair that escapes the covering subgroup)."""

    family: str
    witnesses: tuple[tuple[str, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Classification:
    space: str
    r: int
    classes: tuple[ClassRecord, ...]
    count: int | None  # None marks an infinite family
    complete: bool
    certificate: str
    rejected: tuple[RejectedFamily, ...] = ()

    def is_empty(self) -> bool:
        return not self.classes


@dataclass(frozen=True)
class SpinTypeResult:
    """Least twist rank admitting an invariant structure.

    status "exact" needs complete (and empty) classifications at every
    smaller rank plus a witness at the reported rank; otherwise the
    honest interval [lo, hi] is reported.
    """

    space: str
    status: str  # "exact" | "bounded"
    lo: int
    hi: int
    witnesses: tuple[ClassRecord, ...]

    @property
    def value(self) -> int | None:
        return self.lo if self.status == "exact" else None


# --- record construction -------------------------------------------------------

def _images_hom(domain: FgAbGroup, r: int, images: list[int], line: int) -> AbHom:
    cod = so_pi1(r)
    if cod.rank == 0:
        if any(v != 0 for v in images):
            raise CatalogParseError(
                f"nonzero image in the trivial pi1(SO({r}))", line
            )
        elems = tuple(cod.elem([]) for _ in images)
    else:
        elems = tuple(cod.elem([v]) for v in images)
    try:
        return AbHom(domain, cod, elems)
    except ValueError as err:
        raise CatalogParseError(str(err), line) from err


def _int_list(node: Node, key: str) -> list[int]:
    vals = node.require_list(key)
    out = []
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int):
            raise CatalogParseError(
                f"'{key}' entries must be integers, got {v!r}",
                node.child(key).line,
            )
        out.append(v)
    return out


def build_space(node: Node, groups) -> HomSpaceRec:
    name = node.require_str("name")
    h_name = node.require_str("H")
    if h_name not in groups:
        raise CatalogParseError(f"space {name}: unknown stabiliser {h_name}", node.line)
    g_name = node.require_str("G")
    if g_name not in groups:
        raise CatalogParseError(f"space {name}: unknown group {g_name}", node.line)
    h = groups[h_name]
    n = node.require_int("n")
    if n < 1:
        raise CatalogParseError(f"space {name}: dimension must be >= 1", node.line)
    # A disconnected stabiliser is loadable data but refused by
    # classify(), which needs the connectedness hypothesis.
    sigma = _images_hom(h.pi1, n, _int_list(node, "sigma_pi1_images"), node.line)
    return HomSpaceRec(
        name=name,
        G=g_name,
        H=h_name,
        n=n,
        sigma_pi1=sigma,
        provenance=node.require_str("provenance"),
    )


def build_holonomy(node: Node, groups) -> HolonomyRec:
    g_name = node.require_str("group")
    if g_name not in groups:
        raise CatalogParseError(f"holonomy record: unknown group {g_name}", node.line)
    m = node.require_int("m")
    h = _images_hom(groups[g_name].pi1, m, _int_list(node, "h_pi1_images"), node.line)
    return HolonomyRec(
        group=g_name,
        m=m,
        h_pi1=h,
        provenance=node.require_str("provenance"),
    )


# --- the lift test against one family -------------------------------------------

def _solve_parameter(sigma: AbHom, family: OrthRepFamily) -> Congruence | None:
    """Exact set of parameter values passing the lift test.

    With s = rho + mu*t running over the family's admissible values,
    each domain generator imposes a parity condition on the affine
    image, which in t is either vacuous, unsatisfiable, or a single
    class mod 2.  The intersection converts back to a congruence on s.
    """
    base = family.param_constraint
    mu, rho = base.modulus, base.residue
    cod_rank = so_pi1(family.target_r).rank
    t_class = UNCONSTRAINED
    for i in range(sigma.domain.rank):
        eps = parity(sigma.images[i])
        if cod_rank == 0:
            if eps:
                return None
            continue
        expr = family.pi1_images[i]
        step = expr.coeff * mu
        assert step.denominator == 1, "family images must be integral"
        v0 = expr.eval(rho)
        if int(step) % 2 == 0:
            if v0 % 2 != eps:
                return None
        else:
            t_class = t_class.intersect(Congruence(2, (eps - v0) % 2))
            if t_class is None:
                return None
    return Congruence(mu * t_class.modulus, rho + mu * t_class.residue)


def _test_family(
    space_n: int, sigma: AbHom, family: OrthRepFamily, domain_pi1: FgAbGroup
) -> tuple[list[ClassRecord], RejectedFamily | None]:
    r = family.target_r
    if family.parameterized:
        solved = _solve_parameter(sigma, family)
        if solved is not None:
            # spot-check the symbolic solution with the concrete test
            for s in solved.sample(3):
                q = LiftQuery(space_n, r, sigma, family.pi1_map(domain_pi1, r, s))
                assert lifts(q).lifts, (family.name, s)
            return (
                [
                    ClassRecord(
                        family=family.name,
                        constraint=solved,
                        extends_to=family.extends_to,
                    )
                ],
                None,
            )
        s = family.param_constraint.sample(1)[0]
        verdict = lifts(
            LiftQuery(space_n, r, sigma, family.pi1_map(domain_pi1, r, s))
        )
        return [], _rejection(family, verdict)
    phi = family.pi1_map(domain_pi1, r)
    verdict = lifts(LiftQuery(space_n, r, sigma, phi))
    if verdict.lifts:
        return (
            [
                ClassRecord(
                    family=family.name,
                    label=label,
                    extends_to=family.extends_to,
                )
                for label in family.labels
            ],
            None,
        )
    return [], _rejection(family, verdict)


def _rejection(family: OrthRepFamily, verdict) -> RejectedFamily:
    return RejectedFamily(
        family=family.name,
        witnesses=tuple(
            (label, elem.coords) for label, elem in verdict.witness_failures
        ),
    )


# --- public operations -----------------------------------------------------------

def classify(catalog, space: HomSpaceRec, r: int) -> Classification:
    """All invariant rank-r structures on the space, as lift-passing
    conjugacy classes with exactly solved parameter constraints."""
    if r < 1:
        raise ValueError(f"twist rank must be >= 1, got {r}")
    h = catalog.lookup(space.H)
    if not h.connected:
        raise HypothesisError(
            f"stabiliser {space.H} is not connected; the classification "
            f"correspondence requires a connected stabiliser"
        )
    enum = enumerate_homs(catalog, space.H, r)
    classes: list[ClassRecord] = []
    rejected: list[RejectedFamily] = []
    infinite = False
    for family in enum.families:
        passed, failed = _test_family(space.n, space.sigma_pi1, family, h.pi1)
        for rec in passed:
            if rec.constraint is not None:
                infinite = True
        classes.extend(passed)
        if failed is not None:
            rejected.append(failed)
    return Classification(
        space=space.name,
        r=r,
        classes=tuple(classes),
        count=None if infinite else len(classes),
        complete=enum.complete,
        certificate=enum.certificate,
        rejected=tuple(rejected),
    )


def invariant_spin_type(catalog, space: HomSpaceRec) -> SpinTypeResult:
    """Scan r = 1, 2, ... for the least rank admitting a structure.

    The scan never passes the dimension: a canonical witness exists
    there whenever none was found earlier (diagonal twist by the
    isotropy itself), so the honest upper bound is always n.
    """
    first_uncertain: int | None = None
    for r in range(1, space.n + 1):
        c = classify(catalog, space, r)
        if not c.is_empty():
            if first_uncertain is None:
                return SpinTypeResult(
                    space=space.name,
                    status="exact",
                    lo=r,
                    hi=r,
                    witnesses=c.classes,
                )
            return SpinTypeResult(
                space=space.name,
                status="bounded",
                lo=first_uncertain,
                hi=r,
                witnesses=c.classes,
            )
        if not c.complete and first_uncertain is None:
            first_uncertain = r
    if first_uncertain is None:
        # A complete, empty classification at every rank up to n
        # contradicts the canonical rank-n witness.
        raise RuntimeError(
            f"no invariant structure found for {space.name} up to r = "
            f"{space.n} despite complete enumerations; catalog data is "
            f"inconsistent with the existence theorem"
        )
    witnesses: tuple[ClassRecord, ...] = ()
    if space.n >= 3:
        witnesses = canonical_structure(catalog, space).classes
    return SpinTypeResult(
        space=space.name,
        status="bounded",
        lo=first_uncertain,
        hi=space.n,
        witnesses=witnesses,
    )


def parity_nonzero(sigma: AbHom) -> bool:
    return any(parity(img) for img in sigma.images)


def canonical_structure(catalog, space: HomSpaceRec) -> Classification:
    """The preferred structure: untwisted when the isotropy class
    vanishes, otherwise the rank-n diagonal twist by the isotropy
    itself, which the parity rule accepts unconditionally.

    The diagonal branch returns a single distinguished witness, not an
    enumeration, so it is marked incomplete.
    """
    if space.n < 3:
        raise HypothesisError(
            f"canonical structure needs dimension >= 3, got n = {space.n}"
        )
    if not parity_nonzero(space.sigma_pi1):
        return classify(catalog, space, 1)
    n = space.n
    q = LiftQuery(n, n, space.sigma_pi1, space.sigma_pi1)
    verdict = lifts(q)
    assert verdict.lifts, "the diagonal twist must always pass the parity rule"
    return Classification(
        space=space.name,
        r=n,
        classes=(
            ClassRecord(
                family=DIAGONAL_FAMILY_NAME,
                label="diagonal",
                extends_to=None,
            ),
        ),
        count=1,
        complete=False,
        certificate=(
            "distinguished witness built from the isotropy representation; "
            "not an enumeration of rank-n structures"
        ),
        rejected=(),
    )


@dataclass(frozen=True)
class HolonomyVerdict:
    group: str
    m: int
    r: int
    verdict: str  # "yes" | "no" | "unknown"
    via: tuple[ClassRecord, ...]
    complete: bool
    certificate: str
    rejected: tuple[RejectedFamily, ...]


def holonomy_lift(catalog, group: str, m: int, r: int) -> HolonomyVerdict:
    """Can the holonomy representation be lifted to the rank-r twisted
    spin group of its own dimension?

    Tri-state: "yes" on any passing twist (including, at r = m, the
    diagonal twist by the holonomy representation itself, which always
    passes), "no" only under a complete enumeration, "unknown"
    otherwise.
    """
    rec = catalog.holonomy(group, m)
    g = catalog.lookup(group)
    enum = enumerate_homs(catalog, group, r)
    via: list[ClassRecord] = []
    rejected: list[RejectedFamily] = []
    for family in enum.families:
        passed, failed = _test_family(m, rec.h_pi1, family, g.pi1)
        via.extend(passed)
        if failed is not None:
            rejected.append(failed)
    if r == m:
        q = LiftQuery(m, m, rec.h_pi1, rec.h_pi1)
        assert lifts(q).lifts, "diagonal holonomy twist must pass the parity rule"
        via.append(
            ClassRecord(family="diagonal(holonomy)", label="diagonal")
        )
    if via:
        return HolonomyVerdict(
            group, m, r, "yes", tuple(via), enum.complete, enum.certificate,
            tuple(rejected),
        )
    if enum.complete:
        return HolonomyVerdict(
            group, m, r, "no", (), True, enum.certificate, tuple(rejected)
        )
    return HolonomyVerdict(
        group, m, r, "unknown", (), False, enum.certificate, tuple(rejected)
    )
