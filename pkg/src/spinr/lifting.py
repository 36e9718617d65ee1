"""The lifting criterion for twisted spin groups.

The two-sheeted covering of SO(n) x SO(r) by the rank-r twisted spin
group has, at the fundamental-group level, an image subgroup cut out by
one parity rule: a pair of loop classes is in the image exactly when
the two classes have equal reduction mod 2.  A product homomorphism
into SO(n) x SO(r) then lifts exactly when the image of its induced map
lands in that subgroup; for connected Lie groups the lift is again a
homomorphism, so the whole existence question is decided here.

The parity rule is stated uniformly for all n, r >= 1.  The cases with
both factors >= 2 are the published images of the covering; n = 1 or
r = 1 degenerate to the classical spin condition (the other factor's
class must be even) and are derived, not quoted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    AbElem,
    AbHom,
    DomainMismatchError,
    FgAbGroup,
    Subgroup,
    compose,
    contains,
    direct_product,
    image_subgroup,
    mod2,
    product_hom,
    zero_hom,
)
from .liecat import so_pi1


def parity(x: AbElem) -> int:
    """Total mod-2 class of an element (sum of its mod2 coordinates)."""
    return sum(mod2(x.group).apply(x).coords) % 2


def frame_product_pi1(n: int, r: int) -> FgAbGroup:
    """pi1(SO(n) x SO(r)) with factor-prefixed generator labels."""
    return direct_product(so_pi1(n), so_pi1(r), ("so_n", "so_r"))


def lift_subgroup(n: int, r: int) -> Subgroup:
    """Image of the fundamental group of the rank-r twisted spin group
    inside pi1(SO(n)) x pi1(SO(r)).

    Uniform parity rule: the preimage of the diagonal under mod2 x mod2,
    i.e. all pairs (x, y) with parity(x) = parity(y).  Generators: every
    even ambient generator, the doubles of odd free generators, and the
    pairwise sums of odd generators.

    >>> lift_subgroup(2, 2).describe()
    '<(1, 1), (2, 0), (0, 2)> in Z x Z'
    >>> lift_subgroup(5, 2).describe()
    '<(1, 1), (0, 2)> in Z2 x Z'
    >>> lift_subgroup(3, 3).describe()
    '<(1, 1)> in Z2 x Z2'
    >>> lift_subgroup(3, 1).describe()
    '<> in Z2'
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n, r >= 1, got ({n}, {r})")
    ambient = frame_product_pi1(n, r)
    gens = ambient.generators()
    odd = [g for g in gens if parity(g) == 1]
    even = [g for g in gens if parity(g) == 0]
    out = [odd[i] + odd[j] for i in range(len(odd)) for j in range(i + 1, len(odd))]
    out += [g.scale(2) for g in odd]
    out += even
    out = [g for g in out if not g.is_zero()]
    return Subgroup(ambient, tuple(out))


@dataclass(frozen=True)
class LiftQuery:
    """A product homomorphism to test: isotropy side and twist side.

    Both induced maps must share a domain (same presentation, same
    generator labels) and land in pi1(SO(n)) resp. pi1(SO(r)).
    """

    n: int
    r: int
    sigma_pi1: AbHom
    phi_pi1: AbHom

    def __post_init__(self):
        if not self.sigma_pi1.domain.same_presentation(
            self.phi_pi1.domain, labels=True
        ):
            raise DomainMismatchError(
                "isotropy and twist maps must share their domain generators"
            )
        if not self.sigma_pi1.codomain.same_presentation(so_pi1(self.n)):
            raise DomainMismatchError(f"isotropy map must land in pi1(SO({self.n}))")
        if not self.phi_pi1.codomain.same_presentation(so_pi1(self.r)):
            raise DomainMismatchError(f"twist map must land in pi1(SO({self.r}))")


@dataclass(frozen=True)
class LiftVerdict:
    lifts: bool
    witness_failures: tuple[tuple[str, AbElem], ...]

    def __post_init__(self):
        assert self.lifts == (not self.witness_failures)


def lifts(q: LiftQuery) -> LiftVerdict:
    """Does the product homomorphism lift through the covering?

    True exactly when the image subgroup of the product map is
    contained in :func:`lift_subgroup`; failures are reported per
    domain generator so that a verdict can be read off generator by
    generator.
    """
    target = lift_subgroup(q.n, q.r)
    combined = product_hom(q.sigma_pi1, q.phi_pi1, ("so_n", "so_r"))
    image = image_subgroup(combined)
    failures = []
    for label, img in zip(q.sigma_pi1.domain.labels, image.generators):
        if not contains(target, img):
            failures.append((label, img))
    return LiftVerdict(lifts=not failures, witness_failures=tuple(failures))


def spin_lift_query(sigma_pi1: AbHom, n: int) -> LiftQuery:
    """The classical (untwisted) case: r = 1, trivial twist."""
    return LiftQuery(n, 1, sigma_pi1, zero_hom(sigma_pi1.domain, so_pi1(1)))


def inclusion_pi1(r: int, s: int) -> AbHom:
    """Map induced on pi1 by the top-left block inclusion SO(r) -> SO(s).

    Identity (as Z2 -> Z2) for 3 <= r < s, mod-2 for r = 2 < s... with
    the one genuinely infinite case r = 2, s = 2 excluded by s > r, and
    the zero map out of the trivial pi1(SO(1)).
    """
    if s <= r:
        raise ValueError(f"inclusion needs s > r, got r={r}, s={s}")
    dom, cod = so_pi1(r), so_pi1(s)
    if r == 1:
        return zero_hom(dom, cod)
    if r == 2:
        # winding number reduces mod 2 once a third dimension exists
        return AbHom(dom, cod, (cod.elem([1]),))
    return AbHom(dom, cod, (cod.elem([1]),))


def induce(phi_pi1: AbHom, r: int, s: int) -> AbHom:
    """Push a twist map forward along SO(r) -> SO(s), s > r.

    A structure twisted by rank r induces one twisted by any larger
    rank; at the fundamental-group level this is composition with the
    block-inclusion map.
    """
    if not phi_pi1.codomain.same_presentation(so_pi1(r)):
        raise DomainMismatchError(f"twist map must land in pi1(SO({r}))")
    return compose(inclusion_pi1(r, s), phi_pi1)
