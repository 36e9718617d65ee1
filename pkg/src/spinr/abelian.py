"""Exact arithmetic for finitely generated abelian groups.

A group is stored with a *fixed ordered generating set*: first the free
generators, then one generator per torsion order.  Nothing is ever put
into a canonical form behind the caller's back, because the whole point
of this module is bookkeeping of distinguished fundamental-group
generators.  All arithmetic is integer-exact; membership questions are
settled by Smith-style row reduction of integer matrices, never by
floating point.

>>> Z = FgAbGroup(1, (), ("t",))
>>> Z2 = cyclic(2)
>>> f = AbHom(Z, Z2, (Z2.elem([5]),))   # reduction mod 2
>>> f.apply(Z.elem([3])).coords
(1,)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


class DomainMismatchError(ValueError):
    """Composition or comparison of homomorphisms over different groups."""


class FgAbGroup:
    """Finitely generated abelian group with labelled generators.

    Generator i has order ``orders[i]``, with 0 marking an
    infinite-order (free) generator; the usual constructor lists the
    free generators first, but products keep factor order, so free and
    torsion generators may interleave.  Two groups compare equal when
    they are abstractly isomorphic as presented, i.e. same free rank
    and same multiset of torsion orders; use :meth:`same_presentation`
    when coordinates must line up.
    """

    __slots__ = ("orders", "labels")

    def __init__(self, free_rank=0, torsion_orders=(), labels=(), *, orders=None):
        if orders is None:
            if free_rank < 0:
                raise ValueError(f"free rank must be >= 0, got {free_rank}")
            orders = (0,) * free_rank + tuple(torsion_orders)
        orders = tuple(int(d) for d in orders)
        for d in orders:
            if d == 1 or d < 0:
                raise ValueError(f"torsion order must be >= 2, got {d}")
        labels = tuple(labels) or tuple(f"g{i}" for i in range(len(orders)))
        if len(labels) != len(orders):
            raise ValueError(f"{len(labels)} labels for {len(orders)} generators")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, *args):
        raise AttributeError("FgAbGroup is immutable")

    def __repr__(self):
        return f"FgAbGroup(orders={self.orders}, labels={self.labels})"

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.orders if d == 0)

    @property
    def torsion_orders(self) -> tuple[int, ...]:
        return tuple(d for d in self.orders if d)

    @property
    def rank(self) -> int:
        return len(self.orders)

    def __eq__(self, other):
        if not isinstance(other, FgAbGroup):
            return NotImplemented
        return (
            self.free_rank == other.free_rank
            and sorted(self.torsion_orders) == sorted(other.torsion_orders)
        )

    def __hash__(self):
        return hash((self.free_rank, tuple(sorted(self.torsion_orders))))

    def same_presentation(self, other: FgAbGroup, labels: bool = False) -> bool:
        """Coordinate-compatible equality: the ordered order-lists match."""
        if self.orders != other.orders:
            return False
        return self.labels == other.labels if labels else True

    def order_of_coord(self, i: int) -> int:
        """Order of generator i (0 marks an infinite-order generator)."""
        return self.orders[i]

    def reduce(self, coords) -> tuple[int, ...]:
        out = []
        for d, c in zip(self.orders, coords, strict=True):
            out.append(int(c) % d if d else int(c))
        return tuple(out)

    def elem(self, coords) -> AbElem:
        return AbElem(self, self.reduce(coords))

    def zero(self) -> AbElem:
        return self.elem([0] * self.rank)

    def generator(self, i: int) -> AbElem:
        coords = [0] * self.rank
        coords[i] = 1
        return self.elem(coords)

    def generators(self) -> list[AbElem]:
        return [self.generator(i) for i in range(self.rank)]

    def is_trivial(self) -> bool:
        return self.rank == 0

    def elements(self):
        """Iterate all elements; only allowed for finite groups."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        for coords in itertools.product(*(range(d) for d in self.orders)):
            yield self.elem(coords)

    def describe(self) -> str:
        parts = ["Z" if d == 0 else f"Z{d}" for d in self.orders]
        return " x ".join(parts) if parts else "0"


def cyclic(order: int, label: str = "g") -> FgAbGroup:
    """Z for order 0, Z/order otherwise."""
    if order == 0:
        return FgAbGroup(1, (), (label,))
    return FgAbGroup(0, (order,), (label,))


TRIVIAL_GROUP = FgAbGroup(0, (), ())


@dataclass(frozen=True)
class AbElem:
    """Element of an FgAbGroup, stored as one integer per generator."""

    group: FgAbGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.group.rank:
            raise ValueError(
                f"{len(self.coords)} coordinates in a rank-{self.group.rank} group"
            )
        if self.coords != self.group.reduce(self.coords):
            raise ValueError(f"coordinates {self.coords} not reduced")

    def __add__(self, other: AbElem) -> AbElem:
        self._check_ambient(other)
        return self.group.elem([a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> AbElem:
        return self.group.elem([-c for c in self.coords])

    def __sub__(self, other: AbElem) -> AbElem:
        return self + (-other)

    def scale(self, k: int) -> AbElem:
        return self.group.elem([k * c for c in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check_ambient(self, other: AbElem):
        if not self.group.same_presentation(other.group):
            raise DomainMismatchError("elements of different groups")

    def describe(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class AbHom:
    """Homomorphism determined by the images of the domain generators.

    Well-definedness (d * image = 0 for a domain generator of order d)
    is asserted at construction so that invalid maps cannot circulate.
    """

    domain: FgAbGroup
    codomain: FgAbGroup
    images: tuple[AbElem, ...]

    def __post_init__(self):
        if len(self.images) != self.domain.rank:
            raise ValueError(
                f"{len(self.images)} images for {self.domain.rank} generators"
            )
        for img in self.images:
            if not img.group.same_presentation(self.codomain):
                raise DomainMismatchError("image outside the codomain")
        for i, img in enumerate(self.images):
            d = self.domain.order_of_coord(i)
            if d and not img.scale(d).is_zero():
                raise ValueError(
                    f"generator {self.domain.labels[i]} has order {d} "
                    f"but {d} * {img.coords} != 0 in the codomain"
                )

    def apply(self, x: AbElem) -> AbElem:
        if not x.group.same_presentation(self.domain):
            raise DomainMismatchError("element not in the domain")
        out = self.codomain.zero()
        for c, img in zip(x.coords, self.images):
            out = out + img.scale(c)
        return out

    def is_zero(self) -> bool:
        return all(img.is_zero() for img in self.images)


def zero_hom(domain: FgAbGroup, codomain: FgAbGroup) -> AbHom:
    return AbHom(domain, codomain, tuple(codomain.zero() for _ in range(domain.rank)))


def identity_hom(g: FgAbGroup) -> AbHom:
    return AbHom(g, g, tuple(g.generators()))


def compose(f: AbHom, g: AbHom) -> AbHom:
    """f after g.  Requires codomain(g) = domain(f) coordinatewise.

    >>> Z = cyclic(0)
    >>> times2 = AbHom(Z, Z, (Z.elem([2]),))
    >>> compose(times2, times2).images[0].coords
    (4,)
    """
    if not g.codomain.same_presentation(f.domain):
        raise DomainMismatchError("codomain of inner map is not domain of outer map")
    return AbHom(g.domain, f.codomain, tuple(f.apply(img) for img in g.images))


def direct_product(
    a: FgAbGroup, b: FgAbGroup, prefixes: tuple[str, str] = ("1", "2")
) -> FgAbGroup:
    """Product group, coordinates in factor order; generator labels are
    prefixed by factor."""
    labels = tuple(f"{prefixes[0]}.{s}" for s in a.labels) + tuple(
        f"{prefixes[1]}.{s}" for s in b.labels
    )
    return FgAbGroup(orders=a.orders + b.orders, labels=labels)


def product_elem(p: FgAbGroup, a: AbElem, b: AbElem) -> AbElem:
    """Element (a, b) of a product built by :func:`direct_product`."""
    return p.elem(a.coords + b.coords)


def product_hom(f: AbHom, g: AbHom, prefixes: tuple[str, str] = ("1", "2")) -> AbHom:
    """(f x g) on a shared domain: x -> (f(x), g(x))."""
    if not f.domain.same_presentation(g.domain):
        raise DomainMismatchError("factors must share a domain")
    target = direct_product(f.codomain, g.codomain, prefixes)
    images = tuple(
        product_elem(target, fi, gi) for fi, gi in zip(f.images, g.images)
    )
    return AbHom(f.domain, target, images)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of an ambient group given by a finite generating list."""

    ambient: FgAbGroup
    generators: tuple[AbElem, ...]

    def __post_init__(self):
        for g in self.generators:
            if not g.group.same_presentation(self.ambient):
                raise ValueError("subgroup generator outside the ambient group")

    def describe(self) -> str:
        gens = ", ".join(g.describe() for g in self.generators)
        return f"<{gens}> in {self.ambient.describe()}"


def image_subgroup(f: AbHom) -> Subgroup:
    return Subgroup(f.codomain, f.images)


# --- integer linear algebra -------------------------------------------------

def smith_diagonalize(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Reduce an integer matrix to diagonal form by unimodular row and
    column operations.

    Returns ``(U, D)`` with ``D = U @ A @ V`` diagonal for some
    unimodular V that is not tracked (solvability of A y = x only needs
    the left transform).  Diagonal entries are not forced into
    divisibility order; membership tests do not need it.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    D = [list(map(int, r)) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def add_row(i, j, q):  # row i += q * row j
        D[i] = [a + q * b for a, b in zip(D[i], D[j])]
        U[i] = [a + q * b for a, b in zip(U[i], U[j])]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]

    def add_col(i, j, q):  # col i += q * col j
        for r in D:
            r[i] += q * r[j]

    t = 0
    while t < m and t < n:
        pivot = next(
            ((i, j) for i in range(t, m) for j in range(t, n) if D[i][j] != 0),
            None,
        )
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # Pivot swaps strictly shrink |D[t][t]|, so the passes
            # below are entered finitely often.
            for i in range(t + 1, m):
                while D[i][t] != 0:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t] != 0:
                        swap_rows(i, t)
            # Clearing the row can only dirty the column again through
            # a pivot swap, hence the outer loop.
            for j in range(t + 1, n):
                while D[t][j] != 0:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j] != 0:
                        swap_cols(j, t)
            if all(D[i][t] == 0 for i in range(t + 1, m)):
                break
        t += 1
    return U, D


def _solve_diophantine(columns: list[list[int]], target: list[int]) -> bool:
    """Does an integer combination of the columns equal the target?"""
    m = len(target)
    if not columns:
        return all(c == 0 for c in target)
    rows = [[col[i] for col in columns] for i in range(m)]
    U, D = smith_diagonalize(rows)
    b = [sum(U[i][k] * target[k] for k in range(m)) for i in range(m)]
    n = len(columns)
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if b[i] != 0:
                return False
        elif b[i] % d != 0:
            return False
    return True


def _relation_columns(g: FgAbGroup) -> list[list[int]]:
    cols = []
    for j, d in enumerate(g.orders):
        if d:
            col = [0] * g.rank
            col[j] = d
            cols.append(col)
    return cols


def contains(s: Subgroup, x: AbElem) -> bool:
    """Exact membership of x in the span of s's generators.

    Solved as an integer linear system with the ambient torsion
    relations adjoined as extra columns, via Smith-style reduction.

    >>> ZZ = FgAbGroup(2, (), ("a", "b"))
    >>> s = Subgroup(ZZ, (ZZ.elem([1, 1]), ZZ.elem([1, -1])))
    >>> contains(s, ZZ.elem([3, 5]))
    True
    >>> contains(s, ZZ.elem([1, 0]))
    False
    """
    if not x.group.same_presentation(s.ambient):
        raise DomainMismatchError("element not in the ambient group")
    columns = [list(g.coords) for g in s.generators]
    columns += _relation_columns(s.ambient)
    return _solve_diophantine(columns, list(x.coords))


def subgroup_leq(a: Subgroup, b: Subgroup) -> bool:
    """a <= b as subgroups of a common ambient group."""
    return all(contains(b, g) for g in a.generators)


def subgroup_eq(a: Subgroup, b: Subgroup) -> bool:
    return subgroup_leq(a, b) and subgroup_leq(b, a)


def subgroup_index(s: Subgroup) -> int | None:
    """Index of s in its ambient group; None when infinite.

    The quotient is presented by the ambient generators subject to the
    subgroup generators and the ambient torsion relations; its order is
    the product of the nonzero diagonal entries of the Smith form when
    the rank is full, and infinite otherwise.
    """
    g = s.ambient
    columns = [list(x.coords) for x in s.generators] + _relation_columns(g)
    m = g.rank
    if m == 0:
        return 1
    if not columns:
        return None
    rows = [[col[i] for col in columns] for i in range(m)]
    _, D = smith_diagonalize(rows)
    order = 1
    for i in range(m):
        d = D[i][i] if i < len(columns) else 0
        if d == 0:
            return None
        order *= abs(d)
    return order


def mod2(g: FgAbGroup) -> AbHom:
    """Canonical reduction onto the largest elementary-2 quotient.

    Free generators each hit their own Z2 factor; a torsion generator
    of even order hits its own factor; odd-torsion generators die.
    """
    targets = []
    positions: dict[int, int] = {}
    for i, d in enumerate(g.orders):
        if d == 0 or d % 2 == 0:
            positions[i] = len(targets)
            targets.append(g.labels[i])
    codomain = FgAbGroup(0, (2,) * len(targets), tuple(f"{s}_mod2" for s in targets))
    images = []
    for i in range(g.rank):
        coords = [0] * len(targets)
        if i in positions:
            coords[positions[i]] = 1
        images.append(codomain.elem(coords))
    return AbHom(g, codomain, tuple(images))
