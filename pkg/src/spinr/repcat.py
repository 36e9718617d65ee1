"""Conjugacy families of orthogonal representations and the rule engine
that certifies when none but the trivial one can exist.

A family records homomorphisms from a catalog group into some SO(r) up
to SO(r)-conjugation, either as a finite list of class labels or as one
integer parameter subject to a congruence (e.g. the even powers of a
circle coordinate).  What the decision procedures actually consume is
the induced map on fundamental groups, stored per domain generator as
an affine expression in the parameter.

Completeness is never assumed.  A family list at (domain, r) counts as
exhaustive only when it carries a citation, or when the rule engine
proves outright that every Lie algebra homomorphism into so(r) is zero.
The engine's rules are necessary conditions on the kernel, which must
be a sum of simple ideals plus a central subspace; the engine can
therefore say "impossible" with a proof trace, or "cannot rule out",
but it never asserts existence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .abelian import AbHom, FgAbGroup
from .catalogfile import CatalogParseError, Node
from .liecat import AlgebraProfile, CompactGroupRec, so_pi1


# --- congruence constraints ---------------------------------------------------

@dataclass(frozen=True)
class Congruence:
    """The set of integers s with s = residue (mod modulus).

    modulus 1 is the unconstrained set; use EMPTY for the empty set.
    """

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def contains(self, s: int) -> bool:
        return s % self.modulus == self.residue

    def intersect(self, other: Congruence) -> "Congruence | None":
        """CRT intersection; None when the classes are disjoint."""
        g = gcd(self.modulus, other.modulus)
        if (self.residue - other.residue) % g != 0:
            return None
        lcm = self.modulus // g * other.modulus
        # walk one class until it meets the other; moduli here are tiny
        s = self.residue
        while s % other.modulus != other.residue:
            s += self.modulus
        return Congruence(lcm, s)

    def sample(self, count: int = 3) -> list[int]:
        """A few admissible values, straddling zero."""
        return [self.residue + k * self.modulus for k in range(-(count // 2), count - count // 2)]

    def __str__(self):
        if self.modulus == 1:
            return "s ∈ Z"
        if self.modulus == 2:
            return "s even" if self.residue == 0 else "s odd"
        return f"s ≡ {self.residue} mod {self.modulus}"


UNCONSTRAINED = Congruence(1, 0)

_CONG_RE = re.compile(r"^s\s*(?:=|≡)\s*(-?\d+)\s*mod\s*(\d+)$")


def parse_congruence(text: str) -> Congruence:
    """Parse 's in Z' / 's even' / 's odd' / 's = 2 mod 4' forms."""
    t = text.strip()
    if t in ("s in Z", "s ∈ Z"):
        return UNCONSTRAINED
    if t == "s even":
        return Congruence(2, 0)
    if t == "s odd":
        return Congruence(2, 1)
    m = _CONG_RE.match(t)
    if m:
        return Congruence(int(m.group(2)), int(m.group(1)))
    raise ValueError(f"cannot parse congruence constraint {text!r}")


# --- affine expressions in the family parameter -------------------------------

@dataclass(frozen=True)
class AffineInt:
    """coeff * s + offset with rational coefficients that are integral
    on every admissible parameter value."""

    coeff: Fraction
    offset: Fraction

    def eval(self, s: int) -> int:
        v = self.coeff * s + self.offset
        if v.denominator != 1:
            raise ValueError(f"{self} is not integral at s={s}")
        return int(v)

    def is_constant(self) -> bool:
        return self.coeff == 0

    def __str__(self):
        if self.coeff == 0:
            return str(self.offset)
        parts = []
        if self.coeff == 1:
            parts.append("s")
        elif self.coeff.denominator == 1:
            parts.append(f"{self.coeff}*s")
        elif self.coeff.numerator == 1:
            parts.append(f"s/{self.coeff.denominator}")
        else:
            parts.append(f"{self.coeff.numerator}*s/{self.coeff.denominator}")
        if self.offset:
            parts.append(f"+{self.offset}" if self.offset > 0 else str(self.offset))
        return "".join(parts)


_TERM_RE = re.compile(
    r"^(?:(?P<num>-?\d+)\*)?s(?:/(?P<den>\d+))?$|^(?P<const>-?\d+)$"
)


def parse_affine(text: str) -> AffineInt:
    """Parse '1', 's', '-s', '2*s', 's/2', '3*s/2+1', 's+4' etc."""
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty affine expression")
    # split into signed terms
    terms = re.findall(r"[+-]?[^+-]+", src)
    coeff = Fraction(0)
    offset = Fraction(0)
    for term in terms:
        sign = 1
        if term.startswith("+"):
            term = term[1:]
        elif term.startswith("-") and term != "-s" and not term[1:].isdigit():
            sign = -1
            term = term[1:]
        m = _TERM_RE.match(term if term != "-s" else "-1*s")
        if not m:
            raise ValueError(f"cannot parse affine term {term!r} in {text!r}")
        if m.group("const") is not None:
            offset += sign * int(m.group("const"))
        else:
            num = int(m.group("num")) if m.group("num") else 1
            den = int(m.group("den")) if m.group("den") else 1
            coeff += sign * Fraction(num, den)
    return AffineInt(coeff, offset)


# --- representation families ---------------------------------------------------

@dataclass(frozen=True)
class OrthRepFamily:
    """One conjugacy family of homomorphisms domain -> SO(target_r).

    ``labels`` is set for a finite family (one label per conjugacy
    class, all sharing the same induced fundamental-group map) and
    ``param_constraint`` for an integer-parameterised one.  The
    ``certificate`` cites why the family list at (domain, target_r) is
    exhaustive, or carries the literal flag "incomplete".
    """

    name: str
    domain: str
    target_r: int
    pi1_images: tuple[AffineInt, ...]
    labels: tuple[str, ...] | None = None
    param_constraint: Congruence | None = None
    distinct_classes: str = ""
    extends_to: str | None = None
    certificate: str = "incomplete"

    def __post_init__(self):
        if (self.labels is None) == (self.param_constraint is None):
            raise ValueError(
                f"family {self.name}: exactly one of labels/param required"
            )

    @property
    def parameterized(self) -> bool:
        return self.param_constraint is not None

    @property
    def incomplete(self) -> bool:
        return self.certificate.strip().lower() == "incomplete"

    def class_count(self) -> int | None:
        """Number of conjugacy classes; None for an infinite family."""
        return None if self.parameterized else len(self.labels)

    def pi1_map(self, domain_pi1: FgAbGroup, r: int, s: int | None = None) -> AbHom:
        """Concrete induced map for one parameter value (or none)."""
        if self.parameterized:
            if s is None:
                raise ValueError(f"family {self.name} needs a parameter value")
            if not self.param_constraint.contains(s):
                raise ValueError(
                    f"family {self.name}: parameter {s} violates "
                    f"'{self.param_constraint}'"
                )
        cod = so_pi1(r)
        images = []
        for expr in self.pi1_images:
            v = expr.eval(s) if self.parameterized else expr.eval(0)
            if cod.rank == 0 and v != 0:
                raise ValueError(
                    f"family {self.name}: nonzero image in trivial pi1(SO({r}))"
                )
            images.append(cod.elem([v] if cod.rank else []))
        return AbHom(domain_pi1, cod, tuple(images))

    def validate_against(self, group: CompactGroupRec):
        """Well-definedness of the induced map over the whole family."""
        if group.name != self.domain:
            raise ValueError(f"family {self.name} validated against wrong group")
        if len(self.pi1_images) != group.pi1.rank:
            raise ValueError(
                f"family {self.name}: {len(self.pi1_images)} images for "
                f"{group.pi1.rank} generators of {self.domain}"
            )
        cod = so_pi1(self.target_r)
        if cod.rank == 0:
            for expr in self.pi1_images:
                if expr.coeff != 0 or expr.offset != 0:
                    raise ValueError(
                        f"family {self.name}: nonzero image in trivial pi1"
                    )
            return
        samples = (
            self.param_constraint.sample(3) if self.parameterized else [None]
        )
        for s in samples:
            self.pi1_map(group.pi1, self.target_r, s)  # raises if ill-defined


# --- the non-existence rule engine ---------------------------------------------

@dataclass(frozen=True)
class RuleTrace:
    """Outcome of the kernel-candidate scan, printable as a proof sketch."""

    impossible: bool
    lines: tuple[str, ...]

    def __str__(self):
        return "; ".join(self.lines)


def no_nontrivial_hom(a: AlgebraProfile, r: int) -> bool:
    return hom_rule_trace(a, r).impossible


def hom_rule_trace(a: AlgebraProfile, r: int) -> RuleTrace:
    """Try every candidate kernel of a Lie algebra map a -> so(r).

    A kernel is a sum of simple ideals plus a central subspace, so the
    candidate quotients are: any sub-multiset of ideals plus any centre
    dimension.  A *nontrivial* homomorphism needs a nonzero quotient
    that embeds into so(r), hence:

    * dim(quotient) <= dim so(r) = r(r-1)/2;
    * if r <= 2, so(r) is abelian, so no simple ideal may survive;
    * each surviving simple ideal needs a nontrivial orthogonal
      representation of dimension <= r.

    Impossible when no nonzero quotient passes; the trace records why
    each candidate dies, in kernel-scan order.
    """
    so_r_dim = r * (r - 1) // 2
    lines = [f"maps {describe_algebra(a)} -> so({r}) (dim {so_r_dim})"]
    ideals = list(a.ideals)
    survivor_found = False
    for mask in range(1 << len(ideals)):
        kept = [ideals[i] for i in range(len(ideals)) if mask & (1 << i)]
        for center_dim in range(a.center_rank + 1):
            if not kept and center_dim == 0:
                continue  # the zero quotient is the trivial homomorphism
            qdim = center_dim + sum(i.dim for i in kept)
            quotient = _describe_quotient(kept, center_dim)
            if qdim > so_r_dim:
                lines.append(
                    f"quotient {quotient} (dim {qdim}) exceeds dim so({r})"
                )
                continue
            if r <= 2 and kept:
                lines.append(
                    f"quotient {quotient} is non-abelian but so({r}) is abelian"
                )
                continue
            bad = [i for i in kept if i.min_orth_rep_dim > r]
            if bad:
                lines.append(
                    f"quotient {quotient}: ideal {bad[0].kind} has no "
                    f"nontrivial orthogonal representation below dim "
                    f"{bad[0].min_orth_rep_dim} > {r}"
                )
                continue
            lines.append(f"quotient {quotient} (dim {qdim}) cannot be ruled out")
            survivor_found = True
    if not survivor_found:
        lines.append("every nonzero quotient is excluded: only the zero map exists")
    return RuleTrace(impossible=not survivor_found, lines=tuple(lines))


def describe_algebra(a: AlgebraProfile) -> str:
    parts = [i.kind for i in a.ideals]
    if a.center_rank:
        parts.append(f"R^{a.center_rank}")
    return " + ".join(parts) if parts else "0"


def _describe_quotient(kept, center_dim) -> str:
    parts = [i.kind for i in kept]
    if center_dim:
        parts.append(f"R^{center_dim}")
    return " + ".join(parts)


# --- enumeration ----------------------------------------------------------------

TRIVIAL_FAMILY_NAME = "trivial"


def trivial_family(domain: str, r: int, domain_rank: int) -> OrthRepFamily:
    zero = AffineInt(Fraction(0), Fraction(0))
    return OrthRepFamily(
        name=TRIVIAL_FAMILY_NAME,
        domain=domain,
        target_r=r,
        pi1_images=(zero,) * domain_rank,
        labels=("trivial",),
        distinct_classes="the constant homomorphism",
        extends_to="(any)",
        certificate="the zero map always exists",
    )


@dataclass(frozen=True)
class EnumResult:
    """All known families at (domain, r), with a completeness verdict."""

    domain: str
    r: int
    families: tuple[OrthRepFamily, ...]
    complete: bool
    certificate: str

    def nontrivial(self) -> tuple[OrthRepFamily, ...]:
        return tuple(f for f in self.families if f.name != TRIVIAL_FAMILY_NAME)


def build_family(node: Node) -> OrthRepFamily:
    labels = None
    constraint = None
    if node.child("labels", required=False) is not None:
        labels = tuple(node.str_list("labels"))
    param = node.child("param", required=False)
    if param is not None:
        pname = param.require_str("name")
        if pname != "s":
            raise CatalogParseError("parameter must be named 's'", param.line)
        try:
            constraint = parse_congruence(param.require_str("constraint"))
        except ValueError as err:
            raise CatalogParseError(str(err), param.line) from err
    try:
        images = tuple(parse_affine(t) for t in node.str_list("pi1_images"))
        fam = OrthRepFamily(
            name=node.require_str("name"),
            domain=node.require_str("domain"),
            target_r=node.require_int("target_r"),
            pi1_images=images,
            labels=labels,
            param_constraint=constraint,
            distinct_classes=node.require_str("distinct_classes"),
            extends_to=node.get("extends_to"),
            certificate=node.require_str("certificate"),
        )
    except ValueError as err:
        raise CatalogParseError(str(err), node.line) from err
    if fam.parameterized and fam.pi1_images and all(
        e.is_constant() for e in fam.pi1_images
    ):
        raise CatalogParseError(
            f"parameterised family {fam.name} with constant pi1 images",
            node.line,
        )
    return fam


def enumerate_homs(catalog, H: str, r: int) -> EnumResult:
    """Every known conjugacy family H -> SO(r), always including the
    trivial homomorphism.

    Complete when the listed families all carry completeness
    certificates, or when the rule engine proves only the zero map
    exists; otherwise callers must propagate the uncertainty.
    """
    group = catalog.lookup(H)
    listed = [
        f for f in catalog.families if f.domain == H and f.target_r == r
    ]
    families = (trivial_family(H, r, group.pi1.rank), *listed)
    if listed:
        if any(f.incomplete for f in listed):
            return EnumResult(H, r, families, False, "incomplete")
        cert = "; ".join(f.certificate for f in listed)
        return EnumResult(H, r, families, True, cert)
    trace = hom_rule_trace(group.algebra, r)
    if trace.impossible:
        return EnumResult(H, r, families, True, f"rule engine: {trace}")
    return EnumResult(H, r, families, False, f"rule engine: {trace}")
