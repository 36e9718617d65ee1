"""Catalog assembly: load the shared data file into typed records and
run the cross-record consistency checks.

One file carries four record types: ``group``, ``repfamily``, ``space``
and ``holonomy``.  Groups must parse before anything that refers to
them; the loader therefore builds in two passes regardless of record
order in the file.  The bundled catalog ships as package data and can
be overridden per call, by flag, or with the SPINR_CATALOG environment
variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from . import catalogfile
from .catalogfile import CatalogParseError
from .liecat import CompactGroupRec, NotInCatalogError, build_group
from .repcat import OrthRepFamily, build_family, no_nontrivial_hom
from .spaces import HolonomyRec, HomSpaceRec, build_holonomy, build_space

ENV_CATALOG = "SPINR_CATALOG"

_KNOWN_RECORDS = ("group", "repfamily", "space", "holonomy")


def normalize_name(name: str) -> str:
    """Group names use the middle dot; accept '.' from ASCII keyboards."""
    return name.strip().replace(".", "·")


@dataclass
class Catalog:
    version: int
    groups: dict[str, CompactGroupRec]
    families: tuple[OrthRepFamily, ...]
    spaces: dict[str, HomSpaceRec]
    holonomies: dict[tuple[str, int], HolonomyRec]
    path: str = "<catalog>"

    def lookup(self, name: str) -> CompactGroupRec:
        key = normalize_name(name)
        if key not in self.groups:
            raise NotInCatalogError("group", name, self.groups)
        return self.groups[key]

    def space(self, name: str) -> HomSpaceRec:
        key = normalize_name(name)
        if key not in self.spaces:
            raise NotInCatalogError("space", name, self.spaces)
        return self.spaces[key]

    def holonomy(self, group: str, m: int) -> HolonomyRec:
        key = (normalize_name(group), m)
        if key not in self.holonomies:
            available = [f"{g} (m={mm})" for g, mm in sorted(self.holonomies)]
            raise NotInCatalogError("holonomy record", f"{group} (m={m})", available)
        return self.holonomies[key]

    def families_at(self, domain: str, r: int) -> tuple[OrthRepFamily, ...]:
        return tuple(
            f for f in self.families if f.domain == domain and f.target_r == r
        )


def loads(text: str, path: str = "<catalog>") -> Catalog:
    nodes = catalogfile.parse(text, path)
    version = None
    groups: dict[str, CompactGroupRec] = {}
    deferred = []
    for node in nodes:
        if node.key == "catalog_version":
            version = node.value
            continue
        if node.key not in _KNOWN_RECORDS:
            raise CatalogParseError(
                f"unknown record type '{node.key}'", node.line, path
            )
        if node.children is None:
            raise CatalogParseError(
                f"record '{node.key}' must be a block", node.line, path
            )
        if node.key == "group":
            rec = build_group(node)
            if rec.name in groups:
                raise CatalogParseError(
                    f"duplicate group '{rec.name}'", node.line, path
                )
            groups[rec.name] = rec
        else:
            deferred.append(node)
    if not isinstance(version, int):
        raise CatalogParseError("missing or non-integer catalog_version", 1, path)

    families: list[OrthRepFamily] = []
    spaces: dict[str, HomSpaceRec] = {}
    holonomies: dict[tuple[str, int], HolonomyRec] = {}
    for node in deferred:
        if node.key == "repfamily":
            fam = build_family(node)
            if fam.domain not in groups:
                raise CatalogParseError(
                    f"family {fam.name}: unknown domain {fam.domain}", node.line, path
                )
            try:
                fam.validate_against(groups[fam.domain])
            except ValueError as err:
                raise CatalogParseError(str(err), node.line, path) from err
            families.append(fam)
        elif node.key == "space":
            rec = build_space(node, groups)
            if rec.name in spaces:
                raise CatalogParseError(
                    f"duplicate space '{rec.name}'", node.line, path
                )
            spaces[rec.name] = rec
        elif node.key == "holonomy":
            rec = build_holonomy(node, groups)
            key = (rec.group, rec.m)
            if key in holonomies:
                raise CatalogParseError(
                    f"duplicate holonomy record {key}", node.line, path
                )
            holonomies[key] = rec

    catalog = Catalog(
        version=version,
        groups=groups,
        families=tuple(families),
        spaces=spaces,
        holonomies=holonomies,
        path=path,
    )
    _cross_validate(catalog)
    return catalog


def _cross_validate(catalog: Catalog):
    """Data/rule consistency: wherever the rule engine proves that only
    the zero homomorphism exists, the catalog must list no family."""
    for fam in catalog.families:
        algebra = catalog.groups[fam.domain].algebra
        if no_nontrivial_hom(algebra, fam.target_r):
            raise CatalogParseError(
                f"family {fam.name} at ({fam.domain}, {fam.target_r}) "
                f"contradicts the rule engine's non-existence proof",
                1,
                catalog.path,
            )


def load(path: str) -> Catalog:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), path)


_default: Catalog | None = None


def bundled_catalog_text() -> str:
    return (
        resources.files("spinr").joinpath("data/catalog.txt").read_text("utf-8")
    )


def load_default(path: str | None = None) -> Catalog:
    """Resolve the catalog: explicit path, else $SPINR_CATALOG, else the
    bundled data file (cached)."""
    global _default
    if path:
        return load(path)
    env = os.environ.get(ENV_CATALOG)
    if env:
        return load(env)
    if _default is None:
        _default = loads(bundled_catalog_text(), "<bundled>")
    return _default
