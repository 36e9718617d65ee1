"""Command-line front end.

Four subcommands, each available as markdown (default) or JSON:

* ``table1``   -- recompute the homogeneous-sphere table and compare it
  against the bundled regression fixture (nonzero exit on any drift);
* ``classify`` -- invariant structures on one space at one twist rank;
* ``spin-type`` -- minimal twist rank of a space;
* ``holonomy`` -- tri-state holonomy lifting verdict.

Exit codes: 0 success, 1 verdict mismatch (table regression or
``--strict`` on a bounded result), 2 unknown name, 3 theorem-hypothesis
violation, 4 catalog parse error.
"""

from __future__ import annotations

import json
import sys
from importlib import resources

import click

from .catalog import Catalog, load_default
from .catalogfile import CatalogParseError
from .liecat import NotInCatalogError
from .spaces import (
    Classification,
    HolonomyVerdict,
    HypothesisError,
    classify as classify_op,
    holonomy_lift,
    invariant_spin_type,
)

EXIT_MISMATCH = 1
EXIT_UNKNOWN_NAME = 2
EXIT_HYPOTHESIS = 3
EXIT_CATALOG_ERROR = 4


def _load_catalog(path: str | None) -> Catalog:
    try:
        return load_default(path)
    except CatalogParseError as err:
        click.echo(f"catalog error: {err}", err=True)
        sys.exit(EXIT_CATALOG_ERROR)
    except OSError as err:
        click.echo(f"catalog error: {err}", err=True)
        sys.exit(EXIT_CATALOG_ERROR)


def _emit(record: dict, fmt: str, render_md):
    if fmt == "json":
        click.echo(json.dumps(record, ensure_ascii=False, sort_keys=True))
    else:
        click.echo(render_md(record))


# --- record builders -----------------------------------------------------------

def _class_dict(c) -> dict:
    return {
        "family": c.family,
        "label": c.label,
        "constraint": str(c.constraint) if c.constraint is not None else None,
        "extends_to": c.extends_to,
    }


def _rejected_dict(rej) -> list[dict]:
    return [
        {
            "family": r.family,
            "witnesses": [
                {"generator": g, "image": list(img)} for g, img in r.witnesses
            ],
        }
        for r in rej
    ]


def _classification_dict(c: Classification) -> dict:
    return {
        "classes": [_class_dict(x) for x in c.classes],
        "count": "infinite" if c.count is None else c.count,
        "complete": c.complete,
        "certificate": c.certificate,
        "rejected": _rejected_dict(c.rejected),
    }


def _citations(catalog: Catalog, space=None, families=()) -> list[str]:
    cites = []
    if space is not None:
        cites.append(f"{space.name}: {space.provenance}")
    seen = set()
    for fam_name in families:
        for fam in catalog.families:
            if fam.name == fam_name and fam.name not in seen:
                seen.add(fam.name)
                cites.append(f"{fam.name}: {fam.certificate}")
    return cites


# --- markdown renderers -----------------------------------------------------------

def _md_classification(record: dict) -> str:
    q = record["query"]
    res = record["result"]
    lines = [
        f"# Invariant structures on {q['space']} at twist rank {q['r']}",
        "",
        f"- stabiliser: {record['space']['H']} (inside {record['space']['G']}, "
        f"dimension {record['space']['n']})",
        f"- classes: {res['count']}",
        f"- complete: {res['complete']}",
    ]
    if res["classes"]:
        lines.append("")
        lines.append("| family | class | parameter |")
        lines.append("|---|---|---|")
        for c in res["classes"]:
            lines.append(
                f"| {c['family']} | {c['label'] or '-'} | {c['constraint'] or '-'} |"
            )
    if res["rejected"]:
        lines.append("")
        lines.append("Rejected families (generator, image outside the covering image):")
        for r in res["rejected"]:
            ws = ", ".join(
                f"{w['generator']} -> {tuple(w['image'])}" for w in r["witnesses"]
            )
            lines.append(f"- {r['family']}: {ws}")
    lines.append("")
    lines.append(f"Certificate: {res['certificate']}")
    if record["citations"]:
        lines.append("")
        lines.append("Citations:")
        lines.extend(f"- {c}" for c in record["citations"])
    return "\n".join(lines)


def _md_spin_type(record: dict) -> str:
    res = record["result"]
    if res["status"] == "exact":
        head = f"invariant spin type of {record['query']['space']} = {res['value']}"
    else:
        head = (
            f"invariant spin type of {record['query']['space']} in "
            f"[{res['lo']}, {res['hi']}] (bounded: enumeration incomplete)"
        )
    lines = [head, f"status: {res['status']}"]
    if res["witnesses"]:
        lines.append("witnesses at the upper end:")
        for c in res["witnesses"]:
            tag = c["label"] or c["constraint"] or ""
            lines.append(f"- {c['family']}" + (f" [{tag}]" if tag else ""))
    for cite in record["citations"]:
        lines.append(f"citation: {cite}")
    return "\n".join(lines)


def _md_holonomy(record: dict) -> str:
    q = record["query"]
    res = record["result"]
    lines = [
        f"holonomy {q['group']} on R^{q['m']} lifts at twist rank {q['r']}: "
        f"{res['verdict']}"
    ]
    if res["via"]:
        lines.append("via:")
        for c in res["via"]:
            tag = c["label"] or c["constraint"] or ""
            lines.append(f"- {c['family']}" + (f" [{tag}]" if tag else ""))
    lines.append(f"complete enumeration: {res['complete']}")
    return "\n".join(lines)


def _md_table1(record: dict) -> str:
    lines = [
        f"# {record['title']}",
        "",
        "| Space | Group | Invariant spin type | Checked instances |",
        "|---|---|---|---|",
    ]
    for row in record["rows"]:
        inst = ", ".join(
            f"{i['space']} -> {i['computed']}" for i in row["instances"]
        )
        lines.append(
            f"| {row['space']} | {row['group']} | {row['spin_type']} | {inst} |"
        )
    lines.append("")
    lines.append(f"regression match: {record['match']}")
    return "\n".join(lines)


# --- commands ------------------------------------------------------------------------

@click.group()
@click.option(
    "--catalog",
    "catalog_path",
    type=click.Path(),
    default=None,
    envvar="SPINR_CATALOG",
    help="Path to a catalog file (default: bundled; also $SPINR_CATALOG).",
)
@click.pass_context
def main(ctx, catalog_path):
    """Exact decisions about invariant spin^r structures on homogeneous
    spaces."""
    ctx.ensure_object(dict)
    ctx.obj["catalog_path"] = catalog_path


def _format_option(fn):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["md", "json"]),
        default="md",
        help="Output format.",
    )(fn)


@main.command()
@_format_option
@click.pass_context
def table1(ctx, fmt):
    """Recompute the homogeneous-sphere table and diff it against the
    bundled regression fixture."""
    catalog = _load_catalog(ctx.obj["catalog_path"])
    fixture = json.loads(
        resources.files("spinr")
        .joinpath("data/table1_expected.json")
        .read_text("utf-8")
    )
    rows = []
    mismatches = []
    for row in fixture["rows"]:
        out_row = {
            "space": row["space"],
            "group": row["group"],
            "spin_type": row["spin_type"],
            "instances": [],
        }
        for name, expected in row["instances"]:
            try:
                res = invariant_spin_type(catalog, catalog.space(name))
            except NotInCatalogError as err:
                click.echo(str(err), err=True)
                sys.exit(EXIT_UNKNOWN_NAME)
            computed = res.lo if res.status == "exact" else None
            out_row["instances"].append(
                {
                    "space": name,
                    "computed": computed,
                    "expected": expected,
                    "status": res.status,
                }
            )
            if computed != expected:
                mismatches.append(
                    f"{name}: computed {computed} ({res.status}), "
                    f"expected {expected}"
                )
        rows.append(out_row)
    record = {
        "command": "table1",
        "title": fixture["title"],
        "rows": rows,
        "match": not mismatches,
    }
    _emit(record, fmt, _md_table1)
    if mismatches:
        click.echo("", err=True)
        click.echo("table regression FAILED:", err=True)
        for m in mismatches:
            click.echo(f"  {m}", err=True)
        sys.exit(EXIT_MISMATCH)


def _resolve_space(catalog: Catalog, name: str):
    try:
        return catalog.space(name)
    except NotInCatalogError as err:
        click.echo(str(err), err=True)
        sys.exit(EXIT_UNKNOWN_NAME)


@main.command()
@click.argument("space")
@click.option("--r", "r", type=int, required=True, help="Twist rank r >= 1.")
@_format_option
@click.pass_context
def classify(ctx, space, r, fmt):
    """Classify invariant structures on SPACE (e.g. 'S4:SO(5)') at
    twist rank r."""
    catalog = _load_catalog(ctx.obj["catalog_path"])
    rec = _resolve_space(catalog, space)
    try:
        result = classify_op(catalog, rec, r)
    except HypothesisError as err:
        click.echo(
            f"hypothesis violation: {err} (the classification theorem "
            f"requires a connected stabiliser)",
            err=True,
        )
        sys.exit(EXIT_HYPOTHESIS)
    record = {
        "command": "classify",
        "query": {"space": rec.name, "r": r},
        "space": {"name": rec.name, "G": rec.G, "H": rec.H, "n": rec.n},
        "result": _classification_dict(result),
        "citations": _citations(
            catalog, rec, [c.family for c in result.classes]
        ),
    }
    _emit(record, fmt, _md_classification)


@main.command(name="spin-type")
@click.argument("space")
@click.option(
    "--strict",
    is_flag=True,
    help="Treat a bounded (non-exact) result as failure (exit 1).",
)
@_format_option
@click.pass_context
def spin_type(ctx, space, strict, fmt):
    """Minimal twist rank of SPACE admitting an invariant structure."""
    catalog = _load_catalog(ctx.obj["catalog_path"])
    rec = _resolve_space(catalog, space)
    try:
        res = invariant_spin_type(catalog, rec)
    except HypothesisError as err:
        click.echo(f"hypothesis violation: {err}", err=True)
        sys.exit(EXIT_HYPOTHESIS)
    record = {
        "command": "spin-type",
        "query": {"space": rec.name},
        "result": {
            "status": res.status,
            "value": res.value,
            "lo": res.lo,
            "hi": res.hi,
            "witnesses": [_class_dict(c) for c in res.witnesses],
        },
        "citations": _citations(catalog, rec, [c.family for c in res.witnesses]),
    }
    _emit(record, fmt, _md_spin_type)
    if strict and res.status != "exact":
        sys.exit(EXIT_MISMATCH)


@main.command()
@click.argument("group")
@click.option("--m", "m", type=int, required=True, help="Manifold dimension.")
@click.option("--r", "r", type=int, required=True, help="Twist rank.")
@_format_option
@click.pass_context
def holonomy(ctx, group, m, r, fmt):
    """Does the holonomy representation of GROUP on R^m lift at twist
    rank r?  Prints yes/no/unknown."""
    catalog = _load_catalog(ctx.obj["catalog_path"])
    try:
        verdict: HolonomyVerdict = holonomy_lift(catalog, group, m, r)
    except NotInCatalogError as err:
        click.echo(str(err), err=True)
        sys.exit(EXIT_UNKNOWN_NAME)
    hol = catalog.holonomy(group, m)
    record = {
        "command": "holonomy",
        "query": {"group": hol.group, "m": m, "r": r},
        "result": {
            "verdict": verdict.verdict,
            "via": [_class_dict(c) for c in verdict.via],
            "complete": verdict.complete,
            "certificate": verdict.certificate,
            "rejected": _rejected_dict(verdict.rejected),
        },
        "citations": [f"{hol.group} (m={hol.m}): {hol.provenance}"],
    }
    _emit(record, fmt, _md_holonomy)


if __name__ == "__main__":
    main()
