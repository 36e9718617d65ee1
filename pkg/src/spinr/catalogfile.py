"""Parser for the catalog text format.

The format is line oriented and deliberately small::

    # comment
    catalog_version: 1

    group {
      name: "SO(4)"
      pi1 {
        free_rank: 0
        torsion: [2]
        generators: ["alpha"]
      }
      ...
    }

Each line is one of: ``key: value``, ``key {`` opening a block, ``}``
closing it, or blank/comment.  Values are integers, ``true``/``false``,
quoted strings, bare words, or a one-line list ``[a, b, c]`` of those.
Repeated keys inside a block are kept in order (used for ``ideal``
blocks).  Every node remembers its line number so that validation
errors can point at the offending line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class CatalogParseError(ValueError):
    """Syntax or validation error in a catalog file, with a line number."""

    def __init__(self, message: str, line: int, path: str = "<catalog>"):
        self.line = line
        self.path = path
        super().__init__(f"{path}:{line}: {message}")


Scalar = str | int | bool


@dataclass
class Node:
    """One ``key: value`` entry or one ``key { ... }`` block."""

    key: str
    line: int
    value: Scalar | list[Scalar] | None = None
    children: list["Node"] | None = None

    # -- convenience accessors used by the typed loaders --------------

    def items(self, key: str) -> list["Node"]:
        return [c for c in self.children or [] if c.key == key]

    def child(self, key: str, required: bool = True) -> "Node | None":
        found = self.items(key)
        if len(found) > 1:
            raise CatalogParseError(f"duplicate key '{key}'", found[1].line)
        if not found:
            if required:
                raise CatalogParseError(f"missing key '{key}'", self.line)
            return None
        return found[0]

    def get(self, key: str, default=None):
        node = self.child(key, required=False)
        return default if node is None else node.value

    def require(self, key: str):
        node = self.child(key)
        if node.value is None:
            raise CatalogParseError(f"'{key}' must carry a value", node.line)
        return node.value

    def require_str(self, key: str) -> str:
        v = self.require(key)
        if not isinstance(v, str):
            raise CatalogParseError(
                f"'{key}' must be a string, got {v!r}", self.child(key).line
            )
        return v

    def require_int(self, key: str) -> int:
        v = self.require(key)
        if isinstance(v, bool) or not isinstance(v, int):
            raise CatalogParseError(
                f"'{key}' must be an integer, got {v!r}", self.child(key).line
            )
        return v

    def require_list(self, key: str) -> list[Scalar]:
        node = self.child(key)
        if not isinstance(node.value, list):
            raise CatalogParseError(
                f"'{key}' must be a list, got {node.value!r}", node.line
            )
        return node.value

    def str_list(self, key: str) -> list[str]:
        vals = self.require_list(key)
        node = self.child(key)
        for v in vals:
            if not isinstance(v, str):
                raise CatalogParseError(
                    f"'{key}' entries must be strings, got {v!r}", node.line
                )
        return list(vals)


_OPEN_RE = re.compile(r"^([A-Za-z_][\w-]*)\s*\{$")
_PAIR_RE = re.compile(r"^([A-Za-z_][\w-]*)\s*:\s*(.+)$")
_INT_RE = re.compile(r"^-?\d+$")


def _strip_comment(line: str) -> str:
    out = []
    quoted = False
    for ch in line:
        if ch == '"':
            quoted = not quoted
        if ch == "#" and not quoted:
            break
        out.append(ch)
    return "".join(out).strip()


def _parse_scalar(text: str, line: int) -> Scalar:
    text = text.strip()
    if not text:
        raise CatalogParseError("empty value", line)
    if text.startswith('"'):
        if not text.endswith('"') or len(text) < 2:
            raise CatalogParseError(f"unterminated string {text!r}", line)
        return text[1:-1]
    if _INT_RE.match(text):
        return int(text)
    if text == "true":
        return True
    if text == "false":
        return False
    if '"' in text or "[" in text or "]" in text:
        raise CatalogParseError(f"malformed value {text!r}", line)
    return text


def _split_list_items(body: str, line: int) -> list[str]:
    items, cur, quoted = [], [], False
    for ch in body:
        if ch == '"':
            quoted = not quoted
            cur.append(ch)
        elif ch == "," and not quoted:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if quoted:
        raise CatalogParseError("unterminated string in list", line)
    items.append("".join(cur))
    items = [s.strip() for s in items]
    if items == [""]:
        return []
    return items


def _parse_value(text: str, line: int) -> Scalar | list[Scalar]:
    text = text.strip()
    if text.startswith("["):
        if not text.endswith("]"):
            raise CatalogParseError(f"unterminated list {text!r}", line)
        return [
            _parse_scalar(item, line)
            for item in _split_list_items(text[1:-1], line)
        ]
    return _parse_scalar(text, line)


def parse(text: str, path: str = "<catalog>") -> list[Node]:
    """Parse catalog text into a list of top-level nodes."""
    root = Node(key="<root>", line=0, children=[])
    stack = [root]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if line == "}":
            if len(stack) == 1:
                raise CatalogParseError("unmatched '}'", lineno, path)
            stack.pop()
            continue
        m = _OPEN_RE.match(line)
        if m:
            node = Node(key=m.group(1), line=lineno, children=[])
            stack[-1].children.append(node)
            stack.append(node)
            continue
        m = _PAIR_RE.match(line)
        if m:
            try:
                value = _parse_value(m.group(2), lineno)
            except CatalogParseError as err:
                raise CatalogParseError(str(err).split(": ", 1)[1], lineno, path)
            stack[-1].children.append(
                Node(key=m.group(1), line=lineno, value=value)
            )
            continue
        raise CatalogParseError(f"cannot parse line {raw.strip()!r}", lineno, path)
    if len(stack) > 1:
        raise CatalogParseError("unclosed block", stack[-1].line, path)
    return root.children
