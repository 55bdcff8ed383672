"""JSON coloring documents and DOT export."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import FormatError
from .hypercube import Coloring, edge_from_index

SCHEMA_VERSION = "cube-palette/1"
FIELDS = ("schema_version", "n", "k", "mode", "colors", "provenance")

# Fill colors for DOT output, cycled when k exceeds the list.
DOT_COLORS = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3",
)


def to_document(c: Coloring, provenance: str = "") -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": c.n,
        "k": c.k,
        "mode": c.mode,
        "colors": [int(x) for x in c.colors],
        "provenance": provenance,
    }


def dumps(c: Coloring, provenance: str = "") -> str:
    doc = to_document(c, provenance)
    # one line per field keeps diffs readable; the color list stays on one line
    body = ",\n".join(f"  {json.dumps(key)}: {json.dumps(doc[key])}" for key in FIELDS)
    return "{\n" + body + "\n}\n"


def from_document(doc) -> tuple[Coloring, str]:
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    missing = [f for f in FIELDS if f not in doc]
    if missing:
        raise FormatError(f"missing fields: {', '.join(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise FormatError(f"unsupported schema_version {doc['schema_version']!r}")
    n, k, colors = doc["n"], doc["k"], doc["colors"]
    if not isinstance(n, int) or not isinstance(k, int) or isinstance(n, bool) or isinstance(k, bool):
        raise FormatError("n and k must be integers")
    if not isinstance(colors, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in colors):
        raise FormatError("colors must be a list of integers")
    if not isinstance(doc["provenance"], str):
        raise FormatError("provenance must be a string")
    try:
        c = Coloring(n, k, doc["mode"], np.array(colors, dtype=np.int64))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    return c, doc["provenance"]


def loads(text: str) -> tuple[Coloring, str]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def write_document(path: str | Path, c: Coloring, provenance: str = "") -> None:
    Path(path).write_text(dumps(c, provenance))


def read_document(path: str | Path) -> tuple[Coloring, str]:
    return loads(Path(path).read_text())


def vertex_label(n: int, v: int) -> str:
    """Binary string with coordinate 1 first, e.g. vertex 2 of H2 is '01'."""
    return "".join(str(v >> i & 1) for i in range(n))


def to_dot(c: Coloring, name: str | None = None) -> str:
    name = name or f"H{c.n}"
    lines = [f"graph {name} {{"]
    for idx, col in enumerate(c.colors):
        u, w = edge_from_index(c.n, idx).endpoints()
        fill = DOT_COLORS[(int(col) - 1) % len(DOT_COLORS)]
        lines.append(
            f'  "{vertex_label(c.n, u)}" -- "{vertex_label(c.n, w)}" '
            f'[label="{int(col)}", color="{fill}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
