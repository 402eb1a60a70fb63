"""Serialization: the psts/1 text format, a JSON mirror, and DOT emitters.

psts/1 layout::

    psts <num_points> <num_lines>
    <p> <q> <r>          (one line per triple, 0-based ids, sorted)
    # label <id> <name>  (optional; all points or none; name runs to EOL)

All emitters produce byte-stable output for equal configurations.
"""

from __future__ import annotations

import json
from typing import Optional

from .incidence import Config, make_config

FORMAT_NAME = "psts"


def emit_psts(config: Config) -> str:
    out = [f"{FORMAT_NAME} {config.num_points} {len(config.lines)}"]
    for L in config.lines:
        out.append(" ".join(str(x) for x in L))
    if config.labels is not None:
        for i, name in enumerate(config.labels):
            out.append(f"# label {i} {name}")
    return "\n".join(out) + "\n"


def parse_psts(text: str) -> Config:
    header: Optional[tuple[int, int]] = None
    lines: list[tuple[int, int, int]] = []
    labels: dict[int, str] = {}
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            parts = stripped[1:].strip().split(maxsplit=2)
            if len(parts) >= 3 and parts[0] == "label":
                labels[int(parts[1])] = parts[2]
            continue
        if header is None:
            fields = stripped.split()
            if len(fields) != 3 or fields[0] != FORMAT_NAME:
                raise ValueError(f"bad header {stripped!r}; expected '{FORMAT_NAME} <points> <lines>'")
            header = (int(fields[1]), int(fields[2]))
            continue
        pts = stripped.split()
        if len(pts) != 3:
            raise ValueError(f"bad line {stripped!r}; expected three point ids")
        lines.append(tuple(int(x) for x in pts))
    if header is None:
        raise ValueError("missing header")
    nu, b = header
    if len(lines) != b:
        raise ValueError(f"expected {b} lines, found {len(lines)}")
    label_tuple: Optional[tuple[str, ...]] = None
    if labels:
        if sorted(labels) != list(range(nu)):
            raise ValueError("label comments must cover every point exactly once or be absent")
        label_tuple = tuple(labels[i] for i in range(nu))
    return make_config(nu, lines, label_tuple)


def emit_json(config: Config) -> str:
    doc = {
        "num_points": config.num_points,
        "lines": [list(L) for L in config.lines],
        "labels": list(config.labels) if config.labels is not None else None,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_json(text: str) -> Config:
    doc = json.loads(text)
    return make_config(doc["num_points"], doc["lines"], doc.get("labels"))


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(config: Config) -> str:
    """Levi graph: one circle node per point, one square node per line,
    an edge for each incidence."""
    out = ["graph levi {", "  node [shape=circle];"]
    for i in range(config.num_points):
        out.append(f"  p{i} [label={_quote(config.label_of(i))}];")
    for j in range(len(config.lines)):
        out.append(f'  l{j} [shape=box, label="", width=0.12, height=0.12];')
    for j, L in enumerate(config.lines):
        for x in L:
            out.append(f"  p{x} -- l{j};")
    out.append("}")
    return "\n".join(out) + "\n"


def emit_stp_dot(diagram, config: Config) -> str:
    """Three-row schema drawing: each row of three points forms a triangle,
    and cross-row joins (edges whose joins concur at a shared point) are
    drawn dashed, labeled with the point of concurrence.

    ``diagram.rows`` is a 3x3 grid of point ids; ``diagram.matching`` lists
    ((row, col), (row', col'), apex_point) cross-row joined pairs.
    """
    rows = diagram.rows
    out = ["graph stp {", "  layout=neato;", "  node [shape=circle];"]
    for r, row in enumerate(rows):
        for k, point in enumerate(row):
            name = config.label_of(point)
            out.append(
                f'  n{r}_{k} [label={_quote(name)}, pos="{2.0 * k:.1f},{-1.6 * r:.1f}!"];'
            )
    for r in range(3):
        out.append(f"  n{r}_0 -- n{r}_1;")
        out.append(f"  n{r}_1 -- n{r}_2;")
        out.append(f"  n{r}_0 -- n{r}_2;")
    for (r1, k1), (r2, k2), apex in diagram.matching:
        out.append(
            f"  n{r1}_{k1} -- n{r2}_{k2} [style=dashed, label={_quote(config.label_of(apex))}];"
        )
    out.append("}")
    return "\n".join(out) + "\n"
