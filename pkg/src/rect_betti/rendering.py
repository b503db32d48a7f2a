"""
Text, JSON and CSV renderings of job results.

All renderings are deterministic: entries are sorted and JSON is dumped
with sorted keys.
"""

import csv
import io
import json
from typing import Dict, List

from .contexts import ResultContext
from .rep_ring import BettiTable, EquivariantPolynomial, SchurLabel
from .schema import EquivariantTermSchema


def dumps(value) -> str:
    return json.dumps(value, sort_keys=True, indent=2) + "\n"


def format_label(label: SchurLabel) -> str:
    return f"({label.row},{label.col})"


def equivariant_terms(polynomial: EquivariantPolynomial) -> List[dict]:
    return [
        EquivariantTermSchema(
            row=label.row.to_json(), col=label.col.to_json(), z=z, w=w, mult=mult
        ).model_dump()
        for label, z, w, mult in polynomial.terms()
    ]


def _grid(cells: Dict[tuple, str], rows: List, columns: List[int]) -> List[str]:
    """Right-aligned grid keyed by (row, column); '-' marks empty cells.

    ``rows`` holds (label, key) pairs; the column header is i.
    """
    widths = {
        i: max([len(str(i))] + [len(cells.get((key, i), "-")) for _, key in rows])
        for i in columns
    }
    margin = max(len(label) for label, _ in rows)
    lines = [" " * margin + "".join(f" {str(i).rjust(widths[i])}" for i in columns)]
    for label, key in rows:
        lines.append(
            label.rjust(margin)
            + "".join(f" {cells.get((key, i), '-').rjust(widths[i])}" for i in columns)
        )
    return lines


def render_table(table: BettiTable) -> str:
    """Betti table with a total row, then rows j - i against columns i."""
    if not len(table):
        return "(zero table)\n"
    entries = table.items()
    columns = list(range(table.projective_dimension + 1))
    low = min(j - i for (i, j), _ in entries)
    cells = {(j - i, i): str(value) for (i, j), value in entries}
    for i in columns:
        cells[("total", i)] = str(sum(v for (ii, _), v in entries if ii == i))
    rows = [("total:", "total")] + [
        (f"{r}:", r) for r in range(low, table.regularity + 1)
    ]
    return "\n".join(_grid(cells, rows, columns)) + "\n"


def render_equivariant(polynomial: EquivariantPolynomial) -> str:
    """Labeled entries in the Betti table layout (rows j - i, columns i)."""
    if polynomial.is_zero():
        return "(zero)\n"
    cells: Dict[tuple, List[str]] = {}
    for label, z, w, mult in polynomial.terms():
        text = format_label(label) if mult == 1 else f"{mult}*{format_label(label)}"
        cells.setdefault((z - w, w), []).append(text)
    rows = [(f"{r}:", r) for r in sorted({r for r, _ in cells})]
    columns = list(range(max(i for _, i in cells) + 1))
    joined = {key: " + ".join(sorted(texts)) for key, texts in cells.items()}
    return "\n".join(_grid(joined, rows, columns)) + "\n"


def render_strands(strands: Dict[int, EquivariantPolynomial]) -> str:
    parts = []
    for q, strand in sorted(strands.items()):
        parts.append(f"strand q={q}:\n")
        parts.append(render_equivariant(strand))
    return "".join(parts)


def render_differences(context: ResultContext) -> str:
    differences = context.diff()
    if not differences:
        return "formula and oracle agree on the window\n"
    lines = ["formula and oracle differ:"]
    for i, j, left, right in differences:
        lines.append(f"  (i={i}, j={j}): formula={left} oracle={right}")
    return "\n".join(lines) + "\n"


def render_pretty(context: ResultContext) -> str:
    spec = context.spec
    parts = [
        f"I_{{{spec.a}x{spec.b}}} on {spec.m}x{spec.n} matrices "
        f"(i <= {context.window.max_i}, j <= {context.window.max_j})\n"
    ]
    for entry in context.history:
        parts.append(f"\n{entry.engine}:\n")
        parts.append(render_table(entry.table))
        if entry.polynomial is not None:
            parts.append("\nequivariant:\n")
            parts.append(render_equivariant(entry.polynomial))
            if context.strands is not None:
                parts.append("\nby strand:\n")
                parts.append(render_strands(context.strands))
    if spec.mode == "compare":
        parts.append("\n" + render_differences(context))
    return "".join(parts)


def render_json(context: ResultContext) -> str:
    spec = context.spec
    result = {
        "a": spec.a,
        "b": spec.b,
        "m": spec.m,
        "n": spec.n,
        "mode": spec.mode,
        "window": {"max_i": context.window.max_i, "max_j": context.window.max_j},
        "tables": {entry.engine: entry.data for entry in context.history},
    }
    for entry in context.history:
        if entry.polynomial is not None:
            result["equivariant"] = equivariant_terms(entry.polynomial)
    if context.strands is not None:
        result["strands"] = {
            str(q): equivariant_terms(strand) for q, strand in context.strands.items()
        }
    if spec.mode == "compare":
        result["match"] = context.is_match
        result["differences"] = [
            {"i": i, "j": j, "formula": left, "oracle": right}
            for i, j, left, right in context.diff()
        ]
    return dumps(result)


def render_csv(context: ResultContext) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["engine", "i", "j", "value"])
    for entry in context.history:
        for (i, j), value in entry.table.items():
            writer.writerow([entry.engine, i, j, value])
    return buffer.getvalue()


def render(context: ResultContext) -> str:
    renderers = {"pretty": render_pretty, "json": render_json, "csv": render_csv}
    return renderers[context.spec.format](context)
