"""Plain-text formats for hypergraphs, colorings, and power layouts.

Hypergraph files: optional '#' comment lines, a `uniform <m>` header, a
`vertices <n>` line, then one edge per line as m space-separated 1-based
indices. Coloring files: `modulus <m>` then one integer per vertex in
index order. Writers emit canonical form; reading a canonical file and
writing it back reproduces it byte for byte.
"""

from __future__ import annotations

import os
from typing import Iterator

from .errors import FileFormatError
from .hypergraph import Hypergraph, build_hypergraph
from .power import PowerLayout
from .symmetry import Coloring


def _significant_lines(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def _header_value(line: str, number: int, keyword: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FileFormatError(f"expected '{keyword} <value>', got {line!r}", number)
    try:
        value = int(parts[1])
    except ValueError:
        raise FileFormatError(f"{keyword} value {parts[1]!r} is not an integer", number)
    return value


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse hypergraph text; all failures carry a 1-based line number."""
    lines = _significant_lines(text)
    try:
        number, line = next(lines)
    except StopIteration:
        raise FileFormatError("empty file, expected 'uniform <m>' header", 1)
    uniformity = _header_value(line, number, "uniform")
    try:
        number, line = next(lines)
    except StopIteration:
        raise FileFormatError("missing 'vertices <n>' line", number)
    vertex_count = _header_value(line, number, "vertices")
    if uniformity < 2:
        raise FileFormatError(f"uniformity must be >= 2, got {uniformity}", number)
    if vertex_count < uniformity:
        raise FileFormatError(
            f"vertex count {vertex_count} is below uniformity {uniformity}", number
        )
    edges = []
    seen: dict[tuple[int, ...], int] = {}
    for number, line in lines:
        try:
            edge = [int(tok) for tok in line.split()]
        except ValueError:
            raise FileFormatError(f"edge line is not all integers: {line!r}", number)
        if len(edge) != uniformity:
            raise FileFormatError(
                f"edge has {len(edge)} vertices, expected {uniformity}", number
            )
        if len(set(edge)) != uniformity:
            raise FileFormatError("edge repeats a vertex", number)
        if min(edge) < 1 or max(edge) > vertex_count:
            raise FileFormatError(
                f"vertex index outside [1, {vertex_count}]", number
            )
        key = tuple(sorted(edge))
        if key in seen:
            raise FileFormatError(
                f"duplicate of the edge on line {seen[key]}", number
            )
        seen[key] = number
        edges.append(edge)
    return build_hypergraph(uniformity, vertex_count, edges)


def format_hypergraph(graph: Hypergraph) -> str:
    lines = [f"uniform {graph.uniformity}", f"vertices {graph.vertex_count}"]
    lines.extend(" ".join(str(v) for v in edge) for edge in graph.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path: str | os.PathLike) -> Hypergraph:
    with open(path, encoding="utf-8") as handle:
        return parse_hypergraph(handle.read())


def write_hypergraph(graph: Hypergraph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_hypergraph(graph))


def parse_coloring(text: str) -> Coloring:
    lines = _significant_lines(text)
    try:
        number, line = next(lines)
    except StopIteration:
        raise FileFormatError("empty file, expected 'modulus <m>' header", 1)
    modulus = _header_value(line, number, "modulus")
    if modulus < 2:
        raise FileFormatError(f"modulus must be >= 2, got {modulus}", number)
    values = []
    for number, line in lines:
        try:
            value = int(line)
        except ValueError:
            raise FileFormatError(f"expected one integer, got {line!r}", number)
        if not 0 <= value < modulus:
            raise FileFormatError(
                f"value {value} outside [0, {modulus - 1}]", number
            )
        values.append(value)
    if not values:
        raise FileFormatError("coloring lists no vertex values", number)
    return Coloring(modulus, values)


def format_coloring(coloring: Coloring) -> str:
    lines = [f"modulus {coloring.modulus}"]
    lines.extend(str(v) for v in coloring.values)
    return "\n".join(lines) + "\n"


def read_coloring(path: str | os.PathLike) -> Coloring:
    with open(path, encoding="utf-8") as handle:
        return parse_coloring(handle.read())


def write_coloring(coloring: Coloring, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_coloring(coloring))


def format_layout(layout: PowerLayout) -> str:
    lines = [
        f"base_uniformity {layout.base_uniformity}",
        f"blowup {layout.blowup}",
        f"uniformity {layout.uniformity}",
    ]
    for v, block in enumerate(layout.vertex_blocks, start=1):
        lines.append(f"vertex {v}: " + " ".join(str(u) for u in block))
    for j, block in enumerate(layout.edge_blocks, start=1):
        if block:
            lines.append(f"edge {j}: " + " ".join(str(u) for u in block))
    return "\n".join(lines) + "\n"


def write_layout(layout: PowerLayout, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_layout(layout))
