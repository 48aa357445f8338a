"""graph6 codec, graph6 file ingest and DOT export.

graph6 packs the upper triangle of the adjacency matrix six bits per
printable byte, offset by 63.  The bit packing is networkx's; this module
adds byte-offset error reporting and the one-byte size limit (order <= 62).
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from pathlib import Path

import networkx as nx

from core.errors import Graph6ParseError, SizeLimitError
from core.graph_ops import from_networkx, to_networkx
from core.models import Graph

logger = logging.getLogger(__name__)

HEADER = ">>graph6<<"
MAX_ORDER = 62


def _validate(data: str, start: int) -> None:
    """Byte-level checks that locate the offending offset before decoding."""
    if len(data) <= start:
        raise Graph6ParseError("Empty graph6 string", start)
    for i in range(start, len(data)):
        if not 63 <= ord(data[i]) <= 126:
            raise Graph6ParseError(f"Character {data[i]!r} outside the graph6 range 63..126", i)
    if ord(data[start]) == 126:
        raise Graph6ParseError(f"Orders above {MAX_ORDER} are not supported", start)

    n = ord(data[start]) - 63
    bit_count = n * (n - 1) // 2
    body = data[start + 1 :]
    expected = (bit_count + 5) // 6
    if len(body) != expected:
        offset = start + 1 + min(len(body), expected)
        raise Graph6ParseError(
            f"Expected {expected} data bytes for order {n}, got {len(body)}", offset
        )
    padding = -bit_count % 6
    if body and (ord(body[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6ParseError("Nonzero padding bits", start + len(body))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string.

    Raises:
        Graph6ParseError: On a bad size byte, wrong length, a byte outside
            63..126 or nonzero padding bits; the error carries the byte offset.
    """
    data = text.strip()
    start = len(HEADER) if data.startswith(HEADER) else 0
    _validate(data, start)
    try:
        h = nx.from_graph6_bytes(data[start:].encode("ascii"))
    except nx.NetworkXError as exc:
        raise Graph6ParseError(str(exc), start) from exc
    return from_networkx(h)


def encode_graph6(g: Graph) -> str:
    """graph6 text for g (no header).

    Raises:
        SizeLimitError: If g has more than 62 vertices.
    """
    if g.order > MAX_ORDER:
        raise SizeLimitError(f"graph6 encoding supports order <= {MAX_ORDER}, got {g.order}")
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Graphs from graph6 lines; blank lines are skipped."""
    for line in lines:
        text = line.strip()
        if text:
            yield parse_graph6(text)


def read_graph6_file(path: Path) -> list[Graph]:
    """All graphs in a graph6 file (one per line), e.g. output of an external generator."""
    with open(path) as f:
        graphs = list(iter_graph6_lines(f))
    logger.info("Read %d graphs from %s", len(graphs), path)
    return graphs


def write_graph6_file(graphs: Iterable[Graph], path: Path) -> int:
    count = 0
    with open(path, "w") as f:
        for g in graphs:
            f.write(encode_graph6(g) + "\n")
            count += 1
    return count


def to_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    """Graphviz DOT text; isolated vertices are listed so they render."""
    lines = [f"graph {name} {{"]
    for v in range(g.order):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
