"""File formats: edge-list text, graph6, and coloring files."""

from __future__ import annotations

import os
from typing import Iterable

from .graphs import Graph


class FormatError(ValueError):
    """Malformed input file; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _data_lines(text: str) -> Iterable[tuple[int, str]]:
    """Yield (line_number, content) with comments and blanks stripped."""
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


# ---------------------------------------------------------------------------
# edge-list text format: header "n m", then m lines "u v"; '#' comments
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = list(_data_lines(text))
    if not lines:
        raise FormatError("empty edge-list file")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise FormatError(f"expected header 'n m', got {header!r}", lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise FormatError(f"expected integers in header, got {header!r}", lineno) from None
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header promises {m} edges but file has {len(body)} edge lines", lineno)
    pairs = []
    for lineno, line in body:
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"expected integer endpoints, got {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise FormatError(f"loop edge ({u}, {v})", lineno)
        pairs.append((u, v))
    return Graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# graph6 (ASCII encoding of simple undirected graphs)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return chr(126) + chr(126) + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    raise ValueError(f"graph6 cannot encode {n} vertices")


def _decode_size(data: str) -> tuple[int, str]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != chr(126):
        return ord(data[0]) - 63, data[1:]
    if len(data) >= 2 and data[1] == chr(126):
        chunk, rest = data[2:8], data[8:]
        if len(chunk) != 6:
            raise FormatError("truncated graph6 size field")
    else:
        chunk, rest = data[1:4], data[4:]
        if len(chunk) != 3:
            raise FormatError("truncated graph6 size field")
    n = 0
    for ch in chunk:
        n = (n << 6) | (ord(ch) - 63)
    return n, rest


def format_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        value = 0
        for b in bits[i : i + 6]:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return _encode_size(g.n) + "".join(chars)


def parse_graph6(line: str) -> Graph:
    data = line.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, rest = _decode_size(data)
    need = n * (n - 1) // 2
    bits = []
    for ch in rest:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise FormatError(f"invalid graph6 character {ch!r}")
        bits.extend((value >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if len(bits) < need:
        raise FormatError(f"graph6 body too short: {len(bits)} bits for {n} vertices")
    pairs = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                pairs.append((i, j))
            idx += 1
    return Graph(n, pairs)


# ---------------------------------------------------------------------------
# path-level helpers
# ---------------------------------------------------------------------------

def load_graph(path: str) -> Graph:
    ext = os.path.splitext(path)[1].lower()
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if ext in (".g6", ".graph6"):
        for _, line in _data_lines(text):
            return parse_graph6(line)
        raise FormatError("empty graph6 file")
    return parse_edge_list(text)


def save_graph(g: Graph, path: str) -> None:
    ext = os.path.splitext(path)[1].lower()
    text = format_graph6(g) + "\n" if ext in (".g6", ".graph6") else format_edge_list(g)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


# ---------------------------------------------------------------------------
# coloring files: one line per vertex "v c"; palette size inferred
# ---------------------------------------------------------------------------

def parse_coloring(text: str) -> dict[int, int]:
    assignment: dict[int, int] = {}
    for lineno, line in _data_lines(text):
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"expected 'vertex color', got {line!r}", lineno)
        try:
            v, c = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"expected integers, got {line!r}", lineno) from None
        if v in assignment:
            raise FormatError(f"vertex {v} assigned twice", lineno)
        if c < 1:
            raise FormatError(f"colors are 1-based, got {c}", lineno)
        assignment[v] = c
    return assignment


def format_coloring(assignment: dict[int, int]) -> str:
    return "".join(f"{v} {assignment[v]}\n" for v in sorted(assignment))
