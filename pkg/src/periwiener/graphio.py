"""Edge-list and graph6 parsing and serialization.

Edge-list format: first non-comment line is the vertex count, every later
non-comment line is "u v" with 0-based endpoints; '#' starts a comment line.

graph6: printable-ASCII encoding of the upper-triangle adjacency bits in
column order (0,1),(0,2),(1,2),(0,3),...  Short form covers n <= 62, the
4-byte long form is accepted and emitted for 63 <= n <= 258.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import (
    EdgeListSyntaxError,
    MalformedGraph6Error,
    SelfLoopError,
    TooLargeError,
    VertexRangeError,
)
from .graphs import Graph, build_graph

MAX_GRAPH6_ORDER = 258


@dataclass(frozen=True, slots=True)
class EdgeListDocument:
    """Parsed edge-list text: declared order, edges in file order, comments."""

    n: int
    edges: tuple[tuple[int, int], ...]
    comments: tuple[str, ...]


def _as_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EdgeListSyntaxError(0, f"input is not UTF-8 ({exc.reason})") from None
    return data


def read_edge_list_document(data: str | bytes) -> EdgeListDocument:
    """Parse edge-list text into a document, validating as it goes."""
    text = _as_text(data)
    n: int | None = None
    edges: list[tuple[int, int]] = []
    comments: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line)
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not _is_int(fields[0]):
                raise EdgeListSyntaxError(lineno, "expected the vertex count")
            n = int(fields[0])
            if n < 1:
                raise VertexRangeError(f"line {lineno}: vertex count must be >= 1, got {n}")
            continue
        if len(fields) != 2 or not all(_is_int(f) for f in fields):
            raise EdgeListSyntaxError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise EdgeListSyntaxError(0, "no vertex count found")
    return EdgeListDocument(n=n, edges=tuple(edges), comments=tuple(comments))


def _is_int(s: str) -> bool:
    if s.startswith("-"):
        s = s[1:]
    return s.isdigit()


def parse_edge_list(data: str | bytes) -> Graph:
    doc = read_edge_list_document(data)
    return build_graph(doc.n, doc.edges)


def write_edge_list(g: Graph, comments: tuple[str, ...] = ()) -> str:
    lines = list(comments)
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# --- graph6 ---------------------------------------------------------------

_HEADER = ">>graph6<<"


def _pair_order(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _decode_order(payload: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed by the order field)."""
    if not payload:
        raise MalformedGraph6Error("empty record")
    b0 = payload[0]
    if not 63 <= b0 <= 126:
        raise MalformedGraph6Error(f"byte {b0} outside graph6 range 63..126")
    if b0 != 126:
        return b0 - 63, 1
    if len(payload) < 4:
        raise MalformedGraph6Error("truncated long-form order field")
    if payload[1] == 126:
        raise MalformedGraph6Error("order exceeds supported maximum 258")
    n = 0
    for b in payload[1:4]:
        if not 63 <= b <= 126:
            raise MalformedGraph6Error(f"byte {b} outside graph6 range 63..126")
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise MalformedGraph6Error(f"non-canonical long-form order {n}")
    return n, 4


def parse_graph6(data: str | bytes) -> Graph:
    """Parse a single graph6 record (an optional '>>graph6<<' header is fine)."""
    if isinstance(data, str):
        try:
            payload = data.encode("ascii")
        except UnicodeEncodeError:
            raise MalformedGraph6Error("record contains non-ASCII characters") from None
    else:
        payload = bytes(data)
    payload = payload.strip()
    if payload.startswith(_HEADER.encode("ascii")):
        payload = payload[len(_HEADER):].strip()
    n, used = _decode_order(payload)
    if n == 0:
        raise MalformedGraph6Error("order 0 is not representable as a Graph")
    if n > MAX_GRAPH6_ORDER:
        raise MalformedGraph6Error(f"order {n} exceeds supported maximum {MAX_GRAPH6_ORDER}")
    body = payload[used:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")
    edges: list[tuple[int, int]] = []
    pairs = _pair_order(n)
    bit = 0
    for b in body:
        if not 63 <= b <= 126:
            raise MalformedGraph6Error(f"byte {b} outside graph6 range 63..126")
        val = b - 63
        for k in range(6):
            if (val >> (5 - k)) & 1:
                if bit >= nbits:
                    raise MalformedGraph6Error("nonzero padding bits")
                edges.append(pairs[bit])
            bit += 1
    return build_graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Canonical graph6 record for g; inverse of parse_graph6."""
    n = g.n
    if n > MAX_GRAPH6_ORDER:
        raise TooLargeError(f"graph6 writer supports n <= {MAX_GRAPH6_ORDER}, got {n}")
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = ["~", chr(63 + ((n >> 12) & 63)), chr(63 + ((n >> 6) & 63)), chr(63 + (n & 63))]
    masks = g.adjacency_masks()
    nbits = n * (n - 1) // 2
    val = 0
    filled = 0
    bit = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            val = (val << 1) | ((mj >> i) & 1)
            filled += 1
            bit += 1
            if filled == 6:
                out.append(chr(63 + val))
                val = 0
                filled = 0
    if filled:
        val <<= 6 - filled
        out.append(chr(63 + val))
    assert bit == nbits
    return "".join(out)


def iter_graph6(data: str | bytes) -> Iterator[Graph]:
    """Parse newline-separated graph6 records, skipping blank lines."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError:
            raise MalformedGraph6Error("input contains non-ASCII bytes") from None
    else:
        text = data
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)
