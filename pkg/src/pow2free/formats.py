"""Text formats: graph6, the ``n m`` edge list, and DOT export."""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph, GraphError, graph_from_edge_list

G6_HEADER = ">>graph6<<"


class ParseError(GraphError):
    """Malformed input; ``offset`` is the 0-based byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.message = message
        self.offset = offset


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 2**36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline).

    Bits run over the upper triangle column by column: (0,1), (0,2), (1,2),
    (0,3), ... and are packed six to a byte, zero-padded.
    """
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.rstrip("\r\n")
    base = 0
    if s.startswith(G6_HEADER):
        s = s[len(G6_HEADER):]
        base = len(G6_HEADER)
    if not s:
        raise ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"non-graph6 character {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte length header", base + len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
        if n < 258048:
            raise ParseError("non-canonical 8-byte length header", base)
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte length header", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
        if n < 63:
            raise ParseError("non-canonical 4-byte length header", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        off = base + min(len(vals), pos + need)
        raise ParseError(f"expected {need} data bytes for n={n}, got {len(vals) - pos}", off)

    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = vals[pos + k // 6]
            if (byte >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        pad = 6 - nbits % 6
        if vals[-1] & ((1 << pad) - 1):
            raise ParseError("nonzero padding bits", base + len(vals) - 1)
    return graph_from_edge_list(n, edges)


def encode_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{x} {y}" for x, y in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines()) if ln.strip()]
    if not lines:
        raise ParseError("empty edge list", 0)
    offsets = _line_offsets(text)
    try:
        n, m = (int(t) for t in lines[0][1].split())
    except ValueError:
        raise ParseError("edge-list header must be 'n m'", offsets[lines[0][0]]) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}", len(text))
    edges = []
    seen = set()
    for i, ln in body:
        parts = ln.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"bad edge line {ln!r}", offsets[i])
        x, y = int(parts[0]), int(parts[1])
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(f"edge ({x}, {y}) has an endpoint outside 0..{n - 1}", offsets[i])
        if x == y:
            raise ParseError(f"self-loop at {x}", offsets[i])
        key = (min(x, y), max(x, y))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", offsets[i])
        seen.add(key)
        edges.append((x, y))
    return graph_from_edge_list(n, edges)


def _line_offsets(text: str) -> list[int]:
    offsets = [0]
    for ln in text.splitlines(keepends=True):
        offsets.append(offsets[-1] + len(ln.encode()))
    return offsets


def looks_like_edgelist(first_line: str) -> bool:
    toks = first_line.split()
    return bool(first_line[:1].isdigit()) and len(toks) == 2


def read_graph_text(text: str) -> Graph:
    """Parse a single graph, auto-detecting edge list versus graph6.

    Error offsets count bytes from the start of ``text``.
    """
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty input", 0)
    lead = len(text) - len(stripped)
    first = stripped.splitlines()[0]
    if looks_like_edgelist(first):
        body = parse_edgelist
    else:
        offsets = _line_offsets(stripped)
        rest = [i for i, ln in enumerate(stripped.splitlines()) if i and ln.strip()]
        if rest:
            raise ParseError("expected exactly one graph6 line", lead + offsets[rest[0]])

        def body(_):
            return parse_graph6(first.rstrip())
    try:
        return body(stripped)
    except ParseError as exc:
        raise ParseError(exc.message, exc.offset + lead) from None


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [parse_graph6(ln.strip()) for ln in lines if ln.strip()]


def to_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.n:
        raise GraphError(f"{len(labels)} labels for {g.n} vertices")
    out = [f"graph {name} {{"]
    for x in range(g.n):
        if labels is None:
            out.append(f"  {x};")
        else:
            lab = str(labels[x]).replace('"', '\\"')
            out.append(f'  {x} [label="{lab}"];')
    out.extend(f"  {x} -- {y};" for x, y in g.edges)
    out.append("}")
    return "\n".join(out) + "\n"
