"""Graph text formats: graph6 and a line-based edge list, plus named patterns."""

from __future__ import annotations

from .errors import FormatError
from .graphs import Graph, complete, cycle, path

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode per the standard: 6-bit big-endian upper triangle, offset 63."""
    if g.n <= 62:
        prefix = chr(g.n + 63)
    else:
        prefix = "~" + "".join(
            chr(((g.n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bit_groups = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                bit_groups.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        bit_groups.append(chr(acc + 63))
    return prefix + "".join(bit_groups)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :].strip()
    if not s:
        raise FormatError("empty graph6 string")
    vals = []
    for ch in s:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise FormatError(f"invalid graph6 character {ch!r}")
        vals.append(code)
    if vals[0] == 63:  # '~': extended order
        if len(vals) < 4:
            raise FormatError("truncated graph6 order field")
        if vals[1] == 63:
            raise FormatError("graph6 orders above 258047 are not supported")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body length {len(body)} does not match order {n}"
        )
    bitstream = 0
    for v in body:
        bitstream = (bitstream << 6) | v
    pad = 6 * len(body) - nbits
    bitstream >>= pad
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bitstream >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise FormatError("edge list must start with a 'n m' header")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except (ValueError, TypeError) as exc:
        raise FormatError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise FormatError(f"edge list header declares {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def parse_graph_text(text: str) -> Graph:
    """Accept either format; edge lists are recognized by their numeric header."""
    stripped = text.strip()
    first = stripped.splitlines()[0].split() if stripped else []
    if len(first) == 2 and all(tok.isdigit() for tok in first):
        return from_edge_list(text)
    return from_graph6(stripped)


def parse_pattern(spec: str) -> Graph:
    """Named patterns C<r>, K<r>, P<r> (underscores allowed), or a graph6 string."""
    s = spec.strip().replace("_", "")
    if len(s) >= 2 and s[0] in "CKPckp" and s[1:].isdigit():
        r = int(s[1:])
        kind = s[0].upper()
        if kind == "C":
            return cycle(r)
        if kind == "K":
            return complete(r)
        return path(r)
    return from_graph6(spec)
