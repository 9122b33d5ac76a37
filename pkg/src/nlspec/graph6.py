"""graph6 encoding (McKay's formats.txt).

The upper triangle is written column by column, x(0,1), x(0,2), x(1,2),
x(0,3), ..., packed into 6-bit groups padded with zeros, each group offset
by 63. Vertex counts up to 62 use one byte; 63..258047 use '~' plus 18 bits.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode(g: Graph) -> str:
    n, adj = g.n, g.adj
    out = [_encode_n(n)]
    acc = nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(s: str) -> Graph:
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    s = s.rstrip("\r\n")
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126", i)
    if s[0] == "~":
        if len(s) > 1 and s[1] == "~":
            raise Graph6Error("36-bit vertex counts are not supported", 1)
        if len(s) < 4:
            raise Graph6Error("truncated long-form vertex count", len(s))
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        pos = 4
    else:
        n = ord(s[0]) - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds {MAX_VERTICES}", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}", pos + min(len(body), need))
    rows = [0] * n
    k = 0
    total = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if total % 6:
        pad = ord(body[-1]) - 63
        if pad & ((1 << (6 - total % 6)) - 1):
            raise Graph6Error("nonzero padding bits", pos + need - 1)
    return Graph._trusted(n, tuple(rows))


def read_lines(stream: Iterable[str]) -> Iterator[Graph]:
    """Decode a newline-delimited graph6 stream, skipping blank lines."""
    for line in stream:
        line = line.strip()
        if line:
            yield decode(line)


def write_lines(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(encode(g) + "\n")
        count += 1
    return count
