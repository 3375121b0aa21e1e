"""Plain-text graph files.

::

    c optional comments anywhere
    p ds <n> <m>
    <u> <v>        (m lines, 1-indexed endpoints)
    w <u>          (optional, marks u white)

Vertices default to black. Writing renumbers live vertices 1..n by
ascending internal id.
"""

from __future__ import annotations

import io
import os
from typing import IO, Union

from .graph import Color, Graph

PathOrStream = Union[str, os.PathLike, IO[str]]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def parse_graph(lines) -> Graph:
    g = None
    n = m = 0
    seen = set()
    whites = []
    last = 0
    for lineno, raw in enumerate(lines, 1):
        last = lineno
        parts = raw.split()
        if not parts or parts[0].startswith("c"):
            continue
        if parts[0] == "p":
            if g is not None:
                raise ParseError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "ds":
                raise ParseError("malformed header, expected 'p ds <n> <m>'", lineno)
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative size in header", lineno)
            g = Graph()
            for _ in range(n):
                g.add_vertex()
            continue
        if g is None:
            raise ParseError("content before 'p ds' header", lineno)
        if parts[0] == "w":
            if len(parts) != 2:
                raise ParseError("malformed white line, expected 'w <u>'", lineno)
            u = _int(parts[1], lineno)
            if not 1 <= u <= n:
                raise ParseError(f"vertex {u} out of range 1..{n}", lineno)
            whites.append(u - 1)
            continue
        if len(parts) != 2:
            raise ParseError(f"malformed line {raw.strip()!r}", lineno)
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        for x in (u, v):
            if not 1 <= x <= n:
                raise ParseError(f"vertex {x} out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        g.add_edge(u - 1, v - 1)
    if g is None:
        raise ParseError("missing 'p ds <n> <m>' header", last or None)
    if len(seen) != m:
        raise ParseError(f"header announces {m} edges, found {len(seen)}", last)
    for u in whites:
        g.set_color(u, Color.WHITE)
    return g


def read_graph(source: PathOrStream) -> Graph:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return parse_graph(fh)
    return parse_graph(source)


def loads(text: str) -> Graph:
    return parse_graph(io.StringIO(text))


def file_numbering(g: Graph) -> dict[int, int]:
    """Internal id -> 1-based file index used by ``write_graph``."""
    return {v: i for i, v in enumerate(g.vertices(), 1)}


def write_graph(g: Graph, stream: IO[str]) -> None:
    num = file_numbering(g)
    edges = sorted(
        (min(num[u], num[v]), max(num[u], num[v])) for u, v in g.edges()
    )
    stream.write(f"p ds {g.num_vertices} {len(edges)}\n")
    for a, b in edges:
        stream.write(f"{a} {b}\n")
    for v in g.vertices():
        if g.color[v] is Color.WHITE:
            stream.write(f"w {num[v]}\n")


def dumps(g: Graph) -> str:
    buf = io.StringIO()
    write_graph(g, buf)
    return buf.getvalue()


def save_graph(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_graph(g, fh)
