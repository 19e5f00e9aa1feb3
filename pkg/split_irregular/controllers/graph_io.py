# -*- coding: utf-8 -*-
"""Graph and coloring file codecs.

Graph files::

    c optional comment
    p edge <n> <m>
    e <u> <v>          (m lines, 1-based ids)

Coloring files hold one ``<u> <v> <c>`` line per edge, colors 1..3.
Ids are 1-based on disk and 0-based in memory.
"""
import logging

from ..exceptions import InputError, ParseError
from ..models.graph import GREEN, EdgeColoring, Graph, normalize_edge

_logger = logging.getLogger(__name__)

FILE_MAX_COLOR = GREEN


def _content_lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('c ') or line == 'c' or line.startswith('#'):
            continue
        yield number, line


def _int_fields(fields, number, line):
    try:
        return [int(field) for field in fields]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(fields)!r}", number, line)


def parse_graph(text):
    """Read a graph file.

    Raises:
        ParseError: malformed header or edge line, out-of-range id, self-loop,
            duplicate edge, or an edge count that disagrees with the header
    """
    header = None
    edges = set()
    for number, line in _content_lines(text):
        fields = line.split()
        if fields[0] == 'p':
            if header is not None:
                raise ParseError("second 'p' header", number, line)
            if len(fields) != 4 or fields[1] != 'edge':
                raise ParseError("header must read 'p edge <n> <m>'", number, line)
            n, m = _int_fields(fields[2:], number, line)
            if n < 0 or m < 0:
                raise ParseError("vertex and edge counts must be non-negative", number, line)
            header = (n, m)
            header_at = (number, line)
        elif fields[0] == 'e':
            if header is None:
                raise ParseError("edge line before the 'p edge' header", number, line)
            if len(fields) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", number, line)
            u, v = _int_fields(fields[1:], number, line)
            n = header[0]
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id outside 1..{n}", number, line)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", number, line)
            edge = normalize_edge(u - 1, v - 1)
            if edge in edges:
                raise ParseError(f"duplicate edge {u}-{v}", number, line)
            edges.add(edge)
        else:
            raise ParseError(f"unknown line type {fields[0]!r}", number, line)
    if header is None:
        raise ParseError("missing 'p edge <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, file has {len(edges)}", *header_at)
    return Graph(n, edges)


def format_graph(g, comments=()):
    lines = [f"c {comment}" for comment in comments]
    lines.append(f"p edge {g.vertex_count} {g.edge_count}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.sorted_edges())
    return '\n'.join(lines) + '\n'


def parse_coloring(text, g):
    """Read a coloring file for ``g``.

    Raises:
        ParseError: malformed line, color outside 1..3, unknown or repeated edge
        InputError: some edge of ``g`` has no color
    """
    color_of = {}
    for number, line in _content_lines(text):
        fields = line.split()
        if len(fields) != 3:
            raise ParseError("coloring line must read '<u> <v> <c>'", number, line)
        u, v, c = _int_fields(fields, number, line)
        if not 1 <= c <= FILE_MAX_COLOR:
            raise ParseError(f"color {c} outside 1..{FILE_MAX_COLOR}", number, line)
        if not (1 <= u <= g.vertex_count and 1 <= v <= g.vertex_count) or not g.has_edge(u - 1, v - 1):
            raise ParseError(f"{u}-{v} is not an edge of the graph", number, line)
        edge = normalize_edge(u - 1, v - 1)
        if edge in color_of:
            raise ParseError(f"edge {u}-{v} colored twice", number, line)
        color_of[edge] = c
    missing = g.edges - set(color_of)
    if missing:
        u, v = min(missing)
        raise InputError(f"Coloring misses {len(missing)} edge(s), first is {u + 1}-{v + 1}")
    return EdgeColoring(g, color_of, k=max(color_of.values(), default=0))


def format_coloring(col, comments=()):
    lines = [f"c {comment}" for comment in comments]
    lines.extend(f"{u + 1} {v + 1} {c}" for (u, v), c in col.items())
    return '\n'.join(lines) + '\n'


def read_graph(path):
    with open(path, encoding='utf-8') as handle:
        return parse_graph(handle.read())


def read_coloring(path, g):
    with open(path, encoding='utf-8') as handle:
        return parse_coloring(handle.read(), g)


def write_text(path, text):
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)
    _logger.info("Wrote %s", path)
