# -*- coding: utf-8 -*-
"""Graphs, edge colorings and local-irregularity checks.

Vertices are dense integer ids ``0..vertex_count-1``. Edges are stored as
normalized pairs ``(u, v)`` with ``u < v``. Colors are 1-based: 1 is red,
2 is blue, 3 is green.
"""
import logging
from collections import namedtuple
from collections.abc import Mapping

import networkx as nx

from ..exceptions import InputError

_logger = logging.getLogger(__name__)

RED = 1
BLUE = 2
GREEN = 3
MAX_COLORS = 4

COLOR_NAMES = {
    RED: 'red',
    BLUE: 'blue',
    GREEN: 'green',
    4: 'orange',
}


def normalize_edge(u, v):
    return (u, v) if u < v else (v, u)


def other_color(color):
    """Swap red and blue."""
    return BLUE if color == RED else RED


class Graph(object):
    """Finite simple undirected graph. Immutable once built."""

    __slots__ = ('vertex_count', 'edges', '_adjacency')

    def __init__(self, vertex_count, edges=()):
        if vertex_count < 0:
            raise InputError(f"Vertex count must be non-negative, got {vertex_count}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InputError(f"Self-loop at vertex {u} is not allowed")
            for w in (u, v):
                if not 0 <= w < vertex_count:
                    raise InputError(
                        f"Vertex {w} out of range for a graph on {vertex_count} vertices"
                    )
            edge = normalize_edge(u, v)
            if edge in normalized:
                raise InputError(f"Duplicate edge {edge[0]}-{edge[1]}")
            normalized.add(edge)
        adjacency = [set() for _ in range(vertex_count)]
        for u, v in normalized:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.vertex_count = vertex_count
        self.edges = frozenset(normalized)
        self._adjacency = tuple(frozenset(a) for a in adjacency)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def empty(cls, n):
        return cls(n)

    @classmethod
    def complete(cls, n):
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n):
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise InputError(f"A cycle needs at least 3 vertices, got {n}")
        return cls(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])

    @classmethod
    def star(cls, leaves):
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def from_networkx(cls, nx_graph):
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    def _check_vertex(self, v):
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise InputError(
                f"Vertex {v!r} out of range for a graph on {self.vertex_count} vertices"
            )

    def degree(self, v):
        self._check_vertex(v)
        return len(self._adjacency[v])

    def degrees(self):
        return [len(a) for a in self._adjacency]

    def neighbors(self, v):
        self._check_vertex(v)
        return self._adjacency[v]

    def has_edge(self, u, v):
        if u == v:
            return False
        return normalize_edge(u, v) in self.edges

    @property
    def edge_count(self):
        return len(self.edges)

    def vertices(self):
        return range(self.vertex_count)

    def sorted_edges(self):
        return sorted(self.edges)

    def edge_subgraph(self, edges):
        """Spanning subgraph on the same vertex set."""
        return Graph(self.vertex_count, edges)

    def relabel(self, mapping, vertex_count):
        """Copy with every vertex ``v`` renamed to ``mapping[v]``."""
        return Graph(vertex_count, ((mapping[u], mapping[v]) for u, v in self.edges))

    def to_networkx(self):
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edges)
        return nx_graph

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edges={self.sorted_edges()!r})"


class EdgeColoring(object):
    """Total map from the edges of a graph to colors ``1..k``.

    Color degrees are computed once at construction; use :meth:`recolor` to
    derive a modified coloring.
    """

    __slots__ = ('graph', 'k', '_color_of', '_color_degrees')

    def __init__(self, graph, color_of, k=None):
        normalized = {}
        for edge, color in color_of.items():
            edge = normalize_edge(*edge)
            if edge not in graph.edges:
                raise InputError(f"Edge {edge[0]}-{edge[1]} is not an edge of the graph")
            if not isinstance(color, int) or color < 1:
                raise InputError(f"Color of edge {edge[0]}-{edge[1]} must be a positive integer, got {color!r}")
            normalized[edge] = color
        missing = graph.edges - set(normalized)
        if missing:
            u, v = min(missing)
            raise InputError(
                f"Coloring is partial: {len(missing)} edge(s) uncolored, first is {u}-{v}"
            )
        used = max(normalized.values(), default=0)
        if k is None:
            k = used
        if used > k:
            raise InputError(f"Color {used} used in a {k}-coloring")
        if k > MAX_COLORS or (k < 1 and graph.edge_count):
            raise InputError(f"Number of colors must be between 1 and {MAX_COLORS}, got {k}")
        self.graph = graph
        self.k = k
        self._color_of = normalized
        degrees = [[0] * graph.vertex_count for _ in range(k + 1)]
        for (u, v), color in normalized.items():
            degrees[color][u] += 1
            degrees[color][v] += 1
        self._color_degrees = degrees

    def _check_color(self, c):
        if not isinstance(c, int) or not 1 <= c <= self.k:
            raise InputError(f"Color {c!r} outside 1..{self.k}")

    def color(self, u, v):
        return self._color_of[normalize_edge(u, v)]

    def items(self):
        return sorted(self._color_of.items())

    def as_dict(self):
        return dict(self._color_of)

    def colors_used(self):
        return sorted(set(self._color_of.values()))

    def edges_of(self, c):
        self._check_color(c)
        return sorted(e for e, color in self._color_of.items() if color == c)

    def color_degree(self, v, c):
        self._check_color(c)
        return self._color_degrees[c][v]

    def degree_vector(self, v):
        return tuple(self._color_degrees[c][v] for c in range(1, self.k + 1))

    def color_neighbors(self, v, c):
        return sorted(w for w in self.graph.neighbors(v) if self.color(v, w) == c)

    def recolor(self, changes, k=None):
        """New coloring with ``changes`` (edge -> color) applied."""
        color_of = dict(self._color_of)
        for edge, color in changes.items():
            edge = normalize_edge(*edge)
            if edge not in color_of:
                raise InputError(f"Edge {edge[0]}-{edge[1]} is not an edge of the graph")
            color_of[edge] = color
        if k is None:
            k = max(self.k, max(changes.values(), default=0))
        return EdgeColoring(self.graph, color_of, k=k)

    def relabel(self, graph, mapping):
        """Carry the coloring onto ``graph`` through the vertex map ``mapping``."""
        return EdgeColoring(
            graph,
            {normalize_edge(mapping[u], mapping[v]): c for (u, v), c in self._color_of.items()},
            k=self.k,
        )

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self._color_of == other._color_of

    def __hash__(self):
        return hash((self.graph, frozenset(self._color_of.items())))

    def __repr__(self):
        return f"EdgeColoring(k={self.k}, edges={len(self._color_of)})"


Conflict = namedtuple('Conflict', ['edge', 'color', 'degree'])


class ConflictReport(object):
    """Conflicting edges per color of a coloring."""

    def __init__(self, conflicts=()):
        self.conflicts = tuple(sorted(conflicts, key=lambda c: (c.color, c.edge)))

    @property
    def is_clean(self):
        return not self.conflicts

    def by_color(self, c):
        return [conflict.edge for conflict in self.conflicts if conflict.color == c]

    def colors(self):
        return sorted({conflict.color for conflict in self.conflicts})

    def __iter__(self):
        return iter(self.conflicts)

    def __len__(self):
        return len(self.conflicts)

    def __repr__(self):
        return f"ConflictReport({list(self.conflicts)!r})"


def degree(g, v):
    """Number of edges of ``g`` incident to ``v``."""
    return g.degree(v)


def color_subgraph(col, c):
    """Spanning subgraph of the edges colored ``c``."""
    return col.graph.edge_subgraph(col.edges_of(c))


def conflicting_edges(g):
    degrees = g.degrees()
    return sorted((u, v) for u, v in g.edges if degrees[u] == degrees[v])


def is_locally_irregular(g):
    degrees = g.degrees()
    return all(degrees[u] != degrees[v] for u, v in g.edges)


def verify_decomposition(col, graph=None):
    """Check every color class of ``col`` for conflicting edges.

    Args:
        col: an :class:`EdgeColoring`, or a mapping edge -> color together with ``graph``
        graph: host graph when ``col`` is a plain mapping

    Returns:
        ConflictReport: empty iff every color class is locally irregular

    Raises:
        InputError: the mapping does not cover every edge exactly
    """
    if isinstance(col, Mapping):
        if graph is None:
            raise InputError("A host graph is required to verify a plain edge-color mapping")
        col = EdgeColoring(graph, col)
    conflicts = []
    for (u, v), color in col.items():
        du = col.color_degree(u, color)
        if du == col.color_degree(v, color):
            conflicts.append(Conflict((u, v), color, du))
    report = ConflictReport(conflicts)
    if not report.is_clean:
        _logger.debug("Coloring has %s conflicting edge(s) in colors %s", len(report), report.colors())
    return report
