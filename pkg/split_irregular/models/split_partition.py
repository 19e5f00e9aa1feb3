# -*- coding: utf-8 -*-
"""Split graph recognition and the ordered clique/stable-set frame."""
import logging

from ..exceptions import InputError, NotSplitError
from .graph import Graph

_logger = logging.getLogger(__name__)


class SplitPartition(object):
    """Clique ``X = (v1, ..., vn)`` and stable set ``Y`` of a split graph.

    ``d[i]`` is the number of Y-neighbours of ``clique[i]``; the clique is kept
    ordered by non-increasing ``d`` with ties broken by vertex id.
    """

    __slots__ = ('graph', 'clique', 'stable', 'd')

    def __init__(self, graph, clique, stable):
        self.graph = graph
        stable = frozenset(stable)
        d_of = {v: len(graph.neighbors(v) & stable) for v in clique}
        self.clique = tuple(sorted(clique, key=lambda v: (-d_of[v], v)))
        self.stable = stable
        self.d = tuple(d_of[v] for v in self.clique)
        self._check()

    def _check(self):
        g = self.graph
        clique = self.clique
        if set(clique) & self.stable or len(clique) + len(self.stable) != g.vertex_count:
            raise InputError("Clique and stable set must partition the vertex set")
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                if not g.has_edge(u, v):
                    raise InputError(f"Vertices {u} and {v} of the clique are not adjacent")
        for y in self.stable:
            neighbors = g.neighbors(y)
            if neighbors & self.stable:
                raise InputError(f"Vertex {y} of the stable set has a neighbour in the stable set")
            if clique and len(neighbors) >= len(clique):
                raise InputError(f"Vertex {y} is adjacent to the whole clique, which is not maximal")

    @property
    def n(self):
        return len(self.clique)

    @property
    def ceil_half(self):
        return (self.n + 1) // 2

    @property
    def floor_half(self):
        return self.n // 2

    def v(self, i):
        """The clique vertex ``v_i`` (1-based)."""
        return self.clique[i - 1]

    def d_of(self, i):
        """``d_i`` (1-based); zero past the end of the sequence."""
        return self.d[i - 1] if i <= self.n else 0

    def y_neighbors(self, v):
        return sorted(self.graph.neighbors(v) & self.stable)

    def y_edges(self):
        """Every clique-to-stable edge as ``(x, y)``."""
        return [(x, y) for x in self.clique for y in self.y_neighbors(x)]

    def __repr__(self):
        return f"SplitPartition(n={self.n}, d={self.d}, |Y|={len(self.stable)})"


def _degree_split_candidate(g):
    degrees = g.degrees()
    order = sorted(g.vertices(), key=lambda v: (-degrees[v], v))
    m = 0
    for i, v in enumerate(order):
        if degrees[v] >= i:
            m = i + 1
    top = sum(degrees[v] for v in order[:m])
    bottom = sum(degrees[v] for v in order[m:])
    if top != m * (m - 1) + bottom:
        return None
    return order[:m], order[m:]


def split_partition(g):
    """Split partition of ``g`` with a maximal clique.

    Raises:
        NotSplitError: ``g`` has no clique/stable-set partition
    """
    candidate = _degree_split_candidate(g)
    if candidate is None:
        raise NotSplitError(
            f"Graph on {g.vertex_count} vertices and {g.edge_count} edges is not a split graph"
        )
    clique, stable = set(candidate[0]), set(candidate[1])
    moved = True
    while moved:
        moved = False
        for y in sorted(stable):
            if clique <= g.neighbors(y):
                _logger.debug("Moving vertex %s into the clique to make it maximal", y)
                stable.remove(y)
                clique.add(y)
                moved = True
                break
    partition = SplitPartition(g, clique, stable)
    _logger.debug("Split partition: %s", partition)
    return partition


def d_sequence(p):
    return list(p.d)


def strip_isolated(g):
    """Drop degree-0 vertices.

    Returns:
        tuple: the graph on the remaining vertices (renumbered in increasing order)
        and the list of removed vertex ids
    """
    degrees = g.degrees()
    removed = [v for v in g.vertices() if degrees[v] == 0]
    if not removed:
        return g, []
    kept = [v for v in g.vertices() if degrees[v] > 0]
    index = {v: i for i, v in enumerate(kept)}
    return g.relabel(index, len(kept)), removed


def kept_vertices(g, removed):
    """Original ids of the vertices surviving :func:`strip_isolated`, in new-id order."""
    dropped = set(removed)
    return [v for v in g.vertices() if v not in dropped]


def build_split_graph(n, y_neighborhoods):
    """Clique on ``0..n-1`` plus one stable vertex per neighbourhood, numbered from ``n``."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for j, neighborhood in enumerate(y_neighborhoods):
        edges.extend((x, n + j) for x in neighborhood)
    return Graph(n + len(y_neighborhoods), edges)
