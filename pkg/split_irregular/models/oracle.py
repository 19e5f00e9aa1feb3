# -*- coding: utf-8 -*-
"""Exhaustive irregular chromatic index for small graphs.

Colors are assigned edge by edge. A vertex is *finalized* once all of its
edges carry a color; at that point its color degrees are fixed, edges to
finalized neighbours are checked, and the final values become forbidden for
unfinalized neighbours along edges of the matching color.

Symmetry reduction:
  * twins (vertices with equal open or closed neighbourhoods) are
    interchangeable, so within a twin class the color-degree vectors must be
    lexicographically non-increasing in id order;
  * colors are interchangeable, so on edges between twin-free vertices a new
    color may only be opened in increasing order.
"""
import logging
from collections import defaultdict

from ..exceptions import InputError, OracleBudgetExceeded
from .graph import MAX_COLORS, EdgeColoring, is_locally_irregular
from .res_config_settings import ResConfigSettings

_logger = logging.getLogger(__name__)


class OracleResult(object):
    """``chi`` is None when no coloring with at most ``k_max`` colors exists."""

    __slots__ = ('chi', 'witness', 'nodes_explored', 'k_max')

    def __init__(self, chi, witness=None, nodes_explored=0, k_max=None):
        self.chi = chi
        self.witness = witness
        self.nodes_explored = nodes_explored
        self.k_max = k_max

    @property
    def is_decomposable(self):
        return self.chi is not None

    def __repr__(self):
        return f"OracleResult(chi={self.chi}, nodes_explored={self.nodes_explored})"


def twin_classes(g):
    """Classes of two or more vertices sharing their open or closed neighbourhood."""
    groups = defaultdict(list)
    for v in g.vertices():
        neighbors = g.neighbors(v)
        if not neighbors:
            continue
        groups[('open', neighbors)].append(v)
        groups[('closed', neighbors | {v})].append(v)
    return [sorted(members) for members in groups.values() if len(members) > 1]


class _EdgeSearch(object):

    def __init__(self, g, k, symmetry=True):
        self.graph = g
        self.k = k
        self.symmetry = symmetry
        self.nodes = 0
        n = g.vertex_count
        degrees = g.degrees()
        self.degrees = degrees

        self.twin_of = {}
        if symmetry:
            for members in twin_classes(g):
                for v in members:
                    self.twin_of[v] = members
        class_min = {v: self.twin_of[v][0] if v in self.twin_of else v for v in range(n)}
        # among edges of equal min degree, those of low-degree vertices go first so
        # their endpoints finalize early
        rank_order = sorted(range(n), key=lambda v: (degrees[v], class_min[v], v))
        rank = {v: i for i, v in enumerate(rank_order)}

        def edge_key(edge):
            u, v = edge
            low, high = sorted((u, v), key=rank.get)
            return (-min(degrees[u], degrees[v]), rank[low], rank[high])

        self.edges = sorted(g.edges, key=edge_key)
        self.free = [
            symmetry and u not in self.twin_of and v not in self.twin_of
            for u, v in self.edges
        ]
        self.color = [0] * len(self.edges)
        self.cd = [[0] * (k + 1) for _ in range(n)]
        self.remaining = list(degrees)
        self.final = [False] * n
        # forbidden[v][c][value]: finalized neighbours joined to v by a c-edge with c-degree value
        self.forbidden = [[defaultdict(int) for _ in range(k + 1)] for _ in range(n)]

    def _feasible(self, v):
        rem = self.remaining[v]
        cd = self.cd[v]
        forbidden = self.forbidden[v]
        if self.k == 2:
            for t in range(rem + 1):
                if not forbidden[1].get(cd[1] + t) and not forbidden[2].get(cd[2] + rem - t):
                    return True
            return False
        for c in range(1, self.k + 1):
            if all(forbidden[c].get(cd[c] + x) for x in range(rem + 1)):
                return False
        return True

    def _twins_ordered(self, v):
        members = self.twin_of.get(v)
        if not members:
            return True
        vector = self.cd[v][1:]
        for w in members:
            if w == v or not self.final[w]:
                continue
            other = self.cd[w][1:]
            if (w < v and other < vector) or (w > v and vector < other):
                return False
        return True

    def _finalize(self, v, undo):
        """Mark ``v`` finalized; False when that creates a conflict."""
        self.final[v] = True
        undo.append(('final', v))
        if not self._twins_ordered(v):
            return False
        cd_v = self.cd[v]
        touched = []
        for w in self.graph.neighbors(v):
            c = self._color_between(v, w)
            if self.final[w]:
                if self.cd[w][c] == cd_v[c]:
                    return False
            else:
                self.forbidden[w][c][cd_v[c]] += 1
                undo.append(('forbid', w, c, cd_v[c]))
                touched.append(w)
        return all(self._feasible(w) for w in touched)

    def _color_between(self, v, w):
        return self.color[self.position[(v, w) if v < w else (w, v)]]

    def _undo(self, undo):
        for entry in reversed(undo):
            if entry[0] == 'final':
                self.final[entry[1]] = False
            else:
                _, w, c, value = entry
                self.forbidden[w][c][value] -= 1
                if not self.forbidden[w][c][value]:
                    del self.forbidden[w][c][value]

    def _assign(self, i, c):
        u, v = self.edges[i]
        self.color[i] = c
        undo = []
        ok = True
        for w in (u, v):
            self.cd[w][c] += 1
            self.remaining[w] -= 1
        for w in (u, v):
            if not ok:
                break
            if self.remaining[w] == 0:
                ok = self._finalize(w, undo)
            else:
                ok = self._feasible(w)
        return ok, undo

    def _unassign(self, i, c, undo):
        u, v = self.edges[i]
        self._undo(undo)
        for w in (u, v):
            self.cd[w][c] -= 1
            self.remaining[w] += 1
        self.color[i] = 0

    def _search(self, i, opened):
        self.nodes += 1
        if i == len(self.edges):
            return True
        top = self.k
        if self.free[i]:
            top = min(self.k, opened + 1)
        for c in range(1, top + 1):
            ok, undo = self._assign(i, c)
            if ok and self._search(i + 1, max(opened, c) if self.free[i] else opened):
                return True
            self._unassign(i, c, undo)
        return False

    def run(self):
        self.position = {e: i for i, e in enumerate(self.edges)}
        if not self._search(0, 0):
            return None
        return EdgeColoring(self.graph, dict(zip(self.edges, self.color)), k=self.k)


def search_coloring(g, k, symmetry=True, stats=None):
    """A locally irregular ``k``-edge coloring of ``g``, or None.

    Args:
        stats: optional dict; receives ``nodes_explored``
    """
    if not 1 <= k <= MAX_COLORS:
        raise InputError(f"Number of colors must be between 1 and {MAX_COLORS}, got {k}")
    search = _EdgeSearch(g, k, symmetry=symmetry)
    col = search.run()
    if stats is not None:
        stats['nodes_explored'] = stats.get('nodes_explored', 0) + search.nodes
    _logger.debug("%s-color search on %s edges: %s after %s nodes",
                  k, g.edge_count, 'found' if col else 'none', search.nodes)
    return col


def oracle_chi(g, k_max=None, symmetry=True, edge_budget=None, settings=None):
    """Smallest number of colors of a locally irregular edge coloring of ``g``.

    Args:
        g: any graph within the edge budget
        k_max: largest number of colors tried (configuration default 4)
        symmetry: disable to run the plain reference search
        edge_budget: largest accepted edge count (configuration default 40)

    Returns:
        OracleResult: ``chi`` is 0 for edgeless graphs, None when no coloring
        with at most ``k_max`` colors exists

    Raises:
        OracleBudgetExceeded: ``g`` has more edges than the budget
        InputError: ``k_max`` outside 1..4
    """
    settings = settings or ResConfigSettings()
    k_max = settings.get_param('oracle_k_max') if k_max is None else k_max
    edge_budget = settings.get_param('oracle_edge_budget') if edge_budget is None else edge_budget
    if not 1 <= k_max <= MAX_COLORS:
        raise InputError(f"k_max must be between 1 and {MAX_COLORS}, got {k_max}")
    if g.edge_count > edge_budget:
        raise OracleBudgetExceeded(g.edge_count, edge_budget)
    if g.edge_count == 0:
        return OracleResult(0, k_max=k_max)
    if is_locally_irregular(g):
        return OracleResult(1, EdgeColoring(g, {e: 1 for e in g.edges}, k=1), 1, k_max)
    stats = {}
    for k in range(2, k_max + 1):
        col = search_coloring(g, k, symmetry=symmetry, stats=stats)
        if col is not None:
            return OracleResult(k, col, stats['nodes_explored'], k_max)
    return OracleResult(None, None, stats.get('nodes_explored', 1), k_max)
