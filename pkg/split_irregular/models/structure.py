# -*- coding: utf-8 -*-
"""Shape of connected graphs with exactly one pair of equal degrees.

Such a graph on n vertices, sorted by degree u1, ..., un, always looks like
this: the equal degree is floor(n/2); the pair sits at positions ceil(n/2) and
ceil(n/2)+1; the vertices above the pair form a clique joined to both pair
vertices; the vertices below form a stable set not adjacent to the pair; and
the pair is adjacent exactly when n is even.
"""
import logging
from collections import Counter
from itertools import combinations

import networkx as nx

from ..exceptions import ContractError, InputError
from .graph import Graph
from .res_config_settings import ResConfigSettings

_logger = logging.getLogger(__name__)

ITEMS = (
    'equal_degree_is_half',
    'pair_in_middle',
    'head_clique_tail_stable',
    'head_joined_to_pair',
    'tail_avoids_pair',
    'pair_adjacent_iff_even',
)


class StructureReport(object):
    """Per-item outcome of :func:`check_single_repeat_structure`."""

    def __init__(self, pair, order, items):
        self.pair = pair
        self.order = order
        self.items = dict(items)

    @property
    def holds(self):
        return all(self.items.values())

    def failed(self):
        return [name for name in ITEMS if not self.items[name]]

    def __repr__(self):
        return f"StructureReport(pair={self.pair}, failed={self.failed()})"


def _single_repeat_pair(g):
    degrees = g.degrees()
    counts = Counter(degrees)
    repeated = [value for value, count in counts.items() if count > 1]
    if len(repeated) != 1 or counts[repeated[0]] != 2:
        return None
    return tuple(v for v in g.vertices() if degrees[v] == repeated[0])


def check_single_repeat_structure(g):
    """Check the six structural items on ``g``.

    Raises:
        ContractError: ``g`` is disconnected or does not have exactly one equal-degree pair
    """
    if g.vertex_count < 2 or not nx.is_connected(g.to_networkx()):
        raise ContractError("Structure check needs a connected graph on at least 2 vertices")
    pair = _single_repeat_pair(g)
    if pair is None:
        raise ContractError(f"Degrees {sorted(g.degrees(), reverse=True)} do not have exactly one equal pair")
    n = g.vertex_count
    ceil_half = (n + 1) // 2
    degrees = g.degrees()
    order = sorted(g.vertices(), key=lambda v: (-degrees[v], v))
    u, v = pair
    at = order.index(min(pair, key=order.index))
    head, tail = order[:ceil_half - 1], order[ceil_half + 1:]
    head_set, tail_set = set(head), set(tail)
    items = {
        'equal_degree_is_half': degrees[u] == n // 2,
        'pair_in_middle': at == ceil_half - 1,
        'head_clique_tail_stable': (
            all(g.has_edge(a, b) for a, b in combinations(head, 2))
            and not any(g.has_edge(a, b) for a, b in combinations(tail, 2))
        ),
        'head_joined_to_pair': head_set <= g.neighbors(u) and head_set <= g.neighbors(v),
        'tail_avoids_pair': not (tail_set & g.neighbors(u)) and not (tail_set & g.neighbors(v)),
        'pair_adjacent_iff_even': g.has_edge(u, v) == (n % 2 == 0),
    }
    report = StructureReport(pair, order, items)
    if not report.holds:
        _logger.warning("Structure items %s fail on %r", report.failed(), g)
    return report


def _realizations(degrees):
    """Every labeled graph where vertex i has degree ``degrees[i]``."""
    n = len(degrees)
    need = list(degrees)
    edges = []

    def place(i):
        if i == n:
            yield Graph(n, edges)
            return
        candidates = [j for j in range(i + 1, n) if need[j] > 0]
        if need[i] > len(candidates):
            return
        for chosen in combinations(candidates, need[i]):
            saved = need[i]
            for j in chosen:
                need[j] -= 1
                edges.append((i, j))
            need[i] = 0
            yield from place(i + 1)
            need[i] = saved
            for j in chosen:
                need[j] += 1
                edges.pop()

    yield from place(0)


def enumerate_single_repeat_graphs(max_vertices, settings=None):
    """Connected graphs on 2..``max_vertices`` vertices with one equal-degree pair.

    Degrees of such a graph are ``1..n-1`` with one value repeated; every
    labeled realization of each such sequence is produced (isomorphic copies included).

    Raises:
        InputError: ``max_vertices`` above the enumeration cap
    """
    settings = settings or ResConfigSettings()
    cap = settings.get_param('enumeration_max_vertices')
    if max_vertices > cap:
        raise InputError(f"Enumeration is capped at {cap} vertices, got {max_vertices}")
    for n in range(2, max_vertices + 1):
        for repeated in range(1, n):
            degrees = sorted(list(range(1, n)) + [repeated], reverse=True)
            if sum(degrees) % 2:
                continue
            for g in _realizations(degrees):
                if nx.is_connected(g.to_networkx()):
                    yield g
