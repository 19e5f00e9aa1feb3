# -*- coding: utf-8 -*-
"""Split graph generators: profile realization, random instances, enumeration."""
import logging
import random
from collections import defaultdict
from itertools import combinations, combinations_with_replacement

import networkx as nx

from ..exceptions import InputError
from .res_config_settings import ResConfigSettings
from .split_partition import build_split_graph

_logger = logging.getLogger(__name__)


def gen_split_graph(n, d, y_profile, seed=0):
    """Clique ``0..n-1`` plus stable vertices realizing the given degrees.

    Clique vertex ``i`` gets ``d[i]`` stable neighbours, stable vertex ``n + j``
    gets degree ``y_profile[j]``. Stable vertices are attached largest first,
    each to the clique vertices with the most remaining demand; ties are broken
    by a generator seeded with ``seed``.

    Raises:
        InputError: the profile cannot be realized with a maximal clique
    """
    d, y_profile = list(d), list(y_profile)
    if n < 1 or len(d) != n:
        raise InputError(f"Expected {n} d-values for a clique of size {n}, got {len(d)}")
    if any(value < 0 for value in d + y_profile):
        raise InputError("Degrees must be non-negative")
    if any(value > n - 1 for value in y_profile):
        raise InputError(
            f"Stable vertex degrees must stay below the clique size {n} to keep the clique maximal")
    if any(value > len(y_profile) for value in d):
        raise InputError(f"A d-value exceeds the number of stable vertices ({len(y_profile)})")
    if sum(d) != sum(y_profile):
        raise InputError(f"Sum of d ({sum(d)}) differs from sum of stable degrees ({sum(y_profile)})")
    rng = random.Random(seed)
    remaining = list(d)
    neighborhoods = [None] * len(y_profile)
    for j in sorted(range(len(y_profile)), key=lambda j: (-y_profile[j], j)):
        tiebreak = [rng.random() for _ in range(n)]
        order = sorted(range(n), key=lambda i: (-remaining[i], tiebreak[i]))
        chosen = [i for i in order[:y_profile[j]] if remaining[i] > 0]
        if len(chosen) < y_profile[j]:
            raise InputError(f"Profile d={tuple(d)} with stable degrees {tuple(y_profile)} is not realizable")
        for i in chosen:
            remaining[i] -= 1
        neighborhoods[j] = sorted(chosen)
    if any(remaining):
        raise InputError(f"Profile d={tuple(d)} with stable degrees {tuple(y_profile)} is not realizable")
    return build_split_graph(n, neighborhoods)


def random_split_graph(n, y_count, seed=0, spread=None):
    """Random split graph with clique ``0..n-1`` and ``y_count`` stable vertices.

    Each stable vertex picks between 1 and ``n - 1`` neighbours among the first
    ``spread`` clique vertices (default: a random spread).
    """
    if n < 2:
        raise InputError(f"Random split graphs need a clique of at least 2 vertices, got {n}")
    rng = random.Random(seed)
    if spread is None:
        spread = rng.randint(1, n)
    spread = max(1, min(spread, n))
    neighborhoods = []
    for _ in range(y_count):
        size = rng.randint(1, min(spread, n - 1))
        neighborhoods.append(sorted(rng.sample(range(spread), size)))
    return build_split_graph(n, neighborhoods)


def _proper_subsets(n):
    ground = range(n)
    return [subset for size in range(n) for subset in combinations(ground, size)]


def enumerate_split_graphs(max_vertices, settings=None):
    """Every split graph on 1..``max_vertices`` vertices, once per isomorphism class.

    Candidates are a clique plus stable vertices with proper neighbourhoods in
    it. A candidate is dropped when a graph with the same vertex count, edge
    count and sorted degree sequence already produced is isomorphic to it.

    Raises:
        InputError: ``max_vertices`` above the enumeration cap
    """
    settings = settings or ResConfigSettings()
    cap = settings.get_param('enumeration_max_vertices')
    if max_vertices > cap:
        raise InputError(f"Enumeration is capped at {cap} vertices, got {max_vertices}")
    seen = defaultdict(list)
    produced = 0
    for total in range(1, max_vertices + 1):
        for n in range(1, total + 1):
            subsets = _proper_subsets(n)
            for neighborhoods in combinations_with_replacement(subsets, total - n):
                g = build_split_graph(n, neighborhoods)
                key = (g.vertex_count, g.edge_count, tuple(sorted(g.degrees())))
                nx_graph = g.to_networkx()
                if any(nx.is_isomorphic(nx_graph, other) for other in seen[key]):
                    continue
                seen[key].append(nx_graph)
                produced += 1
                yield g
    _logger.info("Enumerated %s split graphs on at most %s vertices", produced, max_vertices)
