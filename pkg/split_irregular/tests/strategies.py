# -*- coding: utf-8 -*-
from hypothesis.strategies import booleans, composite, integers, lists

from ..models.graph import EdgeColoring, Graph
from ..models.split_partition import build_split_graph


@composite
def graphs(draw, max_vertices=7):
    n = draw(integers(min_value=0, max_value=max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(lists(booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [pair for pair, kept in zip(pairs, keep) if kept])


@composite
def colorings(draw, max_vertices=7, k=2):
    g = draw(graphs(max_vertices))
    edges = g.sorted_edges()
    colors = draw(lists(integers(min_value=1, max_value=k), min_size=len(edges), max_size=len(edges)))
    return EdgeColoring(g, dict(zip(edges, colors)), k=k)


@composite
def split_graphs(draw, min_clique=1, max_clique=7, max_stable=5):
    """Clique ``0..n-1`` plus stable vertices with proper neighbourhoods."""
    n = draw(integers(min_value=min_clique, max_value=max_clique))
    m = draw(integers(min_value=0, max_value=max_stable))
    neighborhoods = []
    for _ in range(m):
        mask = draw(lists(booleans(), min_size=n, max_size=n))
        if all(mask):
            mask[-1] = False
        neighborhoods.append([i for i in range(n) if mask[i]])
    return build_split_graph(n, neighborhoods)
