# -*- coding: utf-8 -*-
import logging

import graphviz

from ..exceptions import NotSplitError
from ..models.graph import COLOR_NAMES
from ..models.split_partition import split_partition, strip_isolated

_logger = logging.getLogger(__name__)


def coloring_to_dot(col, name='decomposition'):
    """DOT source of ``col``: edges colored red/blue/green, clique vertices
    labeled with their sequence position and stable-set degree."""
    g = col.graph
    labels = {v: str(v + 1) for v in g.vertices()}
    clique = set()
    try:
        stripped, removed = strip_isolated(g)
        kept = [v for v in g.vertices() if v not in set(removed)]
        if stripped.edge_count:
            p = split_partition(stripped)
            for i, v in enumerate(p.clique, start=1):
                original = kept[v]
                clique.add(original)
                labels[original] = f"{original + 1}\\nv{i} d={p.d[i - 1]}"
    except NotSplitError:
        _logger.info("Graph is not split, exporting without clique annotations")

    dot = graphviz.Graph(name)
    dot.attr('node', shape='circle')
    for v in g.vertices():
        dot.node(str(v + 1), labels[v], shape='doublecircle' if v in clique else 'circle')
    for (u, v), c in col.items():
        dot.edge(str(u + 1), str(v + 1), color=COLOR_NAMES[c])
    return dot.source
