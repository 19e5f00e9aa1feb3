# -*- coding: utf-8 -*-
"""Certificates for split graphs whose clique has at most 9 vertices.

The general recipes are tried first, then hand-made sequences for the
individual clique sizes, then a cycle repair of the best candidate and,
as a last resort, exact search.
"""
import logging

from ..exceptions import ConstructionFailed, ContractError
from . import recipes
from .graph import BLUE, GREEN, RED, other_color, verify_decomposition
from .kn_coloring import conflict_pair_color, normal_coloring
from .oracle import search_coloring
from .recipes import ConstructionTrace
from .res_config_settings import ResConfigSettings

_logger = logging.getLogger(__name__)

SMALL_CLIQUE_MAX = 9

# (sequence as 1-based labels, labels whose stable edges take the color of v1's
# edge to its successor); all other labels with stable edges take the other color
_FAMILY_SEQUENCES = {
    8: (
        ((2, 4, 5, 1, 6, 7, 8, 3), (1, 2)),
        ((4, 2, 5, 1, 6, 7, 8, 3), (1, 2)),
        ((2, 3, 4, 1, 5, 6, 7, 8), (1, 2)),
    ),
    9: (
        ((3, 4, 5, 6, 1, 7, 8, 9, 2), (1, 2)),
        ((3, 4, 5, 6, 1, 7, 8, 2, 9), (1, 2)),
        ((4, 5, 6, 7, 1, 8, 9, 2, 3), (1, 2)),
    ),
}

_HEAVY_V1_SEQUENCES = {
    4: (2, 1, 4, 3),
    5: (2, 3, 1, 4, 5),
    6: (2, 3, 4, 1, 5, 6),
    7: (2, 3, 4, 1, 5, 6, 7),
    8: (2, 4, 5, 1, 6, 7, 8, 3),
    9: (2, 3, 4, 5, 1, 6, 7, 8, 9),
}


def _sequence_coloring(p, labels, y_colors_by_label, default_color):
    seq = tuple(p.v(i) for i in labels)
    y_colors = {x: default_color for x in p.clique}
    for label, color in y_colors_by_label.items():
        y_colors[p.v(label)] = color
    return recipes.assemble(p, normal_coloring(seq), y_colors)


def _sequence_candidates(p):
    """Hand-made (name, coloring) pairs for ``4 <= n <= 9``."""
    n, d = p.n, p.d
    pair_color = conflict_pair_color(n)
    other = other_color(pair_color)
    labels = _HEAVY_V1_SEQUENCES.get(n)
    if labels is not None:
        # v1 heavy in the pair color, next vertices in the other color
        yield 'heavy-v1', _sequence_coloring(p, labels, {1: pair_color}, other)
        if n >= 6:
            yield 'heavy-v1-v2', _sequence_coloring(p, labels, {1: pair_color, 2: pair_color}, other)
    for labels, along_v1 in _FAMILY_SEQUENCES.get(n, ()):
        seq = tuple(p.v(i) for i in labels)
        successor = seq[seq.index(p.v(1)) + 1]
        clique_coloring = normal_coloring(seq)
        color = clique_coloring.color(p.v(1), successor)
        y_colors = {x: other_color(color) for x in p.clique}
        for label in along_v1:
            y_colors[p.v(label)] = color
        yield f'family-{"".join(map(str, labels))}', recipes.assemble(p, clique_coloring, y_colors)
    if d[1] == 0:
        yield 'pendant-star', recipes.pendant_star_coloring(p)


def _exact(p, k, trace, settings):
    budget = settings.get_param('exact_search_edge_budget')
    if p.graph.edge_count > budget:
        raise ConstructionFailed(
            f"No recipe for n={p.n} d={p.d} and {p.graph.edge_count} edges exceed the "
            f"exact search budget of {budget}")
    col = search_coloring(p.graph, k)
    if col is None:
        raise ConstructionFailed(f"Exact search found no {k}-coloring for n={p.n} d={p.d}")
    trace.construction = recipes.CONSTRUCTION_EXACT_SEARCH
    trace.note("exact search with %s colors", k)
    return col


def _two_coloring(p, trace, settings):
    n, d = p.n, p.d
    if n == 2:
        trace.construction = recipes.CONSTRUCTION_BISTAR
        return recipes.bistar_coloring(p)
    candidates = []
    if p.d_of(p.floor_half) >= 1:
        col, preferred = recipes.heavy_two_coloring(p, trace)
        if col is not None:
            trace.construction = recipes.CONSTRUCTION_NORMAL_SPLIT
            return col
        candidates.append(('normal-split', preferred))
    if d[1] == 0 and d[0] >= p.floor_half:
        col = recipes.pendant_star_coloring(p)
        if recipes.is_clean(col):
            trace.construction = recipes.CONSTRUCTION_PENDANT_STAR
            return col
    if n >= 4:
        for name, col in _sequence_candidates(p):
            if recipes.is_clean(col):
                trace.construction = recipes.CONSTRUCTION_SMALL_SEQUENCE
                trace.note("sequence candidate %s", name)
                return col
            candidates.append((name, col))
    if candidates:
        name, best = min(candidates, key=lambda item: len(verify_decomposition(item[1])))
        try:
            col = recipes.repair_by_cycles(
                best, trace, settings.get_param('repair_cycle_max_length'))
            trace.construction = recipes.CONSTRUCTION_SMALL_SEQUENCE
            trace.note("repaired sequence candidate %s", name)
            return col
        except ConstructionFailed as e:
            _logger.warning("Cycle repair failed for n=%s d=%s: %s", n, d, e)
    return _exact(p, 2, trace, settings)


def _three_coloring(p, trace, settings):
    if p.n >= 4:
        colors = (GREEN,) if p.d[1] == 0 else (GREEN, RED, BLUE)
        for color in colors:
            col = recipes.green_star_coloring(p, other_y_color=color)
            if recipes.is_clean(col):
                trace.construction = recipes.CONSTRUCTION_GREEN_STAR
                return col
    return _exact(p, 3, trace, settings)


def construct_small(p, chi, trace=None, settings=None):
    """Certificate with ``chi`` colors for a clique of at most 9 vertices.

    Raises:
        ContractError: clique too large or ``chi`` not 2 or 3
        ConstructionFailed: every recipe and the exact search failed
    """
    trace = trace or ConstructionTrace()
    settings = settings or ResConfigSettings()
    if not 2 <= p.n <= SMALL_CLIQUE_MAX or chi not in (2, 3):
        raise ContractError(f"Small case construction covers 2 <= n <= 9 and 2 or 3 colors, got n={p.n} chi={chi}")
    if chi == 2:
        return _two_coloring(p, trace, settings)
    return _three_coloring(p, trace, settings)
