# -*- coding: utf-8 -*-
"""Building blocks shared by the split-graph constructions.

Every helper works on a :class:`SplitPartition` and returns a full
:class:`EdgeColoring` of its graph; clique edges come from a structured
coloring of a vertex sequence and stable-set edges get a color per clique
vertex.
"""
import logging

from ..exceptions import ConstructionFailed, InputError
from .graph import BLUE, GREEN, RED, EdgeColoring, normalize_edge, other_color, verify_decomposition
from .kn_coloring import conflict_pair_color, find_alternating_cycle, invert_cycle, is_alternating_cycle, normal_coloring

_logger = logging.getLogger(__name__)

# Deciding cases: which part of the characterization fixed the index.
CASE_EDGELESS = 'edgeless'
CASE_NOT_DECOMPOSABLE = 'not-decomposable'
CASE_STRICTLY_DECREASING = 'strictly-decreasing-d'
CASE_LARGE_SPARSE = 'large-clique-sparse'
CASE_LARGE_HALF_COVERED = 'large-clique-half-covered'
CASE_LARGE_HALF_EMPTY = 'large-clique-half-empty'
CASE_SMALL_BISTAR = 'small-clique-bistar'
CASE_SMALL_DEGREE_SUM = 'small-clique-degree-sum'
CASE_SMALL_THREE_STABLE_EDGES = 'small-clique-three-stable-edges'
CASE_SMALL_NINE_PAIR = 'small-clique-nine-pair'
CASE_SMALL_SPARSE = 'small-clique-sparse'

# Constructions: how the certificate was built.
CONSTRUCTION_WHOLE_GRAPH = 'irregular-whole-graph'
CONSTRUCTION_GREEN_STAR = 'green-star-3-coloring'
CONSTRUCTION_NORMAL_SPLIT = 'normal-split-2-coloring'
CONSTRUCTION_STRANGE_SPLIT = 'strange-split-2-coloring'
CONSTRUCTION_PENDANT_STAR = 'pendant-star-2-coloring'
CONSTRUCTION_BISTAR = 'bistar-2-coloring'
CONSTRUCTION_SMALL_SEQUENCE = 'small-sequence-2-coloring'
CONSTRUCTION_EXACT_SEARCH = 'exact-search'


class ConstructionTrace(object):
    """Which construction produced a certificate and which repairs were applied."""

    def __init__(self):
        self.construction = None
        self.repairs = []

    def note(self, message, *args):
        text = message % args if args else message
        self.repairs.append(text)
        _logger.debug(text)


def is_clean(col):
    return verify_decomposition(col).is_clean


def assemble(p, clique_coloring, y_colors, overrides=None, k=2):
    """Extend a clique coloring to the whole split graph.

    Args:
        p: the split partition
        clique_coloring: coloring of the edges inside ``p.clique``
        y_colors: clique vertex -> color given to all its stable-set edges
        overrides: edge -> color applied last
        k: number of colors of the result
    """
    color_of = clique_coloring.as_dict()
    for x, y in p.y_edges():
        color_of[normalize_edge(x, y)] = y_colors[x]
    for (u, v), color in (overrides or {}).items():
        color_of[normalize_edge(u, v)] = color
    return EdgeColoring(p.graph, color_of, k=k)


def split_normal_coloring(p, seq):
    """Normal coloring of ``seq``; the first ceil(n/2) entries are red to Y, the rest blue."""
    ceil_half = p.ceil_half
    y_colors = {x: RED if i < ceil_half else BLUE for i, x in enumerate(seq)}
    return assemble(p, normal_coloring(seq), y_colors)


def repair_conflict_pair(p, col, seq, trace):
    """Flip the stable-set edge that clashes with the equal-degree pair of ``seq``.

    When the other vertex of the pair has a single stable-set neighbour ``z``,
    that edge is flipped too so the pair stays apart.
    """
    ceil_half = p.ceil_half
    pair = (seq[ceil_half - 1], seq[ceil_half])
    for conflict in verify_decomposition(col):
        a, b = conflict.edge
        y, x = (a, b) if a in p.stable else (b, a)
        if y not in p.stable or x not in pair:
            continue
        partner = pair[1] if x == pair[0] else pair[0]
        changes = {(y, x): other_color(conflict.color)}
        partner_y = p.y_neighbors(partner)
        if len(partner_y) == 1:
            z = partner_y[0]
            changes[(z, partner)] = other_color(col.color(z, partner))
            trace.note("two-edge repair: flipped %s-%s and %s-%s", y, x, z, partner)
        else:
            trace.note("one-edge repair: flipped %s-%s", y, x)
        return col.recolor(changes)
    return col


def heavy_sequences(p):
    """Candidate arrangements for the normal split 2-coloring, preferred one first."""
    clique = p.clique
    heavy_first = clique[:p.ceil_half] + tuple(reversed(clique[p.ceil_half:]))
    light_first = clique[p.floor_half:] + tuple(reversed(clique[:p.floor_half]))
    if p.n % 2 == 0:
        return [('heavy-first', heavy_first), ('light-first', light_first)]
    return [('light-first', light_first), ('heavy-first', heavy_first)]


def heavy_two_coloring(p, trace):
    """Try each normal split arrangement with its pair repair.

    Returns:
        tuple: the first clean coloring (or None) and the coloring of the
        preferred arrangement for later repairs
    """
    preferred = None
    for name, seq in heavy_sequences(p):
        col = repair_conflict_pair(p, split_normal_coloring(p, seq), seq, trace)
        if preferred is None:
            preferred = col
        if is_clean(col):
            trace.note("accepted %s arrangement", name)
            return col, preferred
        _logger.warning("Normal split arrangement %s left conflicts for d=%s", name, p.d)
    return None, preferred


def star_sequence(p):
    """``(v2, ..., v_ceil, v1, v_ceil+1, ..., vn)``: v1 lands on the pair position ceil(n/2)."""
    clique = p.clique
    return clique[1:p.ceil_half] + (clique[0],) + clique[p.ceil_half:]


def pendant_star_coloring(p):
    """Normal coloring with v1 on the pair position and its stable edges in the pair color.

    Clean whenever the stable vertices hang off ``v1`` only and ``d1 >= floor(n/2)``.
    """
    seq = star_sequence(p)
    pair_color = conflict_pair_color(p.n)
    y_colors = {x: other_color(pair_color) for x in p.clique}
    y_colors[p.v(1)] = pair_color
    return assemble(p, normal_coloring(seq), y_colors)


def green_star_coloring(p, other_y_color=GREEN):
    """3-coloring: v1's stable edges and ``v1 v_{ceil+1}`` turn green.

    Stable edges of other clique vertices get ``other_y_color``.
    """
    n, ceil_half = p.n, p.ceil_half
    v1 = p.v(1)
    y_colors = {x: other_y_color for x in p.clique}
    y_colors[v1] = GREEN
    overrides = {(v1, p.v(ceil_half + 1)): GREEN}
    if p.d[0] == 0:
        if n % 2 == 0:
            overrides[(v1, p.v(ceil_half))] = GREEN
        else:
            overrides[(p.v(ceil_half + 1), p.v(ceil_half + 2))] = GREEN
    return assemble(p, normal_coloring(star_sequence(p)), y_colors, overrides=overrides, k=3)


def bistar_coloring(p):
    """Red closed star at v1, blue star at v2."""
    v1, v2 = p.v(1), p.v(2)
    return assemble(p, normal_coloring((v1, v2)), {v1: RED, v2: BLUE})


def repair_by_cycles(col, trace, max_length, template_for=None):
    """Remove conflicts of a red/blue coloring by inverting alternating cycles.

    Args:
        col: the coloring to repair
        trace: receives one note per inverted cycle
        max_length: longest cycle the generic search looks for
        template_for: optional callable ``(col, report) -> cycle or None``
            proposing a cycle before the generic search runs

    Raises:
        ConstructionFailed: a conflict has no alternating cycle through it
    """
    report = verify_decomposition(col)
    while not report.is_clean:
        cycle = template_for(col, report) if template_for is not None else None
        if cycle is None:
            conflict = report.conflicts[0]
            cycle = find_alternating_cycle(col, conflict.edge, max_length)
            if cycle is None:
                raise ConstructionFailed(
                    f"No alternating cycle of length <= {max_length} through conflicting "
                    f"edge {conflict.edge[0]}-{conflict.edge[1]}",
                    report=report,
                )
        col = invert_cycle(col, cycle)
        trace.note("inverted alternating cycle %s", cycle)
        report = verify_decomposition(col)
    return col


def usable_template(col, cycle):
    """``cycle`` if it is a well-formed alternating cycle of ``col``, else None."""
    try:
        return cycle if is_alternating_cycle(col, cycle) else None
    except InputError as e:
        _logger.debug("Repair cycle %s rejected: %s", cycle, e)
        return None
