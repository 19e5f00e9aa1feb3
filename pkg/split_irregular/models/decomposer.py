# -*- coding: utf-8 -*-
"""Irregular chromatic index of split graphs with certifying colorings."""
import logging

import networkx as nx

from ..exceptions import ConstructionFailed, ContractError
from . import recipes
from .graph import BLUE, RED, EdgeColoring, verify_decomposition
from .recipes import ConstructionTrace, usable_template
from .res_config_settings import ResConfigSettings
from .small_cases import construct_small
from .split_partition import kept_vertices, split_partition, strip_isolated
from .kn_coloring import strange_coloring

_logger = logging.getLogger(__name__)

LARGE_CLIQUE = 10

_NOT_DECOMPOSABLE_GRAPHS = (
    ('K2', nx.complete_graph(2)),
    ('K3', nx.complete_graph(3)),
    ('P4', nx.path_graph(4)),
)


class ChiResult(object):
    """Outcome of classifying a split graph.

    Attributes:
        chi: the irregular chromatic index, or None when the graph is not decomposable
        rule: the case of the characterization that decided ``chi``
        construction: how the certificate was built, None before construction
        certificate: a clean coloring with ``chi`` colors, None when not decomposable
        partition: the split partition the decision was made on
        repairs: notes on repairs applied while building the certificate
        removed: isolated vertices dropped before classification
    """

    __slots__ = ('chi', 'rule', 'construction', 'certificate', 'partition', 'repairs', 'removed')

    def __init__(self, chi, rule, certificate=None, partition=None, repairs=(), removed=(), construction=None):
        self.chi = chi
        self.rule = rule
        self.construction = construction
        self.certificate = certificate
        self.partition = partition
        self.repairs = tuple(repairs)
        self.removed = tuple(removed)

    @property
    def is_decomposable(self):
        return self.chi is not None

    @property
    def status(self):
        return 'not-decomposable' if self.chi is None else f'chi={self.chi}'

    def __repr__(self):
        return f"ChiResult({self.status}, rule={self.rule!r}, construction={self.construction!r})"


def _not_decomposable_name(g):
    for name, pattern in _NOT_DECOMPOSABLE_GRAPHS:
        if g.vertex_count == pattern.number_of_nodes() and g.edge_count == pattern.number_of_edges():
            if nx.is_isomorphic(g.to_networkx(), pattern):
                return name
    return None


def _strictly_decreasing(d):
    return all(a > b for a, b in zip(d, d[1:]))


def _classify_large(n, d):
    floor_half = n // 2
    if d[0] < floor_half and d[1] == 0:
        return 3, recipes.CASE_LARGE_SPARSE
    if d[floor_half - 1] >= 1:
        return 2, recipes.CASE_LARGE_HALF_COVERED
    return 2, recipes.CASE_LARGE_HALF_EMPTY


def _classify_small(n, d):
    floor_half = n // 2
    padded = list(d) + [0, 0, 0]
    if 3 <= n <= 9 and sum(d) >= floor_half:
        return 2, recipes.CASE_SMALL_DEGREE_SUM
    if 8 <= n <= 9 and sum(padded[:3]) == 3 and padded[1] >= 1:
        return 2, recipes.CASE_SMALL_THREE_STABLE_EDGES
    if n == 9 and padded[0] == padded[1] == 1:
        return 2, recipes.CASE_SMALL_NINE_PAIR
    if n == 2 and padded[0] == padded[1] >= 2:
        return 2, recipes.CASE_SMALL_BISTAR
    return 3, recipes.CASE_SMALL_SPARSE


def classify(p):
    """Irregular chromatic index of the split graph behind ``p``, without a certificate.

    Checked in order: edgeless graphs (0), K2/K3/P4 (not decomposable), a
    strictly decreasing d-sequence (1), then the characterization for cliques
    of at least 10 vertices or the small-clique table. ``rule`` names the case
    that decided.
    """
    g = p.graph
    if g.edge_count == 0:
        return ChiResult(0, recipes.CASE_EDGELESS, partition=p)
    name = _not_decomposable_name(g)
    if name:
        return ChiResult(None, recipes.CASE_NOT_DECOMPOSABLE, partition=p, repairs=[f'isomorphic to {name}'])
    n, d = p.n, p.d
    if _strictly_decreasing(d):
        return ChiResult(1, recipes.CASE_STRICTLY_DECREASING, partition=p)
    chi, rule = _classify_large(n, d) if n >= LARGE_CLIQUE else _classify_small(n, d)
    return ChiResult(chi, rule, partition=p)


def construct_chi1(p):
    """Single color class: the whole graph.

    Raises:
        ContractError: the d-sequence is not strictly decreasing
    """
    if p.n < 2 or not _strictly_decreasing(p.d):
        raise ContractError(f"One color needs a strictly decreasing d-sequence, got {p.d}")
    col = EdgeColoring(p.graph, {e: RED for e in p.graph.edges}, k=1)
    report = verify_decomposition(col)
    if not report.is_clean:
        raise ConstructionFailed(f"Graph with d={p.d} is not locally irregular", report=report)
    return col


def construct_3coloring(p, trace=None):
    """Normal coloring around v1 with a green star at v1.

    Raises:
        ContractError: unless ``n >= 4``, ``d1 < floor(n/2)`` and ``d2 = 0``
    """
    trace = trace or ConstructionTrace()
    if p.n < 4 or p.d[0] >= p.floor_half or p.d[1] != 0:
        raise ContractError(f"Green star coloring needs n >= 4, d1 < n/2 and d2 = 0, got d={p.d}")
    col = recipes.green_star_coloring(p)
    report = verify_decomposition(col)
    if not report.is_clean:
        raise ConstructionFailed(f"Green star coloring left {len(report)} conflict(s) for d={p.d}", report=report)
    trace.construction = recipes.CONSTRUCTION_GREEN_STAR
    return col


def construct_2coloring_heavy(p, trace=None, settings=None):
    """Normal split 2-coloring for ``d_floor(n/2) >= 1``.

    Raises:
        ContractError: ``n < 3`` or ``d_floor(n/2) = 0``
        ConstructionFailed: no arrangement and no cycle repair gave a clean coloring
    """
    trace = trace or ConstructionTrace()
    settings = settings or ResConfigSettings()
    if p.n < 3 or p.d_of(p.floor_half) < 1:
        raise ContractError(f"Normal split coloring needs n >= 3 and d_(n/2) >= 1, got d={p.d}")
    col, preferred = recipes.heavy_two_coloring(p, trace)
    if col is None:
        col = recipes.repair_by_cycles(
            preferred, trace, settings.get_param('repair_cycle_max_length'))
    trace.construction = recipes.CONSTRUCTION_NORMAL_SPLIT
    return col


def _blue_clique_neighbor(p, col, v):
    blue = [w for w in col.color_neighbors(v, BLUE) if w not in p.stable]
    return blue[0] if len(blue) == 1 else None


def _strange_templates(p):
    """Repair cycles for the conflicts left by the strange split coloring."""
    n, floor_half, ceil_half = p.n, p.floor_half, p.ceil_half
    v = p.v
    v1, v2, v3 = v(1), v(2), v(3)
    closing = v(floor_half + 3) if ceil_half % 2 else v(floor_half + 4)

    def template_for(col, report):
        for conflict in report:
            a, b = conflict.edge
            if conflict.color == RED and v1 in (a, b):
                partner = b if a == v1 else a
                if partner != v3:
                    cycle = (v1, partner, v(n - 1), v(floor_half + 1))
                else:
                    vk = _blue_clique_neighbor(p, col, v3)
                    cycle = None if vk is None else (v1, v3, vk, v(floor_half + 1))
            elif conflict.color == BLUE and v2 in (a, b):
                partner = b if a == v2 else a
                vk = _blue_clique_neighbor(p, col, v3)
                cycle = None if vk is None else (v2, partner, v3, vk, v(floor_half + 1), closing)
            else:
                continue
            if cycle is not None and usable_template(col, cycle):
                return cycle
            _logger.debug("Template cycle %s unusable, falling back to search", cycle)
        return None

    return template_for


def _v2_shift_order(p, red_side):
    """Stable neighbors of ``v2``, fewest red-side clique neighbors first."""
    graph = p.graph
    return sorted(p.y_neighbors(p.v(2)), key=lambda y: (len(red_side & set(graph.neighbors(y))), y))


def construct_2coloring_light(p, trace=None, settings=None):
    """2-coloring for cliques of at least 10 vertices with ``d_floor(n/2) = 0``.

    Stable vertices hanging off ``v1`` alone get the pendant star recipe. Otherwise
    the clique takes the strange coloring of ``v1..vn``, ``v1`` and
    ``v3..v_{floor(n/2)-1}`` go red to the stable set, ``v2`` blue, and the
    remaining conflicts at ``v1`` and ``v2`` are removed by alternating cycles.

    ``v3`` has a single blue clique edge in the strange coloring, so a red
    conflict at ``v1`` and a blue conflict at ``v2`` can both need it. When the
    repair runs out of cycles, stable edges of ``v2`` are moved to red one at a
    time and the repair is retried.

    Raises:
        ContractError: precondition does not hold
        ConstructionFailed: no shift of ``v2``'s stable edges could be repaired
    """
    trace = trace or ConstructionTrace()
    settings = settings or ResConfigSettings()
    n, floor_half, d = p.n, p.floor_half, p.d
    if n < LARGE_CLIQUE or p.d_of(floor_half) != 0 or not (d[0] >= floor_half or d[1] >= 1):
        raise ContractError(
            f"Strange split coloring needs n >= 10, d_(n/2) = 0 and (d1 >= n/2 or d2 >= 1), got d={d}")
    if d[1] == 0:
        col = recipes.pendant_star_coloring(p)
        report = verify_decomposition(col)
        if not report.is_clean:
            raise ConstructionFailed(f"Pendant star coloring left conflicts for d={d}", report=report)
        trace.construction = recipes.CONSTRUCTION_PENDANT_STAR
        return col
    v2 = p.v(2)
    red_side = {p.v(1)} | {p.v(i) for i in range(3, floor_half)}
    y_colors = {x: RED if x in red_side else BLUE for x in p.clique}
    clique_coloring = strange_coloring(p.clique)
    shift_order = _v2_shift_order(p, red_side)
    max_length = settings.get_param('repair_cycle_max_length')
    failure = None
    for shifted in range(len(shift_order) + 1):
        attempt = ConstructionTrace()
        if shifted:
            attempt.note("shifted %s stable edge(s) of v2 to red", shifted)
        overrides = {(v2, y): RED for y in shift_order[:shifted]}
        col = recipes.assemble(p, clique_coloring, y_colors, overrides)
        try:
            col = recipes.repair_by_cycles(col, attempt, max_length, template_for=_strange_templates(p))
        except ConstructionFailed as e:
            _logger.warning("Strange split repair failed for d=%s with %s shifted edge(s): %s", d, shifted, e)
            failure = e
            continue
        trace.repairs.extend(attempt.repairs)
        trace.construction = recipes.CONSTRUCTION_STRANGE_SPLIT
        return col
    raise failure


def decompose(p, settings=None):
    """Classify ``p`` and build a certificate coloring.

    Raises:
        ConstructionFailed: a certificate did not verify clean
    """
    settings = settings or ResConfigSettings()
    result = classify(p)
    if result.chi is None:
        return result
    if result.chi == 0:
        result.certificate = EdgeColoring(p.graph, {}, k=0)
        return result
    trace = ConstructionTrace()
    if result.chi == 1:
        col = construct_chi1(p)
        trace.construction = recipes.CONSTRUCTION_WHOLE_GRAPH
    elif p.n >= LARGE_CLIQUE and result.chi == 3:
        col = construct_3coloring(p, trace)
    elif p.n >= LARGE_CLIQUE and p.d_of(p.floor_half) >= 1:
        col = construct_2coloring_heavy(p, trace, settings)
    elif p.n >= LARGE_CLIQUE:
        col = construct_2coloring_light(p, trace, settings)
    else:
        col = construct_small(p, result.chi, trace, settings)
    report = verify_decomposition(col)
    if not report.is_clean or col.k != result.chi:
        raise ConstructionFailed(
            f"Certificate from {trace.construction} for d={p.d} has {len(report)} conflict(s) "
            f"and {col.k} colors, expected {result.chi}",
            report=report,
        )
    _logger.info("n=%s d=%s: chi=%s via %s", p.n, p.d, result.chi, trace.construction)
    return ChiResult(result.chi, result.rule, col, p, trace.repairs, construction=trace.construction)


def decompose_graph(g, settings=None):
    """Decompose an arbitrary split graph, isolated vertices included.

    The certificate is expressed on the vertex ids of ``g``.

    Raises:
        NotSplitError: ``g`` is not a split graph
    """
    stripped, removed = strip_isolated(g)
    if stripped.edge_count == 0:
        return ChiResult(0, recipes.CASE_EDGELESS, EdgeColoring(g, {}, k=0), removed=removed)
    p = split_partition(stripped)
    result = decompose(p, settings)
    certificate = result.certificate
    if certificate is not None and removed:
        kept = kept_vertices(g, removed)
        certificate = certificate.relabel(g, kept)
    return ChiResult(
        result.chi, result.rule, certificate, p, result.repairs, removed, construction=result.construction)
