# -*- coding: utf-8 -*-
"""Structured red/blue colorings of complete graphs and alternating cycles.

A coloring of the clique is built on sequence *positions* ``1..n``; the
vertex sitting at position ``i`` is ``sequence[i - 1]``. Normal colorings use
the given sequence directly. Strange colorings take the vertices in label
order ``(v1, ..., vn)`` and place them on positions through a fixed
arrangement before coloring.
"""
import logging

from ..exceptions import ConstructionFailed, ContractError, InputError, UnsupportedError
from .graph import BLUE, RED, EdgeColoring, Graph, normalize_edge, other_color

_logger = logging.getLogger(__name__)

STRANGE_MIN_VERTICES = 10


class CliqueColoring(EdgeColoring):
    """Red/blue coloring of a clique that remembers its vertex sequences.

    Attributes:
        sequence: vertices in the order the caller supplied them
        arrangement: vertices by coloring position (equal to ``sequence`` for
            normal colorings)
    """

    __slots__ = ('sequence', 'arrangement')

    def __init__(self, sequence, arrangement, position_colors):
        self.sequence = tuple(sequence)
        self.arrangement = tuple(arrangement)
        host = Graph(
            max(self.arrangement) + 1,
            ((u, v) for i, u in enumerate(self.arrangement) for v in self.arrangement[i + 1:]),
        )
        color_of = {
            (self.arrangement[i - 1], self.arrangement[j - 1]): color
            for (i, j), color in position_colors.items()
        }
        super(CliqueColoring, self).__init__(host, color_of, k=2)

    @property
    def n(self):
        return len(self.arrangement)

    def at(self, i):
        """Vertex at coloring position ``i`` (1-based)."""
        return self.arrangement[i - 1]

    def label(self, i):
        """Vertex ``v_i`` of the supplied sequence (1-based)."""
        return self.sequence[i - 1]

    def red_degrees(self):
        """Red degree of every vertex of ``sequence``, in sequence order."""
        return [self.color_degree(v, RED) for v in self.sequence]


def _check_sequence(seq, minimum):
    seq = tuple(seq)
    if len(seq) < minimum:
        raise InputError(f"Sequence needs at least {minimum} vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise InputError(f"Sequence {seq} repeats a vertex")
    if any(not isinstance(v, int) or v < 0 for v in seq):
        raise InputError(f"Sequence {seq} must hold non-negative vertex ids")
    return seq


def _normal_position_colors(n):
    ceil_half = (n + 1) // 2
    colors = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if j <= ceil_half:
                colors[(i, j)] = RED
            elif i <= ceil_half and i <= n - j + 1:
                colors[(i, j)] = RED
            else:
                colors[(i, j)] = BLUE
    return colors


def normal_coloring(seq):
    """Normal coloring of the clique on ``seq``.

    Red is complete on the first ``ceil(n/2)`` positions and empty on the rest;
    position ``i > ceil(n/2)`` is red to positions ``1..n-i+1``. The only pair
    of equal red degrees sits at positions ``ceil(n/2)`` and ``ceil(n/2)+1``;
    their edge is red for even ``n`` and blue for odd ``n``.

    Raises:
        InputError: fewer than two vertices, or a repeated vertex
    """
    seq = _check_sequence(seq, 2)
    return CliqueColoring(seq, seq, _normal_position_colors(len(seq)))


def conflict_pair_color(n):
    """Color of the conflicting edge of a normal coloring on ``n`` vertices."""
    return RED if n % 2 == 0 else BLUE


def strange_arrangement(n):
    """Positions of ``v1..vn`` (as 1-based labels) used by the strange coloring."""
    ceil_half, floor_half = (n + 1) // 2, n // 2
    head = list(range(3, floor_half + 2))
    if ceil_half % 2:
        return head + [1, floor_half + 2, 2] + list(range(floor_half + 3, n + 1))
    return head + [1, floor_half + 2, floor_half + 3, 2] + list(range(floor_half + 4, n + 1))


def _ladder(top, bottom):
    """Pairs ``(top, top-1), (top-2, top-3), ...`` down to ``(bottom+1, bottom)``."""
    pairs = []
    high = top
    while high - 1 >= bottom:
        pairs.append((high, high - 1))
        high -= 2
    return pairs


def _strange_position_colors(n):
    ceil_half, floor_half = (n + 1) // 2, n // 2
    residue = n % 4
    colors = {}

    def paint(i, j, color):
        colors[(min(i, j), max(i, j))] = color

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            colors[(i, j)] = RED if j <= ceil_half else BLUE
    for i in range(ceil_half + 1, n):
        for j in range(1, n - i + 1):
            paint(i, j, RED)
    paint(n, 1, RED)
    if residue != 1:
        # the ladder covers this pair when n = 1 (mod 4)
        paint(ceil_half + 1, floor_half, RED)

    paint(floor_half - 1, floor_half, BLUE)
    paint(floor_half - 1, n - 1, RED)
    if ceil_half % 2 == 0:
        paint(1, ceil_half + 1, BLUE)
    else:
        paint(1, floor_half + 1, BLUE)

    if residue == 2:
        ladder = _ladder(n - 2, floor_half + 2)
    elif residue in (0, 3):
        ladder = _ladder(n - 2, floor_half + 3)
    else:
        ladder = [(n - 1, floor_half - 1), (n - 2, floor_half), (n - 3, floor_half + 1)]
        ladder += _ladder(n - 4, floor_half + 2)
    for i, j in ladder:
        paint(i, j, RED)
    return colors


def _expected_strange_conflicts(n):
    ceil_half, floor_half = (n + 1) // 2, n // 2
    red = {(1, floor_half + 2)}
    if ceil_half % 2 == 0:
        blue = {(2, floor_half + 3)}
    else:
        blue = {(2, floor_half + 2), (1, 2)}
    return red, blue


def strange_coloring(labels):
    """Strange coloring of the clique on ``labels = (v1, ..., vn)``, ``n >= 10``.

    Red degrees come out as ``n - i + 1`` for ``v3..vn``, ``n - floor(n/2) - 1``
    for ``v1``, and for ``v2`` one less than that when ``ceil(n/2)`` is even.
    Red has the single conflicting edge ``v1 v_{floor(n/2)+2}``; blue has
    ``v2 v_{floor(n/2)+3}`` when ``ceil(n/2)`` is even and
    ``v2 v_{floor(n/2)+2}``, ``v2 v1`` otherwise. All of this is checked before
    the coloring is returned.

    Raises:
        UnsupportedError: fewer than 10 vertices
        ConstructionFailed: the built coloring misses one of the formulas
    """
    labels = tuple(labels)
    if len(labels) < STRANGE_MIN_VERTICES:
        raise UnsupportedError(
            f"Strange colorings need at least {STRANGE_MIN_VERTICES} vertices, got {len(labels)}"
        )
    labels = _check_sequence(labels, STRANGE_MIN_VERTICES)
    n = len(labels)
    arrangement = [labels[i - 1] for i in strange_arrangement(n)]
    coloring = CliqueColoring(labels, arrangement, _strange_position_colors(n))
    _check_strange(coloring)
    return coloring


def _check_strange(coloring):
    n = coloring.n
    floor_half, ceil_half = n // 2, (n + 1) // 2
    expected = {1: n - floor_half - 1}
    expected[2] = n - floor_half - 2 if ceil_half % 2 == 0 else n - floor_half - 1
    for i in range(3, n + 1):
        expected[i] = n - i + 1
    for i, value in expected.items():
        actual = coloring.color_degree(coloring.label(i), RED)
        if actual != value:
            raise ConstructionFailed(
                f"Strange coloring on {n} vertices gives v{i} red degree {actual}, expected {value}"
            )
    index = {v: i for i, v in enumerate(coloring.sequence, start=1)}
    found = {RED: set(), BLUE: set()}
    for (u, v), color in coloring.items():
        if coloring.color_degree(u, color) == coloring.color_degree(v, color):
            found[color].add(tuple(sorted((index[u], index[v]))))
    red, blue = _expected_strange_conflicts(n)
    if found[RED] != red or found[BLUE] != blue:
        raise ConstructionFailed(
            f"Strange coloring on {n} vertices has conflicts red={sorted(found[RED])} "
            f"blue={sorted(found[BLUE])}, expected red={sorted(red)} blue={sorted(blue)}"
        )


def _cycle_vertices(cycle):
    cycle = tuple(cycle)
    if len(cycle) > 1 and cycle[0] == cycle[-1]:
        cycle = cycle[:-1]
    if len(cycle) < 4 or len(cycle) % 2:
        raise InputError(f"Cycle {cycle} must have even length of at least 4")
    if len(set(cycle)) != len(cycle):
        raise InputError(f"Cycle {cycle} repeats a vertex")
    return cycle


def cycle_edges(cycle):
    cycle = _cycle_vertices(cycle)
    return [(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def is_alternating_cycle(col, cycle):
    """True iff colors alternate around ``cycle`` and every cycle edge joins
    vertices of different degree in the color it does not carry.

    ``cycle`` lists the vertices in order; repeating the first vertex at the
    end is optional.

    Raises:
        InputError: odd or short cycle, repeated vertex, or a pair that is not an edge
    """
    edges = cycle_edges(cycle)
    for u, v in edges:
        if not col.graph.has_edge(u, v):
            raise InputError(f"Cycle step {u}-{v} is not an edge of the graph")
    colors = [col.color(u, v) for u, v in edges]
    for i, color in enumerate(colors):
        if color not in (RED, BLUE) or color == colors[(i + 1) % len(colors)]:
            return False
    for (u, v), color in zip(edges, colors):
        opposite = other_color(color)
        if col.color_degree(u, opposite) == col.color_degree(v, opposite):
            return False
    return True


def invert_cycle(col, cycle):
    """Swap red and blue on the edges of an alternating cycle.

    Every vertex keeps its red and blue degree, so no conflicting edge is created.

    Raises:
        ContractError: ``cycle`` is not alternating in ``col``
    """
    if not is_alternating_cycle(col, cycle):
        raise ContractError(f"Cycle {tuple(cycle)} is not alternating")
    changes = {normalize_edge(u, v): other_color(col.color(u, v)) for u, v in cycle_edges(cycle)}
    _logger.debug("Inverting alternating cycle %s", tuple(cycle))
    return col.recolor(changes)


def find_alternating_cycle(col, edge, max_length=6):
    """Shortest alternating cycle through ``edge`` of at most ``max_length`` edges.

    Returns:
        tuple: cycle vertices starting with the endpoints of ``edge``, or None
    """
    graph = col.graph
    start, second = edge

    def fits(u, v, color):
        opposite = other_color(color)
        return color in (RED, BLUE) and col.color_degree(u, opposite) != col.color_degree(v, opposite)

    first_color = col.color(start, second)
    if not fits(start, second, first_color):
        return None

    def extend(path, last_color, length):
        tail = path[-1]
        if len(path) == length:
            closing = col.color(tail, start) if graph.has_edge(tail, start) else None
            if closing == other_color(last_color) and closing != first_color and fits(tail, start, closing):
                return tuple(path)
            return None
        wanted = other_color(last_color)
        on_path = set(path)
        for w in sorted(graph.neighbors(tail)):
            if w in on_path or col.color(tail, w) != wanted or not fits(tail, w, wanted):
                continue
            path.append(w)
            found = extend(path, wanted, length)
            if found:
                return found
            path.pop()
        return None

    for length in range(4, max_length + 1, 2):
        found = extend([start, second], first_color, length)
        if found:
            return found
    return None
