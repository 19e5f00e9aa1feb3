# -*- coding: utf-8 -*-
import os
import unittest
from itertools import combinations

from hypothesis import given, settings

from ..controllers.graph_io import read_coloring, read_graph
from ..exceptions import InputError
from ..models.graph import (
    BLUE, GREEN, RED, EdgeColoring, Graph,
    color_subgraph, conflicting_edges, degree, is_locally_irregular, verify_decomposition,
)
from ..models.kn_coloring import normal_coloring
from .strategies import colorings, graphs

DATA = os.path.join(os.path.dirname(__file__), 'data')


def all_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pair for i, pair in enumerate(pairs) if mask >> i & 1])


class TestGraph(unittest.TestCase):

    def setUp(self):
        super(TestGraph, self).setUp()
        self.k3 = Graph.complete(3)
        self.p4 = Graph.path(4)

    def test_degree(self):
        self.assertEqual(degree(self.k3, 1), 2)
        self.assertEqual(degree(Graph.empty(5), 3), 0)
        self.assertEqual(degree(self.p4, 1), 2)

    def test_degree_out_of_range(self):
        with self.assertRaises(InputError):
            degree(self.k3, 3)

    def test_graph_rejects_bad_edges(self):
        with self.assertRaises(InputError):
            Graph(3, [(0, 0)])
        with self.assertRaises(InputError):
            Graph(3, [(0, 1), (1, 0)])
        with self.assertRaises(InputError):
            Graph(3, [(0, 5)])

    def test_is_locally_irregular(self):
        self.assertFalse(is_locally_irregular(Graph.complete(2)))
        self.assertTrue(is_locally_irregular(Graph.path(3)))
        self.assertTrue(is_locally_irregular(Graph.star(5)))
        self.assertTrue(is_locally_irregular(Graph.empty(4)))
        self.assertTrue(is_locally_irregular(Graph.empty(0)))

    def test_conflicting_edges(self):
        self.assertEqual(conflicting_edges(self.k3), [(0, 1), (0, 2), (1, 2)])
        self.assertEqual(conflicting_edges(self.p4), [(1, 2)])

    def test_conflicting_edges_match_irregularity_exhaustively(self):
        for n in range(6):
            for g in all_graphs(n):
                self.assertEqual(conflicting_edges(g) == [], is_locally_irregular(g))

    def test_color_subgraph(self):
        k2 = Graph.complete(2)
        col = EdgeColoring(k2, {(0, 1): RED}, k=2)
        self.assertEqual(color_subgraph(col, RED), k2)
        self.assertEqual(color_subgraph(col, BLUE), Graph.empty(2))
        with self.assertRaises(InputError):
            color_subgraph(col, 3)

    def test_red_subgraph_of_normal_coloring(self):
        col = normal_coloring(range(10))
        red = color_subgraph(col, RED)
        self.assertEqual(red.degrees(), [9, 8, 7, 6, 5, 5, 4, 3, 2, 1])
        self.assertEqual(conflicting_edges(red), [(4, 5)])

    def test_verify_monochromatic_irregular_graph(self):
        star = Graph.star(4)
        report = verify_decomposition(EdgeColoring(star, {e: RED for e in star.edges}))
        self.assertTrue(report.is_clean)

    def test_verify_k3_single_color(self):
        report = verify_decomposition(EdgeColoring(self.k3, {e: RED for e in self.k3.edges}))
        self.assertEqual(len(report), 3)
        self.assertEqual(report.by_color(RED), [(0, 1), (0, 2), (1, 2)])
        self.assertTrue(all(conflict.degree == 2 for conflict in report))

    def test_verify_rejects_partial_coloring(self):
        with self.assertRaises(InputError):
            verify_decomposition({(0, 1): RED}, graph=self.k3)

    def test_coloring_rejects_too_many_colors(self):
        with self.assertRaises(InputError):
            EdgeColoring(self.k3, {(0, 1): RED, (0, 2): BLUE, (1, 2): GREEN}, k=2)

    def test_recolor_returns_new_coloring(self):
        col = EdgeColoring(self.k3, {e: RED for e in self.k3.edges}, k=2)
        changed = col.recolor({(1, 0): BLUE})
        self.assertEqual(col.color(0, 1), RED)
        self.assertEqual(changed.color(0, 1), BLUE)
        self.assertEqual(changed.degree_vector(0), (1, 1))

    def test_residual_coloring_is_clean(self):
        g = read_graph(os.path.join(DATA, 'residual_a_n8.graph'))
        col = read_coloring(os.path.join(DATA, 'residual_a_n8.coloring'), g)
        self.assertTrue(verify_decomposition(col).is_clean)

    @given(colorings(k=3))
    @settings(max_examples=200, deadline=None)
    def test_color_classes_partition_edges(self, col):
        seen = set()
        for c in range(1, col.k + 1):
            edges = color_subgraph(col, c).edges
            self.assertFalse(edges & seen)
            seen |= edges
        self.assertEqual(seen, col.graph.edges)

    @given(colorings(k=3))
    @settings(max_examples=200, deadline=None)
    def test_clean_report_iff_classes_irregular(self, col):
        expected = all(is_locally_irregular(color_subgraph(col, c)) for c in range(1, col.k + 1))
        self.assertEqual(verify_decomposition(col).is_clean, expected)

    @given(graphs(max_vertices=7))
    @settings(max_examples=200, deadline=None)
    def test_conflicts_empty_iff_irregular(self, g):
        self.assertEqual(not conflicting_edges(g), is_locally_irregular(g))
