# -*- coding: utf-8 -*-
import os
import unittest

from hypothesis import given, settings

from ..controllers.graph_io import (
    format_coloring, format_graph, parse_coloring, parse_graph, read_coloring, read_graph,
)
from ..exceptions import InputError, ParseError
from ..models.graph import BLUE, GREEN, RED, Graph, verify_decomposition
from .strategies import colorings, graphs

DATA = os.path.join(os.path.dirname(__file__), 'data')

TRIANGLE = """c triangle
p edge 3 3
e 1 2
e 2 3
e 1 3
"""


class TestGraphIO(unittest.TestCase):

    def test_parse_graph(self):
        g = parse_graph(TRIANGLE)
        self.assertEqual(g, Graph.complete(3))

    def test_comments_and_blank_lines(self):
        g = parse_graph("# made by hand\n\np edge 2 1\nc middle\ne 2 1\n")
        self.assertEqual(g, Graph.complete(2))

    def test_isolated_vertices_survive(self):
        g = parse_graph("p edge 4 1\ne 1 2\n")
        self.assertEqual(g.vertex_count, 4)

    def test_parse_errors_carry_line_numbers(self):
        cases = [
            ("p edge 3 1\ne 1 4\n", 2),
            ("p edge 3 1\ne 2 2\n", 2),
            ("p edge 3 2\ne 1 2\ne 2 1\n", 3),
            ("p edge 3 1\ne 1 x\n", 2),
            ("e 1 2\np edge 3 1\n", 1),
            ("p edge 3 1\nq 1 2\n", 2),
            ("p edge 3\n", 1),
            ("p edge 3 1\np edge 3 1\n", 2),
        ]
        for text, line_number in cases:
            with self.assertRaises(ParseError) as caught:
                parse_graph(text)
            self.assertEqual(caught.exception.line_number, line_number, text)
            self.assertTrue(str(caught.exception).startswith(f"line {line_number}:"))

    def test_file_level_errors(self):
        with self.assertRaises(ParseError):
            parse_graph("c nothing here\n")

    def test_edge_count_mismatch_points_at_header(self):
        with self.assertRaises(ParseError) as caught:
            parse_graph("c two edges promised\n\np edge 3 2\ne 1 2\n")
        self.assertEqual(caught.exception.line_number, 3)
        self.assertEqual(caught.exception.line, "p edge 3 2")

    def test_parse_coloring(self):
        col = parse_coloring("1 2 1\n2 3 2\n1 3 3\n", Graph.complete(3))
        self.assertEqual(col.k, 3)
        self.assertEqual((col.color(0, 1), col.color(1, 2), col.color(0, 2)), (RED, BLUE, GREEN))

    def test_coloring_errors(self):
        k3 = Graph.complete(3)
        with self.assertRaises(ParseError) as caught:
            parse_coloring("1 2 1\n2 3 4\n1 3 1\n", k3)
        self.assertEqual(caught.exception.line_number, 2)
        with self.assertRaises(ParseError):
            parse_coloring("1 2 1\n2 1 2\n1 3 1\n", k3)
        with self.assertRaises(ParseError):
            parse_coloring("1 2 1\n2 3 1\n1 4 1\n", k3)
        with self.assertRaises(ParseError):
            parse_coloring("1 2\n", k3)
        with self.assertRaises(InputError) as caught:
            parse_coloring("1 2 1\n2 3 1\n", k3)
        self.assertNotIsInstance(caught.exception, ParseError)

    def test_format_graph(self):
        text = format_graph(Graph.path(3), comments=['path'])
        self.assertEqual(text, "c path\np edge 3 2\ne 1 2\ne 2 3\n")

    def test_golden_colorings(self):
        names = ['residual_a_n8', 'residual_a_n9', 'residual_b_n8', 'residual_b_n9', 'residual_c_n9']
        for name in names:
            g = read_graph(os.path.join(DATA, name + '.graph'))
            col = read_coloring(os.path.join(DATA, name + '.coloring'), g)
            self.assertTrue(verify_decomposition(col).is_clean, name)
            self.assertEqual(col.k, 2, name)

    @given(graphs(max_vertices=8))
    @settings(max_examples=100, deadline=None)
    def test_graph_text_round_trip(self, g):
        self.assertEqual(parse_graph(format_graph(g)), g)

    @given(colorings(max_vertices=6, k=3))
    @settings(max_examples=100, deadline=None)
    def test_coloring_text_round_trip(self, col):
        parsed = parse_coloring(format_coloring(col), col.graph)
        self.assertEqual(parsed.as_dict(), col.as_dict())
