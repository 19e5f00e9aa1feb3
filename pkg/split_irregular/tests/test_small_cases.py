# -*- coding: utf-8 -*-
import unittest

from ..exceptions import ConstructionFailed, ContractError
from ..models import recipes
from ..models.decomposer import classify
from ..models.generators import gen_split_graph
from ..models.graph import BLUE, RED, Graph, verify_decomposition
from ..models.recipes import ConstructionTrace
from ..models.res_config_settings import ResConfigSettings
from ..models.small_cases import _exact, construct_small
from ..models.split_partition import split_partition


def pendant_partition(n, d):
    d = list(d) + [0] * (n - len(d))
    return split_partition(gen_split_graph(n, d, [1] * sum(d)))


class TestSmallCases(unittest.TestCase):

    def setUp(self):
        super(TestSmallCases, self).setUp()
        self.settings = ResConfigSettings()

    def construct(self, p, chi):
        trace = ConstructionTrace()
        col = construct_small(p, chi, trace, self.settings)
        self.assertTrue(verify_decomposition(col).is_clean, f"d={p.d} construction={trace.construction}")
        self.assertEqual(col.k, chi)
        return col, trace

    def test_bistar(self):
        p = pendant_partition(2, [2, 2])
        col, trace = self.construct(p, 2)
        self.assertEqual(trace.construction, recipes.CONSTRUCTION_BISTAR)
        v1, v2 = p.v(1), p.v(2)
        self.assertEqual(col.color_degree(v1, RED), 3)
        self.assertEqual(col.color_degree(v2, BLUE), 2)
        self.assertEqual(col.color(v1, v2), RED)

    def test_n8_two_one(self):
        p = pendant_partition(8, [2, 1])
        self.assertEqual(classify(p).chi, 2)
        self.construct(p, 2)

    def test_n9_one_one(self):
        p = pendant_partition(9, [1, 1])
        self.assertEqual(classify(p).chi, 2)
        self.construct(p, 2)

    def test_n8_one_one_one(self):
        p = pendant_partition(8, [1, 1, 1])
        self.assertEqual(classify(p).chi, 2)
        self.construct(p, 2)

    def test_pendant_star(self):
        p = pendant_partition(6, [3])
        col, trace = self.construct(p, 2)
        self.assertEqual(trace.construction, recipes.CONSTRUCTION_PENDANT_STAR)

    def test_complete_graph_three_colors(self):
        for n in range(4, 10):
            col, trace = self.construct(split_partition(Graph.complete(n)), 3)
            self.assertEqual(trace.construction, recipes.CONSTRUCTION_GREEN_STAR)

    def test_three_colors_with_second_vertex_loaded(self):
        p = pendant_partition(7, [1, 1])
        self.assertEqual(classify(p).chi, 3)
        self.construct(p, 3)

    def test_every_pendant_profile(self):
        # every d-sequence with at most 2 pendants per clique vertex
        for n in range(3, 10):
            for d in self._sequences(n, 2, limit=n // 2 + 1):
                p = pendant_partition(n, d)
                result = classify(p)
                if result.chi in (2, 3):
                    self.construct(p, result.chi)

    def _sequences(self, n, top, limit):
        def rec(prefix, high):
            if len(prefix) == limit:
                yield prefix
                return
            for value in range(high, -1, -1):
                yield from rec(prefix + [value], value)
        for d in rec([], top):
            yield d

    def test_contract(self):
        with self.assertRaises(ContractError):
            construct_small(pendant_partition(10, [5]), 2)
        with self.assertRaises(ContractError):
            construct_small(pendant_partition(5, [1]), 1)

    def test_exact_search(self):
        p = split_partition(Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]))
        trace = ConstructionTrace()
        col = _exact(p, 2, trace, self.settings)
        self.assertTrue(verify_decomposition(col).is_clean)
        self.assertEqual(trace.construction, recipes.CONSTRUCTION_EXACT_SEARCH)

    def test_exact_search_budget(self):
        settings = ResConfigSettings(overrides={'split_irregular.exact_search_edge_budget': 3})
        p = split_partition(Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]))
        with self.assertRaises(ConstructionFailed):
            _exact(p, 2, ConstructionTrace(), settings)
