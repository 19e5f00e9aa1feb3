# -*- coding: utf-8 -*-
"""End-to-end runs: decomposer against oracle, large-clique grid, random fuzz."""
import random
import unittest

from ..models import recipes
from ..models.decomposer import decompose, decompose_graph
from ..models.generators import enumerate_split_graphs, gen_split_graph, random_split_graph
from ..models.graph import is_locally_irregular, verify_decomposition
from ..models.oracle import oracle_chi
from ..models.res_config_settings import ResConfigSettings
from ..models.split_partition import split_partition


def expected_large_chi(d):
    """Index for a clique of at least 10 vertices, from the d-sequence alone."""
    n = len(d)
    if all(a > b for a, b in zip(d, d[1:])):
        return 1
    return 2 if d[0] >= n // 2 or d[1] >= 1 else 3


class TestAcceptance(unittest.TestCase):

    def setUp(self):
        super(TestAcceptance, self).setUp()
        self.settings = ResConfigSettings()

    def assertCertified(self, result, graph=None):
        if result.chi is None:
            self.assertIsNone(result.certificate)
            return
        col = result.certificate
        self.assertTrue(verify_decomposition(col).is_clean, repr(result))
        self.assertEqual(col.k, result.chi)
        if graph is not None:
            self.assertIs(col.graph, graph)
        if result.construction == recipes.CONSTRUCTION_WHOLE_GRAPH:
            self.assertTrue(is_locally_irregular(col.graph))

    def test_decomposer_matches_oracle_on_every_small_split_graph(self):
        bound = self.settings.get_param('test_enumeration_max_vertices')
        checked = 0
        for g in enumerate_split_graphs(bound, self.settings):
            result = decompose_graph(g, self.settings)
            self.assertCertified(result, g)
            oracle = oracle_chi(g, settings=self.settings)
            self.assertEqual(result.chi, oracle.chi, f"{g!r}: {result} vs {oracle}")
            self.assertNotEqual(oracle.chi, 4)
            checked += 1
        self.assertGreater(checked, 0)

    def test_large_clique_grid(self):
        for n in range(10, 15):
            for d1 in range(0, (n + 1) // 2 + 1):
                for d2 in (0, 1):
                    if d2 > d1:
                        continue
                    d = [d1, d2] + [0] * (n - 2)
                    g = gen_split_graph(n, d, [1] * (d1 + d2))
                    p = split_partition(g)
                    result = decompose(p, self.settings)
                    self.assertEqual(result.chi, expected_large_chi(p.d), f"n={n} d={p.d}")
                    self.assertCertified(result)

    def test_random_large_split_graphs(self):
        rng = random.Random(1729)
        for index in range(1000):
            n = rng.randint(10, 40)
            g = random_split_graph(n, rng.randint(0, 3 * n), seed=rng.randrange(1 << 30))
            result = decompose_graph(g, self.settings)
            self.assertEqual(result.chi, expected_large_chi(result.partition.d), f"instance {index}")
            self.assertCertified(result, g)

    def test_pendant_grid_with_three_stable_degrees(self):
        for n in range(10, 17):
            for d1 in range(2, n + 1):
                for d2 in range(2, d1 + 1):
                    for d3 in range(0, min(3, d2) + 1):
                        d = [d1, d2, d3] + [0] * (n - 3)
                        g = gen_split_graph(n, d, [1] * (d1 + d2 + d3))
                        result = decompose(split_partition(g), self.settings)
                        self.assertEqual(result.chi, 2, f"n={n} d={d}")
                        self.assertEqual(result.rule, recipes.CASE_LARGE_HALF_EMPTY)
                        self.assertCertified(result)
