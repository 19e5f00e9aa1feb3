# -*- coding: utf-8 -*-
import os
import unittest
from unittest.mock import patch

from ..exceptions import InputError
from ..models import res_config_settings
from ..models.res_config_settings import ResConfigSettings


class TestResConfigSettings(unittest.TestCase):

    def setUp(self):
        super(TestResConfigSettings, self).setUp()
        self.settings = ResConfigSettings(environ={})

    def test_defaults(self):
        self.assertEqual(self.settings.get_param('split_irregular.oracle_edge_budget'), 40)
        self.assertEqual(self.settings.get_param('oracle_k_max'), 4)
        self.assertEqual(self.settings.get_param('repair_cycle_max_length'), 8)
        self.assertEqual(self.settings.get_param('log_level'), 'WARNING')

    def test_exhaustive_check_covers_the_enumeration_cap(self):
        bound = self.settings.get_param('test_enumeration_max_vertices')
        self.assertEqual(bound, 8)
        self.assertEqual(bound, self.settings.get_param('enumeration_max_vertices'))

    def test_call_site_default(self):
        self.assertEqual(self.settings.get_param('oracle_edge_budget', 12), 12)

    def test_overrides_win(self):
        settings = ResConfigSettings(
            overrides={'split_irregular.oracle_k_max': 2},
            environ={'SPLIT_IRREGULAR_ORACLE_K_MAX': '3'},
        )
        self.assertEqual(settings.get_param('oracle_k_max'), 2)
        settings.set_param('oracle_k_max', 1)
        self.assertEqual(settings.get_param('oracle_k_max'), 1)

    @patch.dict(os.environ, {'SPLIT_IRREGULAR_ORACLE_EDGE_BUDGET': '55'})
    def test_environment(self):
        self.assertEqual(ResConfigSettings().get_param('oracle_edge_budget'), 55)
        self.assertEqual(res_config_settings.get_param('split_irregular.oracle_edge_budget'), 55)

    @patch.dict(os.environ, {'SPLIT_IRREGULAR_ORACLE_EDGE_BUDGET': 'many'})
    def test_bad_value(self):
        with self.assertRaises(InputError):
            ResConfigSettings().get_param('oracle_edge_budget')

    def test_unknown_key(self):
        with self.assertRaises(InputError):
            self.settings.get_param('no_such_key')

    def test_describe(self):
        keys = [key for key, value, help_text in self.settings.describe()]
        self.assertIn('split_irregular.exact_search_edge_budget', keys)
        self.assertEqual(len(keys), 7)
