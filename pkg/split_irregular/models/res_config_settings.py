# -*- coding: utf-8 -*-
import logging
import os

from ..exceptions import InputError

_logger = logging.getLogger(__name__)

PREFIX = 'split_irregular.'


class ConfigParameter(object):
    """One tunable setting, addressed by a dotted key."""

    def __init__(self, key, default, type_=int, help=''):
        self.key = key
        self.default = default
        self.type_ = type_
        self.help = help

    @property
    def env_var(self):
        return self.key.upper().replace('.', '_')


class ResConfigSettings(object):
    """Settings store for the solver.

    Values resolve as: constructor overrides, then the environment variable
    derived from the key (``split_irregular.oracle_edge_budget`` reads
    ``SPLIT_IRREGULAR_ORACLE_EDGE_BUDGET``), then the declared default.
    """

    _parameters = (
        ConfigParameter(
            'split_irregular.oracle_edge_budget', 40,
            help='Largest edge count the exhaustive oracle accepts'),
        ConfigParameter(
            'split_irregular.oracle_k_max', 4,
            help='Default number of colors tried by the oracle'),
        ConfigParameter(
            'split_irregular.exact_search_edge_budget', 90,
            help='Largest small-case instance handed to exact search'),
        ConfigParameter(
            'split_irregular.repair_cycle_max_length', 8,
            help='Longest alternating cycle looked for during repairs'),
        ConfigParameter(
            'split_irregular.enumeration_max_vertices', 8,
            help='Vertex cap of the split graph enumerator'),
        ConfigParameter(
            'split_irregular.test_enumeration_max_vertices', 8,
            help='Vertex bound of the exhaustive equivalence test'),
        ConfigParameter(
            'split_irregular.log_level', 'WARNING', type_=str,
            help='Root log level used by the command line'),
    )

    def __init__(self, overrides=None, environ=None):
        self._overrides = dict(overrides or {})
        self._environ = os.environ if environ is None else environ
        self._by_key = {p.key: p for p in self._parameters}

    def _parameter(self, key):
        if not key.startswith(PREFIX):
            key = PREFIX + key
        param = self._by_key.get(key)
        if param is None:
            raise InputError(f"Unknown configuration parameter '{key}'")
        return param

    def get_param(self, key, default=None):
        param = self._parameter(key)
        if param.key in self._overrides:
            raw = self._overrides[param.key]
        elif param.env_var in self._environ:
            raw = self._environ[param.env_var]
        else:
            return param.default if default is None else default
        try:
            return param.type_(raw)
        except (TypeError, ValueError):
            raise InputError(
                f"Configuration parameter {param.key} expects {param.type_.__name__}, got {raw!r}"
            )

    def set_param(self, key, value):
        self._overrides[self._parameter(key).key] = value

    def describe(self):
        return [(p.key, self.get_param(p.key), p.help) for p in self._parameters]


def get_param(key, default=None):
    """Read a setting with the process environment as source."""
    return ResConfigSettings().get_param(key, default)
