# -*- coding: utf-8 -*-
{
    'name': 'Split Irregular',
    'version': '1.0.0',
    'category': 'Combinatorics',
    'summary': 'Locally irregular edge decompositions of split graphs',
    'description': """
Split Irregular
===============

This package computes the irregular chromatic index of split graphs and
builds a certifying locally irregular edge coloring:
- Recognize split graphs and order the clique by stable-set degree
- Normal and strange red/blue colorings of complete graphs
- Alternating cycle repairs
- Exhaustive oracle with twin and color symmetry reduction

Features:
---------
* Classification for every clique size, with the rule that decided it
* Certificates verified before they are returned
* Graph and coloring file formats (1-based, DIMACS style)
* DOT export with colored edges
* Generators and enumerators for testing
""",
    'author': 'Split Irregular contributors',
    'depends': [],
    'external_dependencies': {
        'python': ['networkx', 'graphviz'],
    },
    'test': [
        'tests/test_graph.py',
        'tests/test_split_partition.py',
        'tests/test_kn_coloring.py',
        'tests/test_decomposer.py',
        'tests/test_small_cases.py',
        'tests/test_oracle.py',
        'tests/test_structure.py',
        'tests/test_generators.py',
        'tests/test_res_config_settings.py',
        'tests/test_graph_io.py',
        'tests/test_cli.py',
        'tests/test_manifest.py',
        'tests/test_acceptance.py',
    ],
    'installable': True,
    'auto_install': False,
    'application': True,
    'license': 'LGPL-3',
}
