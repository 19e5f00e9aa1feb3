# -*- coding: utf-8 -*-
from . import models
from . import controllers

from .models.graph import (
    BLUE, GREEN, RED, ConflictReport, EdgeColoring, Graph,
    color_subgraph, conflicting_edges, degree, is_locally_irregular, verify_decomposition,
)
from .models.split_partition import SplitPartition, d_sequence, split_partition, strip_isolated
from .models.kn_coloring import (
    find_alternating_cycle, invert_cycle, is_alternating_cycle, normal_coloring, strange_coloring,
)
from .models.decomposer import (
    ChiResult, classify, construct_2coloring_heavy, construct_2coloring_light,
    construct_3coloring, construct_chi1, decompose, decompose_graph,
)
from .models.small_cases import construct_small
from .models.oracle import OracleResult, oracle_chi
from .models.structure import check_single_repeat_structure, enumerate_single_repeat_graphs
from .models.generators import enumerate_split_graphs, gen_split_graph, random_split_graph
