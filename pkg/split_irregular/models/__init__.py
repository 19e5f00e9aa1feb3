# -*- coding: utf-8 -*-
from . import res_config_settings
from . import graph
from . import split_partition
from . import kn_coloring
from . import recipes
from . import oracle
from . import small_cases
from . import decomposer
from . import structure
from . import generators
