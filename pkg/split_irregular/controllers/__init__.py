# -*- coding: utf-8 -*-
from . import graph_io
from . import dot_export
from . import cli
