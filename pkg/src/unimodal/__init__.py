"""Unimodal category of piecewise linear functions on the line, the circle,
graphs and the plane, computed with exact arithmetic."""

from .circle import (CirclePL, decompose_circle, is_unimodal_circle, m_a_plus,
                     make_circle, ucat_circle)
from .datasets import build, verify_all
from .errors import *  # noqa: F401,F403
from .exact import Surd
from .graph import (GeometricGraph, GraphPL, MorseSmaleTree, is_unimodal_graph,
                    lower_bound_check, make_graph, make_graph_pl, make_tree,
                    min_tree_cover, path_value, tree_criterion)
from .line import (Interval, PLFunction, evaluate, is_unimodal_line, make_pl,
                   power, variation)
from .plane import (PlanePL, is_unimodal_plane, make_plane_pl, point_probe,
                    superlevel_stats, verify_combination_plane)
from .sweep import (decompose_line, forced_max_certificate, is_forced_max,
                    oracle_M, sweep_points, ucat_interval, ucat_line)

__version__ = "0.1.0"
