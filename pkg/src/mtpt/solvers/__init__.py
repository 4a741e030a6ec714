from .baseline import lawler_moore, sumset_scheduler
from .bundled import InvariantViolation, SolveReport, solve_bundled
from .bundling import Color, Coloring, check_delta, choose_delta, color_and_bundle, load_threshold
from .levels import group_levels, level_vector

__all__ = [
    "Color",
    "Coloring",
    "InvariantViolation",
    "SolveReport",
    "check_delta",
    "choose_delta",
    "color_and_bundle",
    "group_levels",
    "lawler_moore",
    "level_vector",
    "load_threshold",
    "solve_bundled",
    "sumset_scheduler",
]
