"""Independent checks: lasso membership, controller model checking and quality points."""

from .controller import product_graph, rejecting_colour, verify_controller
from .lasso import LassoWord, accepts_lasso, run_colours
from .quality import quality

__all__ = [
    "LassoWord",
    "accepts_lasso",
    "product_graph",
    "quality",
    "rejecting_colour",
    "run_colours",
    "verify_controller",
]
