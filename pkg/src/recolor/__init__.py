"""Short list-recoloring sequences for subcubic and complete multipartite graphs."""

from .coloring_model import Instance, Plan, check_plan, make_lists, replay, stitch
from .errors import (BudgetExceeded, InternalInvariantError, PlannerInapplicable, RecolorError,
                     ReplayError, Unreachable)
from .graph_core import Graph, detect_multipartite, matching_number, max_matching
from .oracle import bfs_distance, diameter, oracle_plan
from .planner_multipartite import plan_multipartite
from .planner_subcubic import plan_subcubic
from .planning import audit

__all__ = [
    "BudgetExceeded", "Graph", "Instance", "InternalInvariantError", "Plan", "PlannerInapplicable",
    "RecolorError", "ReplayError", "Unreachable", "audit", "bfs_distance", "check_plan",
    "detect_multipartite", "diameter", "make_lists", "matching_number", "max_matching",
    "oracle_plan", "plan_multipartite", "plan_subcubic", "replay", "stitch",
]
