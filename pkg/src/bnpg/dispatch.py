"""Pick the strongest exact method whose preconditions hold, falling back to the heuristic."""
from __future__ import annotations

from .complete import solve_complete
from .game import BnpgInstance, SolveReport
from .heuristic import HeuristicParams, find_approx_psne
from .kcore import check_strict_convexity, solve_fully_homogeneous_convex
from .oracle import DEFAULT_LIMIT, solve_oracle
from .tree import solve_tree

METHODS = ("auto", "oracle", "complete", "tree", "kcore", "heuristic")


def is_convex_fully_homogeneous(instance: BnpgInstance) -> bool:
    if not (instance.shared_externality() and instance.shared_cost()):
        return False
    return check_strict_convexity(instance)


def choose_method(instance: BnpgInstance, oracle_limit: int = DEFAULT_LIMIT) -> str:
    graph = instance.graph
    if graph.is_complete():
        return "complete"
    if graph.is_tree():
        return "tree"
    if is_convex_fully_homogeneous(instance):
        return "kcore"
    if instance.n <= oracle_limit:
        return "oracle"
    return "heuristic"


def solve(instance: BnpgInstance, method: str = "auto",
          params: HeuristicParams = HeuristicParams(),
          oracle_limit: int = DEFAULT_LIMIT, forest: bool = False) -> SolveReport:
    if method == "auto":
        method = choose_method(instance, oracle_limit)
    if method == "complete":
        return solve_complete(instance)
    if method == "tree":
        return solve_tree(instance, forest=forest)
    if method == "kcore":
        return solve_fully_homogeneous_convex(instance)
    if method == "oracle":
        return solve_oracle(instance, oracle_limit)
    if method == "heuristic":
        return find_approx_psne(instance, params)
    raise ValueError(f"unknown method {method!r}")
