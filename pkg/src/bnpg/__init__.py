"""Pure-strategy equilibria of binary networked public goods games."""
from .complete import (classify_k_psne, iminus, iplus, simple_sort, socially_optimal_complete,
                       solve_complete)
from .dispatch import choose_method, solve
from .errors import (BnpgError, InstanceTooLarge, InvalidInstance, NotATree, NotCompleteGraph,
                     NotHomogeneous, PreconditionError)
from .game import (FULLY_HOMOGENEOUS, HETEROGENEOUS, HOMOGENEOUS, BnpgInstance, Graph,
                   SolveReport, Status, delta_g, deviation_gains, is_best_response, is_psne,
                   max_epsilon, neighbor_invest_count, profile_str, social_welfare, utility,
                   validate)
from .heuristic import HeuristicParams, asynchronous_br, evolve, find_approx_psne
from .kcore import check_strict_convexity, k_core, solve_fully_homogeneous_convex, threshold_k
from .oracle import best_psne_welfare, enumerate_psne, min_epsilon_profile, solve_all
from .tree import solve_tree

__version__ = "0.1.0"
