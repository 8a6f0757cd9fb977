"""Fully homogeneous games with strictly convex ``g``.

Because ``Δg`` is strictly increasing, investing is a best response exactly
when a player has at least ``k = min{t : Δg(t) >= c}`` investing neighbours,
so the investors of any non-trivial PSNE induce a subgraph of minimum degree
``k``. The maximal such subgraph (the ``k``-core) is found by pruning.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import NotHomogeneous, PreconditionError
from .game import BnpgInstance, Graph, SolveReport, Status

ALL_INVEST = "all_invest"
NONE_INVEST = "none_invest"
CORE = "core"


@dataclass(frozen=True)
class CoreThreshold:
    kind: str
    k: int | None = None


def _require_fully_homogeneous(instance):
    if not (instance.shared_externality() and instance.shared_cost()):
        raise NotHomogeneous("instance is not fully homogeneous")


def _common_deltas(instance):
    g = instance.common_table()
    return np.diff(g)[: instance.graph.max_degree + 1]


def check_strict_convexity(instance: BnpgInstance) -> bool:
    """True iff ``Δg(0) < Δg(1) < ... < Δg(d_max)``."""
    _require_fully_homogeneous(instance)
    return bool(np.all(np.diff(_common_deltas(instance)) > 0))


def threshold_k(instance: BnpgInstance) -> CoreThreshold:
    _require_fully_homogeneous(instance)
    if not check_strict_convexity(instance):
        raise PreconditionError("externality function is not strictly convex")
    d = _common_deltas(instance)
    c = instance.costs[0]
    if c < d[0]:
        return CoreThreshold(ALL_INVEST)
    if c > d[-1]:
        return CoreThreshold(NONE_INVEST)
    return CoreThreshold(CORE, int(np.argmax(d >= c)))


def k_core(graph: Graph, k: int) -> frozenset:
    """Maximal induced subgraph with minimum degree ``k`` (may be empty or disconnected)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    deg = graph.degrees.copy()
    alive = np.ones(graph.n, dtype=bool)
    queue = deque(int(v) for v in np.nonzero(deg < k)[0])
    alive[list(queue)] = False
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < k:
                    alive[w] = False
                    queue.append(w)
    return frozenset(int(v) for v in np.nonzero(alive)[0])


def solve_fully_homogeneous_convex(instance: BnpgInstance) -> SolveReport:
    """PSNE via the k-core characterisation.

    The report's profile is the non-trivial PSNE when one is found;
    ``alternatives`` holds every certified PSNE (including the reported one).
    """
    thr = threshold_k(instance)
    n = instance.n
    zeros = np.zeros(n, dtype=np.int64)
    ones = np.ones(n, dtype=np.int64)
    diag = {"threshold": thr.kind if thr.k is None else thr.k}
    if thr.kind == ALL_INVEST:
        return SolveReport(Status.PSNE, "kcore", ones, 0.0, diag, (ones,))
    if thr.kind == NONE_INVEST:
        return SolveReport(Status.PSNE, "kcore", zeros, 0.0, diag, (zeros,))
    core = k_core(instance.graph, thr.k)
    diag["core_size"] = len(core)
    if not core:
        return SolveReport(Status.PSNE, "kcore", zeros, 0.0, diag, (zeros,))
    x = np.zeros(n, dtype=np.int64)
    x[sorted(core)] = 1
    diag["nontrivial"] = len(core) < n
    return SolveReport(Status.PSNE, "kcore", x, 0.0, diag, (zeros, x))
