"""Approximate PSNE on arbitrary graphs by repeated asynchronous best response.

``evolve`` runs ``K`` best-response sweeps and keeps the lowest-epsilon
profile it saw; ``find_approx_psne`` iterates ``evolve`` from a random start
until two consecutive outputs are within ``delta`` (``l_p`` distance) or ``B``
rounds have passed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .game import BnpgInstance, SolveReport, Status, as_profile, is_psne, max_epsilon


@dataclass(frozen=True)
class HeuristicParams:
    K: int = 10
    B: int = 100
    delta: float = 1.0
    p: float = 1.0
    seed: int = 0
    normalized: bool = True

    def __post_init__(self):
        if self.K < 1 or self.B < 1:
            raise ValueError("K and B must be at least 1")
        if not self.delta > 0:
            raise ValueError("delta must be positive")
        if self.p < 1:
            raise ValueError("p must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def _stream(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


class _Sweeper:
    """Python-list view of an instance for the sequential sweep."""

    def __init__(self, instance: BnpgInstance):
        self.adj = instance.graph.adjacency
        self.deltas = [np.diff(t).tolist() for t in instance.tables]
        self.costs = instance.costs.tolist()
        self.tol = instance.tol

    def sweep(self, x: list, counts: list, rng) -> None:
        """One ascending-index pass; ``x`` and ``counts`` are updated in place."""
        deltas, costs, tol, adj = self.deltas, self.costs, self.tol, self.adj
        for i in range(len(x)):
            d = deltas[i][counts[i]]
            c = costs[i]
            if d > c + tol:
                new = 1
            elif d < c - tol:
                new = 0
            else:
                new = 1 if rng.random() < 0.5 else 0
            if new != x[i]:
                x[i] = new
                step = 1 if new else -1
                for j in adj[i]:
                    counts[j] += step


def _counts(instance, x):
    return (instance.graph.matrix @ np.asarray(x)).tolist()


def asynchronous_br(instance: BnpgInstance, x, rng: np.random.Generator) -> np.ndarray:
    """One sequential best-response sweep; later players see earlier updates.

    Strict preferences are followed; exact indifference is resolved by a fair
    coin drawn from ``rng``.
    """
    x = as_profile(instance, x).tolist()
    _Sweeper(instance).sweep(x, _counts(instance, x), rng)
    return np.array(x, dtype=np.int64)


def evolve(instance: BnpgInstance, x, K: int, rng: np.random.Generator,
           normalized: bool = True, _sweeper: _Sweeper | None = None):
    """Best of up to ``K`` best-response states, as ``(profile, epsilon)``.

    Returns as soon as a visited profile has epsilon 0.
    """
    sweeper = _sweeper or _Sweeper(instance)
    cur = as_profile(instance, x).tolist()
    counts = _counts(instance, cur)
    best, best_eps = None, np.inf
    for _ in range(K):
        arr = np.array(cur, dtype=np.int64)
        eps = max_epsilon(instance, arr, normalized)
        if eps == 0:
            return arr, 0.0
        if eps < best_eps:
            best, best_eps = arr, eps
        sweeper.sweep(cur, counts, rng)
    return best, best_eps


def find_approx_psne(instance: BnpgInstance,
                     params: HeuristicParams = HeuristicParams()) -> SolveReport:
    """Run the randomized best-response heuristic; deterministic given ``params.seed``.

    Each ``evolve`` round ``i`` draws from its own stream keyed by
    ``(seed, i)``; the initial profile uses stream ``(seed, 0)``.
    """
    x = _stream(params.seed, 0).integers(0, 2, instance.n)
    diag = {"iterations": 0}
    if is_psne(instance, x):
        return SolveReport(Status.PSNE, "heuristic", x, 0.0, diag)
    sweeper = _Sweeper(instance)
    dist = np.inf
    i = 0
    new = x
    while dist >= params.delta and i < params.B:
        i += 1
        diag["iterations"] = i
        new, eps = evolve(instance, x, params.K, _stream(params.seed, i),
                          params.normalized, sweeper)
        if eps == 0 and is_psne(instance, new):
            return SolveReport(Status.PSNE, "heuristic", new, 0.0, diag)
        dist = float(np.linalg.norm(new - x, ord=params.p))
        x = new
    return SolveReport(Status.APPROX, "heuristic", new,
                       max_epsilon(instance, new, params.normalized), diag)
