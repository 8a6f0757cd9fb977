"""Exact PSNE computation when every player is adjacent to every other.

On a complete graph a profile with ``k`` investors gives every investor
``k - 1`` investing neighbours and every non-investor ``k``, so the whole
question reduces to a sweep over ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotCompleteGraph, NotHomogeneous
from .game import BnpgInstance, SolveReport, Status, social_welfare

NONE = "none"
UNIQUE = "unique"
FAMILY = "family"


@dataclass(frozen=True)
class KPsneClassification:
    """What the ``k``-investor PSNE look like, if any exist.

    ``UNIQUE`` carries the investor set. ``FAMILY`` means: every player in
    ``forced`` invests, plus any ``required`` players from ``indifferent``.
    """

    k: int
    status: str
    investors: frozenset = frozenset()
    forced: frozenset = frozenset()
    indifferent: frozenset = frozenset()

    @property
    def required(self) -> int:
        return self.k - len(self.forced)

    def realize(self, n: int) -> np.ndarray | None:
        """One concrete profile; indifferent players are filled in index order."""
        if self.status == NONE:
            return None
        x = np.zeros(n, dtype=np.int64)
        if self.status == UNIQUE:
            x[sorted(self.investors)] = 1
        else:
            x[sorted(self.forced)] = 1
            x[sorted(self.indifferent)[: self.required]] = 1
        return x


def _require_complete(instance):
    if not instance.graph.is_complete():
        raise NotCompleteGraph("graph is not complete")


def _require_homogeneous(instance):
    if not instance.shared_externality():
        raise NotHomogeneous("players do not share one externality function")


def _check_k(instance, k):
    if not 0 < k < instance.n:
        raise ValueError(f"k={k} outside (0, {instance.n})")


def _players(mask) -> frozenset:
    return frozenset(int(i) for i in np.nonzero(mask)[0])


def _iplus_mask(instance, k):
    return instance.costs < instance.deltas[:, k] - instance.tol


def _iminus_mask(instance, k):
    return instance.costs > instance.deltas[:, k - 1] + instance.tol


def iplus(instance: BnpgInstance, k: int) -> frozenset:
    """Players who must invest in any ``k``-investor profile: ``c_i < Δg_i(k)``."""
    _require_complete(instance)
    _check_k(instance, k)
    return _players(_iplus_mask(instance, k))


def iminus(instance: BnpgInstance, k: int) -> frozenset:
    """Players who cannot invest in any ``k``-investor profile: ``c_i > Δg_i(k-1)``."""
    _require_complete(instance)
    _check_k(instance, k)
    return _players(_iminus_mask(instance, k))


def _classify(instance, k, homogeneous):
    n = instance.n
    plus = _iplus_mask(instance, k)
    minus = _iminus_mask(instance, k)
    # a player in both sets can neither invest nor abstain
    if np.any(plus & minus):
        return KPsneClassification(k, NONE)
    free = ~(plus | minus)
    n_plus = int(plus.sum())
    if n_plus > k or int(minus.sum()) > n - k or int(free.sum()) < k - n_plus:
        return KPsneClassification(k, NONE)
    d = instance.deltas[0]
    if homogeneous and d[k] > d[k - 1]:
        investors = instance.costs <= d[k - 1] + instance.tol
        return KPsneClassification(k, UNIQUE, investors=_players(investors))
    return KPsneClassification(k, FAMILY, forced=_players(plus), indifferent=_players(free))


def classify_k_psne(instance: BnpgInstance, k: int) -> KPsneClassification:
    _require_complete(instance)
    _check_k(instance, k)
    return _classify(instance, k, instance.shared_externality())


def _trivial(instance):
    n = instance.n
    d = instance.deltas
    zeros = bool(np.all(instance.costs >= d[:, 0] - instance.tol))
    ones = bool(np.all(instance.costs <= d[:, n - 1] + instance.tol))
    return zeros, ones


def solve_complete(instance: BnpgInstance) -> SolveReport:
    """First PSNE found by checking ``0``, ``1``, then ``k = 1..n-1``."""
    _require_complete(instance)
    n = instance.n
    zeros, ones = _trivial(instance)
    if zeros:
        return SolveReport(Status.PSNE, "complete", np.zeros(n, dtype=np.int64), 0.0, {"k": 0})
    if ones:
        return SolveReport(Status.PSNE, "complete", np.ones(n, dtype=np.int64), 0.0, {"k": n})
    homogeneous = instance.shared_externality()
    for k in range(1, n):
        cls = _classify(instance, k, homogeneous)
        if cls.status != NONE:
            return SolveReport(Status.PSNE, "complete", cls.realize(n), 0.0,
                               {"k": k, "class": cls.status})
    return SolveReport(Status.NO_PSNE, "complete")


def simple_sort(instance: BnpgInstance) -> SolveReport:
    """Greedy PSNE for homogeneous complete games; never fails.

    Players are taken in ascending cost order (stable on index) and invest
    while their cost is covered by the marginal benefit at the current
    investor count.
    """
    _require_complete(instance)
    _require_homogeneous(instance)
    n = instance.n
    tol = instance.tol
    d = instance.deltas[0]
    order = np.argsort(instance.costs, kind="stable")
    c = instance.costs[order]
    x = np.zeros(n, dtype=np.int64)
    if d[0] < c[0] - tol:
        return SolveReport(Status.PSNE, "simple_sort", x, 0.0, {"k": 0})
    if c[-1] <= d[n - 1] + tol:
        return SolveReport(Status.PSNE, "simple_sort", np.ones(n, dtype=np.int64), 0.0, {"k": n})
    count = 0
    for i, ci in zip(order, c):
        if ci > d[count] + tol:
            break
        x[i] = 1
        count += 1
    return SolveReport(Status.PSNE, "simple_sort", x, 0.0, {"k": count})


def socially_optimal_complete(instance: BnpgInstance) -> SolveReport:
    """Welfare-maximising PSNE of a homogeneous complete game.

    With ``k`` investors everyone enjoys ``g(k)``, so welfare is
    ``n*g(k) - sum of investor costs``; within a family the cheapest
    admissible players are chosen. Ties go to the smallest ``k``.
    """
    _require_complete(instance)
    _require_homogeneous(instance)
    n = instance.n
    g = instance.padded[0]
    costs = instance.costs
    order = np.argsort(costs, kind="stable")
    zeros, ones = _trivial(instance)
    candidates = []
    if zeros:
        candidates.append((0, np.zeros(n, dtype=np.int64)))
    for k in range(1, n):
        cls = _classify(instance, k, True)
        if cls.status == UNIQUE:
            candidates.append((k, cls.realize(n)))
        elif cls.status == FAMILY:
            admissible = ~_iminus_mask(instance, k)
            pick = [i for i in order if admissible[i]][:k]
            x = np.zeros(n, dtype=np.int64)
            x[pick] = 1
            candidates.append((k, x))
    if ones:
        candidates.append((n, np.ones(n, dtype=np.int64)))
    if not candidates:
        return SolveReport(Status.NO_PSNE, "social_optimum")
    best_k, best_x, best_sw = None, None, -np.inf
    for k, x in candidates:
        sw = n * g[k] - float(costs @ x)
        if sw > best_sw:
            best_k, best_x, best_sw = k, x, sw
    return SolveReport(Status.PSNE, "social_optimum", best_x, 0.0,
                       {"k": best_k, "welfare": social_welfare(instance, best_x),
                        "candidates": len(candidates)})
