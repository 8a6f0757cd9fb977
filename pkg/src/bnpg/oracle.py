"""Brute-force ground truth: enumerate all ``2**n`` profiles.

Profiles are visited in lexicographic order of the bit vector
``(x_1, ..., x_n)``, so ties are always broken toward the smallest profile.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InstanceTooLarge
from .game import BnpgInstance, SolveReport, Status

DEFAULT_LIMIT = 22
_CHUNK = 1 << 15


@dataclass
class OracleResult:
    all_psne: list
    best_welfare: tuple | None
    min_epsilon: tuple


def _chunks(instance: BnpgInstance, limit: int):
    n = instance.n
    if n > limit:
        raise InstanceTooLarge(f"n={n} exceeds oracle limit {limit}")
    adj = instance.graph.matrix.toarray()
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        bits = (codes[:, None] >> shifts) & 1
        yield bits, bits @ adj


def _evaluate(instance, bits, counts, normalized):
    idx = np.arange(instance.n)
    d = instance.deltas[idx, counts]
    c = instance.costs
    ok = np.where(bits == 1, d >= c - instance.tol, d <= c + instance.tol)
    gain = np.where(bits == 0, d - c, c - d)
    if normalized:
        rng = instance.utility_range
        gain = np.divide(gain, rng, out=np.zeros_like(gain), where=rng > 0)
    eps = np.maximum(gain.max(axis=1), 0.0)
    sw = (instance.padded[idx, counts + bits] - c * bits).sum(axis=1)
    return ok.all(axis=1), eps, sw


def solve_all(instance: BnpgInstance, limit: int = DEFAULT_LIMIT,
              normalized: bool = False) -> OracleResult:
    """Every PSNE, the welfare-best one, and the minimum-epsilon profile."""
    psne = []
    best = None
    min_eps = None
    for bits, counts in _chunks(instance, limit):
        ok, eps, sw = _evaluate(instance, bits, counts, normalized)
        for r in np.nonzero(ok)[0]:
            psne.append(bits[r].copy())
            if best is None or sw[r] > best[1]:
                best = (bits[r].copy(), float(sw[r]))
        r = int(np.argmin(eps))
        if min_eps is None or eps[r] < min_eps[1]:
            min_eps = (bits[r].copy(), float(eps[r]))
    return OracleResult(psne, best, min_eps)


def enumerate_psne(instance: BnpgInstance, limit: int = DEFAULT_LIMIT) -> list:
    out = []
    for bits, counts in _chunks(instance, limit):
        ok, _, _ = _evaluate(instance, bits, counts, False)
        out.extend(bits[r].copy() for r in np.nonzero(ok)[0])
    return out


def best_psne_welfare(instance: BnpgInstance, limit: int = DEFAULT_LIMIT):
    """The welfare-maximising PSNE as ``(profile, welfare)``, or ``None``."""
    return solve_all(instance, limit).best_welfare


def min_epsilon_profile(instance: BnpgInstance, limit: int = DEFAULT_LIMIT,
                        normalized: bool = False):
    return solve_all(instance, limit, normalized).min_epsilon


def solve_oracle(instance: BnpgInstance, limit: int = DEFAULT_LIMIT) -> SolveReport:
    res = solve_all(instance, limit)
    diag = {"psne_count": len(res.all_psne)}
    if res.all_psne:
        return SolveReport(Status.PSNE, "oracle", res.all_psne[0], 0.0, diag)
    return SolveReport(Status.NO_PSNE, "oracle", diagnostics=diag)
