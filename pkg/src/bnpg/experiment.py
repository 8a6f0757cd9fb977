"""Parameter sweeps over graph families and utility mixes, written as CSV.

Every row draws its seeds from ``(master seed, row index)``, so output does
not depend on worker count or scheduling.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .dispatch import METHODS, solve
from .game import Status, max_epsilon, social_welfare
from .generators import (ALPHA_POOL, BETA_POOL, GraphSpec, UtilityFamilyParams, gen_graph,
                         gen_utilities)
from .heuristic import HeuristicParams

ROW_FIELDS = ["row", "seed", "graph", "graph_params", "n", "gamma", "alpha_pool", "beta_pool",
              "method", "status", "epsilon", "invest_ratio", "welfare", "wall_time"]
SUMMARY_FIELDS = ["graph", "graph_params", "gamma", "alpha_pool", "beta_pool", "method",
                  "count", "psne_rate", "epsilon_mean", "epsilon_std", "epsilon_max",
                  "invest_ratio_mean", "invest_ratio_std", "welfare_mean", "welfare_std"]


@dataclass
class ExperimentConfig:
    graphs: list
    gamma: list
    alpha_pools: list = field(default_factory=lambda: [list(ALPHA_POOL)])
    beta_pools: list = field(default_factory=lambda: [list(BETA_POOL)])
    replications: int = 1
    heuristic: dict = field(default_factory=dict)
    method: str = "heuristic"
    seed: int = 0
    output: str = "results.csv"
    workers: int = 1
    timing: bool = True

    def __post_init__(self):
        if self.replications < 1:
            raise ValueError("replications must be >= 1")
        for name in ("graphs", "gamma", "alpha_pools", "beta_pools"):
            if not getattr(self, name):
                raise ValueError(f"{name} must be non-empty")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        for g in self.graphs:
            GraphSpec(**g)
        for gm in self.gamma:
            UtilityFamilyParams(gamma=gm)
        HeuristicParams(**self.heuristic)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentConfig":
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**d)

    @classmethod
    def load(cls, path) -> "ExperimentConfig":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def cells(self):
        return list(itertools.product(self.graphs, self.gamma, self.alpha_pools,
                                      self.beta_pools))


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _pool(p):
    return " ".join(repr(float(v)) for v in p)


def _run_row(task):
    row, seed, graph, gamma, apool, bpool, cfg = task
    graph_seed, util_seed, heur_seed = (
        int(s) for s in np.random.SeedSequence([seed, row]).generate_state(3))
    spec = GraphSpec(**{**graph, "seed": graph_seed})
    start = time.monotonic()
    inst = gen_utilities(gen_graph(spec),
                         UtilityFamilyParams(gamma, tuple(apool), tuple(bpool)), util_seed)
    params = HeuristicParams(**{**cfg.heuristic, "seed": heur_seed})
    report = solve(inst, cfg.method, params)
    elapsed = time.monotonic() - start
    eps = ratio = sw = None
    if report.profile is not None:
        eps = max_epsilon(inst, report.profile, normalized=True)
        ratio = float(report.profile.sum()) / inst.n
        sw = social_welfare(inst, report.profile)
    params_str = json.dumps({k: v for k, v in graph.items() if k != "kind"}, sort_keys=True)
    return {
        "row": row, "seed": heur_seed, "graph": graph["kind"], "graph_params": params_str,
        "n": inst.n, "gamma": float(gamma), "alpha_pool": _pool(apool),
        "beta_pool": _pool(bpool), "method": report.method, "status": report.status.value,
        "epsilon": eps, "invest_ratio": ratio, "welfare": sw,
        "wall_time": round(elapsed, 6) if cfg.timing else None,
    }


def run_experiment(cfg: ExperimentConfig) -> list:
    tasks = []
    row = 0
    for graph, gamma, apool, bpool in cfg.cells():
        for _ in range(cfg.replications):
            tasks.append((row, cfg.seed, graph, gamma, apool, bpool, cfg))
            row += 1
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as ex:
            return list(ex.map(_run_row, tasks, chunksize=4))
    return [_run_row(t) for t in tasks]


def summarize(rows: list) -> list:
    """Per-cell means and population standard deviations."""
    groups = {}
    for r in rows:
        key = tuple(r[k] for k in SUMMARY_FIELDS[:6])
        groups.setdefault(key, []).append(r)
    out = []
    for key, rs in groups.items():
        def stat(name):
            vals = np.array([r[name] for r in rs if r[name] is not None], dtype=float)
            if not len(vals):
                return None, None
            return float(vals.mean()), float(vals.std())

        eps_mean, eps_std = stat("epsilon")
        inv_mean, inv_std = stat("invest_ratio")
        sw_mean, sw_std = stat("welfare")
        eps_vals = [r["epsilon"] for r in rs if r["epsilon"] is not None]
        out.append({
            **dict(zip(SUMMARY_FIELDS[:6], key)),
            "count": len(rs),
            "psne_rate": sum(r["status"] == Status.PSNE.value for r in rs) / len(rs),
            "epsilon_mean": eps_mean, "epsilon_std": eps_std,
            "epsilon_max": max(eps_vals) if eps_vals else None,
            "invest_ratio_mean": inv_mean, "invest_ratio_std": inv_std,
            "welfare_mean": sw_mean, "welfare_std": sw_std,
        })
    return out


def to_csv(rows: list, fields: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_fmt(r[f]) for f in fields])
    return buf.getvalue()


def summary_path(output: str) -> str:
    stem = output[:-4] if output.endswith(".csv") else output
    return stem + "_summary.csv"


def write_results(cfg: ExperimentConfig, rows: list) -> tuple:
    summary = summarize(rows)
    with open(cfg.output, "w") as fh:
        fh.write(to_csv(rows, ROW_FIELDS))
    spath = summary_path(cfg.output)
    with open(spath, "w") as fh:
        fh.write(to_csv(summary, SUMMARY_FIELDS))
    return cfg.output, spath
