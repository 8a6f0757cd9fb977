"""
A small parameter sweep
=======================

The experiment runner crosses graph families with the utility mix and
writes one CSV row per run plus a per-cell summary. The same sweep is
available as ``bnpg experiment config.json``.
"""
import csv
import tempfile
from pathlib import Path

from bnpg.experiment import ExperimentConfig, run_experiment, write_results

out = Path(tempfile.mkdtemp()) / "sweep.csv"
cfg = ExperimentConfig(
    graphs=[{"kind": "barabasi_albert", "n": 300, "m": 3},
            {"kind": "watts_strogatz", "n": 300, "k": 6, "p": 0.1}],
    gamma=[0.0, 0.5, 1.0],
    beta_pools=[[1.2], [2.0]],
    replications=5,
    seed=1,
    output=str(out),
)
raw, summary = write_results(cfg, run_experiment(cfg))
with open(summary) as fh:
    for row in csv.DictReader(fh):
        print(f"{row['graph']:16s} gamma={row['gamma']} beta={row['beta_pool']}: "
              f"psne rate {float(row['psne_rate']):.2f}, "
              f"invest ratio {float(row['invest_ratio_mean']):.3f}, "
              f"epsilon max {float(row['epsilon_max']):.4f}")
print("raw rows in", raw)
