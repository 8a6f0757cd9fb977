import csv
import io

import numpy as np
import pytest

from bnpg.experiment import (ROW_FIELDS, SUMMARY_FIELDS, ExperimentConfig, run_experiment,
                             summarize, summary_path, to_csv, write_results)


def config(**kw):
    base = dict(graphs=[{"kind": "random_tree", "n": 200}], gamma=[0.0, 1.0], replications=25,
                seed=1, timing=False)
    base.update(kw)
    return ExperimentConfig(**base)


def test_pure_gamma_rows_are_exact():
    rows = run_experiment(config())
    assert len(rows) == 50
    assert all(r["status"] == "psne" and r["epsilon"] == 0.0 for r in rows)


def test_mixed_gamma_epsilon_is_small():
    rows = run_experiment(config(graphs=[{"kind": "barabasi_albert", "n": 200}], gamma=[0.5],
                                 replications=20))
    eps = np.array([r["epsilon"] for r in rows])
    assert np.all(eps >= 0) and np.mean(eps <= 0.05) >= 0.9


def test_config_validation():
    for bad in ({"gamma": []}, {"graphs": []}, {"replications": 0}, {"method": "magic"},
                {"gamma": [1.5]}, {"heuristic": {"K": 0}},
                {"graphs": [{"kind": "watts_strogatz", "n": 10, "k": 3}]}):
        with pytest.raises(ValueError):
            config(**bad)
    with pytest.raises(ValueError):
        ExperimentConfig.from_dict({"graphs": [{"kind": "path", "n": 3}], "gamma": [0],
                                    "colour": "red"})


def test_summary_recomputable_from_rows():
    rows = run_experiment(config(graphs=[{"kind": "barabasi_albert", "n": 100}],
                                 gamma=[0.2, 0.8], replications=6))
    summary = summarize(rows)
    assert len(summary) == 2
    for cell in summary:
        mine = [r for r in rows if r["gamma"] == cell["gamma"]]
        ratios = np.array([r["invest_ratio"] for r in mine])
        assert cell["count"] == 6
        assert cell["invest_ratio_mean"] == pytest.approx(ratios.mean())
        assert cell["invest_ratio_std"] == pytest.approx(ratios.std())
        assert cell["epsilon_max"] == max(r["epsilon"] for r in mine)


def test_csv_schema_and_files(tmp_path):
    cfg = config(replications=3, output=str(tmp_path / "out.csv"))
    raw, summ = write_results(cfg, run_experiment(cfg))
    assert summ == str(tmp_path / "out_summary.csv")
    with open(raw) as fh:
        reader = csv.reader(fh)
        assert next(reader) == ROW_FIELDS
        assert sum(1 for _ in reader) == 6
    with open(summ) as fh:
        assert next(csv.reader(fh)) == SUMMARY_FIELDS
    assert summary_path("x") == "x_summary.csv"


def test_parallel_matches_serial():
    cfg = config(graphs=[{"kind": "barabasi_albert", "n": 100}], gamma=[0.5], replications=6)
    serial = to_csv(run_experiment(cfg), ROW_FIELDS)
    cfg.workers = 2
    assert to_csv(run_experiment(cfg), ROW_FIELDS) == serial


def test_timing_column():
    rows = run_experiment(config(replications=1, timing=True))
    assert all(r["wall_time"] >= 0 for r in rows)
    text = to_csv(run_experiment(config(replications=1)), ROW_FIELDS)
    last = list(csv.reader(io.StringIO(text)))[1]
    assert last[-1] == ""
