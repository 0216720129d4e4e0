import csv
import filecmp
import math
import subprocess
import sys

import pytest

from vaopt import ConfigurationError
from vaopt.harness import (
    ExperimentConfig,
    compare,
    config_from_mapping,
    emit_landscape_grid,
    read_config,
    read_trace,
    run_experiment,
    summarize,
)
from vaopt.harness.cli import main
from vaopt.problems.pms import bundled_pms_path

SMALL = {"function": "booth", "pop": "6", "iters": "10", "repeats": "3", "seed": "4"}


def _summary(path):
    with open(path / "summary.csv", newline="") as fh:
        return list(csv.DictReader(fh))


def test_config_file_parsing(tmp_path):
    path = tmp_path / "exp.cfg"
    path.write_text("# ackley frame\nalgorithm = pso\nfunction = ackley  # inline\ndims = 15\nlower = -10\nupper = 10\n")
    cfg = config_from_mapping(read_config(path))
    assert cfg.algorithm == "pso"
    assert cfg.dimensions == 15
    assert cfg.lower == (-10.0,)
    resolved = cfg.resolved()
    assert (resolved.population, resolved.iterations) == (20, 500)


def test_problem_presets_fill_budgets():
    cfg = ExperimentConfig(instance="x", problem="pms").validate().resolved()
    assert cfg.population == 20 and cfg.iterations == 300
    assert cfg.vao_options["mutation_damping"] == 1.0
    cfg = ExperimentConfig(algorithm="pso", instance="x", problem="pms", iterations=50).resolved()
    assert cfg.iterations == 50 and cfg.vao_options == {}


@pytest.mark.parametrize(
    "mapping, message",
    [
        ({"algorithm": "ga", "function": "booth"}, "valid options"),
        ({"algorithm": "vao"}, "exactly one"),
        ({"instance": "x.txt"}, "problem"),
        ({"function": "booth", "repeats": "0"}, "repeats"),
        ({"function": "booth", "colour": "red"}, "unknown key"),
        ({"function": "booth", "pop": "many"}, "bad value"),
    ],
)
def test_bad_configs(mapping, message):
    with pytest.raises(ConfigurationError, match=message):
        config_from_mapping(mapping)


def test_summary_is_recomputable_from_traces(tmp_path):
    row = run_experiment(config_from_mapping(SMALL), out=tmp_path)
    traces = sorted((tmp_path / "traces").glob("*.jsonl"))
    assert len(traces) == 3
    finals = []
    for path in traces:
        values = read_trace(path)
        assert len(values) == 10
        assert all(a >= b for a, b in zip(values, values[1:]))
        finals.append(values[-1])
    mean = math.fsum(finals) / 3
    std = math.sqrt(math.fsum((v - mean) ** 2 for v in finals) / 2)
    (stored,) = _summary(tmp_path)
    assert float(stored["avg_best_cost"]) == mean == row.avg_best_cost
    assert float(stored["std_best_cost"]) == std == row.std_best_cost
    assert stored["seeds"] == "4;5;6"
    assert stored["evaluations"] == str(6 * 11)


def test_single_repeat_has_zero_std():
    assert summarize([3.5]) == (3.5, 0.0)
    row = run_experiment(config_from_mapping({**SMALL, "repeats": "1"}))
    assert row.std_best_cost == 0.0


def test_reruns_are_byte_identical(tmp_path):
    for name in ("a", "b"):
        run_experiment(config_from_mapping({**SMALL, "algorithm": "de"}), out=tmp_path / name)
    cmp = filecmp.dircmp(tmp_path / "a", tmp_path / "b")
    assert cmp.diff_files == ["runtime.csv"] or cmp.diff_files == []
    for sub in ("summary.csv",):
        assert (tmp_path / "a" / sub).read_bytes() == (tmp_path / "b" / sub).read_bytes()
    (trace,) = [p.name for p in (tmp_path / "a" / "traces").iterdir() if "seed4" in p.name]
    assert (tmp_path / "a" / "traces" / trace).read_bytes() == (tmp_path / "b" / "traces" / trace).read_bytes()


def test_instance_experiment():
    row = run_experiment(
        config_from_mapping(
            {"instance": str(bundled_pms_path()), "problem": "pms", "pop": "10", "iters": "20", "repeats": "2"}
        )
    )
    assert row.target == "pms_pms_reference"
    assert row.avg_best_cost >= 92.0


def test_compare_tags_winner(tmp_path):
    base = {"function": "booth", "pop": "10", "iters": "40", "repeats": "3", "seed": "1"}
    rows, winners = compare([{**base, "algorithm": a} for a in ("vao", "pso", "de")], out=tmp_path)
    assert len(rows) == 3
    best = min(rows, key=lambda r: r.avg_best_cost)
    assert winners == {"booth_d2": best.algorithm}
    with open(tmp_path / "comparison.csv", newline="") as fh:
        table = list(csv.DictReader(fh))
    assert {r["winner"] for r in table} == {best.algorithm}


def test_compare_refuses_unequal_budgets():
    base = {"function": "dejong", "dims": "15", "pop": "20", "repeats": "1"}
    with pytest.raises(ConfigurationError, match="unequal evaluation budgets"):
        compare([{**base, "iters": "500"}, {**base, "iters": "400", "algorithm": "random"}])


def test_landscape_examples():
    grid = emit_landscape_grid("booth", 3)
    assert grid.shape == (9, 3)
    assert grid[4].tolist() == [0.0, 0.0, 74.0]
    centre = emit_landscape_grid("branin", 1)
    assert centre[0, :2].tolist() == [2.5, 7.5]
    assert emit_landscape_grid("easom", 41)[:, 2].min() >= -1.0
    assert emit_landscape_grid("ackley", 2).shape == (4, 3)
    with pytest.raises(ConfigurationError):
        emit_landscape_grid("powell", 5)


# ---------------------------------------------------------------- the CLI


def test_cli_run_prints_summary(tmp_path, capsys):
    out = tmp_path / "run"
    code = main(["run", "--algo", "random", "--function", "matyas", "--pop", "5", "--iters", "4",
                 "--repeats", "2", "--seed", "7", "--out", str(out)])  # fmt: skip
    assert code == 0
    line = capsys.readouterr().out.strip()
    assert line.startswith("matyas_d2,random,")
    assert (out / "summary.csv").exists()


def test_cli_config_file_with_overrides(tmp_path, capsys):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("algorithm = vao\nfunction = dejong\ndims = 3\npop = 5\niters = 5\nrepeats = 1\n")
    assert main(["run", "--config", str(cfg), "--algo", "de"]) == 0
    assert capsys.readouterr().out.startswith("dejong_d3,de,")


def test_cli_compare_spec(tmp_path, capsys):
    spec = tmp_path / "cmp.ini"
    spec.write_text(
        "[DEFAULT]\nfunction = dejong\ndims = 4\npop = 8\niters = 30\nrepeats = 2\n"
        "[vao]\nalgorithm = vao\n[random]\nalgorithm = random\n"
    )
    assert main(["compare", "--spec", str(spec), "--out", str(tmp_path / "o")]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2 and all(line.endswith(",vao") for line in lines)
    assert (tmp_path / "o" / "vao" / "summary.csv").exists()


def test_cli_landscape(tmp_path):
    out = tmp_path / "grid.csv"
    assert main(["landscape", "--function", "booth", "--res", "3", "--out", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert rows[0] == "x,y,f" and rows[5] == "0.0,0.0,74.0"


ERROR_CASES = [
    ["run", "--algo", "ga", "--function", "booth"],
    ["run", "--function", "nosuch"],
    ["run", "--instance", "/nonexistent/file.txt", "--problem", "ed"],
    ["run", "--instance", "x.txt"],
    ["run", "--function", "booth", "--instance", "x.txt"],
    ["run", "--function", "booth", "--dims", "3"],
    ["run", "--function", "booth", "--repeats", "0"],
    ["run", "--function", "booth", "--pop", "ten"],
    ["run", "--config", "/nonexistent/exp.cfg"],
    ["compare", "--spec", "/nonexistent/spec.ini"],
    ["landscape", "--function", "powell", "--out", "grid.csv"],
    ["landscape", "--function", "booth", "--res", "0", "--out", "grid.csv"],
    ["frobnicate"],
    [],
]


@pytest.mark.parametrize("argv", ERROR_CASES, ids=lambda a: " ".join(a) or "no-args")
def test_cli_errors_exit_nonzero_with_one_line(argv, capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(argv) != 0
    err = capsys.readouterr().err
    assert err.startswith("error: ")
    assert err.count("\n") == 1


def test_unequal_budget_compare_exits_nonzero(tmp_path, capsys):
    spec = tmp_path / "cmp.ini"
    spec.write_text("[DEFAULT]\nfunction = booth\nrepeats = 1\n[a]\niters = 5\n[b]\niters = 4\n")
    assert main(["compare", "--spec", str(spec)]) == 1
    assert "unequal evaluation budgets" in capsys.readouterr().err


def test_console_script_module_entry(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "vaopt.harness.cli", "run", "--function", "nosuch"],
        capture_output=True,
        text=True,
        cwd=tmp_path,
    )
    assert proc.returncode == 1
    assert proc.stderr.strip().startswith("error: unknown test function")
