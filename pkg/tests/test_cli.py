import csv
import json

import pytest

from twocolor.cli import main
from twocolor.export import DRESSED_3LS_COLUMNS, DRESSED_TLS_COLUMNS, TRAJECTORY_COLUMNS


def _csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


@pytest.fixture(scope="module")
def fig2_run(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig2")
    assert main(["run", "--preset", "fig2", "--output-dir", str(out)]) == 0
    return out


def test_run_fig2_summary(fig2_run):
    s = json.loads((fig2_run / "summary.json").read_text())
    assert s["scenario"] == "fig2"
    assert s["final_occupations"]["x"] >= 0.95
    assert s["omega_delta_mev"] == pytest.approx(6.46)
    assert s["max_norm_drift"] <= 1e-8
    assert s["convergence"] < 1e-6
    assert s["parameters"]["pulse2"]["detuning_mev"] == -11.46
    assert s["design"]["delta2_mev"] == pytest.approx(-11.403, abs=5e-4)


def test_run_fig2_csv_layout(fig2_run):
    traj = _csv(fig2_run / "trajectory.csv")
    dressed = _csv(fig2_run / "dressed.csv")
    assert traj[0] == TRAJECTORY_COLUMNS and dressed[0] == DRESSED_TLS_COLUMNS
    assert len(traj) == len(dressed) == 8002
    assert all(float(r[3]) == 0 for r in traj[1:])
    assert float(dressed[-1][5]) >= 0.95
    assert (fig2_run / "trajectory.csv").read_bytes().count(b"\r") == 0


def test_run_is_byte_stable(fig2_run, tmp_path):
    assert main(["run", "fig2", "--output-dir", str(tmp_path)]) == 0
    for name in ("trajectory.csv", "dressed.csv", "summary.json"):
        assert (tmp_path / name).read_bytes() == (fig2_run / name).read_bytes()


def test_run_fig5(tmp_path):
    assert main(["run", "--preset", "fig5", "--output-dir", str(tmp_path)]) == 0
    s = json.loads((tmp_path / "summary.json").read_text())
    assert s["final_occupations"]["x"] >= 0.95
    assert s["final_occupations"]["xx"] <= 0.05
    assert s["design"] is None
    assert _csv(tmp_path / "dressed.csv")[0] == DRESSED_3LS_COLUMNS


def test_run_design_config(tmp_path):
    cfg = {
        "system": "two_level",
        "pulse1": {"shape": "smooth_rectangular", "amplitude_mev": 4, "tau_ps": 40,
                   "kappa_per_ps": 1, "detuning_mev": -5},
        "pulse2": "design:positive",
        "grid": {"t_start_ps": -40, "t_end_ps": 40},
        "outputs": {"dressed": False},
    }
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg))
    assert main(["run", "--config", str(path), "--output-dir", str(tmp_path / "o")]) == 0
    s = json.loads((tmp_path / "o" / "summary.json").read_text())
    assert s["parameters"]["pulse2"]["detuning_mev"] == pytest.approx(-11.403, abs=5e-4)
    assert s["parameters"]["pulse2"]["area_pi"] == pytest.approx(9.13, abs=0.01)
    assert s["final_occupations"]["x"] >= 0.8
    assert not (tmp_path / "o" / "dressed.csv").exists()


def test_unknown_key_is_usage_error(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"system": "two_level", "pulse1": {}, "bogus": 1}))
    assert main(["run", "--config", str(path), "--output-dir", str(tmp_path)]) == 2
    assert "error" in capsys.readouterr().err


def test_missing_config_is_io_error(tmp_path):
    assert main(["run", "--config", str(tmp_path / "nope.json"), "--output-dir", str(tmp_path)]) == 1


def test_numeric_failure_exit_code(tmp_path):
    cfg = {
        "system": "two_level",
        "pulse1": {"shape": "gaussian", "area_pi": 22.65, "sigma_ps": 2.4, "detuning_mev": -8},
        "pulse2": {"shape": "gaussian", "area_pi": 19.29, "sigma_ps": 3.04, "detuning_mev": -19.163},
        "grid": {"t_start_ps": -18, "t_end_ps": 18, "dt_fs": 10, "sample_fs": 10},
        "convergence_check": False,
    }
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg))
    assert main(["run", "--config", str(path), "--output-dir", str(tmp_path)]) == 3


def test_design_table(capsys, tmp_path):
    assert main(["design", "--delta1", "-5", "--amplitude", "4", "--json", str(tmp_path / "d.json")]) == 0
    out = capsys.readouterr().out
    for value in ("-11.4031", "-1.4031", "1.4031", "11.4031", "9.12"):
        assert value in out
    d = json.loads((tmp_path / "d.json").read_text())
    assert d["design"]["area2_pi"] == pytest.approx(9.13, abs=0.01)
    assert len(d["table"]) == 4


def test_design_gaussian(capsys):
    assert main(["design", "--gaussian", "--area", "22.65", "--sigma", "2.4", "--delta1", "-8"]) == 0
    assert "-19.163" in capsys.readouterr().out


def test_design_invalid_sign():
    with pytest.raises(SystemExit) as info:
        main(["design", "--delta1", "-5", "--amplitude", "4", "--sign", "sideways"])
    assert info.value.code == 2


def test_design_missing_amplitude():
    assert main(["design", "--delta1", "-5"]) == 2


def test_optimize_writes_files(tmp_path):
    args = ["optimize", "--preset", "fig2", "--detuning-bounds", "-12", "-11", "--area-bounds", "8", "10",
            "--grid-points", "3", "3", "--refine-iterations", "5", "--output-dir", str(tmp_path)]
    assert main(args) == 0
    trace = _csv(tmp_path / "opt_trace.csv")
    assert trace[0] == ["detuning_mev", "area_pi", "objective"]
    result = json.loads((tmp_path / "opt_result.json").read_text())
    assert result["evaluations"] == len(trace) - 1
    assert result["objective"] == pytest.approx(max(float(r[2]) for r in trace[1:]), abs=1e-9)


def test_sweep_writes_grid(tmp_path):
    args = ["sweep", "fig6", "--target", "xx", "--detuning-bounds", "-11", "-10", "--area-bounds", "16", "19",
            "--grid-points", "3", "4", "--workers", "2", "--output-dir", str(tmp_path)]
    assert main(args) == 0
    assert len(_csv(tmp_path / "sweep.csv")) == 13


def test_optimize_rejects_bad_bounds(tmp_path):
    args = ["optimize", "fig2", "--detuning-bounds", "-6", "-4", "--output-dir", str(tmp_path)]
    assert main(args) == 2


def test_scenarios(capsys):
    assert main(["scenarios"]) == 0
    out = capsys.readouterr().out
    for name in ("fig2", "fig3", "fig_gauss", "fig4", "fig5", "fig6"):
        assert name in out
