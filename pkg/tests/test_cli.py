import json
import math

import numpy as np
import pandas as pd
import pytest

from noisyoneway.cli import ExperimentConfig, main, preset, preset_names, protocol_for, run, run_checks
from noisyoneway.exceptions import ConfigurationException


def _rsp_document(**overrides) -> dict:
    document = {
        "protocol": "rsp",
        "channels": [
            {"kind": "pf", "gamma": 1.0, "label": "pf"},
            {"kind": "white", "gamma": 0.25, "label": "w"}
        ],
        "sweep": {"t_min": 0.0, "t_max": 1.0, "steps": 3},
        "measures": ["fidelity", "concurrence"]
    }
    document.update(overrides)
    return document


# ------------------------------------
#            Configuration
# ------------------------------------

class TestExperimentConfig:

    def test_defaults(self):
        config = ExperimentConfig.from_dict(_rsp_document())
        assert config.times == (0.0, 0.5, 1.0)
        assert config.seed == 0
        assert config.workers == 1
        assert config.noise_on == "measured"

    def test_explicit_values(self):
        config = ExperimentConfig.from_dict(_rsp_document(sweep = {"values": [0.2, 0.1, 3]}))
        assert config.times == (0.2, 0.1, 3.0)

    def test_missing_field(self):
        document = _rsp_document()
        del document["protocol"]
        with pytest.raises(ConfigurationException, match = "CON001"):
            ExperimentConfig.from_dict(document)

    def test_missing_sweep_field_names_the_path(self):
        with pytest.raises(ConfigurationException, match = "sweep.steps"):
            ExperimentConfig.from_dict(_rsp_document(sweep = {"t_min": 0.0, "t_max": 1.0}))

    def test_unknown_protocol(self):
        with pytest.raises(ConfigurationException, match = "CON003"):
            ExperimentConfig.from_dict(_rsp_document(protocol = "grover"))

    def test_measure_not_available(self):
        with pytest.raises(ConfigurationException, match = "CON006"):
            ExperimentConfig.from_dict(_rsp_document(protocol = "cnot15", measures = ["discord"]))

    def test_unknown_measure(self):
        with pytest.raises(ConfigurationException, match = "CON003"):
            ExperimentConfig.from_dict(_rsp_document(measures = ["purity"]))

    def test_duplicate_labels(self):
        channels = [{"kind": "pf", "gamma": 1.0, "label": "a"}, {"kind": "white", "gamma": 1.0, "label": "a"}]
        with pytest.raises(ConfigurationException, match = "CON002"):
            ExperimentConfig.from_dict(_rsp_document(channels = channels))

    def test_default_labels_follow_the_kind(self):
        channels = [{"kind": "pf", "gamma": 1.0}, {"kind": "fixed_pole", "p": 0.2}]
        config = ExperimentConfig.from_dict(_rsp_document(channels = channels, measures = ["concurrence"]))
        assert [c["label"] for c in config.channels] == ["pf", "fixed-pole"]

    def test_channel_measures_must_be_requested(self):
        channels = [{"kind": "pf", "gamma": 1.0, "label": "pf", "measures": ["discord"]}]
        with pytest.raises(ConfigurationException, match = r"channels\[0\]\.measures"):
            ExperimentConfig.from_dict(_rsp_document(channels = channels))
        channels = [{"kind": "pf", "gamma": 1.0, "label": "pf", "measures": []}]
        with pytest.raises(ConfigurationException, match = "CON002"):
            ExperimentConfig.from_dict(_rsp_document(channels = channels))

    def test_single_point_sweep(self):
        with pytest.raises(ConfigurationException, match = "CON005"):
            ExperimentConfig.from_dict(_rsp_document(sweep = {"t_min": 0.0, "t_max": 1.0, "steps": 1}))

    def test_wrong_type(self):
        with pytest.raises(ConfigurationException, match = "CON004"):
            ExperimentConfig.from_dict(_rsp_document(sweep = {"t_min": 0.0, "t_max": "1", "steps": 3}))

    def test_fixed_pole_ancilla(self):
        document = _rsp_document(
            protocol = "ancilla",
            channels = [{"kind": "fixed_pole", "p": 0.1}],
            measures = ["fidelity"]
        )
        with pytest.raises(ConfigurationException, match = "CON006"):
            ExperimentConfig.from_dict(document)

    def test_noise_target(self):
        with pytest.raises(ConfigurationException, match = "CON002"):
            ExperimentConfig.from_dict(_rsp_document(noise_on = "outputs"))

    def test_from_json(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps(_rsp_document()))
        assert ExperimentConfig.from_json(path) == ExperimentConfig.from_dict(_rsp_document())

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ConfigurationException, match = "CON007"):
            ExperimentConfig.from_json(tmp_path / "missing.json")

    def test_malformed_json_reports_the_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"protocol": "rsp",\n "channels": [}')
        with pytest.raises(ConfigurationException, match = "line 2"):
            ExperimentConfig.from_json(path)

    def test_input_state_is_parsed(self):
        config = ExperimentConfig.from_dict(_rsp_document(
            protocol = "rotation",
            params = {"phi1": 0.1, "phi2": 0.2, "phi3": 0.3, "input_state": "1"},
            measures = ["fidelity"]
        ))
        protocol = protocol_for(config)
        np.testing.assert_allclose(protocol.input_state.amplitudes, [0, 1])


# ------------------------------------
#               Sweeps
# ------------------------------------

class TestRun:

    def test_rsp_columns_and_values(self):
        result = run(ExperimentConfig.from_dict(_rsp_document()))
        frame = result.frame
        assert list(frame.columns) == ["t", "F_pf", "F_w", "C_pf", "C_w"]
        assert result.paths == []
        np.testing.assert_allclose(frame["F_pf"], [(1 + math.exp(-2 * t)) / 2 for t in frame["t"]])
        np.testing.assert_allclose(frame["C_pf"], [math.exp(-2 * t) for t in frame["t"]], atol = 1e-7)
        assert frame.sweep.dominates("F_w", "F_pf")
        assert frame["F_w"].iloc[-1] > frame["F_pf"].iloc[-1]

    def test_files_and_reproducibility(self, tmp_path):
        config = ExperimentConfig.from_dict(_rsp_document(outcomes = True))
        first = run(config, tmp_path / "a" / "rsp.csv")
        second = run(config, tmp_path / "b" / "rsp.csv")

        names = sorted(p.name for p in first.paths)
        assert names == ["rsp.csv", "rsp.json", "rsp_outcomes.csv"]
        assert (tmp_path / "a" / "rsp.csv").read_bytes() == (tmp_path / "b" / "rsp.csv").read_bytes()

        sidecar = json.loads((tmp_path / "a" / "rsp.json").read_text())
        assert sidecar["rows"] == 3
        assert sidecar["config"]["protocol"] == "rsp"
        assert set(sidecar["versions"]) == {"noisyoneway", "numpy", "pandas", "scipy", "networkx"}

        outcomes = pd.read_csv(tmp_path / "a" / "rsp_outcomes.csv", dtype = {"outcome": str})
        assert list(outcomes.columns) == ["t", "channel", "outcome", "Z", "F"]
        assert len(outcomes) == 3 * 2 * 2

    def test_sidecar_summary_lists_mean_fidelity_per_point(self, tmp_path):
        result = run(ExperimentConfig.from_dict(_rsp_document()), tmp_path / "rsp.csv")
        summary = json.loads((tmp_path / "rsp.json").read_text())["summary"]
        assert summary == result.sidecar["summary"]
        assert len(summary) == 3 * 2
        assert all(set(entry) == {"t", "channel", "F_bar"} for entry in summary)

        pf = [entry for entry in summary if entry["channel"] == "pf"]
        assert [entry["t"] for entry in pf] == list(result.frame["t"])
        np.testing.assert_allclose([entry["F_bar"] for entry in pf], result.frame["F_pf"], atol = 1e-12)

    def test_channel_measures_narrow_the_columns(self):
        channels = [
            {"kind": "pf", "gamma": 1.0, "label": "pf"},
            {"kind": "white", "gamma": 0.25, "label": "w", "measures": ["concurrence"]}
        ]
        result = run(ExperimentConfig.from_dict(_rsp_document(channels = channels)))
        assert list(result.frame.columns) == ["t", "F_pf", "C_pf", "C_w"]
        assert {entry["channel"] for entry in result.sidecar["summary"]} == {"pf"}

    def test_workers_keep_sweep_order(self):
        document = _rsp_document(sweep = {"values": [1.0, 0.0, 0.5, 2.0]}, measures = ["fidelity"])
        serial = run(ExperimentConfig.from_dict(document)).frame
        threaded = run(ExperimentConfig.from_dict({**document, "workers": 3})).frame
        pd.testing.assert_frame_equal(serial, threaded)
        assert list(serial["t"]) == [1.0, 0.0, 0.5, 2.0]

    def test_ancilla_sweep(self):
        document = {
            "protocol": "ancilla",
            "channels": [{"kind": "white", "gamma": 1.0, "label": "w"}],
            "sweep": {"values": [0.0, 0.2, 1.0]},
            "measures": ["fidelity", "bound"],
            "seed": 5
        }
        frame = run(ExperimentConfig.from_dict(document)).frame
        assert list(frame.columns) == ["t", "F_w", "bound_w", "closed_w"]
        assert frame["F_w"].iloc[0] == pytest.approx(1.0)
        assert frame.sweep.dominates("bound_w", "F_w", tol = 1e-9)
        np.testing.assert_allclose(frame["F_w"], frame["closed_w"], atol = 1e-9)

    def test_ancilla_rejects_unknown_params(self):
        document = {
            "protocol": "ancilla",
            "channels": [{"kind": "white", "gamma": 1.0}],
            "sweep": {"values": [0.0, 1.0]},
            "params": {"register": 3}
        }
        with pytest.raises(ConfigurationException, match = "CON002"):
            run(ExperimentConfig.from_dict(document))

    def test_noise_on_every_vertex_lowers_fidelity(self):
        measured = run(ExperimentConfig.from_dict(_rsp_document(measures = ["fidelity"]))).frame
        everywhere = run(ExperimentConfig.from_dict(_rsp_document(measures = ["fidelity"], noise_on = "all"))).frame
        assert (everywhere["F_w"].iloc[1:] < measured["F_w"].iloc[1:]).all()


# ------------------------------------
#              Presets
# ------------------------------------

class TestPresets:

    def test_names(self):
        assert preset_names() == ["fig1", "fig2", "fig4", "dj", "ancilla"]

    def test_overrides(self):
        config = preset("dj", seed = 3, output = None)
        assert config.seed == 3
        assert config.output is None
        assert len(preset("fig1").times) == 61

    def test_unknown(self):
        with pytest.raises(ConfigurationException, match = "CON003"):
            preset("fig9")

    def test_fig4_has_one_fidelity_curve(self):
        result = run(preset("fig4", sweep = {"values": [0.0, 0.5, 1.0]}))
        assert list(result.frame.columns) == ["t", "F_pf", "N_pf", "N_w"]



# ------------------------------------
#           Command line
# ------------------------------------

class TestMain:

    def test_run_writes_the_output(self, tmp_path):
        config_path = tmp_path / "config.json"
        config_path.write_text(json.dumps(_rsp_document(measures = ["fidelity"])))
        out = tmp_path / "out.csv"
        assert main(["run", "--config", str(config_path), "--out", str(out), "--seed", "4"]) == 0
        assert out.exists()
        assert json.loads(out.with_suffix(".json").read_text())["config"]["seed"] == 4

    def test_run_reports_config_errors(self, tmp_path, capsys):
        assert main(["run", "--config", str(tmp_path / "missing.json")]) == 2
        assert "CON007" in capsys.readouterr().err

    def test_presets_listing(self, capsys):
        assert main(["presets"]) == 0
        assert "fig1\trsp" in capsys.readouterr().out

    def test_verify_filter(self, capsys):
        assert main(["verify", "--filter", "channels"]) == 0
        assert "[OK] 1 checks passed" in capsys.readouterr().out

    def test_verify_perturb_fails(self, capsys):
        assert main(["verify", "--filter", "channels", "--perturb", "1.0"]) == 1
        assert "[FAIL]" in capsys.readouterr().out

    def test_verify_without_match(self, capsys):
        assert main(["verify", "--filter", "no-such-check"]) == 2

    def test_run_checks_table(self):
        table = run_checks("rsp_phase", 0.0)
        assert list(table.columns) == ["name", "passed", "error", "tolerance", "detail"]
        assert table["passed"].all()
