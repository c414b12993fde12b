import json
import math

import pytest

from diskops import checks, cli
from diskops import report as rp


@pytest.fixture(scope="module")
def pick_reports():
    return checks.run_suite("pick", checks.Config())


class TestConfig:
    def test_defaults(self):
        cfg = checks.Config()
        assert cfg.truncation == 256 and cfg.quad_nodes == 4096

    def test_rejects_small_truncation(self):
        with pytest.raises(ValueError):
            checks.Config(truncation=8)

    def test_rejects_bad_node_count(self):
        with pytest.raises(ValueError):
            checks.Config(quad_nodes=1000)

    def test_rejects_bad_output(self):
        with pytest.raises(ValueError):
            checks.Config(output="yaml")


class TestRunSuite:
    def test_reports_sorted(self, pick_reports):
        ids = [r.check_id for r in pick_reports]
        assert ids == sorted(ids)

    def test_determinism(self):
        cfg = checks.Config(seed=11)
        first = checks.run_suite("blaschke", cfg)
        second = checks.run_suite("blaschke", cfg)
        for a, b in zip(first, second):
            assert a.check_id == b.check_id and a.status == b.status
            assert [(v.label, v.value) for v in a.computed] == [
                (v.label, v.value) for v in b.computed
            ]

    def test_all_suite_size(self):
        assert len(checks.suite_checks("all")) >= 40

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            checks.run_suite("nope", checks.Config())

    def test_error_capture_does_not_abort_suite(self, monkeypatch):
        def explode(cfg):
            raise RuntimeError("boom")

        explode.check_id = "always_explodes"
        patched = dict(checks._REGISTRY)
        patched["kernels"] = [explode] + list(checks._REGISTRY["kernels"])
        monkeypatch.setattr(checks, "_REGISTRY", patched)
        reports = checks.run_suite("kernels", checks.Config())
        by_id = {r.check_id: r for r in reports}
        assert by_id["always_explodes"].status == rp.ERROR
        assert "RuntimeError: boom" in by_id["always_explodes"].computed[0].label
        others = [r for r in reports if r.check_id != "always_explodes"]
        assert others and all(r.status != rp.ERROR for r in others)
        assert not rp.reports_ok(reports)


class TestEmit:
    def test_empty_json(self):
        assert rp.emit_reports([], "json") == b"[]"

    def test_single_pass_json(self, pick_reports):
        data = json.loads(rp.emit_reports(pick_reports[:1], "json"))
        assert data[0]["status"] in ("pass", "consistent")

    def test_json_round_trip(self, pick_reports):
        payload = rp.emit_reports(pick_reports, "json")
        parsed = rp.parse_reports(payload)
        assert parsed == pick_reports

    def test_csv_row_count(self, pick_reports):
        rows = rp.emit_reports(pick_reports, "csv").decode().strip().splitlines()
        assert len(rows) == len(pick_reports) + 1

    def test_text_contains_counts(self, pick_reports):
        text = rp.emit_reports(pick_reports, "text").decode()
        assert f"-- {len(pick_reports)} checks" in text

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            rp.emit_reports([], "yaml")

    def test_fifteen_digit_format(self):
        assert rp.format_quantity(math.pi) == "3.14159265358979"
        assert rp.format_quantity(1 + 2j) == "1+2j"
        assert rp.format_quantity(1.5 - 0.25j) == "1.5-0.25j"


class TestCommandLine:
    def test_norm(self, tmp_path, capsys):
        path = tmp_path / "series.json"
        path.write_text(json.dumps([[1, 0], [1, 0]]))
        assert cli.main(["norm", "S12", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_opnorm_mult(self, tmp_path, capsys):
        path = tmp_path / "series.json"
        path.write_text(json.dumps([[1, 0], [1, 0]]))
        assert cli.main(["--truncation", "512", "opnorm", "S12", "mult", str(path)]) == 0
        assert float(capsys.readouterr().out) > math.sqrt(4.5)

    def test_opnorm_comp(self, tmp_path, capsys):
        path = tmp_path / "series.json"
        path.write_text(json.dumps([[0, 0], [0.5, 0]]))
        assert cli.main(["opnorm", "S12", "comp", str(path)]) == 0
        assert abs(float(capsys.readouterr().out) - 1.0) < 1e-10

    def test_kernel(self, capsys):
        assert cli.main(["kernel", "D2", "0.5", "1.0"]) == 0
        assert abs(float(capsys.readouterr().out) - 2 * math.log(2)) < 1e-12

    def test_kernel_complex_argument(self, capsys):
        assert cli.main(["kernel", "S12", "0.3+0.2j", "0.5"]) == 0
        out = capsys.readouterr().out.strip()
        assert "j" in out

    def test_isometry(self, tmp_path, capsys):
        path = tmp_path / "blaschke.json"
        path.write_text(json.dumps({"a": [-1, 0], "zeros": [[0, 0], [0.4, 0]]}))
        assert cli.main(["--truncation", "600", "isometry", "S12", str(path), "3"]) == 0
        out = capsys.readouterr().out
        assert "max |defect|" in out

    def test_pick(self, tmp_path, capsys):
        path = tmp_path / "problem.json"
        path.write_text(
            json.dumps(
                {
                    "space": "S2",
                    "nodes": [[0, 0], [0.5, 0]],
                    "targets": [[0, 0], [math.sqrt(0.1), 0]],
                }
            )
        )
        assert cli.main(["pick", str(path)]) == 0
        assert "is_psd True" in capsys.readouterr().out

    def test_verify_exit_code_and_flag_after_subcommand(self, capsys):
        code = cli.main(["verify", "pick", "--output", "json"])
        out = capsys.readouterr().out
        reports = rp.parse_reports(out.encode())
        assert code == 0
        assert all(r.ok for r in reports)

    def test_env_override(self, monkeypatch, capsys):
        monkeypatch.setenv("DISKOPS_OUTPUT", "csv")
        cli.main(["verify", "kernels"])
        out = capsys.readouterr().out
        assert out.startswith("check_id,status")

    def test_flag_beats_env(self, monkeypatch, capsys):
        monkeypatch.setenv("DISKOPS_OUTPUT", "csv")
        cli.main(["--output", "json", "verify", "kernels"])
        assert capsys.readouterr().out.lstrip().startswith("[")

    def test_verify_determinism_bitwise(self, capsys):
        cli.main(["verify", "composition", "--output", "json"])
        first = capsys.readouterr().out
        cli.main(["verify", "composition", "--output", "json"])
        second = capsys.readouterr().out
        a = rp.parse_reports(first.encode())
        b = rp.parse_reports(second.encode())
        for x, y in zip(a, b):
            assert [(v.label, v.value) for v in x.computed] == [
                (v.label, v.value) for v in y.computed
            ]
