"""The command-line interface: report schemas, exit codes, determinism."""

import json
import os
import subprocess
import sys

import pytest

import yverma.cli as cli


def run_cli(argv, monkeypatch=None, env=None):
    """Invoke the CLI in a subprocess; returns (exit_code, stdout, stderr)."""
    full_env = dict(os.environ)
    full_env.pop("VERMA_WORKERS", None)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [sys.executable, "-m", "yverma", *argv],
        capture_output=True,
        text=True,
        env=full_env,
    )
    return proc.returncode, proc.stdout, proc.stderr


def call_main(capsys, argv):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReportContract:
    def test_expand_canonical_bytes(self):
        code, out, err = run_cli(["expand", "--mu", "(u+2)/(u+1)", "--order", "4"])
        assert code == 0 and err == ""
        assert out == (
            '{"coeffs":["1","1","-1","1","-1"],"exact":false,'
            '"mu":"(u+2)/(u+1)","order":4,"schema":"verma/1"}\n'
        )

    def test_detect_witness(self):
        code, out, _ = run_cli(
            ["detect", "--coeffs", "1,-1,1,-1,1,-1,1,-1", "--max-order", "2"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["rational"] == "(u+2)/(u+1)"
        assert obj["witness"] == {"N": 1, "c": ["1", "1"]}

    def test_singular_report(self, capsys):
        code, out, _ = call_main(
            capsys,
            ["singular", "--mu", "(u+2)/(u+1)", "--level", "1", "--degree", "1"],
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["basis"] == [
            {"terms": [{"coef": "1", "mono": [0]}, {"coef": "1", "mono": [1]}]}
        ]
        assert obj["pbw"] == [{"terms": [{"coef": "1", "mono": [2]}]}]
        assert obj["relation_budget"] == 5
        assert obj["stabilized"] is True

    def test_gram_and_character_agree(self, capsys):
        code_g, out_g, _ = call_main(
            capsys, ["gram", "--mu", "(u+3)/(u+1)", "--max-level", "3"]
        )
        code_c, out_c, _ = call_main(
            capsys, ["character", "--mu", "(u+3)/(u+1)", "--max-level", "3"]
        )
        assert code_g == 0 and code_c == 0
        ranks = [lvl["rank"] for lvl in json.loads(out_g)["levels"]]
        assert ranks == json.loads(out_c)["dims"] == [1, 1, 1, 0]

    def test_character_report_shape(self, capsys):
        code, out, _ = call_main(
            capsys, ["character", "--mu", "(u+3)/(u+1)", "--max-level", "3"]
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["dims"] == [1, 1, 1, 0] and obj["l"] == 1

    def test_roots_label_and_matrix(self, capsys):
        code_a, out_a, _ = call_main(capsys, ["roots", "--cartan", "B2"])
        code_b, out_b, _ = call_main(
            capsys, ["roots", "--cartan", "[[2,-1],[-2,2]]"]
        )
        assert code_a == code_b == 0
        assert out_a == out_b
        obj = json.loads(out_a)
        assert obj["count"] == 4 and obj["highest"] == [1, 2] and obj["d"] == [2, 1]

    def test_act_creation_generator(self, capsys):
        code, out, _ = call_main(
            capsys,
            ["act", "--mu", "(u+2)/(u+1)", "--gen", "t21", "--r", "2"],
        )
        assert code == 0
        assert json.loads(out)["vector"] == {"terms": [{"coef": "1", "mono": [2]}]}

    def test_act_annihilates_highest(self, capsys):
        code, out, _ = call_main(
            capsys, ["act", "--mu", "(u+2)/(u+1)", "--gen", "e", "--r", "0"]
        )
        assert code == 0
        assert json.loads(out)["vector"] == {"terms": []}

    def test_verdict_exact_weight(self, capsys):
        code, out, _ = call_main(
            capsys,
            ["verdict", "--mu", "(u+2)/(u+1)", "--cartan", "A1", "--budget", "2"],
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["reducible"] == "reducible"
        assert obj["weight_finiteness"] == "finite"
        assert obj["finite_dimensional"] is True

    def test_verdict_multi_component(self, capsys):
        code, out, _ = call_main(
            capsys,
            [
                "verdict",
                "--mu", "(u+2)/u",
                "--mu", "(u+1)/u",
                "--cartan", "B2",
                "--budget", "1",
            ],
        )
        assert code == 0
        assert json.loads(out)["finite_dimensional"] is True

    def test_series_weight_syntax(self, capsys):
        code, out, _ = call_main(
            capsys,
            ["act", "--mu", "series:1,-1,1,-1,1,-1", "--gen", "f", "--r", "0"],
        )
        assert code == 0
        assert json.loads(out)["vector"] == {"terms": [{"coef": "1", "mono": [1]}]}

    def test_json_flag_writes_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, out, _ = call_main(
            capsys,
            [
                "expand", "--mu", "(u+2)/(u+1)", "--order", "3",
                "--json", str(target),
            ],
        )
        assert code == 0 and out == ""
        obj = json.loads(target.read_text())
        assert obj["coeffs"] == ["1", "1", "-1", "1"]

    def test_reports_are_single_canonical_lines(self, capsys):
        for argv in (
            ["expand", "--mu", "(u+2)/(u+1)", "--order", "5"],
            ["roots", "--cartan", "A2"],
            ["character", "--mu", "(u+2)/(u+1)", "--max-level", "2"],
        ):
            _, out, _ = call_main(capsys, argv)
            assert out.endswith("\n") and out.count("\n") == 1
            obj = json.loads(out)
            assert out == json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


class TestExitCodes:
    def test_bad_weight_is_input_error(self, capsys):
        code, out, err = call_main(
            capsys, ["expand", "--mu", "u +", "--order", "3"]
        )
        assert code == 2 and out == ""
        assert json.loads(err)["error"]["code"] == "input"

    def test_series_weight_where_rational_required(self, capsys):
        code, _, err = call_main(
            capsys, ["gram", "--mu", "series:1,1", "--max-level", "2"]
        )
        assert code == 2
        assert json.loads(err)["error"]["code"] == "input"

    def test_truncation_is_data_exit(self, capsys):
        code, out, err = call_main(
            capsys, ["act", "--mu", "series:1", "--gen", "h", "--r", "5"]
        )
        assert code == 3 and err == ""
        obj = json.loads(out)
        assert obj["error"]["code"] == "truncation"
        assert isinstance(obj["error"]["needed"], int)

    def test_insufficient_data_exit(self, capsys):
        code, out, _ = call_main(
            capsys, ["detect", "--coeffs", "1,2,3", "--max-order", "2"]
        )
        assert code == 3
        assert json.loads(out)["error"]["code"] == "insufficient_data"

    def test_no_recurrence_within_budget_is_success(self, capsys):
        # A budget-qualified negative is an answer, not an error.
        code, out, _ = call_main(
            capsys,
            ["detect", "--coeffs", "1,2,6,24,120,720,5040,40320", "--max-order", "2"],
        )
        assert code == 0
        assert json.loads(out)["witness"] is None

    def test_undetermined_verdict_exits_three(self, capsys):
        code, out, _ = call_main(
            capsys,
            ["verdict", "--mu", "series:1,1,1", "--cartan", "A1", "--budget", "2"],
        )
        assert code == 3
        assert json.loads(out)["reducible"] == "undetermined"

    def test_internal_error_exit(self, capsys, monkeypatch):
        def boom(params, workers):
            raise RuntimeError("invariant breached")

        monkeypatch.setitem(cli._RUNNERS, "roots", boom)
        code, out, err = call_main(capsys, ["roots", "--cartan", "A1"])
        assert code == 4 and out == ""
        assert json.loads(err)["error"]["code"] == "internal"

    def test_unknown_generator_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            call_main(
                capsys, ["act", "--mu", "(u+2)/(u+1)", "--gen", "t13", "--r", "1"]
            )
        assert exc.value.code == 2


class TestJobMode:
    def test_job_file(self, tmp_path, capsys):
        job = tmp_path / "job.json"
        job.write_text(
            json.dumps(
                {
                    "command": "character",
                    "parameters": {"mu": "(u+3)/(u+1)", "max_level": 3},
                }
            )
        )
        code, out, _ = call_main(capsys, ["job", str(job)])
        assert code == 0
        assert json.loads(out)["dims"] == [1, 1, 1, 0]

    def test_job_output_field(self, tmp_path, capsys):
        target = tmp_path / "out.json"
        job = tmp_path / "job.json"
        job.write_text(
            json.dumps(
                {
                    "command": "roots",
                    "parameters": {"cartan": [[2, -1], [-1, 2]]},
                    "output": str(target),
                }
            )
        )
        code, out, _ = call_main(capsys, ["job", str(job)])
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["count"] == 3

    def test_job_from_stdin(self):
        payload = json.dumps(
            {"command": "expand", "parameters": {"mu": "(u+2)/(u+1)", "order": 2}}
        )
        proc = subprocess.run(
            [sys.executable, "-m", "yverma", "job", "-"],
            input=payload,
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["coeffs"] == ["1", "1", "-1"]

    def test_job_schema_violations(self, tmp_path, capsys):
        cases = [
            {"command": "nope", "parameters": {}},
            {"command": "expand", "parameters": {"mu": "(u+2)/(u+1)"}},
            {"command": "expand", "parameters": {"mu": "(u+2)/(u+1)", "order": "4"}},
            {"command": "expand", "parameters": {"mu": "(u+2)/(u+1)", "order": 4, "x": 1}},
            {"command": "expand", "parameters": {"mu": "(u+2)/(u+1)", "order": 4}, "extra": 1},
            {"parameters": {}},
        ]
        for i, case in enumerate(cases):
            job = tmp_path / f"job{i}.json"
            job.write_text(json.dumps(case))
            code, out, err = call_main(capsys, ["job", str(job)])
            assert code == 2, case
            assert json.loads(err)["error"]["code"] == "input"

    def test_job_missing_file(self, capsys):
        code, _, err = call_main(capsys, ["job", "/nonexistent/job.json"])
        assert code == 2
        assert json.loads(err)["error"]["code"] == "input"


class TestDeterminism:
    def test_byte_identity_across_runs(self):
        argv = ["gram", "--mu", "(u+2)(u+4)/((u+1)(u+3))", "--max-level", "3"]
        runs = [run_cli(argv) for _ in range(2)]
        assert runs[0] == runs[1]
        assert runs[0][0] == 0

    def test_worker_count_never_echoed_or_effective(self):
        base = ["gram", "--mu", "(u+3)/(u+1)", "--max-level", "3"]
        one = run_cli(base + ["--workers", "1"])
        four = run_cli(base + ["--workers", "4"])
        assert one == four
        assert "workers" not in one[1]

    def test_env_override_beats_flag(self):
        base = ["singular", "--mu", "(u+2)/(u+1)", "--level", "1", "--degree", "2"]
        plain = run_cli(base + ["--workers", "1"])
        overridden = run_cli(base + ["--workers", "1"], env={"VERMA_WORKERS": "4"})
        assert plain == overridden
        assert plain[0] == 0

    def test_invalid_env_override_rejected(self):
        code, _, err = run_cli(
            ["roots", "--cartan", "A1"], env={"VERMA_WORKERS": "zero"}
        )
        assert code == 2
        assert json.loads(err)["error"]["code"] == "input"


class TestSelftestCommand:
    def test_selftest_passes(self):
        code, out, _ = run_cli(["selftest", "--seed", "0"])
        assert code == 0
        obj = json.loads(out)
        assert obj["pass"] is True
        assert all(entry["pass"] for entry in obj["properties"])

    def test_selftest_deterministic(self):
        a = run_cli(["selftest", "--seed", "2"])
        b = run_cli(["selftest", "--seed", "2"])
        assert a == b
