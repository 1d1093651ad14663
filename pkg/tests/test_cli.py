import json
from fractions import Fraction as F

import pytest

import trijac.suites as suites
from trijac.cli import (
    EXIT_FAILURES,
    EXIT_OK,
    EXIT_REDRAW_CAP,
    EXIT_USAGE,
    load_config_file,
    main,
)
from trijac.sampling import RedrawCapError, Sampler, seeded_rng


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_eval_jacobi_coefficient_list(capsys):
    code, out = run_cli(capsys, "eval", "jacobi", "--n", "2", "--alpha", "0", "--beta", "0")
    assert code == EXIT_OK
    assert out.strip() == "-1/2 0 3/2"


def test_eval_gegenbauer_zero_polynomial(capsys):
    code, out = run_cli(capsys, "eval", "gegenbauer", "--n", "3", "--lambda", "0")
    assert code == EXIT_OK
    assert out.strip() == "0"


def test_eval_at_point(capsys):
    code, out = run_cli(
        capsys,
        "eval", "jacobi", "--n", "3", "--alpha", "1/2", "--beta", "1/2", "--at", "1",
    )
    assert code == EXIT_OK
    assert out.strip() == "35/16"


def test_eval_aw_value(capsys):
    code, out = run_cli(
        capsys,
        "eval", "aw", "--n", "0",
        "--a1", "1/2", "--a2", "1/3", "--a3", "1/5", "--a4", "1/7",
        "--q", "1/2", "--z", "2",
    )
    assert code == EXIT_OK
    assert out.strip() == "1"


def test_eval_missing_parameter(capsys):
    code = main(["eval", "jacobi", "--n", "2", "--alpha", "0"])
    assert code == EXIT_USAGE


def test_eval_rejects_decimal_rational():
    with pytest.raises(SystemExit):
        main(["eval", "jacobi", "--n", "2", "--alpha", "0.x", "--beta", "0"])


def test_verify_json_schema(capsys):
    code, out = run_cli(
        capsys,
        "verify", "--suite", "generating", "--samples", "2", "--seed", "7",
        "--series-order", "6", "--format", "json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["suite"] == "generating"
    assert set(payload) == {
        "schema", "suite", "config_echo", "cases", "summary", "elapsed_ms", "timestamp",
    }
    assert payload["summary"]["fail"] == 0
    for case in payload["cases"]:
        assert case["status"] in {"PASS", "FAIL", "SKIPPED"}
        assert ("counterexample" in case) == (case["status"] == "FAIL")


def test_verify_reports_are_deterministic(capsys):
    argv = (
        "verify", "--suite", "generating", "--samples", "2", "--seed", "11",
        "--series-order", "6", "--format", "json",
    )
    _, first = run_cli(capsys, *argv)
    _, second = run_cli(capsys, *argv)
    p1, p2 = json.loads(first), json.loads(second)
    for payload in (p1, p2):
        payload.pop("timestamp")
        payload.pop("elapsed_ms")
    assert p1 == p2


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nonsense"])


def test_verify_failure_exit_code(capsys):
    # the limit suite's pinned default schedule misses its default tolerance
    code, out = run_cli(
        capsys, "verify", "--suite", "aw_limit", "--format", "json"
    )
    assert code == EXIT_FAILURES
    payload = json.loads(out)
    assert payload["summary"]["fail"] > 0
    failing = [c for c in payload["cases"] if c["status"] == "FAIL"]
    assert all("counterexample" in c for c in failing)


def test_verify_limit_flags_parse_decimals(capsys):
    from trijac.cli import _rational

    assert _rational("1e-4") == F(1, 10000)
    assert _rational("0.75") == F(3, 4)
    code, out = run_cli(
        capsys,
        "verify", "--suite", "aw_limit", "--limit-tol", "1e0",
        "--limit-ratio", "0.75", "--format", "json",
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["config_echo"]["limit_tol"] == "1"
    assert payload["config_echo"]["limit_ratio"] == "3/4"


def test_config_file_roundtrip(tmp_path, capsys):
    config = tmp_path / "suite.conf"
    config.write_text(
        "# harness settings\n"
        "suite = generating\n"
        "samples = 2\n"
        "seed = 7\n"
        "series_order = 5\n"
        "format = json\n"
    )
    code, out = run_cli(capsys, "verify", "--config", str(config))
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["suite"] == "generating"
    assert payload["config_echo"]["resolved"]["series_order"] == 5
    # flags override file values
    code, out = run_cli(
        capsys, "verify", "--config", str(config), "--series-order", "4"
    )
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["config_echo"]["resolved"]["series_order"] == 4


def test_config_file_rejects_unknown_keys(tmp_path):
    config = tmp_path / "bad.conf"
    config.write_text("banana = 3\n")
    with pytest.raises(ValueError):
        load_config_file(config)


def test_redraw_cap_exit_code(monkeypatch, capsys):
    def exhausted(cfg):
        raise RedrawCapError("rejected everything")

    monkeypatch.setitem(suites.RUNNERS, "generating", exhausted)
    code = main(["verify", "--suite", "generating"])
    assert code == EXIT_REDRAW_CAP


def test_sampler_redraw_budget():
    sampler = Sampler(seeded_rng(1, "test"))
    sampler.set_budget(1)
    with pytest.raises(RedrawCapError):
        sampler.admissible(lambda: 1, lambda value: False)
    assert sampler.rejections > 0


def test_seeded_rng_is_label_separated():
    assert seeded_rng(42, "a").random() != seeded_rng(42, "b").random()
    assert seeded_rng(42, "a").random() == seeded_rng(42, "a").random()
