"""Command-line surface: parsing, payloads, exit codes, output formats."""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from galois_arrow.errors import InvariantViolation, UsageError
from galois_arrow import cli


def _run(argv, threads=None, monkeypatch=None):
    if threads is not None and monkeypatch is not None:
        monkeypatch.setenv("GALOIS_ARROW_THREADS", str(threads))
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


# --- parsing -------------------------------------------------------------------

def test_parse_arrow_arc_defaults():
    cfg = cli.parse_args(["arrow", "--n", "3", "--mode", "arc"])
    assert cfg.command == "arrow" and cfg.mode == "arc"
    assert (cfg.p, cfg.n) == (2, 3)
    assert cfg.linf == (1, 1, 1)
    assert cfg.lstar == (1, 2, 0)   # gamma is the class of x
    assert cfg.output == "json" and not cfg.exhaustive


def test_parse_family_q2_is_rejected():
    with pytest.raises(UsageError):
        cli.parse_args(["family", "--n", "1"])


def test_parse_pencil_csv():
    cfg = cli.parse_args(["pencil", "--n", "2", "--output", "csv"])
    assert cfg.command == "pencil" and cfg.output == "csv"
    assert cfg.p ** cfg.n == 4


def test_parse_rejects_unknown_flag():
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--n", "3", "--frobnicate"])


def test_parse_rejects_unknown_command():
    with pytest.raises(UsageError):
        cli.parse_args(["teleport", "--n", "3"])


def test_parse_rejects_malformed_triples():
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--n", "3", "--linf", "1,1"])
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--n", "3", "--linf", "1,1,one"])
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--n", "3", "--linf", "0,0,0"])
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--n", "2", "--linf", "1,9,1"])


def test_parse_rejects_odd_characteristic_for_char2_commands():
    with pytest.raises(UsageError):
        cli.parse_args(["arrow", "--p", "3", "--n", "1"])
    with pytest.raises(UsageError):
        cli.parse_args(["family", "--p", "3", "--n", "2"])


def test_parse_rejects_csv_for_point_listings():
    with pytest.raises(UsageError):
        cli.parse_args(["plane", "--n", "2", "--output", "csv"])


def test_parse_modulus_flags():
    cfg_hex = cli.parse_args(["field-info", "--n", "3", "--modulus", "0xB"])
    cfg_list = cli.parse_args(["field-info", "--n", "3", "--modulus", "1,1,0,1"])
    assert cfg_hex.modulus == cfg_list.modulus == (1, 1, 0, 1)
    with pytest.raises(UsageError):
        cli.parse_args(["field-info", "--n", "3", "--modulus", "0xZZ"])


# --- running --------------------------------------------------------------------

def test_run_arrow_arc_q8():
    code, out, err = _run(["arrow", "--n", "3", "--mode", "arc"])
    assert code == 0 and not err
    payload = json.loads(out)
    assert payload["tallies"] == {"past": 2, "present": 1, "future": 4}


def test_run_arrow_conic_q8_lacks_present():
    code, out, _ = _run(["arrow", "--n", "3", "--mode", "conic"])
    assert code == 0
    payload = json.loads(out)
    assert payload["tallies"]["present"] == 0
    assert payload["tallies"] == {"past": 3, "present": 0, "future": 4}


def test_run_plane_q4_lists_21_points():
    code, out, _ = _run(["plane", "--n", "2"])
    assert code == 0
    payload = json.loads(out)
    assert payload["num_points"] == 21
    assert len(payload["points"]) == 21
    assert payload["points"][0] == "(1:0:0)"


def test_run_field_info_reports_modulus():
    code, out, _ = _run(["field-info", "--n", "3"])
    payload = json.loads(out)
    assert code == 0
    assert payload["modulus"] == [1, 1, 0, 1]
    assert payload["modulus_hex"] == "0xb"
    assert payload["q"] == 8


def test_run_conic_includes_nucleus_only_for_even_q():
    _, out, _ = _run(["conic", "--n", "2"])
    assert json.loads(out)["nucleus"] == "(0:0:1)"
    _, out3, _ = _run(["conic", "--p", "3"])
    assert json.loads(out3)["nucleus"] is None


def test_run_pencil_census_json():
    code, out, _ = _run(["pencil", "--n", "3"])
    payload = json.loads(out)
    assert code == 0
    classes = [m["class"] for m in payload["members"]]
    assert classes[0] == "RealLinePair" and classes[-1] == "DoubleLine"
    assert classes.count("Proper") == 7
    assert payload["common_nucleus"] == "(0:0:1)"


def test_run_family_json_schema():
    code, out, _ = _run(["family", "--n", "3"])
    payload = json.loads(out)
    assert code == 0
    assert payload["q"] == 8
    assert len(payload["members"]) == 7
    assert all(m["is_conic"] is False for m in payload["members"])


def test_run_rejected_configuration_exits_2():
    code, out, err = _run(["family", "--n", "3", "--linf", "1,0,0"])
    assert code == 2 and not out
    diagnostic = json.loads(err.strip())
    assert diagnostic["error"] == "InvalidIdealLine"
    assert "\n" not in err.strip()


def test_run_degenerate_contact_point_exits_2():
    code, _, err = _run(["family", "--n", "3", "--lstar", "1,1,0"])
    assert code == 2
    assert json.loads(err.strip())["error"] == "DegenerateContactPoint"


def test_usage_error_exits_2():
    code, out, err = _run(["family", "--n", "1"])
    assert code == 2 and not out
    assert json.loads(err.strip())["error"] == "UsageError"


def test_invariant_violation_exits_3(monkeypatch):
    def boom(config):
        raise InvariantViolation("forced for the exit-code contract")
    monkeypatch.setattr(cli, "_execute", boom)
    code, _, err = _run(["arrow", "--n", "3"])
    assert code == 3
    assert json.loads(err.strip())["error"] == "InvariantViolation"


def test_csv_arrow_rows():
    code, out, _ = _run(["arrow", "--n", "3", "--mode", "arc", "--output", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "q,mode,member_id,theta,class"
    assert len(lines) == 1 + 7
    assert all(line.startswith("8,arc,") for line in lines[1:])
    classes = [line.split(",")[-1] for line in lines[1:]]
    assert classes.count("Present") == 1


def test_csv_pencil_rows():
    code, out, _ = _run(["pencil", "--n", "2", "--output", "csv"])
    lines = out.strip().split("\n")
    assert lines[0] == "q,member_id,theta,class"
    assert len(lines) == 1 + 5


def test_json_output_round_trips():
    for argv in (["arrow", "--n", "2", "--mode", "arc"],
                 ["arrow", "--n", "2", "--mode", "conic"],
                 ["family", "--n", "2"],
                 ["pencil", "--n", "2"]):
        _, out, _ = _run(argv)
        payload = json.loads(out)
        assert json.loads(json.dumps(payload)) == payload


def test_exhaustive_arc_summary_q4():
    code, out, _ = _run(["arrow", "--n", "2", "--mode", "arc", "--exhaustive"])
    assert code == 0
    payload = json.loads(out)
    assert payload["summary"]["total_configurations"] == 9 * 3
    assert payload["summary"]["valid"] + payload["summary"]["rejected"] == 27
    assert set(payload["summary"]["tally_distribution"]) == {"0:1:2"}


def test_exhaustive_conic_q4_has_no_rejections():
    _, out, _ = _run(["arrow", "--n", "2", "--mode", "conic", "--exhaustive"])
    payload = json.loads(out)
    assert payload["summary"]["rejected"] == 0
    assert payload["summary"]["valid"] == 9
    assert set(payload["summary"]["tally_distribution"]) == {"1:0:2"}


def test_exhaustive_deterministic_across_thread_caps(monkeypatch):
    runs = []
    for threads in (1, 8, 1):
        _, out, _ = _run(["arrow", "--n", "2", "--mode", "arc", "--exhaustive"],
                         threads=threads, monkeypatch=monkeypatch)
        runs.append(out)
    assert runs[0] == runs[1] == runs[2]


def test_bad_thread_env_is_a_usage_error(monkeypatch):
    monkeypatch.setenv("GALOIS_ARROW_THREADS", "many")
    with pytest.raises(UsageError):
        cli._thread_count()


def test_csv_exhaustive_includes_configuration_columns():
    code, out, _ = _run(["arrow", "--n", "2", "--mode", "arc", "--exhaustive",
                         "--output", "csv"])
    lines = out.strip().split("\n")
    assert lines[0] == "q,mode,linf,lstar,member_id,theta,class"
    # 18 valid configurations, 3 members each
    assert len(lines) == 1 + 18 * 3
