from __future__ import annotations

import json

import pytest

from curvecodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hecke_example(capsys):
    code, out, _ = run(capsys, "hecke", "--N", "11", "--p", "3")
    assert code == 0
    assert out == "Tr(T_3) = -1 (count) = -1 (eta)\n"


def test_weights_example(capsys):
    code, out, _ = run(
        capsys, "weights", "--level", "19", "--p", "13", "--a", "2",
        "--convention", "table2",
    )
    assert code == 0
    assert out == "x^17+96x^2+12x+60\n"


def test_weights_a3_matches_printed_row(capsys):
    _, out, _ = run(
        capsys, "weights", "--level", "19", "--p", "13", "--a", "3",
        "--convention", "table2",
    )
    assert out == "x^17+456x^3+264x^2+960x+516\n"


def test_points_example(capsys):
    code, out, _ = run(capsys, "points", "--level", "19", "--p", "13")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "[0, 0]"
    assert lines[-2] == "inf"
    assert lines[-1] == "count: 18"
    assert len(lines) == 19


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "weights", "--family", "xpx", "--p", "7", "--a", "4",
                      "--convention", "plain", "--json")
    _, second, _ = run(capsys, "weights", "--family", "xpx", "--p", "7", "--a", "4",
                       "--convention", "plain", "--json")
    assert first == second
    body = json.loads(first)
    assert body["polynomial"] == "1+126x^5+84x^6+132x^7"
    assert body["schema"] == 1


def test_parallel_matches_serial_output(capsys):
    _, serial, _ = run(capsys, "weights", "--level", "19", "--p", "13", "--a", "5")
    _, parallel, _ = run(capsys, "weights", "--level", "19", "--p", "13", "--a", "5",
                         "--jobs", "2")
    assert serial == parallel


def test_genus_output(capsys):
    code, out, _ = run(capsys, "genus", "--N", "36")
    assert code == 0
    assert out == "N=36 mu=72 mu2=0 mu3=0 mu_inf=12 genus=1\n"


def test_model_output(capsys):
    code, out, _ = run(capsys, "model", "--level", "11")
    assert code == 0
    assert "y^2 + y = x^3 - x^2" in out
    assert "discriminant: -11" in out


def test_bounds_csv(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "49", "--grid", "100")
    lines = out.strip().splitlines()
    assert lines[0] == "delta,gv,tvz"
    assert len(lines) == 102
    assert lines[1].startswith("0.0,1.0,")


def test_bounds_csv_with_prop7(capsys):
    _, out, _ = run(capsys, "bounds", "--q", "49", "--grid", "100", "--genus", "1", "--n", "17")
    assert out.splitlines()[0] == "delta,gv,tvz,prop7"


def test_bounds_grid_below_floor_is_usage_error(capsys):
    code, _, err = run(capsys, "bounds", "--q", "49", "--grid", "10")
    assert code == 2


def test_qseries_eta_flag(capsys):
    code, out, _ = run(capsys, "qseries", "--which", "eta", "--M", "8",
                       "--eta-spec", "1:2,11:2")
    assert code == 0
    assert out.splitlines()[0] == "1*q + -2*q^2 + -1*q^3 + 2*q^4 + 1*q^5 + 2*q^6 + -2*q^7"


def test_domain_error_exit_1(capsys):
    code, _, err = run(capsys, "points", "--level", "23", "--p", "5")
    assert code == 1
    assert "NoModelForLevel" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["weights", "--level", "19", "--p", "13"])  # missing --a
    assert exc.value.code == 2


def test_bad_eta_spec_exit_2(capsys):
    code, _, err = run(capsys, "qseries", "--which", "eta", "--M", "8",
                       "--eta-spec", "1:2,oops")
    assert code == 2
    assert "scale:exponent" in err


def test_conic_example_subcommand(capsys):
    code, out, _ = run(capsys, "conic-example")
    assert code == 0
    assert "ERRATUM" in out and "rank 5" in out


def test_reproduce_only_section(capsys):
    code, out, _ = run(capsys, "reproduce", "--only", "qseries")
    assert code == 0
    assert "overall: PASS" in out


def test_code_json_matrices(capsys):
    code, out, _ = run(capsys, "code", "--family", "xpx", "--p", "7", "--a", "2",
                       "--show-matrices", "--json")
    body = json.loads(out)
    assert body["mds"] is True
    assert body["systematic"][0][:2] == [1, 0]
