import json
import math

import pytest

from sfirate.cli import main
from sfirate.io import SCHEMA_VERSION, from_csv, to_csv
from sfirate.limits import LIMIT_NAMES


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def record(text):
    table = from_csv(text)
    assert len(table.rows) == 1
    return dict(zip(table.columns, table.rows[0]))


def test_rate_gamma_values(capsys):
    code, out, _ = run(capsys, "rate", "--intensity", "1e13")
    rec = record(out)
    assert code == 0
    assert rec["gamma"] == pytest.approx(3.3740, abs=1e-4)
    for key in ("omega", "f0", "gamma", "up", "alpha", "beta", "f", "log_rate"):
        assert key in rec
    _, out, _ = run(capsys, "rate", "--intensity", "6e14")
    assert record(out)["gamma"] == pytest.approx(0.4357, abs=5e-4)


def test_rate_parity(capsys):
    _, a, _ = run(capsys, "rate", "--kpar", "0.3", "--kperp", "0")
    _, b, _ = run(capsys, "rate", "--kpar=-0.3", "--kperp", "0")
    assert record(a)["f"] == record(b)["f"]


def test_rate_phase_and_linear(capsys):
    _, out, _ = run(capsys, "rate", "--intensity", "6e14", "--phi", "0.2", "--linear")
    rec = record(out)
    assert rec["k_par_eff"] == pytest.approx(math.sqrt(6e14 / 3.50944506e16) / rec["omega"] * math.sin(0.2))
    assert rec["rate"] == pytest.approx(math.exp(rec["log_rate"]))


def test_ip_in_ev(capsys):
    _, out, _ = run(capsys, "rate", "--ip-ev", "27.211386")
    assert record(out)["ip"] == pytest.approx(1.0)


@pytest.mark.parametrize(
    "argv",
    [
        ("rate", "--intensity", "-1"),
        ("rate", "--wavelength-nm", "0"),
        ("rate", "--ip-au", "0"),
        ("spectrum", "--n-par", "1"),
        ("phase-scan", "--n-phi", "1"),
        ("cut", "--n", "1"),
        ("cutoff", "--n-energy", "2"),
        ("oracle-check", "--n-points", "0"),
    ],
)
def test_bad_parameters_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("error:")


def test_unwritable_output_exit_3(capsys, tmp_path):
    code, _, err = run(capsys, "rate", "--output", str(tmp_path / "missing" / "x.csv"))
    assert code == 3
    assert "cannot write" in err


def test_csv_round_trip_is_byte_identical(capsys):
    _, out, _ = run(capsys, "phase-scan", "--intensity", "6e14", "--n-phi", "31")
    assert to_csv(from_csv(out)) == out
    assert out.startswith(f"# schema_version={SCHEMA_VERSION}\n")
    assert "\r" not in out


def test_json_schema(capsys):
    _, out, _ = run(capsys, "cut", "--format", "json", "--n", "5")
    doc = json.loads(out)
    assert doc["schema_version"] == SCHEMA_VERSION
    assert doc["kind"] == "parallel_cut"
    assert doc["columns"][-1] == "log_ratio"
    assert len(doc["rows"]) == 5
    assert doc["metadata"]["wavelength_nm"] == 800.0


def test_output_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SFIRATE_OUTPUT_DIR", str(tmp_path))
    code, out, _ = run(capsys, "cut", "--n", "4")
    assert code == 0 and out == ""
    assert (tmp_path / "cut.csv").read_text().startswith("# schema_version=")


def test_limits_table(capsys):
    code, out, _ = run(capsys, "limits", "--intensity", "6e14")
    table = from_csv(out)
    assert code == 0
    assert [r[0] for r in table.rows] == list(LIMIT_NAMES)
    status = dict((r[0], r[-1]) for r in table.rows)
    assert all(s == "ok" for s in status.values())


def test_limits_with_fixed_momentum_marks_undefined(capsys):
    _, out, _ = run(capsys, "limits", "--kpar", "0.2")
    status = {r[0]: r[-1] for r in from_csv(out).rows}
    assert status["keldysh"].startswith("undefined")
    assert status["corkum"] == "ok"


def test_cutoff_warns_outside_regime(capsys):
    code, out, err = run(capsys, "cutoff", "--intensity", "1e13")
    assert code == 0
    assert "tunneling regime" in err
    assert record(out)["in_regime"] is False


def test_cutoff_reports_ratio(capsys):
    _, out, _ = run(capsys, "cutoff", "--intensity", "6e14")
    rec = record(out)
    assert rec["ratio_to_up"] == pytest.approx(rec["cutoff_energy"] / rec["up"])
    assert rec["in_regime"] is True


def test_oracle_check_small(capsys):
    code, out, _ = run(capsys, "oracle-check", "--n-points", "10")
    rec = record(out)
    assert code == 0
    assert rec["passed"] is True
    assert rec["max_rel_dev"] < 1e-6
