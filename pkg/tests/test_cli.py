import json

import pytest

from ptbound import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    manifest, rows = {}, []
    header = None
    for line in text.strip().splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            manifest[key] = value
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return manifest, header, rows


S1_FLAGS = ["--family", "hyperbolic", "--V0", "10", "--A", "-20",
            "--B", "-30", "--kappa", "1"]
S4_FLAGS = ["--family", "trig", "--V0", "5", "--C", "-2", "--D", "2",
            "--a", "1"]


def test_spectrum_s1_both(capsys):
    code, out, _ = run(capsys, "spectrum", *S1_FLAGS, "--method", "both")
    assert code == 0
    manifest, header, rows = parse_csv(out)
    assert manifest["command"] == "spectrum"
    assert header == ["n", "E_dvr", "E_hofd"]
    assert len(rows) == 3
    expect = (-17.292792568552, -6.137201742096, -0.888027613576)
    for row, ref in zip(rows, expect):
        assert float(row[1]) == pytest.approx(ref, abs=1e-8)


def test_spectrum_count_zero(capsys):
    code, out, _ = run(capsys, "spectrum", *S4_FLAGS, "--method", "dvr",
                       "--count", "0")
    assert code == 0
    _, header, rows = parse_csv(out)
    assert header == ["n", "E_dvr"]
    assert rows == []


def test_spectrum_usage_error(capsys):
    code, _, _ = run(capsys, "spectrum", "--family", "hyperbolic",
                     "--V0", "10")  # missing A, B
    assert code == 2


def test_spectrum_unknown_flag(capsys):
    code, _, _ = run(capsys, "spectrum", *S1_FLAGS, "--bogus", "1")
    assert code == 2


def test_spectrum_determinism(capsys):
    def body(text):
        return [ln for ln in text.splitlines()
                if not ln.startswith("# generated=")]
    _, out1, _ = run(capsys, "spectrum", *S4_FLAGS, "--method", "dvr",
                     "--count", "4")
    _, out2, _ = run(capsys, "spectrum", *S4_FLAGS, "--method", "dvr",
                     "--count", "4")
    assert body(out1) == body(out2)


def test_spectrum_json_and_out_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    code, _, _ = run(capsys, "spectrum", *S4_FLAGS, "--method", "dvr",
                     "--count", "2", "--format", "json", "--out", str(path))
    assert code == 0
    payload = json.loads(path.read_text())
    assert payload["columns"] == ["n", "E_dvr"]
    assert payload["rows"][0][1] == pytest.approx(29.961374, abs=1e-4)


def test_wavefunction_metadata_and_columns(capsys):
    code, out, _ = run(capsys, "wavefunction", *S1_FLAGS,
                       "--states", "0", "--samples", "20")
    assert code == 0
    manifest, header, rows = parse_csv(out)
    assert header == ["kappa*x", "psi_0"]
    assert len(rows) == 20
    meta = json.loads(manifest["state_0"])
    assert meta["N"] == 0
    assert meta["coeffs"] == [1.0]
    assert meta["branch"] == "hyper"


def test_wavefunction_bad_state(capsys):
    code, _, err = run(capsys, "wavefunction", *S1_FLAGS, "--states", "7")
    assert code == 3
    assert "3" in err  # message names the bound count


def test_spd_grid(capsys):
    code, out, _ = run(capsys, "spd", "--V0", "10", "--kappa", "1",
                       "--A-min", "-20", "--A-max", "20",
                       "--B-min", "-30", "--B-max", "10",
                       "--resolution", "5")
    assert code == 0
    manifest, header, rows = parse_csv(out)
    assert header == ["A", "B", "phase"]
    assert len(rows) == 25
    assert manifest["rectangle_B_max"] == "0.125"
    by_node = {(float(a), float(b)): ph for a, b, ph in rows}
    assert by_node[(-20.0, -30.0)] == "B"
    for (a, b), ph in by_node.items():
        if a + b >= 0:
            assert ph != "B"


def test_verify_polys(capsys):
    code, out, _ = run(capsys, "verify", "polys")
    assert code == 0
    assert "ALL PASS" in out
