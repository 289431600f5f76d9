import io
import json
import subprocess
import sys

import pytest

from hsop.cli import main
from reference_data import MINIMAL, NUMERATOR_6_6_6_20, printed_grid


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(scope="module")
def septimic_listing():
    buf = io.StringIO()
    old, sys.stdout = sys.stdout, buf
    try:
        assert main(["enumerate", "--n", "7", "--workers", "1"]) == 0
    finally:
        sys.stdout = old
    return buf.getvalue()


def test_table_tsv_matches_printed_grid(capsys):
    code, out, _ = run(capsys, "table", "--n-max", "18", "--m-max", "18")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0][0] == "m\\n" and len(rows) == 19
    for (n, m), h in printed_grid().items():
        cell = rows[m][n]
        assert cell == ("." if h == 0 else str(h)), (n, m)


def test_numerator_text_and_json(capsys):
    code, out, _ = run(capsys, "numerator", "--n", "6", "--degrees", "6,6,6,20", "--machine")
    assert code == 0
    text, machine = out.splitlines()
    assert text == "1 + t^2 + 2*t^4 + t^8 + 2*t^12 + t^14 + t^15 + t^16 + t^17 + 2*t^19 + t^23 + 2*t^27 + t^29 + t^31"
    assert dict(map(int, kv.split(":")) for kv in machine.split(",")) == NUMERATOR_6_6_6_20

    code, out, _ = run(capsys, "numerator", "--n", "6", "--degrees", "6,6,6,20", "--json")
    record = json.loads(out)
    coeffs = [int(c) for c in record["coefficients"]]
    assert {e: c for e, c in enumerate(coeffs) if c} == NUMERATOR_6_6_6_20
    assert record["first_negative"] is None


def test_check_lines(capsys):
    code, out, _ = run(capsys, "check", "--n", "5", "--degrees", "4,4,6", "--assert")
    assert code == 3
    assert "mod 8: need 1, have 0, FAIL" in out.splitlines()
    assert "mod 4: need 2, have 2, OK" in out.splitlines()


def test_admissible_reports_rule(capsys):
    code, out, _ = run(capsys, "admissible", "--n", "6", "--degrees", "6,6,6,20")
    assert code == 0
    assert out.strip() == "6,6,6,20: rejected n6.no_three_in_2_6_17_21"
    code, out, _ = run(capsys, "admissible", "--n", "6", "--degrees", "6,6,6,20", "--assert", "--json")
    assert code == 3
    record = json.loads(out)
    assert record["admissible"] is False
    assert record["violations"][0]["rule"] == "n6.no_three_in_2_6_17_21"
    assert record["violations"][0]["witness"] == ["6", "6", "6"]


def test_minimal_witness(capsys):
    code, out, _ = run(capsys, "minimal", "--n", "5", "--degrees", "4,8,30")
    assert out.strip() == "4,8,30: reducible 30 = 12 + 18 via 4,8,12 and 4,8,18"
    code, out, _ = run(capsys, "minimal", "--n", "5", "--degrees", "4,8,30", "--json")
    w = json.loads(out)["witness"]
    assert w == {"degree": "30", "split": ["12", "18"], "sequences": [["4", "8", "12"], ["4", "8", "18"]]}


def test_enumerate_septimic_lines(septimic_listing):
    lines = septimic_listing.splitlines()
    assert len(lines) == 23
    assert {tuple(map(int, line.split(","))) for line in lines} == MINIMAL[7]
    assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split(","))))


def test_enumerate_round_trip(capsys, monkeypatch, septimic_listing):
    code, _, _ = run(capsys, "admissible", "--n", "7", "--assert", stdin=septimic_listing, monkeypatch=monkeypatch)
    assert code == 0
    code, out, _ = run(capsys, "minimal", "--n", "7", "--assert", stdin=septimic_listing, monkeypatch=monkeypatch)
    assert code == 0
    assert out.count(": minimal") == 23


def test_enumerate_shards_and_merge(capsys, tmp_path):
    files = []
    for i in range(3):
        code, out, _ = run(capsys, "enumerate", "--n", "6", "--shards", "3", "--shard", str(i))
        path = tmp_path / f"shard{i}.txt"
        path.write_text(out)
        files.append(str(path))
    code, merged, _ = run(capsys, "enumerate", "--n", "6", "--merge", *files)
    code, whole, _ = run(capsys, "enumerate", "--n", "6", "--workers", "1")
    assert merged == whole == "2,4,6,10\n2,4,6,15\n2,4,10,15\n"


def test_dims_and_poincare_json_parity(capsys):
    _, text, _ = run(capsys, "dims", "--n", "8", "--m", "14")
    _, js, _ = run(capsys, "dims", "--n", "8", "--m", "14", "--json")
    assert text.strip() == "31" == json.loads(js)["dim"]

    _, text, _ = run(capsys, "poincare", "--n", "5", "--order", "12", "--machine")
    _, js, _ = run(capsys, "poincare", "--n", "5", "--order", "12", "--json")
    first, machine = text.splitlines()
    assert first == "1 + t^4 + 2*t^8 + 3*t^12 + O(t^13)"
    coeffs = json.loads(js)["coefficients"]
    assert machine == ",".join(f"{e}:{c}" for e, c in enumerate(coeffs) if c != "0")


def test_table_json_parity(capsys):
    _, text, _ = run(capsys, "table", "--n-max", "6", "--m-max", "6")
    _, js, _ = run(capsys, "table", "--n-max", "6", "--m-max", "6", "--json")
    rows = [json.loads(line) for line in js.splitlines()]
    for line, record in zip(text.splitlines()[1:], rows):
        m, *cells = line.split("\t")
        assert record["m"] == m
        assert record["h"] == ["0" if c == "." else c for c in cells]


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--lower", "4", "--upper", "4", "--assert")
    assert code == 0
    assert out.strip() == "# checked 1 sequences, 0 with negative numerator"


def test_form_commands(capsys):
    _, out, _ = run(capsys, "transvect", "--form", "2: 1,0,1", "--k", "2")
    assert out.strip() == "2"
    _, out, _ = run(capsys, "transvect", "--form", "2: 1,0,0", "--form2", "2: 0,0,1", "--k", "0")
    assert out.strip() == "x^2*y^2"
    code, out, _ = run(capsys, "nullform", "--form", "4: 0,1,0,0,0", "--assert")
    assert code == 0 and out.startswith("nullform")
    code, out, _ = run(capsys, "nullform", "--form", "4: 0,0,1,0,0", "--assert", "--json")
    assert code == 3 and json.loads(out)["max_multiplicity"] == "2"


def test_eval_invariant(capsys):
    _, out, _ = run(capsys, "eval-invariant", "--form", "4: 1,0,0,0,1", "--chain", "n4.i")
    _, again, _ = run(capsys, "eval-invariant", "--form", "4: 1,0,0,0,1", "--expr", "(f,f)_4")
    assert out == again and out.strip() == "2"
    _, out, _ = run(capsys, "eval-invariant", "--list")
    assert "n7.deg12" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["numerator", "--n", "6", "--degrees", "1,2"],
        ["admissible", "--n", "9", "--degrees", "4,4,4,4,4,4,4"],
        ["transvect", "--form", "2: 1,0", "--k", "1"],
        ["eval-invariant", "--form", "4: 1,0,0,0,1", "--chain", "nope"],
        ["eval-invariant", "--form", "4: 1,0,0,0,1", "--expr", "(f,f"],
        ["enumerate", "--n", "6", "--shard", "1"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("hsop: error:") and err.count("\n") == 1


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["table", "--n-max", "x"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hsop", "dims", "--n", "6", "--m", "15"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"


def test_internal_inconsistency_exit_four(capsys, monkeypatch):
    from hsop import cli
    from hsop.errors import NotPolynomial

    def broken(*args, **kwargs):
        raise NotPolynomial("remainder after division")

    monkeypatch.setattr(cli, "hsop_numerator", broken)
    code, _, err = run(capsys, "numerator", "--n", "6", "--degrees", "6,6,6,20")
    assert code == 4 and "internal inconsistency" in err
