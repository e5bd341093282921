import json

import pytest

from rslist.bench import CSV_COLUMNS, read_csv
from rslist.cli import EXIT_DECODE_FAILURE, EXIT_FAULT, FAILURE_MARKER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def kv(text):
    return dict(line.split("=", 1) for line in text.strip().splitlines())


def test_encode_decode_round_trip(capsys):
    code, out, _ = run(capsys, "encode", "--n", "6", "--k", "3", "--message", "5,2,6")
    assert code == 0
    word = out.strip()
    code, out, _ = run(capsys, "corrupt", "--word", word, "--errors", "1", "--seed", "3")
    bad = out.strip()
    assert sum(a != b for a, b in zip(word.split(","), bad.split(","))) == 1
    code, out, _ = run(capsys, "decode", "--n", "6", "--k", "3", "--word", bad)
    rec = kv(out)
    assert code == 0 and rec["status"] == "ok" and rec["message"] == "5,2,6"
    assert rec["distance"] == "1"


def test_corrupt_deterministic(capsys):
    args = ("corrupt", "--word", "0,0,0,0,0,0,0", "--errors", "3", "--seed", "11")
    first = run(capsys, *args)[1]
    assert run(capsys, *args)[1] == first
    assert sum(s != "0" for s in first.strip().split(",")) == 3


def test_list_decode_ref_word(capsys):
    code, out, _ = run(capsys, "decode", "--n", "6", "--k", "3", "--mult", "2", "--word", "6,2,4,4,4,2")
    rec = kv(out)
    assert code == 0
    assert rec["l"] == "3" and rec["w"] == "7" and rec["guarantee_radius"] == "2"
    msgs = {rec[f"candidate.{i}.message"] for i in range(int(rec["candidates"]))}
    assert {"1,3,4", "5,2,6"} <= msgs


def test_json_output(capsys):
    code, out, _ = run(capsys, "decode", "--n", "6", "--k", "3", "--mult", "2", "--json",
                       "--word", "6,2,4,4,4,2")
    data = json.loads(out)
    assert code == 0 and data["status"] == "ok"
    assert len(data["Q"]) == 4
    assert [1, 3, 4] in [c["message"] for c in data["candidates"]]
    code, out, _ = run(capsys, "decode", "--n", "6", "--k", "3", "--json", "--word", "0,0,0,0,0,0")
    assert json.loads(out)["message"] == [0, 0, 0]


def test_worked_example(capsys):
    code, out, _ = run(capsys, "worked-example")
    assert code == 0
    assert "match=true" in out
    assert "FAIL" not in out


def test_decode_failure_exit(capsys):
    # distance 2 from every codeword of RS(6,3) over GF(7), beyond tau = 1
    code, out, _ = run(capsys, "decode", "--n", "6", "--k", "3", "--word", "6,2,4,4,4,2")
    assert code == EXIT_DECODE_FAILURE
    assert kv(out)["status"] == FAILURE_MARKER


def test_faults_exit_one(capsys):
    assert run(capsys, "decode", "--n", "6", "--k", "1", "--word", "0,0,0,0,0,0")[0] == EXIT_FAULT
    assert run(capsys, "decode", "--n", "6", "--k", "3", "--word", "0,0,0")[0] == EXIT_FAULT
    assert run(capsys, "encode", "--field", "6", "--n", "4", "--k", "2", "--message", "1")[0] == EXIT_FAULT
    with pytest.raises(SystemExit) as exc:
        main(["decode", "--n", "six"])
    assert exc.value.code == EXIT_FAULT


def test_bench_csv_and_plot(capsys, tmp_path):
    out_csv = tmp_path / "bench.csv"
    png = tmp_path / "bench.png"
    code, _, _ = run(capsys, "bench", "--n", "8,12", "--m", "1,2", "--out", str(out_csv),
                     "--plot", str(png))
    assert code == 0
    text = out_csv.read_text()
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    rows = read_csv(text)
    assert len(rows) == 4 and all(r.mult_count > 0 for r in rows)
    assert png.exists() and png.stat().st_size > 0


def test_extension_field_round_trip(capsys):
    _, word, _ = run(capsys, "encode", "--field", "2^3", "--n", "7", "--k", "3", "--message", "3,0,5")
    bad = word.strip().split(",")
    bad[0] = str(int(bad[0]) ^ 1)
    bad[5] = str(int(bad[5]) ^ 6)
    code, out, _ = run(capsys, "decode", "--field", "2^3", "--n", "7", "--k", "3", "--word", ",".join(bad))
    assert code == 0 and kv(out)["message"] == "3,0,5"
