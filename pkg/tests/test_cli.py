import io
import json

import pytest

from divdelta import cli


def run_lines(argv):
    buf = io.StringIO()
    report = cli.execute(argv, out=buf)
    return report, buf.getvalue()


def test_check_24_golden():
    report, text = run_lines(["check", "24"])
    assert text == '{"n": 24, "member": true, "triples": [[2, 3, 3]], "primitive": true}\n'
    assert report.exit_code == 0 and report.command == "check"


def test_classify_12_golden():
    _, text = run_lines(["classify", "12"])
    payload = json.loads(text)
    assert payload["n"] == 12 and payload["member"] is False
    assert payload["rule"] == "TwoPrimesLowExp"


def test_triples_and_primitive():
    _, text = run_lines(["triples", "385"])
    assert json.loads(text)["triples"] == [[5, 7, 11], [7, 11, 11]]
    _, text = run_lines(["primitive", "5616"])
    payload = json.loads(text)
    assert payload["decompositions"] == [[3, 624], [2, 1404]]
    assert payload["member"] is True and payload["primitive"] is False


def test_enumerate_json_and_filters():
    _, text = run_lines(["enumerate", "--max", "150"])
    payload = json.loads(text)
    assert [r["n"] for r in payload["rows"]][:5] == [24, 40, 60, 84, 96]
    _, text = run_lines(["enumerate", "--max", "200", "--odd-only"])
    assert [r["n"] for r in json.loads(text)["rows"]] == [105]
    _, text = run_lines(["enumerate", "--max", "1000", "--squares-only"])
    assert [r["n"] for r in json.loads(text)["rows"]] == [900]
    _, text = run_lines(["enumerate", "--max", "150", "--primitive-only"])
    assert [r["n"] for r in json.loads(text)["rows"]] == [24, 40, 60, 84, 105, 120]


def test_enumerate_csv():
    _, text = run_lines(["enumerate", "--max", "100", "--format", "csv"])
    lines = text.splitlines()
    assert lines[0] == "n,member,primitive,tau,squarefreePart"
    assert lines[1] == "24,true,true,8,6"
    assert lines[2] == "40,true,true,8,10"
    assert lines[3] == "60,true,true,12,15"
    assert lines[4] == "84,true,true,12,21"
    assert lines[5] == "96,true,false,12,6"


def test_enumerate_streams_jsonl_past_threshold():
    _, text = run_lines(["enumerate", "--max", "100001"])
    first = json.loads(text.splitlines()[0])
    assert first["n"] == 24 and first["member"] is True  # one object per line


def test_family_commands():
    _, text = run_lines(["family", "--a", "1", "--b", "0", "--c", "-1", "--count", "3"])
    payload = json.loads(text)
    assert payload["alpha"] == 3 and payload["beta"] == -2 and payload["n0"] == 2
    assert payload["members"] == [[2, 24], [3, 105], [4, 280]]
    _, text = run_lines(["family", "--a", "1", "--b", "0", "--c", "-1", "--square-scan", "500"])
    assert json.loads(text)["squares"] == []


def test_realize_json_golden():
    _, text = run_lines(["realize", "2", "3", "3", "--da", "3"])
    payload = json.loads(text)
    assert payload["n"] == 24 and payload["kSize"] == 18
    assert payload["degrees"] == {"a": 3, "b": 8, "c": 13}
    assert payload["eta"] == {"ab": 0, "bc": 5, "ac": 1, "abc": 0}
    assert payload["triangleType"] == "0" and payload["balanced"] is True


def test_realize_dot():
    _, text = run_lines(["realize", "2", "3", "3", "--da", "3", "--format", "dot"])
    assert text.startswith("graph split {")
    assert '"a" [shape=circle, label="a (d=3)"];' in text


def test_realize_all_active():
    _, text = run_lines(["realize", "2", "3", "3", "--all-active"])
    payload = json.loads(text)
    assert [r["da"] for r in payload["realizations"]] == [3, 4, 5]


def test_verify_exit_zero():
    report, text = run_lines(["verify", "--suite", "graphs", "--max", "1000"])
    assert report.exit_code == 0
    line = json.loads(text.splitlines()[0])
    assert line["suite"] == "graphs" and line["ok"] is True


def test_output_is_byte_stable():
    _, first = run_lines(["enumerate", "--max", "2000"])
    _, second = run_lines(["enumerate", "--max", "2000"])
    assert first == second
    _, first = run_lines(["realize", "4", "5", "5"])
    _, second = run_lines(["realize", "4", "5", "5"])
    assert first == second


def test_usage_errors_exit_two():
    assert cli.run(["check", "0"]) == 2
    assert cli.run(["check", "1"]) == 2
    assert cli.run(["family", "--a", "1", "--b", "0", "--c", "5"]) == 2
    assert cli.run(["realize", "2", "4", "4"]) == 2
    with pytest.raises(SystemExit) as err:
        cli.run(["frobnicate"])
    assert err.value.code == 2
