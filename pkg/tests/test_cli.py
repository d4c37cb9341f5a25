import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from artifact.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, run

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def schema(name):
    return json.loads((SCHEMAS / name).read_text())


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    doc = json.loads(out)
    jsonschema.validate(doc, schema("output_document.schema.json"))
    return code, doc


def test_parabolic_max_json():
    code, doc = call_json("parabolic", "max", "--form", "E6(6)")
    assert code == EXIT_OK
    jsonschema.validate(doc["payload"], schema("parabolic_max.schema.json"))
    rows = doc["payload"]["parabolics"]
    assert len(rows) == 6
    assert {"form": "E6(6)", "node": 1, "levi": ["so(5,5)"], "abelian_rank": 0, "dim_n": 16,
            "grading": {"-1": 16, "0": 46, "1": 16}} in rows


def test_alias_spelling():
    _, a = call_json("parabolic", "max", "--form", "EI", "--node", "1")
    _, b = call_json("parabolic", "max", "--form", "E6(6)", "--node", "1")
    assert a == b


def test_related_enumerate_table():
    code, out, _ = call("related", "enumerate", "--max", "--format", "table")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 2 + 14


def test_related_enumerate_schema():
    _, doc = call_json("related", "enumerate")
    jsonschema.validate(doc["payload"], schema("related_enumerate.schema.json"))


def test_related_check():
    code, doc = call_json("related", "check", "--form1", "E7(-25)", "--node1", "3",
                          "--form2", "E7(7)", "--node2", "6")
    assert code == EXIT_OK and doc["payload"]["related"] is True


def test_csv_output():
    code, out, _ = call("realform", "list", "--format", "csv")
    assert code == EXIT_OK
    lines = out.strip().splitlines()
    assert lines[0].startswith("label,alias,type")
    assert len(lines) == 13


def test_registry_dump_validates():
    _, doc = call_json("dump-registry")
    jsonschema.validate(doc["payload"], schema("registry.schema.json"))
    _, doc2 = call_json("realform", "dump-registry")
    assert doc["payload"] == doc2["payload"]
    assert doc["registry_hash"] == doc2["registry_hash"]


def test_other_commands():
    assert call_json("algebra", "table", "--label", "O")[1]["payload"]["dim"] == 8
    assert call_json("roots", "info", "--type", "E7")[1]["payload"]["roots"] == 126
    assert call_json("realform", "restricted", "--form", "F4(-20)")[1]["payload"]["reduced_type"] == "BC1"
    assert call_json("realform", "info", "--form", "EIV")[1]["payload"]["dim_m0"] == 28
    assert call_json("jordan", "norm", "--algebra", "R", "--coords", "2/3")[1]["payload"]["norm"] == "8/27"
    assert call_json("symmetry", "report", "--algebra", "J3(R)")[1]["payload"]["dim_qconf"] == 52
    code, doc = call_json("interpret", "--label", "E6(-26)")
    assert code == EXIT_OK and doc["payload"]["roles"][0]["expression"] == "str0(J3(O))"
    assert call_json("parabolic", "all", "--form", "G2(2)")[1]["payload"]["count"] == 4
    assert call_json("fts", "quartic", "--algebra", "J3(R)", "--coords", "1,2" + ",0" * 12)[1]["payload"][
        "quartic"] == "-4"
    code, doc = call_json("jordan", "check", "--algebra", "J3(C)", "--trials", "5", "--seed", "3")
    assert code == EXIT_OK and doc["payload"]["trials"] == 5


@pytest.mark.parametrize("argv", [
    [], ["nope"], ["parabolic", "max"], ["parabolic", "max", "--form", "E9(9)"],
    ["parabolic", "max", "--form", "E6(6)", "--node", "9"], ["roots", "info", "--type", "Q3"],
    ["jordan", "norm", "--algebra", "J3(R)", "--coords", "1,2"], ["fts", "check", "--algebra", "J12(O)"],
    ["verify-all", "--only", "nosuch"], ["--format", "xml", "dump-registry"],
    ["interpret", "--label", "so(17)"],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_verify_all_subset_schema():
    code, doc = call_json("verify-all", "--only", "roots,realform", "--seed", "7")
    assert code == EXIT_OK
    jsonschema.validate(doc["payload"], schema("verify_all.schema.json"))
    assert set(doc["payload"]["suites"]) == {"roots", "realform"}


def test_corrupted_registry_fails_naming_the_form(tmp_path):
    _, doc = call_json("dump-registry")
    data = doc["payload"]
    for f in data["forms"]:
        if f["label"] == "E7(-25)":
            f["dim_Npm"] = 50
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    proc = subprocess.run([sys.executable, "-m", "artifact", "verify-all", "--only", "realform",
                           "--registry", str(path)], capture_output=True, text=True)
    assert proc.returncode == EXIT_MISMATCH
    assert "E7(-25)" in proc.stderr
    report = json.loads(proc.stdout)
    assert report["payload"]["failed"] == ["realform:E7(-25):multiplicity_sum"]
    assert report["registry_hash"] != doc["registry_hash"]


def test_registry_wrapped_and_malformed(tmp_path):
    _, doc = call_json("dump-registry")
    good = tmp_path / "good.json"
    good.write_text(json.dumps(doc))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"forms": [{"label": "X"}], "max_parabolics": {}, "long_short": {},
                               "gradings": {}, "table_a": [], "table_b": {}, "schema_version": "1.0"}))
    for path, code in ((good, EXIT_OK), (bad, EXIT_USAGE)):
        proc = subprocess.run([sys.executable, "-m", "artifact", "verify-all", "--only", "roots",
                               "--registry", str(path)], capture_output=True, text=True)
        assert proc.returncode == code, proc.stderr
        assert "Traceback" not in proc.stderr
