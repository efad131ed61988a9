import json
import os

import pytest

from anncat.cli import main

HERE = os.path.dirname(__file__)
FIX = os.path.join(HERE, "..", "fixtures")


def fixture(name):
    return os.path.join(FIX, name)


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main([*argv, "--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def strip_timing(path):
    doc = json.loads(open(path).read())
    doc.pop("timing", None)
    return json.dumps(doc, indent=2)


def test_validate_strict(tmp_path):
    code, rep = run(tmp_path, "validate", fixture("strict_z4.json"))
    assert code == 0
    assert rep["jobs"][0]["status"] == "pass"


def test_validate_bad_lambda(tmp_path):
    code, rep = run(tmp_path, "validate", fixture("bad_lambda_z2.json"))
    assert code == 1
    fams = rep["jobs"][0]["presentations"][0]["report"]["families"]
    bad = {f["name"]: f for f in fams if not f["passed"]}
    assert bad["Ann-2 L^{AB} vs L^A L^B"]["witness"] == [1, 1, 1, 1]


def test_malformed_table_names_field(tmp_path, capsys):
    doc = {"rings": {"Z2": {"zn": 2}}, "modules": {"M": {"ring": "Z2", "zn": 2}},
           "presentations": {"P": {"ring": "Z2", "module": "M", "lam": [[0, 0], [0, 0]]}}}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    assert main(["validate", str(p)]) == 2
    assert "presentations.P.lam" in capsys.readouterr().err


def test_parse_error_has_line(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{\n  "rings": {\n    "Z2": {"zn": 2},\n  }\n}\n')
    assert main(["validate", str(p)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_unresolved_reference(tmp_path, capsys):
    p = tmp_path / "ref.json"
    p.write_text(json.dumps({"modules": {"M": {"ring": "nope", "zn": 2}}}))
    assert main(["validate", str(p)]) == 2
    assert "modules.M.ring" in capsys.readouterr().err


def test_dual_strict_and_reduction(tmp_path):
    code, rep = run(tmp_path, "dual", fixture("strict_z4.json"), "--functor", "id")
    assert code == 0 and rep["jobs"][0]["object_count"] == 4
    code, rep = run(tmp_path, "dual", fixture("reduction.json"), "--functor", "reduce")
    job = rep["jobs"][0]
    assert code == 0 and job["object_count"] == 2
    assert job["certification"]["pi0"]["order"] == 2
    assert job["dual"]["labels"] == [0, 1]


def test_dual_missing_functor(tmp_path):
    assert main(["dual", fixture("reduction.json"), "--functor", "nope"]) == 2


def test_center(tmp_path):
    code, rep = run(tmp_path, "center", fixture("reduction.json"), "--presentation", "Z4onZ2")
    c = rep["jobs"][0]
    assert code == 0 and c["object_count"] == 4
    assert c["center"]["braiding"] == [[0] * 4] * 4
    assert c["certification"]["braiding"]["passed"]


def test_center_of_failing_presentation(tmp_path):
    code, rep = run(tmp_path, "center", fixture("bad_lambda_z2.json"))
    assert code == 1
    assert "input_reports" in rep["jobs"][0]


def test_search_and_refusal(tmp_path):
    code, rep = run(tmp_path, "search", fixture("search_z2.json"), "--ring", "Z2", "--module", "Z2")
    assert code == 0 and rep["jobs"][0]["candidates"] == 4096
    assert rep["jobs"][0]["representatives"][0]["index"] == 0
    p = tmp_path / "z4.json"
    p.write_text(json.dumps({"rings": {"Z4": {"zn": 4}}, "modules": {"Z4": {"ring": "Z4", "zn": 4}}}))
    assert main(["search", str(p)]) == 3


def test_size_cap_flag(tmp_path):
    assert main(["validate", fixture("strict_z4.json"), "--max-ring", "2"]) == 3


def test_reports_are_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", fixture("twisted_z2z2.json"), "--out", str(a)]) == 0
    assert main(["run", fixture("twisted_z2z2.json"), "--out", str(b), "--workers", "2"]) == 0
    assert strip_timing(a) == strip_timing(b)
    a2, b2 = tmp_path / "a2.json", tmp_path / "b2.json"
    main(["search", fixture("search_z2.json"), "--out", str(a2)])
    main(["search", fixture("search_z2.json"), "--out", str(b2), "--workers", "2"])
    assert strip_timing(a2) == strip_timing(b2)


def test_text_and_json_carry_same_data(tmp_path, capsys):
    out = tmp_path / "r.json"
    main(["center", fixture("strict_z4.json"), "--out", str(out)])
    text = capsys.readouterr().out
    doc = json.loads(out.read_text())

    def leaves(v):
        if isinstance(v, dict):
            for k, x in v.items():
                yield k
                yield from leaves(x)
        elif isinstance(v, list):
            for x in v:
                yield from leaves(x)
        else:
            yield json.dumps(v)

    for token in leaves(doc):
        assert token in text


def test_unwritable_output(tmp_path):
    assert main(["validate", fixture("strict_z4.json"), "--out", str(tmp_path / "no" / "such" / "r.json")]) == 2


def test_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2
