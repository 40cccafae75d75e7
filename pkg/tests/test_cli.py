"""The command line interface, driven in process through main(argv)."""

import json

import pytest

from cocatlab.cli import main
from cocatlab.fincat import catalog_category
from cocatlab.monoids import catalog_monoid
from cocatlab.serialize import (any_presentation_from_json, canonical_dumps,
                                monoid_to_json, presentation_to_json,
                                read_json, write_json)
from cocatlab.tensors import GRAY_LAX, tensor


def test_verify_single_check_exit_codes_and_payload(capsys):
    assert main(["verify", "check", "cocat.O"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["id"] == "cocat.O"
    assert doc["verdict"] == "pass"
    assert doc["as_expected"] is True
    assert doc["elapsed_ms"] >= 0

    # expected-to-fail checks match their expectation, hence exit 0
    assert main(["verify", "check", "interchange.I"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "fail" and doc["expect"] == "fail"

    # a forced mismatch is exit 1
    assert main(["verify", "check", "enum.cocats",
                 "--param", "max_a2=0"]) == 1


def test_verify_usage_and_input_errors(capsys):
    assert main(["verify", "check", "cocat.T"]) == 2
    assert "no check named" in capsys.readouterr().err
    assert main(["verify", "check", "cocat.O", "--param", "bogus=1"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["tensor", "--kind", "nonsense", "a", "b", "-o", "c"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_all_writes_a_canonical_report(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert main(["verify", "all", "--out", str(out1)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert main(["verify", "all", "--out", str(out2), "--jobs", "4"]) == 0
    capsys.readouterr()
    assert out1.read_bytes() == out2.read_bytes()
    doc = read_json(out1)
    assert doc["summary"]["ok"] is True
    assert doc["summary"]["total"] == len(doc["checks"])
    assert sum(1 for l in lines if l.startswith("ok ")) == doc["summary"]["total"]


def test_tensor_command_matches_the_library(tmp_path, capsys):
    two = catalog_category("two")
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    out = tmp_path / "t.json"
    write_json(a, presentation_to_json(two))
    write_json(b, presentation_to_json(two))
    assert main(["tensor", "--kind", GRAY_LAX, str(a), str(b),
                 "-o", str(out)]) == 0
    got = any_presentation_from_json(read_json(out))
    assert got == tensor(GRAY_LAX, two, two)
    capsys.readouterr()


def test_obstruction_command(tmp_path, capsys):
    mfile = tmp_path / "z2.json"
    write_json(mfile, monoid_to_json(catalog_monoid("Z2")))
    assert main(["obstruction", "--monoid", str(mfile)]) == 0
    payload = capsys.readouterr().out
    doc = json.loads(payload)
    assert doc["outcome"] == "none"
    assert payload == canonical_dumps(doc)

    bad = tmp_path / "bad.json"
    write_json(bad, {"elements": [0]})
    assert main(["obstruction", "--monoid", str(bad)]) == 2
    assert "bad monoid data" in capsys.readouterr().err
