"""The check registry, the manifest, and the deterministic suite report."""

import pytest

from cocatlab.checks import (check_expectation, default_manifest,
                             manifest_hash, registered_checks, run_check,
                             run_suite, validate_manifest)
from cocatlab.errors import ManifestError, UnknownCheck
from cocatlab.report import FAIL, PASS
from cocatlab.serialize import canonical_dumps

REGISTRY = [
    "assoc.funny", "assoc.gray_lax", "assoc.gray_pseudo", "assoc.tensor2",
    "cocat.O", "cocat.S",
    "comult.Z2", "comult.Z2xZ2", "comult.Z3", "comult.Z4", "comult.idem2",
    "comult.trivial",
    "double.SgraylS", "double.SgraypS", "double.SstarS", "double.SxS",
    "endo2.Z2", "endo2.Z2xZ2", "endo2.Z3", "endo2.Z4", "endo2.free1trunc3",
    "endo2.idem2", "endo2.trivial",
    "ends.catalog",
    "enum.cocats", "enum.doubles",
    "interchange.I", "interchange.SgraypS", "interchange.SstarS",
    "mutant.O.glue", "mutant.O.swap", "mutant.S.glue", "mutant.S.swap",
    "search.X1", "search.X2", "search.star", "search.times",
    "tensor.cells", "underlying.I",
]


def test_registry_is_frozen():
    assert registered_checks() == REGISTRY


def test_expectations_every_negative_check_expects_fail():
    failing = {cid for cid in REGISTRY if check_expectation(cid) == FAIL}
    assert failing == {"assoc.tensor2", "interchange.I",
                       "mutant.O.glue", "mutant.O.swap",
                       "mutant.S.glue", "mutant.S.swap",
                       "comult.Z2", "comult.Z2xZ2", "comult.Z3", "comult.Z4",
                       "comult.idem2", "search.X1", "search.X2"}
    with pytest.raises(UnknownCheck):
        check_expectation("cocat.T")


def test_run_check_rejects_unknown_ids_and_params():
    with pytest.raises(UnknownCheck):
        run_check("nope.nope")
    with pytest.raises(UnknownCheck):
        run_check("cocat.O", {"max_a2": 4})


def test_run_check_report_shape():
    rep = run_check("cocat.O")
    d = rep.to_dict()
    assert d["id"] == "cocat.O"
    assert d["verdict"] == PASS
    assert "elapsed" not in canonical_dumps(d)
    assert rep.elapsed >= 0.0
    assert [lab for lab, _ in d["details"]["laws"]][-1] == "(m+1)m = (1+m)m"


def test_validate_manifest_rejects_malformed_entries():
    for bad in ([{"params": {}}],
                [{"id": "cocat.T"}],
                [{"id": "cocat.O", "params": {"bogus": 1}}],
                [{"id": "cocat.O", "expect": "maybe"}]):
        with pytest.raises(ManifestError):
            validate_manifest(bad)
    manifest = default_manifest()
    assert validate_manifest(manifest) == manifest
    assert [e["id"] for e in manifest] == REGISTRY


def test_manifest_hash_tracks_content():
    manifest = default_manifest()
    h = manifest_hash(manifest)
    assert h == manifest_hash(default_manifest())
    tweaked = default_manifest()
    tweaked[0]["expect"] = FAIL
    assert manifest_hash(tweaked) != h


def test_suite_on_a_slice_is_deterministic_and_ok():
    manifest = [e for e in default_manifest()
                if e["id"].startswith(("cocat.", "mutant.", "double.S"))]
    one = run_suite(manifest)
    two = run_suite(manifest, jobs=4)
    assert one.ok and two.ok
    assert canonical_dumps(one.to_dict()) == canonical_dumps(two.to_dict())
    assert sorted(one.timings()) == [e["id"] for e in sorted(
        manifest, key=lambda e: e["id"])]
    doc = one.to_dict()
    assert doc["summary"]["total"] == len(manifest)
    assert doc["summary"]["mismatched"] == 0
    assert "elapsed" not in canonical_dumps(doc)


def test_empty_manifest_gives_an_empty_ok_report():
    suite = run_suite([])
    assert suite.ok
    doc = suite.to_dict()
    assert doc["checks"] == []
    assert doc["summary"]["total"] == 0


def test_every_check_carries_a_citation():
    from cocatlab.checks import _REGISTRY
    seen = set()
    for cid in registered_checks():
        citation = _REGISTRY[cid].citation
        assert isinstance(citation, str) and citation
        seen.add(citation)
    assert len(seen) == len(registered_checks())  # no copy-paste citations


def test_suite_surfaces_expectation_mismatches():
    manifest = validate_manifest([
        {"id": "enum.cocats", "params": {"max_a2": 0}, "expect": PASS}])
    suite = run_suite(manifest)
    assert not suite.ok
    doc = suite.to_dict()
    assert doc["checks"][0]["as_expected"] is False
    assert doc["summary"]["mismatched"] == 1
