"""JSON round trips for presentations, 2-cell presentations, and monoids,
plus the canonical writer."""

import json

import pytest

from cocatlab.errors import ManifestError
from cocatlab.fincat import CATALOG, catalog_category
from cocatlab.monoids import MONOID_CATALOG, catalog_monoid
from cocatlab.serialize import (any_presentation_from_json,
                                any_presentation_to_json, canonical_dumps,
                                higher_from_json, higher_to_json,
                                label_from_json, label_to_json,
                                monoid_from_json, monoid_to_json,
                                presentation_from_json, presentation_to_json,
                                read_json, write_json)
from cocatlab.tensors import (CARTESIAN, FUNNY, GRAY_LAX, GRAY_PSEUDO,
                              TENSOR2, tensor)


def roundtrip(pres):
    doc = any_presentation_to_json(pres)
    # the document survives a pass through the actual encoder
    doc = json.loads(canonical_dumps(doc))
    back = any_presentation_from_json(doc)
    assert back == pres
    assert any_presentation_to_json(back) == doc
    return doc


def test_catalog_presentations_roundtrip():
    for name in sorted(CATALOG):
        roundtrip(catalog_category(name))


def test_bound_is_preserved():
    doc = roundtrip(catalog_category("z2_loop"))
    assert doc["bound"] == 3


def test_plain_tensor_roundtrips_keep_tuple_labels():
    two = catalog_category("two")
    three = catalog_category("three")
    for kind in (FUNNY, CARTESIAN):
        pres = tensor(kind, two, three)
        doc = roundtrip(pres)
        assert doc["objects"][0] == [0, 0]
        assert pres.graph.vertices[0] == (0, 0)


def test_higher_tensor_roundtrips():
    two = catalog_category("two")
    for kind in (GRAY_LAX, GRAY_PSEUDO, TENSOR2):
        hp = tensor(kind, two, two)
        doc = roundtrip(hp)
        assert doc["flavor"] == hp.flavor
        assert len(doc["twocells"]) == len(hp.twocells)
        back = higher_from_json(doc)
        assert higher_to_json(back) == doc


def test_monoid_roundtrips():
    for name in sorted(MONOID_CATALOG):
        m = catalog_monoid(name)
        doc = monoid_to_json(m)
        assert monoid_from_json(json.loads(canonical_dumps(doc))) == m


def test_labels_encode_tuples_as_arrays():
    label = (0, ("x", 2), "y")
    doc = label_to_json(label)
    assert doc == [0, ["x", 2], "y"]
    assert label_from_json(doc) == label


def test_canonical_dumps_is_order_insensitive_and_terminated():
    a = canonical_dumps({"b": 1, "a": [2, {"d": 3, "c": 4}]})
    b = canonical_dumps({"a": [2, {"c": 4, "d": 3}], "b": 1})
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a) == {"a": [2, {"c": 4, "d": 3}], "b": 1}


def test_write_and_read_json(tmp_path):
    target = tmp_path / "out.json"
    write_json(target, {"k": (), "v": [1, 2]})
    assert target.read_text() == canonical_dumps({"k": [], "v": [1, 2]})
    assert read_json(target) == {"k": [], "v": [1, 2]}


def test_bad_documents_raise_manifest_errors(tmp_path):
    with pytest.raises(ManifestError):
        monoid_from_json({"unit": 0, "table": []})
    with pytest.raises(ManifestError):
        monoid_from_json({"elements": [0, 1], "unit": 0, "table": [[0, 1]]})
    with pytest.raises(ManifestError):
        presentation_from_json({"objects": [0],
                                "arrows": [{"name": "f", "src": 0, "tgt": 9}],
                                "relations": []})
    doc = higher_to_json(tensor(GRAY_LAX, catalog_category("two"),
                                catalog_category("two")))
    doc["flavor"] = "weird"
    with pytest.raises(ManifestError):
        higher_from_json(doc)
    with pytest.raises(ManifestError):
        read_json(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ManifestError):
        read_json(bad)
