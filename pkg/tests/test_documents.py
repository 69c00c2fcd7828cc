"""Serialization round-trips and document validation."""

import pytest

from hetcat import check_nat_trans, hom_bifunctor, identity_functor, identity_nat_trans
from hetcat.documents import (DocumentError, bifunctor_from_payload,
                              bifunctor_to_payload, bundle_from_payload,
                              bundle_to_payload, category_from_payload,
                              category_to_payload, dumps_document,
                              functor_from_payload, functor_to_payload,
                              loads_document, make_document,
                              nat_trans_from_payload, nat_trans_to_payload,
                              parse_document)


def test_category_roundtrip(chain2, skeleton2, powerset2):
    for cat in (chain2, skeleton2, powerset2):
        assert category_from_payload(category_to_payload(cat)) == cat


def test_functor_roundtrip(skeleton2):
    fun = identity_functor(skeleton2)
    assert functor_from_payload(functor_to_payload(fun)) == fun


def test_nat_trans_roundtrip(skeleton2):
    nt = identity_nat_trans(identity_functor(skeleton2))
    back = nat_trans_from_payload(nat_trans_to_payload(nt))
    assert back == nt
    assert check_nat_trans(back).ok


def test_bifunctor_roundtrip(galois):
    payload = bifunctor_to_payload(galois.lower_het)
    back = bifunctor_from_payload(payload)
    assert back.cells == galois.lower_het.cells
    assert back.act_left == galois.lower_het.act_left
    assert back.act_right == galois.lower_het.act_right


def test_bundle_roundtrip(galois):
    payload = bundle_to_payload(galois.lower_het, galois.direct_image,
                                galois.preimage)
    het, expected = bundle_from_payload(payload)
    assert het.cells == galois.lower_het.cells
    assert expected["left_object_map"] == galois.direct_image
    assert expected["right_object_map"] == galois.preimage


def test_envelope_roundtrip(chain2):
    doc = make_document("category", category_to_payload(chain2), name="chain")
    text = dumps_document(doc)
    kind, value = parse_document(loads_document(text))
    assert kind == "category" and value == chain2


def test_dumps_is_deterministic(chain2):
    doc = make_document("category", category_to_payload(chain2))
    assert dumps_document(doc) == dumps_document(doc)


def test_malformed_documents_rejected():
    with pytest.raises(DocumentError):
        loads_document("not json at all")
    with pytest.raises(DocumentError):
        loads_document('{"format": "other/9", "kind": "category", "payload": {}}')
    with pytest.raises(DocumentError):
        loads_document('{"format": "hetcat/1", "kind": "nope", "payload": {}}')
    with pytest.raises(DocumentError):
        category_from_payload({"objects": "wrong shape"})
    with pytest.raises(DocumentError):
        make_document("nonsense", {})


def test_hom_bifunctor_document_roundtrip(chain2):
    het = hom_bifunctor(chain2)
    doc = make_document("bifunctor", bifunctor_to_payload(het))
    kind, back = parse_document(loads_document(dumps_document(doc)))
    assert kind == "bifunctor"
    assert back.cells == het.cells
