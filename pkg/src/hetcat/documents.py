"""JSON documents for categories, functors, transformations, bifunctors, and
adjunction bundles.

One format for everything: {"format": "hetcat/1", "kind": ..., "meta": ...,
"payload": ...}. Sets are arrays with declared element labels, references are
string ids, and serialization is deterministic (sorted keys, fixed indent) so
fixtures diff cleanly and repeated exports are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import StructuralError
from .fincat import FinCategory, FinFunctor, Morphism, NatTrans
from .het import HetBifunctor

FORMAT = "hetcat/1"
KINDS = ("category", "functor", "nattrans", "bifunctor", "adjunction-bundle")


class DocumentError(StructuralError):
    """The document cannot be parsed into a well-formed value."""


# ---------------------------------------------------------------------------
# payload builders
# ---------------------------------------------------------------------------

def category_to_payload(cat: FinCategory) -> dict:
    return {
        "name": cat.name,
        "objects": [{"id": o, "label": cat.obj_labels.get(o, o)} for o in cat.objects],
        "morphisms": [{"id": m.id, "dom": m.dom, "cod": m.cod,
                       "label": m.label or m.id} for m in cat.morphisms],
        "identity": dict(cat.identity),
        "composition": sorted([f, g, h] for (f, g), h in cat.comp.items()),
    }


def category_from_payload(payload: Any) -> FinCategory:
    try:
        objects = tuple(o["id"] for o in payload["objects"])
        labels = {o["id"]: o.get("label", o["id"]) for o in payload["objects"]}
        morphisms = tuple(
            Morphism(m["id"], m["dom"], m["cod"], m.get("label", ""))
            for m in payload["morphisms"])
        identity = dict(payload["identity"])
        comp = {(f, g): h for f, g, h in payload["composition"]}
        name = payload.get("name", "category")
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed category payload: {exc}") from exc
    return FinCategory(name, objects, morphisms, identity, comp, labels)


def functor_to_payload(fun: FinFunctor) -> dict:
    return {
        "name": fun.name,
        "source": category_to_payload(fun.source),
        "target": category_to_payload(fun.target),
        "object_map": dict(fun.obj_map),
        "morphism_map": dict(fun.mor_map),
    }


def functor_from_payload(payload: Any) -> FinFunctor:
    try:
        return FinFunctor(
            payload.get("name", "functor"),
            category_from_payload(payload["source"]),
            category_from_payload(payload["target"]),
            dict(payload["object_map"]),
            dict(payload["morphism_map"]),
        )
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed functor payload: {exc}") from exc


def nat_trans_to_payload(nt: NatTrans) -> dict:
    return {
        "name": nt.name,
        "source_category": category_to_payload(nt.source.source),
        "target_category": category_to_payload(nt.source.target),
        "source_functor": {"name": nt.source.name,
                           "object_map": dict(nt.source.obj_map),
                           "morphism_map": dict(nt.source.mor_map)},
        "target_functor": {"name": nt.target.name,
                           "object_map": dict(nt.target.obj_map),
                           "morphism_map": dict(nt.target.mor_map)},
        "components": dict(nt.components),
    }


def nat_trans_from_payload(payload: Any) -> NatTrans:
    try:
        src_cat = category_from_payload(payload["source_category"])
        tgt_cat = category_from_payload(payload["target_category"])
        fns = []
        for key in ("source_functor", "target_functor"):
            spec = payload[key]
            fns.append(FinFunctor(spec.get("name", key), src_cat, tgt_cat,
                                  dict(spec["object_map"]),
                                  dict(spec["morphism_map"])))
        return NatTrans(payload.get("name", "nattrans"), fns[0], fns[1],
                        dict(payload["components"]))
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed nattrans payload: {exc}") from exc


def bifunctor_to_payload(het: HetBifunctor) -> dict:
    return {
        "name": het.name,
        "x_category": category_to_payload(het.x_cat),
        "a_category": category_to_payload(het.a_cat),
        "cells": [{"x": x, "a": a, "elements": list(het.cells[(x, a)])}
                  for x in het.x_cat.objects for a in het.a_cat.objects],
        "act_left": [{"morphism": h, "mapping": dict(table)}
                     for h, table in sorted(het.act_left.items())],
        "act_right": [{"morphism": k, "mapping": dict(table)}
                      for k, table in sorted(het.act_right.items())],
    }


def bifunctor_from_payload(payload: Any) -> HetBifunctor:
    try:
        x_cat = category_from_payload(payload["x_category"])
        a_cat = category_from_payload(payload["a_category"])
        cells = {(c["x"], c["a"]): tuple(c["elements"]) for c in payload["cells"]}
        act_left = {e["morphism"]: dict(e["mapping"]) for e in payload["act_left"]}
        act_right = {e["morphism"]: dict(e["mapping"]) for e in payload["act_right"]}
        name = payload.get("name", "bifunctor")
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed bifunctor payload: {exc}") from exc
    return HetBifunctor(name, x_cat, a_cat, cells, act_left, act_right)


def bundle_to_payload(het: HetBifunctor,
                      expected_left: dict[str, str] | None = None,
                      expected_right: dict[str, str] | None = None) -> dict:
    payload = {"bifunctor": bifunctor_to_payload(het)}
    expected = {}
    if expected_left:
        expected["left_object_map"] = dict(expected_left)
    if expected_right:
        expected["right_object_map"] = dict(expected_right)
    if expected:
        payload["expected"] = expected
    return payload


def bundle_from_payload(payload: Any) -> tuple[HetBifunctor, dict]:
    try:
        het = bifunctor_from_payload(payload["bifunctor"])
        expected = payload.get("expected", {})
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed adjunction bundle: {exc}") from exc
    return het, expected


# ---------------------------------------------------------------------------
# document envelope
# ---------------------------------------------------------------------------

def make_document(kind: str, payload: dict, name: str = "",
                  description: str = "") -> dict:
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    return {
        "format": FORMAT,
        "kind": kind,
        "meta": {"name": name, "description": description},
        "payload": payload,
    }


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def loads_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("document is not a JSON object")
    if doc.get("format") != FORMAT:
        raise DocumentError(f"unsupported format {doc.get('format')!r}, "
                            f"expected {FORMAT!r}")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    if "payload" not in doc:
        raise DocumentError("document has no payload")
    return doc


def parse_document(doc: dict):
    """Return (kind, parsed value); the value type depends on the kind."""
    kind = doc["kind"]
    payload = doc["payload"]
    if kind == "category":
        return kind, category_from_payload(payload)
    if kind == "functor":
        return kind, functor_from_payload(payload)
    if kind == "nattrans":
        return kind, nat_trans_from_payload(payload)
    if kind == "bifunctor":
        return kind, bifunctor_from_payload(payload)
    return kind, bundle_from_payload(payload)
