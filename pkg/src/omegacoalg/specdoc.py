"""Loading and validation of JSON spec documents.

A document carries a schema version, exactly one of a plain ``signature``
or an ``indexed`` container fragment, and a ``coalgebra`` fragment that
must validate against it (arities, state closure, sorts).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .container import Container
from .errors import OmegaCoalgError, SpecValidationError
from .indexed import IndexedCoalgebra, IndexedContainer
from .mtype import Coalgebra

SCHEMA_VERSION = "1"


@dataclass(eq=False)
class SpecDocument:
    kind: str  # "plain" | "indexed"
    container: Optional[Container]
    coalgebra: Optional[Coalgebra]
    icontainer: Optional[IndexedContainer]
    icoalgebra: Optional[IndexedCoalgebra]
    raw: dict


def _require(cond: bool, msg: str):
    if not cond:
        raise SpecValidationError(msg)


def load_spec(path: str) -> SpecDocument:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as e:
        raise SpecValidationError(f"cannot read spec file: {e}") from None
    except json.JSONDecodeError as e:
        raise SpecValidationError(f"spec is not valid JSON: {e}") from None
    return parse_spec(doc)


def parse_spec(doc: dict) -> SpecDocument:
    _require(isinstance(doc, dict), "document: expected a JSON object")
    _require(
        doc.get("schema_version") == SCHEMA_VERSION,
        f"schema_version: expected {SCHEMA_VERSION!r}",
    )
    has_sig = "signature" in doc
    has_idx = "indexed" in doc
    _require(
        has_sig != has_idx, "document: exactly one of signature/indexed must be present"
    )
    _require("coalgebra" in doc, "coalgebra: missing")
    if has_sig:
        container = _parse_signature(doc["signature"])
        coalgebra = _parse_coalgebra(container, doc["coalgebra"])
        return SpecDocument("plain", container, coalgebra, None, None, doc)
    icontainer = _parse_indexed(doc["indexed"])
    icoalgebra = _parse_icoalgebra(icontainer, doc["coalgebra"])
    return SpecDocument("indexed", None, None, icontainer, icoalgebra, doc)


def _parse_signature(sig) -> Container:
    _require(isinstance(sig, dict), "signature: expected an object")
    labels = sig.get("labels")
    arity = sig.get("arity")
    _require(isinstance(labels, list), "signature.labels: expected an array")
    _require(isinstance(arity, dict), "signature.arity: expected an object")
    for a in labels:
        _require(a in arity, f"signature.arity.{a}: missing")
        n = arity[a]
        _require(
            isinstance(n, int) and n >= 0,
            f"signature.arity.{a}: expected a non-negative integer",
        )
    try:
        return Container(arity=dict(arity), labels=tuple(labels))
    except OmegaCoalgError as e:
        raise SpecValidationError(f"signature: {e}") from None


def _parse_coalgebra(container: Container, frag) -> Coalgebra:
    _require(isinstance(frag, dict), "coalgebra: expected an object")
    states = frag.get("states")
    gamma = frag.get("gamma")
    _require(isinstance(states, list), "coalgebra.states: expected an array")
    _require(isinstance(gamma, dict), "coalgebra.gamma: expected an object")
    table = {}
    for s in states:
        _require(s in gamma, f"coalgebra.gamma.{s}: missing")
        entry = gamma[s]
        _require(isinstance(entry, dict), f"coalgebra.gamma.{s}: expected an object")
        _require("label" in entry, f"coalgebra.gamma.{s}.label: missing")
        children = entry.get("children")
        _require(
            isinstance(children, list), f"coalgebra.gamma.{s}.children: expected an array"
        )
        table[s] = (entry["label"], tuple(children))
    try:
        return Coalgebra(container, table, state_enumeration=tuple(states))
    except OmegaCoalgError as e:
        raise SpecValidationError(f"coalgebra: {e}") from None


def _parse_indexed(frag) -> IndexedContainer:
    _require(isinstance(frag, dict), "indexed: expected an object")
    sorts = frag.get("sorts")
    labels = frag.get("labels")
    _require(isinstance(sorts, list), "indexed.sorts: expected an array")
    _require(isinstance(labels, dict), "indexed.labels: expected an object")
    labels_at = {}
    arity = {}
    child_sort = {}
    for i in sorts:
        per_sort = labels.get(i, {})
        _require(
            isinstance(per_sort, dict), f"indexed.labels.{i}: expected an object"
        )
        labels_at[i] = tuple(per_sort)
        for a, entry in per_sort.items():
            _require(
                isinstance(entry, dict) and "arity" in entry and "child_sorts" in entry,
                f"indexed.labels.{i}.{a}: expected arity and child_sorts",
            )
            arity[(i, a)] = entry["arity"]
            child_sort[(i, a)] = tuple(entry["child_sorts"])
    try:
        return IndexedContainer(tuple(sorts), labels_at, arity, child_sort)
    except OmegaCoalgError as e:
        raise SpecValidationError(f"indexed: {e}") from None


def _parse_icoalgebra(ic: IndexedContainer, frag) -> IndexedCoalgebra:
    _require(isinstance(frag, dict), "coalgebra: expected an object")
    states = frag.get("states")
    gamma = frag.get("gamma")
    _require(
        isinstance(states, dict),
        "coalgebra.states: expected an object mapping state to sort",
    )
    _require(isinstance(gamma, dict), "coalgebra.gamma: expected an object")
    table = {}
    for s in states:
        _require(s in gamma, f"coalgebra.gamma.{s}: missing")
        entry = gamma[s]
        _require(isinstance(entry, dict), f"coalgebra.gamma.{s}: expected an object")
        _require("label" in entry, f"coalgebra.gamma.{s}.label: missing")
        children = entry.get("children")
        _require(
            isinstance(children, list), f"coalgebra.gamma.{s}.children: expected an array"
        )
        table[s] = (entry["label"], tuple(children))
    try:
        return IndexedCoalgebra(
            ic, states=tuple(states), sort_of=dict(states), gamma=table
        )
    except OmegaCoalgError as e:
        raise SpecValidationError(f"coalgebra: {e}") from None


def plain_document(coalgebra: Coalgebra) -> dict:
    """Serialize a finitely presented plain coalgebra back to a document."""
    container = coalgebra.container
    states = list(coalgebra.state_enumeration)
    return {
        "schema_version": SCHEMA_VERSION,
        "signature": {
            "labels": list(container.labels),
            "arity": {a: container.arity_of(a) for a in container.labels},
        },
        "coalgebra": {
            "states": states,
            "gamma": {
                s: {
                    "label": coalgebra.transition(s).label,
                    "children": list(coalgebra.transition(s).children),
                }
                for s in states
            },
        },
    }


def indexed_document(c: IndexedCoalgebra) -> dict:
    ic = c.base
    return {
        "schema_version": SCHEMA_VERSION,
        "indexed": {
            "sorts": list(ic.sorts),
            "labels": {
                i: {
                    a: {
                        "arity": ic.arity[(i, a)],
                        "child_sorts": list(ic.child_sort[(i, a)]),
                    }
                    for a in ic.labels(i)
                }
                for i in ic.sorts
            },
        },
        "coalgebra": {
            "states": {s: c.sort_of[s] for s in c.states},
            "gamma": {
                s: {
                    "label": c.transition(s)[0],
                    "children": list(c.transition(s)[1]),
                }
                for s in c.states
            },
        },
    }


def dump_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
