#!/usr/bin/env python3
# coding=utf-8

"""
Canonical JSON documents for the five representations.

Every document has the keys ``kind`` and ``leaves`` plus one body key:

- ``tree``: ``newick``, the canonical Newick text.
- ``partitions``: ``partitions``, each a list of parts, each part a sorted list of labels.
- ``cuts``: ``cuts``, each ``[side_a, side_b]``.
- ``crossing``: ``crosses``, each ``[[i, j], [k, l]]``.
- ``equivalence``: ``classes``, each a sorted list of sorted triples.

All lists are in canonical order and keys are sorted, so equal structures serialize to equal bytes.
"""
import json
from dataclasses import dataclass
from typing import Any

from phylorep.core import (LeafSet, PhyloTree, Partition, PartitionCollection, Cut, CutSet, Cross, CrossingRelation,
                           TripleEquivalence, KINDS, Structure, kind_of)
from phylorep.core.equivalence import sorted_triples
from phylorep.errors import InputError
from phylorep.io.newick import write_newick, parse_newick
from phylorep.utils import sort_labels

BODY_KEYS: dict[str, str] = {
    'tree': 'newick',
    'partitions': 'partitions',
    'cuts': 'cuts',
    'crossing': 'crosses',
    'equivalence': 'classes',
}
"""
Body key of the document of every kind.
"""


@dataclass(frozen=True)
class Document:
    kind: str
    leaves: tuple[str, ...]
    payload: Any

    def to_dict(self) -> dict[str, Any]:
        return {'kind': self.kind, 'leaves': list(self.leaves), BODY_KEYS[self.kind]: self.payload}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'


def to_document(x: Structure) -> Document:
    """
    >>> from phylorep.core import LeafSet
    >>> to_document(CutSet.empty(LeafSet.range(4))).to_dict()
    {'kind': 'cuts', 'leaves': ['1', '2', '3', '4'], 'cuts': []}
    """
    kind = kind_of(x)
    match x:
        case PhyloTree():
            payload: Any = write_newick(x)
        case PartitionCollection() | CutSet() | CrossingRelation():
            payload = [item.to_json_value() for item in x]
        case TripleEquivalence():
            payload = [[list(sort_labels(t)) for t in sorted_triples(c)] for c in x]
    return Document(kind, x.leaves.labels, payload)


def serialize_structure(x: Structure) -> str:
    """
    :return: canonical JSON text of ``x``, newline terminated.
    """
    return to_document(x).to_json()


def _labels(value: Any, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise InputError(f"{what} must be a list of labels, got {value!r}.")
    return value


def _list(value: Any, what: str, size: int | None = None) -> list:
    if not isinstance(value, list) or (size is not None and len(value) != size):
        expected = 'a list' if size is None else f"a list of {size}"
        raise InputError(f"{what} must be {expected}, got {value!r}.")
    return value


def from_document(doc: Document, strict: bool = False) -> Structure:
    """
    Build the structure a document describes.

    :param doc: the document.
    :param strict: passed on to the Newick reader of tree documents.
    :raise InputError: if the body does not describe a structure over the declared leaves.
    """
    leaves = LeafSet.from_iterable(doc.leaves)
    body = doc.payload
    match doc.kind:
        case 'tree':
            if not isinstance(body, str):
                raise InputError(f"newick must be a string, got {body!r}.")
            tree = parse_newick(body, strict)
            if tree.leaves != leaves:
                raise InputError(f"Tree leaves {tree.leaves} differ from the declared leaves {leaves}.")
            return tree
        case 'partitions':
            return PartitionCollection(leaves, frozenset(
                Partition.of(*(_labels(part, 'part') for part in _list(p, 'partition')))
                for p in _list(body, 'partitions')))
        case 'cuts':
            return CutSet(leaves, frozenset(
                Cut.of(*(_labels(side, 'side') for side in _list(c, 'cut', 2))) for c in _list(body, 'cuts')))
        case 'crossing':
            crosses = []
            for x in _list(body, 'crosses'):
                a, b = (_labels(_list(pair, 'pair', 2), 'pair') for pair in _list(x, 'cross', 2))
                crosses.append(Cross.of(*a, *b))
            return CrossingRelation(leaves, frozenset(crosses))
        case 'equivalence':
            return TripleEquivalence(leaves, frozenset(
                frozenset(frozenset(_labels(_list(t, 'triple', 3), 'triple')) for t in _list(c, 'class'))
                for c in _list(body, 'classes')))
    raise InputError(f"Unknown kind {doc.kind!r}, expected one of {', '.join(KINDS)}.")


def parse_document(text: str, kind: str | None = None, strict: bool = False) -> Structure:
    """
    Read a JSON document.

    >>> cs = parse_document('{"kind": "cuts", "leaves": ["1", "2", "3", "4"], "cuts": [[["3", "4"], ["1", "2"]]]}')
    >>> [str(c) for c in cs]
    ['12|34']

    >>> parse_document('{"kind": "cuts", "leaves": ["1", "2", "3"], "cuts": []}', kind='tree')
    Traceback (most recent call last):
    phylorep.errors.InputError: Document is of kind 'cuts', expected 'tree'.

    :param text: JSON text.
    :param kind: expected kind; the document's own ``kind`` must match it when given.
    :param strict: passed on to the Newick reader of tree documents.
    :raise InputError: on malformed JSON or a document not describing a structure.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"Malformed JSON: {e.msg}", e.pos) from e
    if not isinstance(data, dict):
        raise InputError('A document must be a JSON object.')
    doc_kind = data.get('kind')
    if not isinstance(doc_kind, str) or doc_kind not in BODY_KEYS:
        raise InputError(f"Unknown kind {doc_kind!r}, expected one of {', '.join(KINDS)}.")
    if kind is not None and doc_kind != kind:
        raise InputError(f"Document is of kind {doc_kind!r}, expected {kind!r}.")
    missing = {'leaves', BODY_KEYS[doc_kind]} - data.keys()
    if missing:
        raise InputError(f"Document lacks the keys {sorted(missing)}.")
    doc = Document(doc_kind, tuple(_labels(data['leaves'], 'leaves')), data[BODY_KEYS[doc_kind]])
    return from_document(doc, strict)
