#!/usr/bin/env python3
# coding=utf-8

"""
Newick reading and writing for unrooted phylogenetic trees.

Supported grammar::

    tree    := subtree ";"
    subtree := name | "(" subtree ("," subtree)+ ")" [name] [":" number]
    name    := [A-Za-z0-9_.|-]+

Leaves may carry a branch length too. Whitespace between tokens is skipped. Internal node names and branch lengths
are read and dropped.
"""
import logging
import re

import networkx as nx

from phylorep.constants import LABEL_PATTERN
from phylorep.core import LeafSet, PhyloTree, validate_tree
from phylorep.core.tree import Vertex
from phylorep.errors import NewickSyntaxError, NotPhylogeneticError
from phylorep.utils import label_key

logger = logging.getLogger(__name__)

_NAME = re.compile(LABEL_PATTERN)
_NUMBER = re.compile(r'[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?')


class _NewickParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.edges: list[tuple[Vertex, Vertex]] = []
        self.labels: list[str] = []
        self.internal_count = 0

    def error(self, msg: str, pos: int | None = None) -> NewickSyntaxError:
        return NewickSyntaxError(msg, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, char: str) -> None:
        found = self.peek()
        if found != char:
            raise self.error(f"Expected {char!r}, found {found!r}" if found else f"Expected {char!r}, found end of input")
        self.pos += 1

    def name(self) -> str | None:
        self.skip_ws()
        m = _NAME.match(self.text, self.pos)
        if not m:
            return None
        self.pos = m.end()
        return m.group()

    def branch_length(self) -> None:
        if self.peek() != ':':
            return
        self.pos += 1
        self.skip_ws()
        m = _NUMBER.match(self.text, self.pos)
        if not m:
            raise self.error('Expected a branch length after \':\'')
        self.pos = m.end()

    def subtree(self) -> Vertex:
        if self.peek() == '(':
            self.pos += 1
            v = self.internal_count
            self.internal_count += 1
            children = [self.subtree()]
            while self.peek() == ',':
                self.pos += 1
                children.append(self.subtree())
            if len(children) < 2:
                raise self.error('An internal node needs at least two children')
            self.expect(')')
            self.name()
            self.branch_length()
            self.edges.extend((v, c) for c in children)
            return v
        start = self.pos
        label = self.name()
        if label is None:
            found = self.peek()
            raise self.error(f"Expected a leaf name or '(', found {found!r}" if found else
                             "Expected a leaf name or '(', found end of input")
        if label in self.labels:
            raise self.error(f"Duplicate leaf {label!r}", start)
        self.labels.append(label)
        self.branch_length()
        return label

    def parse(self) -> Vertex:
        root = self.subtree()
        self.expect(';')
        if self.peek():
            raise self.error('Unexpected text after \';\'')
        return root


def parse_newick(text: str, strict: bool = False) -> PhyloTree:
    """
    Read an unrooted tree.

    A root of degree 2 is suppressed by merging its two edges, unless ``strict`` is set in which case it is reported
    like any other vertex of degree 2.

    >>> parse_newick('(1,2,3);') == PhyloTree.star(LeafSet.range(3))
    True
    >>> tree = parse_newick('((1,2):0.5,(3,4)x);')
    >>> tree.internal_count, len(tree.internal_edges())
    (2, 1)

    >>> parse_newick('((1,2),(3,4));', strict=True)
    Traceback (most recent call last):
    phylorep.errors.NotPhylogeneticError: Not a phylogenetic tree: tree: 1 violation(s) of tree:degree-2

    >>> parse_newick('(1,2,3,1);')
    Traceback (most recent call last):
    phylorep.errors.NewickSyntaxError: Duplicate leaf '1' (at position 7)

    >>> parse_newick('(1,2;')
    Traceback (most recent call last):
    phylorep.errors.NewickSyntaxError: Expected ')', found ';' (at position 4)

    :param text: Newick text.
    :param strict: report a root of degree 2 instead of suppressing it.
    :raise NewickSyntaxError: on text outside the grammar or a repeated leaf.
    :raise LeafSetError: on fewer than three leaves.
    :raise NotPhylogeneticError: in strict mode, when the root has degree 2.
    """
    parser = _NewickParser(text)
    root = parser.parse()
    leaves = LeafSet.from_iterable(parser.labels)
    edges = parser.edges
    internal = list(range(parser.internal_count))
    children = [c for r, c in edges if r == root]
    if len(children) == 2:
        if strict:
            report = validate_tree(edges, leaves, internal)
            raise NotPhylogeneticError(f"Not a phylogenetic tree: {report.summary()}", report)
        logger.debug("suppressing the root of degree 2")
        edges = [e for e in edges if e[0] != root] + [(children[0], children[1])]
        edges = [(_shift(u), _shift(v)) for u, v in edges]
        internal = internal[:-1]
    return PhyloTree(leaves, len(internal), tuple(edges))


def _shift(v: Vertex) -> Vertex:
    # root is vertex 0, renumber the rest from 0
    return v - 1 if isinstance(v, int) else v


def _root(tree: PhyloTree) -> Vertex:
    centers = nx.center(tree.graph)
    if len(centers) == 1:
        return centers[0]
    u, v = centers
    return v if tree.leaves.smallest in tree.branch(u, v) else u


def write_newick(tree: PhyloTree) -> str:
    """
    Deterministic Newick text of ``tree``, rooted at its center (of two central vertices, the one on the side of the
    smallest leaf) with children ordered by their smallest leaf.

    >>> write_newick(parse_newick('((5,4),(1,2),3);'))
    '((1,2),3,(4,5));'
    """
    def smallest(frm: Vertex, to: Vertex) -> tuple:
        return label_key(min(tree.branch(frm, to), key=label_key))

    def write(v: Vertex, parent: Vertex | None) -> str:
        if isinstance(v, str):
            return v
        children = sorted((w for w in tree.adjacency[v] if w != parent), key=lambda w: smallest(v, w))
        return '(' + ','.join(write(w, v) for w in children) + ')'

    return write(_root(tree), None) + ';'
