#!/usr/bin/env python3
# coding=utf-8

"""
Canonical codes of trees up to isomorphism fixing the leaves.
"""
from phylorep.core import PhyloTree
from phylorep.core.tree import Vertex
from phylorep.errors import InputError

type CanonicalCode = tuple
"""
Nested tuples: a leaf encodes as ``(0, label)``, an internal vertex as ``(1, sorted child codes)``. Codes of trees on
the same leaves are totally ordered.
"""


def canonical_code(tree: PhyloTree) -> CanonicalCode:
    """
    Encode ``tree`` rooted at the neighbour of its smallest leaf. Internal vertex ids and edge order do not matter.

    >>> from phylorep.core import LeafSet
    >>> n3 = LeafSet.range(3)
    >>> canonical_code(PhyloTree(n3, 1, (('3', 0), ('1', 0), ('2', 0))))
    (1, ((0, '2'), (0, '3')))
    """
    root = tree.adjacency[tree.leaves.smallest][0]

    def encode(v: Vertex, parent: Vertex) -> CanonicalCode:
        if isinstance(v, str):
            return 0, v
        return 1, tuple(sorted(encode(w, v) for w in tree.adjacency[v] if w != parent))

    return encode(root, tree.leaves.smallest)


def trees_isomorphic(t1: PhyloTree, t2: PhyloTree) -> bool:
    """
    ``True`` if some isomorphism between the trees is the identity on the leaves.

    :raise InputError: if the trees have different leaf sets.
    """
    if t1.leaves != t2.leaves:
        raise InputError(f"Trees on different leaf sets {t1.leaves} and {t2.leaves} cannot be compared.")
    return canonical_code(t1) == canonical_code(t2)
