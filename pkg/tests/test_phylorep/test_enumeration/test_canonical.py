#!/usr/bin/env python3
# coding=utf-8

"""
Tests for canonical codes and leaf-fixing isomorphism.
"""
import random

import pytest
from hypothesis import given, strategies as st

from phylorep.core import LeafSet, PhyloTree
from phylorep.enumeration import canonical_code, trees_isomorphic
from phylorep.errors import InputError
from phylorep.io import parse_newick
from test_phylorep.conftest import NINE_LEAF_EDGES

NINE_LEAF = PhyloTree.from_edges(NINE_LEAF_EDGES, LeafSet.range(9))


def relabel(tree: PhyloTree, order: list[int]) -> PhyloTree:
    return PhyloTree(tree.leaves, tree.internal_count,
                     tuple(tuple(v if isinstance(v, str) else order[v] for v in e) for e in tree.edges))


class TestCanonicalCode:
    def test_star_edge_order(self):
        n3 = LeafSet.range(3)
        edges = [('1', 0), ('2', 0), ('3', 0)]
        random.Random(3).shuffle(edges)
        assert canonical_code(PhyloTree(n3, 1, tuple(edges))) == canonical_code(PhyloTree.star(n3))

    @given(st.permutations(range(5)))
    def test_internal_relabeling(self, order):
        assert canonical_code(relabel(NINE_LEAF, order)) == canonical_code(NINE_LEAF)

    def test_mirror(self):
        assert canonical_code(parse_newick('((1,2),3,(4,5));')) == canonical_code(parse_newick('((5,4),3,(2,1));'))


class TestTreesIsomorphic:
    def test_quartets(self):
        assert not trees_isomorphic(parse_newick('((1,2),(3,4));'), parse_newick('((1,3),(2,4));'))
        assert trees_isomorphic(parse_newick('((1,2),(3,4));'), parse_newick('((3,4),(2,1));'))

    def test_reflexive(self, nine_leaf_tree):
        assert trees_isomorphic(nine_leaf_tree, nine_leaf_tree)

    def test_different_leaf_sets(self, nine_leaf_tree, caterpillar):
        with pytest.raises(InputError, match='different leaf sets'):
            trees_isomorphic(nine_leaf_tree, caterpillar)
