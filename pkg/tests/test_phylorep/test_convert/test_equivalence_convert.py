#!/usr/bin/env python3
# coding=utf-8

"""
Tests for triple equivalences from trees and partitions, and partitions back from triple equivalences.
"""
import warnings

import pytest

from phylorep.convert import (tree_to_equivalence, tree_to_partitions, partitions_to_equivalence,
                              equivalence_to_partitions, separating_partition, separated_triples, class_partition)
from phylorep.core import Partition, TripleEquivalence, validate_equivalence
from phylorep.errors import NotPhylogeneticError


class TestTreeToEquivalence:
    def test_nine_leaf_class_sizes(self, nine_leaf_tree):
        eq = tree_to_equivalence(nine_leaf_tree)
        assert eq.sizes() == [7, 7, 19, 20, 31]
        assert sum(eq.sizes()) == 84

    def test_caterpillar(self, caterpillar, caterpillar_equivalence):
        assert tree_to_equivalence(caterpillar) == caterpillar_equivalence

    def test_commutes(self, corpus):
        for tree in corpus[6]:
            eq = tree_to_equivalence(tree)
            assert len(eq) == tree.internal_count
            assert validate_equivalence(eq).valid
            assert partitions_to_equivalence(tree_to_partitions(tree)) == eq


class TestSeparation:
    def test_separating_partition(self, nine_leaf_partitions):
        assert separating_partition(nine_leaf_partitions, '168') == Partition.of('12345', '67', '89')

    def test_separated_triples_are_a_class(self, nine_leaf_tree, nine_leaf_partitions):
        eq = tree_to_equivalence(nine_leaf_tree)
        for p in nine_leaf_partitions:
            assert separated_triples(p) in eq.classes

    def test_two_parts_warn(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            assert separated_triples(Partition.of('123', '45')) == frozenset()
        assert len(caught) == 1


class TestEquivalenceToPartitions:
    def test_caterpillar(self, caterpillar, caterpillar_equivalence):
        assert equivalence_to_partitions(caterpillar_equivalence) == tree_to_partitions(caterpillar)

    def test_class_partition(self, n9):
        # the 20 triples with median c
        eq_class = [t for t in separated_triples(Partition.of('12345', '67', '89'))]
        assert class_partition(eq_class, n9) == Partition.of('12345', '67', '89')

    def test_rejects_non_diverse(self, n5):
        moved = TripleEquivalence.of(n5, ['124', '125'], ['123', '145', '245', '345'], ['134', '135', '234', '235'])
        with pytest.raises(NotPhylogeneticError, match='not diverse'):
            equivalence_to_partitions(moved)

    def test_idle_partition(self, nine_leaf_partitions, n9):
        from phylorep.core import PartitionCollection
        pc = PartitionCollection(n9, nine_leaf_partitions.partitions | {Partition.of('12', '3456789')})
        with pytest.raises(NotPhylogeneticError):
            partitions_to_equivalence(pc)
