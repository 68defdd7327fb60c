#!/usr/bin/env python3
# coding=utf-8

import logging
import os
from pathlib import Path

import pytest

from phylorep.core import (LeafSet, PhyloTree, Partition, PartitionCollection, Cut, CutSet, TripleEquivalence)
from phylorep.enumeration import enumerate_trees

DATA_DIR = Path(__file__).parent.parent / 'data'

NINE_LEAF_EDGES = [('1', 'a'), ('2', 'a'), ('3', 'a'), ('a', 'b'), ('4', 'b'), ('5', 'b'), ('b', 'c'), ('c', 'd'),
              ('c', 'e'), ('6', 'd'), ('7', 'd'), ('8', 'e'), ('9', 'e')]
CATERPILLAR_EDGES = [('1', 'a'), ('2', 'a'), ('a', 'b'), ('3', 'b'), ('b', 'c'), ('4', 'c'), ('5', 'c')]

EXTENDED = os.getenv('PHYLOREP_EXTENDED') == '1'


@pytest.fixture(autouse=True)
def reset_logging_levels(monkeypatch):
    monkeypatch.setattr(logging, "_levelToName", logging._levelToName.copy())
    monkeypatch.setattr(logging, "_nameToLevel", logging._nameToLevel.copy())


@pytest.fixture
def n9() -> LeafSet:
    return LeafSet.range(9)


@pytest.fixture
def n5() -> LeafSet:
    return LeafSet.range(5)


@pytest.fixture
def nine_leaf_tree(n9) -> PhyloTree:
    """
    Nine leaves, internal vertices a..e: 1,2,3 at a; 4,5 at b; 6,7 at d; 8,9 at e; the path a-b-c with d and e at c.
    """
    return PhyloTree.from_edges(NINE_LEAF_EDGES, n9)


@pytest.fixture
def nine_leaf_partitions(n9) -> PartitionCollection:
    return PartitionCollection.of(n9,
                                  Partition.of('1', '2', '3', '456789'),
                                  Partition.of('123', '4', '5', '6789'),
                                  Partition.of('12345', '67', '89'),
                                  Partition.of('1234589', '6', '7'),
                                  Partition.of('1234567', '8', '9'))


@pytest.fixture
def nine_leaf_cuts(n9) -> CutSet:
    return CutSet.of(n9,
                     Cut.of('123', '456789'),
                     Cut.of('12345', '6789'),
                     Cut.of('1234589', '67'),
                     Cut.of('1234567', '89'))


@pytest.fixture
def caterpillar(n5) -> PhyloTree:
    return PhyloTree.from_edges(CATERPILLAR_EDGES, n5)


@pytest.fixture
def caterpillar_equivalence(n5) -> TripleEquivalence:
    return TripleEquivalence.of(n5, ['123', '124', '125'], ['145', '245', '345'], ['134', '135', '234', '235'])


@pytest.fixture(scope='session')
def corpus() -> dict[int, list[PhyloTree]]:
    """
    Every tree on 3 to 6 leaves.
    """
    return {n: list(enumerate_trees(LeafSet.range(n))) for n in range(3, 7)}


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
