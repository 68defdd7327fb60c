#!/usr/bin/env python3
# coding=utf-8

"""
Exhaustive tree generation and leaf-fixing isomorphism.
"""

from phylorep.enumeration.canonical import CanonicalCode as CanonicalCode
from phylorep.enumeration.canonical import canonical_code as canonical_code
from phylorep.enumeration.canonical import trees_isomorphic as trees_isomorphic
from phylorep.enumeration.generate import KNOWN_TREE_COUNTS as KNOWN_TREE_COUNTS
from phylorep.enumeration.generate import enumerate_trees as enumerate_trees
from phylorep.enumeration.generate import count_trees as count_trees
from phylorep.enumeration.roundtrip import ROUND_TRIPS as ROUND_TRIPS
from phylorep.enumeration.roundtrip import COMMUTATIONS as COMMUTATIONS
from phylorep.enumeration.roundtrip import RoundTripReport as RoundTripReport
from phylorep.enumeration.roundtrip import failed_checks as failed_checks
from phylorep.enumeration.roundtrip import check_trees as check_trees
from phylorep.enumeration.roundtrip import roundtrip as roundtrip
