#!/usr/bin/env python3
# coding=utf-8

"""
Round-trip oracle: every conversion and its inverse checked against every tree on a small leaf set.

Eight round trips, each starting from structures derived from the tree ``T``:

- ``cuts->tree->cuts`` and ``partitions->tree->partitions`` give back the same structure.
- ``tree->cuts->tree`` and ``tree->partitions->tree`` give back a tree isomorphic to ``T``.
- ``cuts->crossing->cuts``, ``crossing->cuts->crossing``, ``partitions->equivalence->partitions`` and
  ``equivalence->partitions->equivalence`` give back the same structure.

And two commutations: the cuts and the triple equivalence of ``T`` are the same whether computed directly or through
the partitions of ``T``.
"""
import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from phylorep.constants import MIN_LEAVES, HARD_MAX_N
from phylorep.convert import (tree_to_cuts, cuts_to_tree, tree_to_partitions, partitions_to_tree, partitions_to_cuts,
                              cuts_to_crossing, crossing_to_cuts, tree_to_equivalence, equivalence_to_partitions,
                              partitions_to_equivalence)
from phylorep.core import LeafSet, PhyloTree
from phylorep.enumeration.canonical import trees_isomorphic
from phylorep.enumeration.generate import enumerate_trees
from phylorep.errors import PhyloRepError, InputError
from phylorep.io.newick import write_newick

logger = logging.getLogger(__name__)

type Check = Callable[[PhyloTree], bool]

ROUND_TRIPS: dict[str, Check] = {
    'tree->cuts->tree': lambda t: trees_isomorphic(cuts_to_tree(tree_to_cuts(t)), t),
    'tree->partitions->tree': lambda t: trees_isomorphic(partitions_to_tree(tree_to_partitions(t)), t),
    'cuts->tree->cuts': lambda t: tree_to_cuts(cuts_to_tree(c := tree_to_cuts(t))) == c,
    'partitions->tree->partitions': lambda t: tree_to_partitions(partitions_to_tree(p := tree_to_partitions(t))) == p,
    'cuts->crossing->cuts': lambda t: crossing_to_cuts(cuts_to_crossing(c := tree_to_cuts(t))) == c,
    'crossing->cuts->crossing': lambda t: cuts_to_crossing(
        crossing_to_cuts(x := cuts_to_crossing(tree_to_cuts(t)))) == x,
    'partitions->equivalence->partitions': lambda t: equivalence_to_partitions(
        partitions_to_equivalence(p := tree_to_partitions(t))) == p,
    'equivalence->partitions->equivalence': lambda t: partitions_to_equivalence(
        equivalence_to_partitions(e := tree_to_equivalence(t))) == e,
}

COMMUTATIONS: dict[str, Check] = {
    'tree->partitions->cuts': lambda t: partitions_to_cuts(tree_to_partitions(t)) == tree_to_cuts(t),
    'tree->partitions->equivalence': lambda t: partitions_to_equivalence(tree_to_partitions(t)) ==
                                              tree_to_equivalence(t),
}


def failed_checks(tree: PhyloTree, checks: dict[str, Check] | None = None) -> list[str]:
    """
    Names of the checks ``tree`` fails. A conversion raising counts as a failure.

    >>> failed_checks(PhyloTree.star(LeafSet.range(4)))
    []
    """
    checks = {**ROUND_TRIPS, **COMMUTATIONS} if checks is None else checks
    failed = []
    for name, check in checks.items():
        try:
            ok = check(tree)
        except PhyloRepError as e:
            logger.debug("%s raised on %s: %s", name, write_newick(tree), e)
            ok = False
        if not ok:
            failed.append(name)
    return failed


@dataclass(frozen=True)
class RoundTripReport:
    n: int
    trees: int
    failures: dict[str, list[str]] = field(default_factory=dict)
    """
    Check name to the Newick text of every tree failing it.
    """

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        """
        >>> RoundTripReport(5, 26).summary()
        '26 trees, all 8 round-trip identities hold'
        >>> RoundTripReport(4, 4, {'cuts->tree->cuts': ['((1,2),(3,4));']}).summary()
        '4 trees, 1 identity failed: cuts->tree->cuts on 1 tree(s)'
        """
        if self.ok:
            return f"{self.trees} trees, all {len(ROUND_TRIPS)} round-trip identities hold"
        failed = '; '.join(f"{name} on {len(trees)} tree(s)" for name, trees in self.failures.items())
        return f"{self.trees} trees, {len(self.failures)} identit{'y' if len(self.failures) == 1 else 'ies'} " \
               f"failed: {failed}"


def check_trees(n: int, trees: Iterable[PhyloTree]) -> RoundTripReport:
    failures: dict[str, list[str]] = {}
    count = 0
    for tree in trees:
        count += 1
        for name in failed_checks(tree):
            failures.setdefault(name, []).append(write_newick(tree))
    logger.info("checked %d trees on %d leaves, %d identities failed", count, n, len(failures))
    return RoundTripReport(n, count, failures)


def roundtrip(n: int) -> RoundTripReport:
    """
    Run every round trip and commutation on every tree with ``n`` leaves.

    >>> roundtrip(5).summary()
    '26 trees, all 8 round-trip identities hold'

    :raise InputError: unless ``3 <= n <= 8``.
    """
    if not MIN_LEAVES <= n <= HARD_MAX_N:
        raise InputError(f"Round trips support {MIN_LEAVES} to {HARD_MAX_N} leaves, got {n}.")
    return check_trees(n, enumerate_trees(LeafSet.range(n)))
