#!/usr/bin/env python3
# coding=utf-8

"""
Machine readable validation reports.
"""
from dataclasses import dataclass, field
from typing import Any

from phylorep.constants import DEFAULT_VIOLATION_CAP
from phylorep.utils import sort_labels


@dataclass(frozen=True)
class Violation:
    """
    One failed axiom instance.

    ``witness`` holds the elements that, replayed against the structure, reproduce the failure, e.g. the offending
    cross for ``X1`` or the two cuts with their four intersections for ``C``.
    """
    axiom: str
    witness: tuple[Any, ...]
    message: str = ''

    def to_dict(self) -> dict[str, Any]:
        return {'axiom': self.axiom, 'witness': [_jsonable(w) for w in self.witness], 'message': self.message}


@dataclass(frozen=True)
class ValidationReport:
    kind: str
    violations: tuple[Violation, ...] = ()
    truncated: bool = False

    @property
    def valid(self) -> bool:
        """
        >>> ValidationReport('cuts').valid
        True

        >>> ValidationReport('cuts', (Violation('C', ()),)).valid
        False
        """
        return not self.violations

    def axioms(self) -> set[str]:
        """
        :return: ids of all violated axioms.
        """
        return {v.axiom for v in self.violations}

    def of(self, axiom: str) -> list[Violation]:
        """
        :return: violations of the given ``axiom``.
        """
        return [v for v in self.violations if v.axiom == axiom]

    def to_dict(self) -> dict[str, Any]:
        return {'kind': self.kind, 'valid': self.valid, 'truncated': self.truncated,
                'violations': [v.to_dict() for v in self.violations]}

    def summary(self) -> str:
        """
        >>> ValidationReport('tree').summary()
        'tree: valid'

        >>> ValidationReport('tree', (Violation('tree:degree-2', ('y',)),)).summary()
        'tree: 1 violation(s) of tree:degree-2'
        """
        if self.valid:
            return f"{self.kind}: valid"
        more = ' (truncated)' if self.truncated else ''
        return f"{self.kind}: {len(self.violations)} violation(s) of {', '.join(sorted(self.axioms()))}{more}"


@dataclass
class ViolationCollector:
    """
    Accumulates violations up to ``cap``; validators keep scanning until ``full`` turns ``True``.

    >>> vc = ViolationCollector('cuts', cap=1)
    >>> vc.add('C', 1)
    >>> vc.add('C', 2)
    >>> vc.full
    True
    >>> report = vc.report()
    >>> len(report.violations), report.truncated
    (1, True)
    """
    kind: str
    cap: int = DEFAULT_VIOLATION_CAP
    _violations: list[Violation] = field(default_factory=list)
    _dropped: bool = False

    def add(self, axiom: str, *witness: Any, message: str = '') -> None:
        if len(self._violations) >= self.cap:
            self._dropped = True
            return
        self._violations.append(Violation(axiom, tuple(witness), message))

    @property
    def full(self) -> bool:
        return self._dropped

    def report(self) -> ValidationReport:
        return ValidationReport(self.kind, tuple(self._violations), self._dropped)


def _jsonable(value: Any) -> Any:
    if isinstance(value, (frozenset, set)):
        if all(isinstance(v, str) for v in value):
            return list(sort_labels(value))
        return sorted((_jsonable(v) for v in value), key=repr)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'to_json_value'):
        return value.to_json_value()
    return value
