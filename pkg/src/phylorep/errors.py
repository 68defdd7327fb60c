#!/usr/bin/env python3
# coding=utf-8

"""
Exceptions raised by phylorep.

The two families below map to different exit codes of the command line front end:

- ``InputError`` - the input could not even be read as the structure it claims to be.
- ``NotPhylogeneticError`` - the input is a well-formed structure but violates the axioms a conversion needs.
"""
from typing import Any, TYPE_CHECKING

from vt.utils.errors.error_specs import ErrorMsgFormer

if TYPE_CHECKING:
    from phylorep.core.report import ValidationReport


errmsg_creator = ErrorMsgFormer
"""
Shared error message former, e.g. ``errmsg_creator.not_allowed_together("verbosity", "quietness")``.
"""


class PhyloRepError(Exception):
    """
    Root of all phylorep errors.
    """
    pass


class InputError(PhyloRepError, ValueError):
    def __init__(self, msg: str, position: int | None = None):
        """
        Malformed input.

        >>> str(InputError('bad edge'))
        'bad edge'

        >>> str(InputError('unexpected character', position=4))
        'unexpected character (at position 4)'

        :param msg: what is wrong.
        :param position: offset into the parsed text, if the input was text.
        """
        self.msg = msg
        self.position = position
        super().__init__(msg if position is None else f"{msg} (at position {position})")


class LeafSetError(InputError):
    """
    The leaf set is too small or has repeated/empty labels.
    """
    pass


class NewickSyntaxError(InputError):
    """
    Newick text does not follow the supported grammar.
    """
    pass


class NotPhylogeneticError(PhyloRepError, ValueError):
    def __init__(self, msg: str, report: 'ValidationReport | None' = None, witness: Any = None):
        """
        A structure does not satisfy the axioms required by an operation.

        :param msg: what is wrong.
        :param report: the full validation report, when the failure came out of a validator.
        :param witness: the offending element(s).
        """
        self.report = report
        self.witness = witness
        super().__init__(msg)
