# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module defines exceptions used in the commaSeq package.
"""

class CommaRuntimeError(RuntimeError):
    """
    Generic runtime error of the commaSeq package.
    """

class InternalError(CommaRuntimeError):
    """
    Raised when we found a bug in commaSeq (e.g. an engine invariant is violated).
    """

class InvalidBaseError(CommaRuntimeError):
    """
    raised when a base smaller than 2 is used
    """
    def __init__(self, base):
        super().__init__(f"Invalid base {base!r}; the base must be an integer >= 2.")

class NonPositiveNumberError(CommaRuntimeError):
    """
    raised when a number < 1 is passed where comma sequences need a positive term
    """
    def __init__(self, value):
        super().__init__(f"Expected a positive integer, got {value!r}; comma sequences contain no zero terms.")

class NotABranchPointError(CommaRuntimeError):
    """
    raised when the children of a branch-point are requested for a number with less than two children
    """
    def __init__(self, value, base, numChildren):
        super().__init__(f"{value} is not a branch-point in base {base} (it has {numChildren} children).")

class TerminalNodeError(CommaRuntimeError):
    """
    raised when a transition is requested from the terminal node of the base-3 transition table
    """
    def __init__(self, node):
        super().__init__(f"There is no transition out of the terminal node {node}.")

class UnboundedRunError(CommaRuntimeError):
    """
    raised when a possibly infinite run is started without a term or value ceiling
    """
    def __init__(self, start, base):
        super().__init__(f"The comma sequence starting at {start} in base {base} does not terminate; "
                         f"supply a term or value ceiling.")

class IndexBeyondTerminationError(CommaRuntimeError):
    """
    raised when a term index beyond the end of a terminating sequence is requested
    """
    def __init__(self, index, length):
        self.index = index
        self.length = length
        super().__init__(f"Term {index} requested, but the sequence terminates after {length} terms.")

class InvalidANumberError(CommaRuntimeError):
    """
    raised when an OEIS identifier does not match A followed by six digits
    """
    def __init__(self, aNumber):
        super().__init__(f"Invalid OEIS identifier {aNumber!r}; expected something like 'A121805'.")

class OeisFetchError(CommaRuntimeError):
    """
    raised when a b-file can neither be downloaded nor served from the cache
    """

class BFileParseError(CommaRuntimeError):
    """
    raised when a line of a b-file cannot be parsed
    """
    def __init__(self, aNumber, lineNumber, line, reason):
        self.lineNumber = lineNumber
        super().__init__(f"{aNumber}: cannot parse b-file line {lineNumber} ({line!r}): {reason}")

class GeneratorSpecError(CommaRuntimeError):
    """
    raised when a generator specification string is malformed or names an unknown generator
    """

class ConfigError(CommaRuntimeError):
    """
    raised when a configuration file is invalid
    """
