# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
Base 3 specifics: the comma-number predictor with its table of exceptions, the transition table between numbers
close to powers of 3 and empirical checks that all base-3 comma sequences terminate.

A node (s, t) of the transition table stands for the numbers 3^(4h+s) + t. A sequence containing such a number
either ends at the landmine 3^(4h+s+1) - 5 or contains the number 3^(4h+s+1) + t' given by the table.
"""

from collections import Counter
from dataclasses import dataclass, field
import logging
import re
from commaSeq.core.Exceptions import InternalError, TerminalNodeError
from commaSeq.core.Numeral import checkPositive, numDigits, toDigitString
from commaSeq.core.Runner import RegionCursor, RunStatus, runFast
from commaSeq.core.Stepper import CommaNumber, commaSuccessor

logger = logging.getLogger(__name__)

BASE = 3

OFFSETS = (0, 2, 3, 6)

# (s, t) -> (s+1 mod 4, t') or None for the landmine 3^(4h+s+1) - 5
TRANSITIONS = {
    (0, 0): (1, 2),
    (0, 2): None,
    (0, 3): (1, 0),
    (0, 6): (1, 6),
    (1, 0): None,
    (1, 2): (2, 3),
    (1, 3): (2, 2),
    (1, 6): (2, 0),
    (2, 0): None,
    (2, 2): (3, 6),
    (2, 3): (3, 2),
    (2, 6): (3, 3),
    (3, 0): (0, 0),
    (3, 2): None,
    (3, 3): (0, 3),
    (3, 6): (0, 6),
}

# the exceptions to the d_m d_1 rule; rows are checked in this order (comma-numbers 12, 22, 21, 11, 21 ternary)
_EXCEPTIONS = (
    (re.compile(r"12+1"), 5),
    (re.compile(r"12*[012]2"), 8),
    (re.compile(r"2|22"), 7),
    (re.compile(r"2*1"), 4),
    (re.compile(r"2*[012]2"), 7),
    (re.compile(r"2*11"), None),
)

@dataclass(frozen=True)
class TransitionNode:
    """
    A node (s, t) of the transition table or the terminal node.
    """
    s: object = None
    t: object = None
    terminal: bool = False

    def __post_init__(self):
        if not self.terminal and (self.s not in range(4) or self.t not in OFFSETS):
            raise ValueError(f"({self.s}, {self.t}) is not a node of the base-3 transition table")

    def value(self, h):
        """
        :param h: the exponent block
        :return: the number 3^(4h+s) + t represented by this node
        """
        if self.terminal:
            raise TerminalNodeError(self)
        return BASE**(4*h + self.s) + self.t

    def __str__(self):
        return "end" if self.terminal else f"({self.s}, {self.t})"

END = TransitionNode(terminal=True)

@dataclass(frozen=True)
class PredictorMismatch:
    """
    A number where the predictor and the stepper disagree (None means no successor).
    """
    n: int
    predicted: object
    actual: object

@dataclass(frozen=True)
class TransitionMismatch:
    """
    A table entry which does not match the actual sequence for exponent block h.
    """
    node: TransitionNode
    h: int
    expected: TransitionNode
    status: str
    finalTerm: int

@dataclass
class TerminationReport:
    """
    Summary of base3AllTerminate.
    """
    xMax: int
    runs: int = 0
    unterminated: list = field(default_factory=list)
    irregularFinals: list = field(default_factory=list)
    finalExponents: Counter = field(default_factory=Counter)
    lengths: Counter = field(default_factory=Counter)
    longest: tuple = (0, 0)

    @property
    def allTerminate(self):
        """
        :return: True if every run ended at a landmine of the form 3^h - 5
        """
        return not self.unterminated and not self.irregularFinals

def predictCommaNumber(n):
    """
    Predicts the comma-number of n in base 3: d_m d_1 (read as a ternary number) with the following exceptions
    (ternary notation)::

        1 2^i 1     (i >= 1)        -> 12
        1 2^i j 2   (i >= 0)        -> 22
        2 or 22                     -> 21
        2^i 1       (i >= 0)        -> 11
        2^i j 2     (i >= 0)        -> 21
        2^i 11      (i >= 0)        -> none (landmine)

    :param n: a positive integer
    :return: a CommaNumber instance or None
    """
    checkPositive(n)
    digits = toDigitString(n, BASE)
    for pattern, cn in _EXCEPTIONS:
        if pattern.fullmatch(digits):
            return None if cn is None else CommaNumber(cn, BASE)
    return CommaNumber(int(digits[-1])*BASE + int(digits[0]), BASE)

def verifyPredictor(limit):
    """
    Compares predictCommaNumber with the comma-successor for all n <= limit.

    :param limit: the upper limit (inclusive)
    :return: list of PredictorMismatch instances (expected to be empty)
    """
    checkPositive(limit)
    res = []
    for n in range(1, limit + 1):
        s = commaSuccessor(n, BASE)
        actual = None if s is None else s - n
        cn = predictCommaNumber(n)
        predicted = None if cn is None else cn.value
        if predicted != actual:
            res.append(PredictorMismatch(n, predicted, actual))
    if res:
        logger.warning("comma-number predictor fails for %d numbers <= %d, first at %d", len(res), limit, res[0].n)
    return res

def transitionFrom(node):
    """
    Returns the successor of a node in the transition table.

    :param node: a non-terminal TransitionNode
    :return: a TransitionNode (possibly END)
    """
    if node.terminal:
        raise TerminalNodeError(node)
    nxt = TRANSITIONS[(node.s, node.t)]
    return END if nxt is None else TransitionNode(*nxt)

def verifyTransitions(hMax):
    """
    Runs the actual sequences from 3^(4h+s) + t for all non-terminal nodes and all h <= hMax with 4h+s >= 3 and
    checks that they arrive where the transition table says.

    :param hMax: the largest exponent block
    :return: list of TransitionMismatch instances (expected to be empty)
    """
    checkPositive(hMax)
    res = []
    for (s, t) in TRANSITIONS:
        node = TransitionNode(s, t)
        expected = transitionFrom(node)
        for h in range(hMax + 1):
            e = 4*h + s
            if e < 3:
                continue
            power = BASE**(e + 1)
            outcome = runFast(node.value(h), BASE, maxValue=power)
            if expected.terminal:
                ok = outcome.terminated and outcome.finalTerm == power - 5
            else:
                ok = not outcome.terminated and outcome.finalTerm == power + expected.t
            if not ok:
                res.append(TransitionMismatch(node, h, expected, outcome.status, outcome.finalTerm))
    return res

def traceTransitions(s, t, h, maxPowers=1000):
    """
    Follows the comma sequence from 3^(4h+s) + t and lists the nodes it passes.

    :param s: exponent residue
    :param t: offset
    :param h: exponent block
    :param maxPowers: safety limit for the number of powers of 3 to be passed
    :return: list of TransitionNode instances, ending with END
    """
    node = TransitionNode(s, t)
    e = 4*h + s
    cursor = RegionCursor(node.value(h), BASE)
    res = [node]
    for _ in range(maxPowers):
        power = BASE**(e + 1)
        status = cursor.advance(maxValue=power)
        if status == RunStatus.TERMINATED:
            if cursor.current != power - 5:
                raise InternalError(f"sequence from {node} (h={h}) ended at {cursor.current}, not at 3^{e+1}-5")
            res.append(END)
            return res
        e += 1
        res.append(TransitionNode(e % 4, cursor.current - power))
    return res

def _powerOf3Exponent(n):
    h = 0
    while n % BASE == 0:
        n //= BASE
        h += 1
    return h if n == 1 else None

def base3AllTerminate(xMax):
    """
    Runs the comma sequences from all x <= xMax and checks that all end at a landmine of the form 3^h - 5.

    :param xMax: the largest start
    :return: a TerminationReport instance
    """
    checkPositive(xMax)
    report = TerminationReport(xMax=xMax)
    for x in range(1, xMax + 1):
        outcome = runFast(x, BASE, maxValue=BASE**(numDigits(x, BASE) + 64))
        report.runs += 1
        if not outcome.terminated:
            report.unterminated.append(x)
            continue
        h = _powerOf3Exponent(outcome.finalTerm + 5)
        if h is None:
            report.irregularFinals.append((x, outcome.finalTerm))
        else:
            report.finalExponents[h] += 1
        report.lengths[outcome.length] += 1
        if outcome.length > report.longest[1]:
            report.longest = (x, outcome.length)
    logger.debug("base 3: %d runs, %d unterminated, %d irregular", report.runs, len(report.unterminated),
                 len(report.irregularFinals))
    return report
