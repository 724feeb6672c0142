# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module navigates the child graph. Paths are described by choice strings which are consumed at
branch-points ("0" selects the smaller child, "1" the larger one). Between branch-points the walks use the
RegionCursor, so that branch-point indices are exact even for astronomically long paths.

It also contains the base-2 closed forms and the unique infinite path of the base-3 child graph.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import itertools
import logging
import re
from commaSeq.core.Base3 import BASE as BASE3, TransitionNode
from commaSeq.core.Exceptions import NonPositiveNumberError, UnboundedRunError
from commaSeq.core.Numeral import checkBase, checkPositive
from commaSeq.core.Runner import RegionCursor, RunStatus, iterNaive

logger = logging.getLogger(__name__)

class PathOutcome:
    """
    This class defines an enum for the ways a walk through the child graph can end.
    """
    LANDMINE = "Landmine"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    CHOICES_EXHAUSTED = "ChoicesExhausted"

    @staticmethod
    def fromRunStatus(status):
        """
        converts a RunStatus constant to the corresponding path outcome

        :param status: a RunStatus constant
        :return: a PathOutcome constant
        """
        return {RunStatus.TERMINATED: PathOutcome.LANDMINE,
                RunStatus.BUDGET_EXHAUSTED: PathOutcome.BUDGET_EXHAUSTED,
                RunStatus.CHOICES_EXHAUSTED: PathOutcome.CHOICES_EXHAUSTED}[status]

POLICY_EXHAUSTIVE = "exhaustive"
POLICY_LONGEST_SURVIVOR = "longest-survivor"

class ChoiceString:
    """
    An ordered sequence of bits consumed at branch-points.
    """

    def __init__(self, bits=()):
        self._bits = tuple(bits)
        if any(b not in (0, 1) for b in self._bits):
            raise ValueError(f"choice bits must be 0 or 1, got {self._bits!r}")
        self.consumedCount = 0

    @staticmethod
    def parse(text):
        """
        Parses a text of 0/1 characters; whitespace is ignored.

        :param text: a string like "0011 1001"
        :return: a ChoiceString instance
        """
        text = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"[01]*", text):
            raise ValueError(f"invalid choice string {text!r}")
        return ChoiceString(int(c) for c in text)

    @staticmethod
    def zeros(count):
        """
        :param count: number of bits
        :return: a ChoiceString which always selects the smaller child
        """
        return ChoiceString((0,)*count)

    @property
    def bits(self):
        """
        :return: the bits as a tuple
        """
        return self._bits

    def take(self):
        """
        Consumes the next bit.

        :return: 0, 1 or None if all bits have been consumed
        """
        if self.consumedCount >= len(self._bits):
            return None
        self.consumedCount += 1
        return self._bits[self.consumedCount - 1]

    def __len__(self):
        return len(self._bits)

    def __str__(self):
        return "".join(str(b) for b in self._bits)

@dataclass(frozen=True)
class BranchPointHit:
    """
    A branch-point passed by a walk and the bit chosen there.
    """
    index: int
    value: int
    bit: int

@dataclass
class PathReport:
    """
    The result of a walk through the child graph. Every entry of branchPointsHit is a branch-point.
    """
    start: int
    base: int
    outcome: str
    length: int
    finalTerm: int
    branchPointsHit: list = field(default_factory=list)

    @property
    def choices(self):
        """
        :return: the bits chosen so far as a string
        """
        return "".join(str(h.bit) for h in self.branchPointsHit)

@dataclass
class ExplorationReport:
    """
    The result of exploreTree. In exhaustive mode, paths contains one report per leaf of the explored tree; in
    survivor mode it contains the paths which passed the largest number of branch-points.
    """
    root: int
    base: int
    policy: str
    paths: list = field(default_factory=list)
    branchPoints: int = 0
    deadPaths: int = 0

    def longest(self):
        """
        :return: the PathReport with the largest length (None if there are no paths)
        """
        return max(self.paths, key=lambda p: p.length, default=None)

class _ChoiceConsumer:
    def __init__(self, choices):
        self.choices = choices
        self.hits = []

    def __call__(self, index, value, children): # pylint: disable=unused-argument
        bit = 0 if self.choices is None else self.choices.take()
        if bit is None:
            return None
        self.hits.append(BranchPointHit(index, value, bit))
        return bit

def walkWithChoices(start, base, choices=None, maxTerms=None, maxValue=None):
    """
    Walks the child graph from start. Nodes with a single child continue to it, at branch-points the next bit of
    choices is consumed. Without choices the smaller child is always taken, which reproduces the comma sequence.

    :param start: the first term
    :param base: the base
    :param choices: a ChoiceString instance or None
    :param maxTerms: optional term budget
    :param maxValue: optional value ceiling
    :return: a PathReport instance
    """
    checkBase(base)
    if base == 2 and maxTerms is None and maxValue is None:
        raise UnboundedRunError(start, base)
    consumer = _ChoiceConsumer(choices)
    cursor = RegionCursor(start, base)
    status = cursor.advance(targetIndex=maxTerms, maxValue=maxValue, chooser=consumer)
    logger.debug("walk from %d: %s at index %d after %d branch-points", start, status, cursor.index,
                 len(consumer.hits))
    return PathReport(start=start, base=base, outcome=PathOutcome.fromRunStatus(status), length=cursor.index,
                      finalTerm=cursor.current, branchPointsHit=consumer.hits)

def iterPath(start, base, choices=None):
    """
    Generator yielding every term of a path of the child graph (see walkWithChoices).

    :param start: the first term
    :param base: the base
    :param choices: a ChoiceString instance or None
    :return: generator of integers
    """
    return iterNaive(start, base, chooser=_ChoiceConsumer(choices))

class _Alternator:
    def __init__(self, hits):
        self.nextBit = 0
        self.hits = hits

    def __call__(self, index, value, children): # pylint: disable=unused-argument
        bit = self.nextBit
        self.nextBit ^= 1
        if self.hits is not None:
            self.hits.append(BranchPointHit(index, value, bit))
        return bit

def base3InfinitePath(count, hits=None):
    """
    Streams the unique infinite path of the base-3 child graph starting at 1. At branch-points the path
    alternately chooses the lower and the higher child, starting with the lower one.

    :param count: number of terms
    :param hits: optional list receiving a BranchPointHit for every branch-point passed
    :return: iterator of integers
    """
    checkPositive(count)
    return itertools.islice(iterNaive(1, BASE3, chooser=_Alternator(hits)), count)

def base3BranchPoint(i):
    """
    :param i: i >= 0
    :return: the base-3 branch-point 1 2^i 11 = 2*3^(i+2) - 5
    """
    return 2*BASE3**(i + 2) - 5

def base3Landmine(i):
    """
    :param i: i >= 0
    :return: the base-3 landmine 2^i 11 = 3^(i+2) - 5
    """
    return BASE3**(i + 2) - 5

def _stairwayExponent(value):
    # g with value = 2*3^g - 5, or None
    if value < 13 or (value + 5) % 2:
        return None
    v = (value + 5) // 2
    g = 0
    while v % BASE3 == 0:
        v //= BASE3
        g += 1
    return g if v == 1 else None

def traceStairway(k, loops=1):
    """
    Follows the infinite base-3 path from 3^(4k+2) + 3 through the transition graph enlarged by the branch-points.
    The branch-points 2*3^g - 5 with g = 1 mod 4 are left through the lower child, those with g = 2 mod 4 through
    the higher child.

    Events are ("node", s, t) when the path arrives at 3^(4h+s) + t, ("branch", g mod 4, commaNumber) when it
    leaves the branch-point 2*3^g - 5 and ("end",) when the path stops.

    :param k: exponent block of the start
    :param loops: number of loops through the graph
    :return: list of event tuples
    """
    start = TransitionNode(2, 3)
    e = 4*k + 2
    events = [("node", start.s, start.t)]
    cursor = RegionCursor(start.value(k), BASE3)

    def chooser(index, value, children): # pylint: disable=unused-argument
        g = _stairwayExponent(value)
        bit = None if g is None else {1: 0, 2: 1}.get(g % 4)
        if bit is not None:
            events.append(("branch", g % 4, children[bit] - value))
        return bit

    for _ in range(4*loops):
        power = BASE3**(e + 1)
        status = cursor.advance(maxValue=power, chooser=chooser)
        if status != RunStatus.BUDGET_EXHAUSTED:
            events.append(("end",))
            break
        e += 1
        events.append(("node", e % 4, cursor.current - power))
    return events

def base2Sequence(start, count):
    """
    Closed forms of the two base-2 comma sequences: from 1 the terms are 1 followed by all 4k, 4k+1 (k >= 1);
    from 2 the terms are all 4k+2, 4k+3 (k >= 0).

    :param start: 1 or 2
    :param count: number of terms
    :return: iterator of integers
    """
    checkPositive(count)
    if start == 1:
        terms = itertools.chain((1,), itertools.chain.from_iterable((4*k, 4*k + 1) for k in itertools.count(1)))
    elif start == 2:
        terms = itertools.chain.from_iterable((4*k + 2, 4*k + 3) for k in itertools.count(0))
    else:
        raise ValueError(f"the base-2 closed forms start at 1 or 2, not at {start}")
    return itertools.islice(terms, count)

class _StopAtBranchPoint:
    def __init__(self):
        self.children = None

    def __call__(self, index, value, children): # pylint: disable=unused-argument
        self.children = children

def walkSegment(value, index, base, maxValue):
    """
    Walks from value (at the given index) to the next branch-point, landmine or value ceiling.

    :param value: the first term of the segment
    :param index: its index within the path
    :param base: the base
    :param maxValue: optional value ceiling
    :return: tuple (status, index, value, children) where children is the pair of children at a branch-point
    """
    stop = _StopAtBranchPoint()
    cursor = RegionCursor(value, base, startIndex=index)
    status = cursor.advance(maxValue=maxValue, chooser=stop)
    return status, cursor.index, cursor.current, stop.children

def exploreTree(root, base, maxValue=None, policy=POLICY_EXHAUSTIVE, maxBranchPoints=None, workers=0):
    """
    Explores the tree of the child graph below root, forking at every branch-point.

    The work items are kept on an explicit stack. With workers > 1, the segments between branch-points are
    walked in a process pool, batches of up to workers items at a time.

    :param root: the root (usually a number which is not a comma-child)
    :param base: the base
    :param maxValue: optional value ceiling for every path
    :param policy: POLICY_EXHAUSTIVE (report every leaf) or POLICY_LONGEST_SURVIVOR (report the paths passing the
                   largest number of branch-points)
    :param maxBranchPoints: optional maximal number of branch-points per path; paths reaching it are reported
                            with outcome ChoicesExhausted
    :param workers: number of worker processes (0 or 1 for serial execution)
    :return: an ExplorationReport instance
    """
    checkBase(base)
    if not isinstance(root, int) or root < 1:
        raise NonPositiveNumberError(root)
    if policy not in (POLICY_EXHAUSTIVE, POLICY_LONGEST_SURVIVOR):
        raise ValueError(f"unknown exploration policy {policy!r}")
    if base == 2 and maxValue is None:
        raise UnboundedRunError(root, base)
    report = ExplorationReport(root=root, base=base, policy=policy)
    leaves = []
    stack = [(root, 1, ())]
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while stack:
            batch = [stack.pop() for _ in range(min(len(stack), max(1, workers)))]
            args = ([item[0] for item in batch], [item[1] for item in batch],
                    [base]*len(batch), [maxValue]*len(batch))
            if executor is None:
                results = map(walkSegment, *args)
            else:
                results = executor.map(walkSegment, *args)
            for (_, _, hits), (status, index, value, children) in zip(batch, results):
                if status != RunStatus.CHOICES_EXHAUSTED:
                    leaves.append(PathReport(start=root, base=base, outcome=PathOutcome.fromRunStatus(status),
                                             length=index, finalTerm=value, branchPointsHit=list(hits)))
                    continue
                if maxBranchPoints is not None and len(hits) >= maxBranchPoints:
                    leaves.append(PathReport(start=root, base=base, outcome=PathOutcome.CHOICES_EXHAUSTED,
                                             length=index, finalTerm=value, branchPointsHit=list(hits)))
                    continue
                report.branchPoints += 1
                logger.internal("branch-point %d at index %d after choices %s", value, index,
                                "".join(str(h.bit) for h in hits))
                for bit in (1, 0):
                    stack.append((children[bit], index + 1, hits + (BranchPointHit(index, value, bit),)))
    finally:
        if executor is not None:
            executor.shutdown()
    if policy == POLICY_EXHAUSTIVE:
        report.paths = sorted(leaves, key=lambda p: p.choices)
    else:
        depth = max((len(p.branchPointsHit) for p in leaves), default=0)
        report.paths = sorted((p for p in leaves if len(p.branchPointsHit) == depth), key=lambda p: p.choices)
        report.deadPaths = len(leaves) - len(report.paths)
    logger.info("explored tree of %d (base %d): %d branch-points, %d leaves", root, base, report.branchPoints,
                len(leaves))
    return report
