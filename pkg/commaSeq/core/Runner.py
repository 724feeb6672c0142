# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module contains the sequence engines: a naive reference runner which applies the comma-successor step by
step, and the fast runner built around the RegionCursor class.

Inside a region of constant leading digit f (and constant digit count), every step adds x*b + f where x is the
trailing digit of the current term, and the trailing digits advance by f modulo b. Therefore b consecutive steps
always add the same period sum and the cursor is able to jump over m*b terms with a single big integer
multiplication. Close to the top of a region (and below b**3) the cursor falls back to single steps which compute
the full child set, so that landmines and branch-points are never skipped.
"""

from dataclasses import dataclass, field
import logging
import math
import numpy as np
from commaSeq.core.Exceptions import IndexBeyondTerminationError, InternalError, UnboundedRunError
from commaSeq.core.Numeral import checkBase, checkPositive, placeOfLeadingDigit
from commaSeq.core.Stepper import childrenWithPlace

logger = logging.getLogger(__name__)

_MANTISSA_SCALE = 10**12

class RunStatus:
    """
    This class defines an enum for the state of a run.
    """
    RUNNING = "Running"
    TERMINATED = "Terminated"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    CHOICES_EXHAUSTED = "ChoicesExhausted"

@dataclass(frozen=True)
class RunOutcome:
    """
    The result of running a comma sequence. The final term equals start + commaSum.
    """
    start: int
    base: int
    status: str
    length: int
    finalTerm: int
    commaSum: int

    @property
    def terminated(self):
        """
        :return: True if the run ended at a landmine
        """
        return self.status == RunStatus.TERMINATED

@dataclass(frozen=True)
class RegionStretch:
    """
    A maximal stretch of consecutive terms with the same leading digit and digit count. Terms below b**3 are
    collected in an irregular prefix stretch with leadingDigit None.
    """
    leadingDigit: object
    numDigits: object
    firstIndex: int
    lastIndex: int
    firstTerm: int
    lastTerm: int
    periodSum: object

    @property
    def commaCount(self):
        """
        :return: number of comma-numbers between the first and the last term of the stretch
        """
        return self.lastIndex - self.firstIndex

    @property
    def increase(self):
        """
        :return: lastTerm - firstTerm
        """
        return self.lastTerm - self.firstTerm

    def fullPeriods(self, base):
        """
        :param base: the base of the run
        :return: number of complete periods of b comma-numbers, None for the irregular prefix
        """
        if self.periodSum is None:
            return None
        return self.commaCount // base

    def remainderSum(self, base):
        """
        :param base: the base of the run
        :return: the increase not covered by complete periods, None for the irregular prefix
        """
        if self.periodSum is None:
            return None
        return self.increase - self.fullPeriods(base) * self.periodSum

@dataclass
class RunStats:
    """
    Statistics of a run.
    """
    outcome: RunOutcome
    meanCommaNumber: object
    jumps: int = 0
    singleSteps: int = 0
    ratioSeries: list = field(default_factory=list)

def periodSum(x, f, base):
    """
    Returns the increase of b consecutive terms in a region with leading digit f, starting with a term whose
    trailing digit is x.

    :param x: the trailing digit of the first term
    :param f: the leading digit of the region
    :param base: the base
    :return: b*f + b*sum_{j<b} ((x + j*f) mod b)
    """
    return base*f + base*sum((x + j*f) % base for j in range(base))

class RegionCursor:
    """
    Resumable position inside a comma sequence (or inside any path of the child graph).

    The cursor owns mutable state and must not be shared between threads.
    """

    def __init__(self, start, base, startIndex=1, recordRegions=False):
        """
        Constructor.

        :param start: the first term
        :param base: the base
        :param startIndex: the index assigned to start
        :param recordRegions: if True, the cursor keeps a list of RegionStretch instances
        """
        checkBase(base)
        checkPositive(start)
        self._base = base
        self._b2 = base*base
        self._b3 = self._b2*base
        self._start = start
        self._current = start
        self._index = startIndex
        self._commaSum = 0
        self._place, self._numDigits = placeOfLeadingDigit(start, base)
        self._status = RunStatus.RUNNING
        self._periodSums = {}
        self._reportedIndex = None
        self.jumps = 0
        self.singleSteps = 0
        self._recordRegions = recordRegions
        self._regions = []
        self._open = None
        if recordRegions:
            self._open = self._newStretch()

    @property
    def base(self):
        """
        :return: the base
        """
        return self._base

    @property
    def start(self):
        """
        :return: the first term
        """
        return self._start

    @property
    def current(self):
        """
        :return: the current term
        """
        return self._current

    @property
    def index(self):
        """
        :return: the index of the current term
        """
        return self._index

    @property
    def commaSum(self):
        """
        :return: the sum of all comma-numbers used so far
        """
        return self._commaSum

    @property
    def status(self):
        """
        :return: a RunStatus constant
        """
        return self._status

    @property
    def regionLeadingDigit(self):
        """
        :return: the leading digit f of the current term
        """
        return self._current // self._place

    @property
    def regionTop(self):
        """
        :return: the largest number with leading digit f and the digit count of the current term
        """
        return (self.regionLeadingDigit + 1) * self._place - 1

    def regions(self):
        """
        Returns the region stretches seen so far; the last entry ends at the current term.

        :return: list of RegionStretch instances
        """
        if not self._recordRegions:
            raise InternalError("regions have not been recorded by this cursor")
        return self._regions + [self._closeStretch(self._open, self._index, self._current)]

    def outcome(self):
        """
        :return: a RunOutcome snapshot of the current state
        """
        return RunOutcome(start=self._start, base=self._base, status=self._status, length=self._index,
                          finalTerm=self._current, commaSum=self._commaSum)

    def _regionKey(self, value):
        if value < self._b3:
            return None
        return (value // self._place, self._numDigits)

    def _newStretch(self):
        key = self._regionKey(self._current)
        if key is None:
            return (None, None, self._index, self._current, None)
        return (key[0], key[1], self._index, self._current, self._periodSum(self._current % self._base, key[0]))

    @staticmethod
    def _closeStretch(stretch, lastIndex, lastTerm):
        f, m, firstIndex, firstTerm, psum = stretch
        return RegionStretch(leadingDigit=f, numDigits=m, firstIndex=firstIndex, lastIndex=lastIndex,
                             firstTerm=firstTerm, lastTerm=lastTerm, periodSum=psum)

    def _periodSum(self, x, f):
        # all trailing digits of a stretch lie in one orbit x + f*Z mod b, which fixes the period sum
        key = (f, x % math.gcd(f, self._base))
        res = self._periodSums.get(key)
        if res is None:
            res = periodSum(x, f, self._base)
            self._periodSums[key] = res
        return res

    def _report(self, observer):
        if observer is not None and self._reportedIndex != self._index:
            observer(self._index, self._current)
            self._reportedIndex = self._index

    def _finish(self, status):
        self._status = status
        logger.internal("run from %d (base %d) stops at index %d: %s", self._start, self._base, self._index, status)
        return status

    def _isLandmine(self):
        return not childrenWithPlace(self._current, self._place, self._base)

    def advance(self, targetIndex=None, maxValue=None, chooser=None, observer=None):
        """
        Advance the cursor until one of the following happens:

        - the current term is a landmine (RunStatus.TERMINATED)
        - the index reaches targetIndex or the current term is >= maxValue (RunStatus.BUDGET_EXHAUSTED)
        - the chooser returns None at a branch-point (RunStatus.CHOICES_EXHAUSTED)

        The cursor can be advanced again afterwards with larger limits, unless it has terminated.

        :param targetIndex: optional index to stop at
        :param maxValue: optional value ceiling; the first term >= maxValue is never jumped over
        :param chooser: optional callable(index, value, children) returning the position of the child to be taken
                        at branch-points or None to stop; if not given, the smaller child is taken
        :param observer: optional callable(index, value) called at every position the cursor visits (jumped over
                         terms are not visited)
        :return: the new status
        """
        if self._status == RunStatus.TERMINATED:
            return self._status
        self._status = RunStatus.RUNNING
        base = self._base
        b2 = self._b2
        self._report(observer)
        while True:
            n = self._current
            if (targetIndex is not None and self._index >= targetIndex) or (maxValue is not None and n >= maxValue):
                return self._finish(RunStatus.TERMINATED if self._isLandmine() else RunStatus.BUDGET_EXHAUSTED)
            if n >= self._b3:
                f = n // self._place
                top = (f + 1)*self._place - 1
                if top - n > 2*b2:
                    upper = top - 2*b2
                    if maxValue is not None:
                        upper = min(upper, maxValue - b2)
                    psum = self._periodSum(n % base, f)
                    mult = (upper - n) // psum
                    if targetIndex is not None:
                        mult = min(mult, (targetIndex - self._index) // base)
                    if mult > 0:
                        nxt = n + mult*psum
                        if nxt // self._place != f:
                            raise InternalError(f"jump from {n} by {mult}*{psum} left the region of digit {f}")
                        self._current = nxt
                        self._index += mult*base
                        self._commaSum += mult*psum
                        self.jumps += 1
                        logger.internal("jump by %d terms to %d", mult*base, nxt)
                        self._report(observer)
                        continue
            children = childrenWithPlace(n, self._place, base)
            if not children:
                return self._finish(RunStatus.TERMINATED)
            if len(children) == 1 or chooser is None:
                nxt = children[0][0]
            else:
                choice = chooser(self._index, n, tuple(c for c, _ in children))
                if choice is None:
                    return self._finish(RunStatus.CHOICES_EXHAUSTED)
                nxt = children[choice][0]
            self._current = nxt
            self._index += 1
            self._commaSum += nxt - n
            self.singleSteps += 1
            while nxt >= self._place*base:
                self._place *= base
                self._numDigits += 1
            if self._recordRegions:
                f, m = self._open[0], self._open[1]
                key = self._regionKey(nxt)
                if key != ((f, m) if f is not None else None):
                    self._regions.append(self._closeStretch(self._open, self._index - 1, n))
                    self._open = self._newStretch()
            self._report(observer)

def iterNaive(start, base, chooser=None):
    """
    Generator yielding the terms of the comma sequence starting at start, one by one. The generator is exhausted
    after the landmine ending the sequence; in base 2 it never ends.

    With a chooser, any path of the child graph can be followed instead (see RegionCursor.advance); the generator
    also ends when the chooser returns None.

    :param start: the first term
    :param base: the base
    :param chooser: optional callable(index, value, children) for branch-points
    :return: generator of integers
    """
    checkBase(base)
    checkPositive(start)
    n = start
    index = 1
    place = placeOfLeadingDigit(n, base)[0]
    while True:
        yield n
        children = childrenWithPlace(n, place, base)
        if not children:
            return
        if len(children) == 1 or chooser is None:
            n = children[0][0]
        else:
            choice = chooser(index, n, tuple(c for c, _ in children))
            if choice is None:
                return
            n = children[choice][0]
        index += 1
        while n >= place*base:
            place *= base

def runNaive(start, base, maxTerms, sink=None):
    """
    Reference runner: applies the comma-successor step by step.

    :param start: the first term
    :param base: the base
    :param maxTerms: the maximal number of terms to be emitted (None for no limit, not allowed in base 2)
    :param sink: optional callable receiving every term
    :return: a RunOutcome instance
    """
    _checkBounded(start, base, maxTerms, None)
    if maxTerms is not None:
        checkPositive(maxTerms)
    length = 0
    last = None
    status = RunStatus.TERMINATED
    for n in iterNaive(start, base):
        if maxTerms is not None and length >= maxTerms:
            status = RunStatus.BUDGET_EXHAUSTED
            break
        length += 1
        last = n
        if sink is not None:
            sink(n)
    logger.debug("naive run from %d (base %d): %s after %d terms", start, base, status, length)
    return RunOutcome(start=start, base=base, status=status, length=length, finalTerm=last, commaSum=last - start)

def _checkBounded(start, base, maxTerms, maxValue):
    if base == 2 and maxTerms is None and maxValue is None:
        raise UnboundedRunError(start, base)

def runFast(start, base, maxTerms=None, maxValue=None):
    """
    Fast runner: produces the same length and final term as runNaive without visiting every term.

    :param start: the first term
    :param base: the base
    :param maxTerms: optional maximal number of terms
    :param maxValue: optional value ceiling; the run stops at the first term >= maxValue
    :return: a RunOutcome instance
    """
    checkBase(base)
    _checkBounded(start, base, maxTerms, maxValue)
    cursor = RegionCursor(start, base)
    cursor.advance(targetIndex=maxTerms, maxValue=maxValue)
    logger.debug("fast run from %d (base %d): %s after %d terms (%d jumps, %d single steps)",
                 start, base, cursor.status, cursor.index, cursor.jumps, cursor.singleSteps)
    return cursor.outcome()

def termAt(start, n, base):
    """
    Returns the n-th term of the comma sequence starting at start.

    :param start: the first term
    :param n: the (1-based) index
    :param base: the base
    :return: an integer
    """
    checkPositive(n)
    cursor = RegionCursor(start, base)
    cursor.advance(targetIndex=n)
    if cursor.index < n:
        raise IndexBeyondTerminationError(n, cursor.index)
    return cursor.current

def sampleTerms(start, indices, base):
    """
    Returns exact terms at the given indices using a single cursor. Indices beyond the end of a terminating
    sequence are dropped.

    :param start: the first term
    :param indices: iterable of positive indices
    :param base: the base
    :return: list of (index, term) tuples in ascending index order
    """
    cursor = RegionCursor(start, base)
    res = []
    for idx in sorted(set(indices)):
        checkPositive(idx)
        cursor.advance(targetIndex=idx)
        if cursor.index < idx:
            break
        res.append((idx, cursor.current))
    return res

def logSpacedIndices(length, points):
    """
    Returns at most points logarithmically spaced indices between 1 and length (both included). The exponents are
    spaced in floating point, the indices are formed in integer arithmetic, so lengths far beyond the float range
    are supported.

    :param length: the largest index
    :param points: the maximal number of indices
    :return: ascending list of integers
    """
    checkPositive(length)
    checkPositive(points)
    if length <= points:
        return list(range(1, length + 1))
    res = set()
    for e in np.linspace(0.0, math.log10(length), num=points):
        k = int(e)
        mantissa = int(round(10**(float(e) - k) * _MANTISSA_SCALE))
        res.add(min(length, max(1, 10**k * mantissa // _MANTISSA_SCALE)))
    res = sorted(res)
    res[-1] = length
    return res

def ratioSeries(start, base, points=4096, maxTerms=None, maxValue=None):
    """
    Returns the sampled (n, a(n)/n) series of a run.

    :param start: the first term
    :param base: the base
    :param points: maximal number of samples (logarithmically spaced)
    :param maxTerms: optional term budget
    :param maxValue: optional value ceiling
    :return: list of (index, term, ratio) tuples
    """
    outcome = runFast(start, base, maxTerms=maxTerms, maxValue=maxValue)
    samples = sampleTerms(start, logSpacedIndices(outcome.length, points), base)
    return [(idx, value, value / idx) for idx, value in samples]

def runStats(start, base, maxTerms=None, maxValue=None, ratioPoints=0):
    """
    Runs the fast engine and collects statistics.

    :param start: the first term
    :param base: the base
    :param maxTerms: optional term budget
    :param maxValue: optional value ceiling
    :param ratioPoints: if > 0, a ratio series with at most this many points is added
    :return: a RunStats instance
    """
    checkBase(base)
    _checkBounded(start, base, maxTerms, maxValue)
    cursor = RegionCursor(start, base)
    cursor.advance(targetIndex=maxTerms, maxValue=maxValue)
    outcome = cursor.outcome()
    mean = outcome.commaSum / (outcome.length - 1) if outcome.length > 1 else None
    res = RunStats(outcome=outcome, meanCommaNumber=mean, jumps=cursor.jumps, singleSteps=cursor.singleSteps)
    if ratioPoints > 0:
        samples = sampleTerms(start, logSpacedIndices(outcome.length, ratioPoints), base)
        res.ratioSeries = [(idx, value, value / idx) for idx, value in samples]
    return res

def decomposeRegions(start, base, maxTerms=None, maxValue=None):
    """
    Partitions a run into its region stretches.

    :param start: the first term
    :param base: the base
    :param maxTerms: optional term budget
    :param maxValue: optional value ceiling
    :return: list of RegionStretch instances
    """
    checkBase(base)
    _checkBounded(start, base, maxTerms, maxValue)
    cursor = RegionCursor(start, base, recordRegions=True)
    cursor.advance(targetIndex=maxTerms, maxValue=maxValue)
    return cursor.regions()
