# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import itertools
import pytest
from commaSeq.core.Exceptions import IndexBeyondTerminationError, UnboundedRunError
from commaSeq.core.Runner import RunStatus, RegionCursor, runNaive, runFast, iterNaive, termAt, sampleTerms, \
    runStats, ratioSeries, decomposeRegions, periodSum, logSpacedIndices
from commaSeq.tests import COMMA_SEQUENCE_FROM_1

# lengths and final terms of the comma sequences started at 1..8 in base 10
BASE10_RUNS = {
    1: (2137453, 99999945),
    2: (194697747222394, 9999999999999918),
    3: (2, 36),
    4: (199900, 9999945),
    5: (19706, 999945),
    6: (209534289952018960, 9999999999999999936),
    7: (15, 936),
    8: (198104936410, 9999999999972),
}

def test_runNaive():
    terms = []
    outcome = runNaive(1, 10, 9, sink=terms.append)
    assert terms == COMMA_SEQUENCE_FROM_1
    assert outcome.status == RunStatus.BUDGET_EXHAUSTED
    assert outcome.length == 9
    assert outcome.finalTerm == 344
    outcome = runNaive(3, 10, 100)
    assert outcome.status == RunStatus.TERMINATED
    assert (outcome.length, outcome.finalTerm, outcome.commaSum) == (2, 36, 33)
    terms = []
    runNaive(1, 2, 9, sink=terms.append)
    assert terms == [1, 4, 5, 8, 9, 12, 13, 16, 17]
    with pytest.raises(UnboundedRunError):
        runNaive(1, 2, None)

def test_runFastFlagship():
    outcome = runFast(1, 10)
    assert outcome.terminated
    assert outcome.length == 2137453
    assert outcome.finalTerm == 99999945
    assert outcome.commaSum == 99999944

def test_runFastTable():
    for start, (length, final) in BASE10_RUNS.items():
        outcome = runFast(start, 10)
        assert outcome.status == RunStatus.TERMINATED
        assert (outcome.length, outcome.finalTerm) == (length, final)
        assert outcome.finalTerm - start == outcome.commaSum

def test_runFastNeedsLimitInBase2():
    with pytest.raises(UnboundedRunError):
        runFast(1, 2)
    outcome = runFast(1, 2, maxTerms=9)
    assert (outcome.status, outcome.length, outcome.finalTerm) == (RunStatus.BUDGET_EXHAUSTED, 9, 17)

def test_valueCeiling():
    # the run stops at the first term >= maxValue
    outcome = runFast(1, 10, maxValue=100)
    assert outcome.status == RunStatus.BUDGET_EXHAUSTED
    assert outcome.finalTerm == 135
    assert outcome.length == 5
    naive = list(itertools.takewhile(lambda n: n < 10**6, iterNaive(1, 10)))
    outcome = runFast(1, 10, maxValue=10**6)
    assert outcome.length == len(naive) + 1
    assert outcome.finalTerm == termAt(1, len(naive) + 1, 10)

def _oracle(start, base, maxTerms):
    terms = []
    naive = runNaive(start, base, maxTerms, sink=terms.append)
    fast = runFast(start, base, maxTerms=maxTerms)
    assert (naive.status, naive.length, naive.finalTerm, naive.commaSum) == \
           (fast.status, fast.length, fast.finalTerm, fast.commaSum)
    indices = sorted({1, len(terms)} | set(range(1, len(terms) + 1, 997)))
    assert sampleTerms(start, indices, base) == [(i, terms[i - 1]) for i in indices]

def test_oracleEquivalence():
    for base in range(3, 9):
        for start in range(1, 31):
            _oracle(start, base, 5000)

@pytest.mark.slow
def test_oracleEquivalenceExhaustive():
    for base in range(3, 13):
        for start in range(1, 101):
            _oracle(start, base, 10**6)

def test_monotonicity():
    prev = None
    for n in itertools.islice(iterNaive(1, 10), 10000):
        if prev is not None:
            assert 1 <= n - prev <= 99
        prev = n

def test_termAt():
    assert termAt(1, 1942, 10) == 99987
    assert termAt(1, 1943, 10) == 100058
    assert termAt(1, 4114, 10) == 199959
    assert termAt(1, 4115, 10) == 200051
    assert termAt(1, 1, 10) == 1
    assert termAt(1, 2137453, 10) == 99999945
    with pytest.raises(IndexBeyondTerminationError) as excinfo:
        termAt(3, 5, 10)
    assert excinfo.value.length == 2

def test_cursorIsResumable():
    cursor = RegionCursor(1, 10)
    seen = []
    assert cursor.advance(targetIndex=1942, observer=lambda i, v: seen.append((i, v))) == \
           RunStatus.BUDGET_EXHAUSTED
    assert cursor.current == 99987
    assert seen[0] == (1, 1)
    assert seen[-1] == (1942, 99987)
    assert cursor.regionLeadingDigit == 9
    assert cursor.regionTop == 99999
    cursor.advance(targetIndex=4115)
    assert (cursor.index, cursor.current) == (4115, 200051)
    assert cursor.advance() == RunStatus.TERMINATED
    assert cursor.outcome().length == 2137453
    # a terminated cursor stays where it is
    assert cursor.advance(targetIndex=10**9) == RunStatus.TERMINATED
    assert cursor.index == 2137453
    seen = []
    RegionCursor(3, 10).advance(observer=lambda i, v: seen.append((i, v)))
    assert seen == [(1, 3), (2, 36)]

def test_runStats():
    stats = runStats(1, 10, ratioPoints=64)
    assert stats.outcome.commaSum == 99999944
    assert abs(stats.meanCommaNumber - 46.78) < 0.01
    assert stats.jumps > 0
    assert stats.ratioSeries[-1][0] == 2137453
    assert runStats(3, 10).meanCommaNumber == 33

def test_ratioSeries():
    series = ratioSeries(1, 10, points=128)
    assert len(series) <= 128
    assert series[0] == (1, 1, 1.0)
    idx, value, ratio = series[-1]
    assert (idx, value) == (2137453, 99999945)
    assert 46.78 <= ratio <= 46.79
    assert [s[0] for s in series] == sorted({s[0] for s in series})

def test_logSpacedIndices():
    assert logSpacedIndices(10, 100) == list(range(1, 11))
    idx = logSpacedIndices(10**6, 50)
    assert idx[0] == 1 and idx[-1] == 10**6
    assert len(idx) <= 50
    assert all(a < b for a, b in zip(idx, idx[1:]))
    # lengths beyond the float range
    idx = logSpacedIndices(10**400, 101)
    assert idx[0] == 1 and idx[-1] == 10**400
    assert len(idx) <= 101
    assert all(a < b for a, b in zip(idx, idx[1:]))
    assert any(190 < len(str(i)) < 210 for i in idx)
    assert 10**400 / idx[-2] < 10**5

def test_periodSum():
    assert periodSum(8, 1, 10) == 460
    assert {periodSum(x, 1, 3) for x in range(3)} == {12}
    assert {periodSum(x, 2, 3) for x in range(3)} == {15}

def test_decomposeRegions():
    regions = decomposeRegions(1, 10)
    assert regions[0].leadingDigit is None
    assert regions[0].firstIndex == 1
    assert regions[-1].lastTerm == 99999945
    assert all(a.lastIndex + 1 == b.firstIndex for a, b in zip(regions, regions[1:]))
    stretch = [r for r in regions if r.firstIndex == 1943][0]
    assert (stretch.leadingDigit, stretch.numDigits) == (1, 6)
    assert (stretch.firstTerm, stretch.lastIndex, stretch.lastTerm) == (100058, 4114, 199959)
    assert stretch.commaCount == 2171
    assert stretch.periodSum == 460
    assert stretch.fullPeriods(10) == 217
    assert stretch.remainderSum(10) == 81
    assert stretch.increase == 99901
    assert regions[0].fullPeriods(10) is None

def test_decomposeRegionsBase2():
    terms = list(itertools.islice(iterNaive(1, 2), 1000))
    regions = decomposeRegions(1, 2, maxTerms=1000)
    assert regions[-1].lastIndex == 1000
    for r in regions:
        assert terms[r.firstIndex - 1] == r.firstTerm
        assert terms[r.lastIndex - 1] == r.lastTerm
        if r.periodSum is not None:
            assert r.leadingDigit == 1
            assert r.periodSum == periodSum(r.firstTerm % 2, 1, 2)
