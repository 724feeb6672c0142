# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import math
import pytest
from sympy import Poly
from commaSeq.core.Kangaroo import EULER_GAMMA, survivalStarts, survivalCount, gfExpression, gfCoefficients, \
    oddDivisorCount, isTriangular, oddDivisorPartialSum, asymptoticEstimate, naiveModelLog10, survivalReport, \
    survivalSweep
from commaSeq.tests import DEATH_COUNTS

def test_survivalStarts():
    starts = survivalStarts(10, 2)
    assert len(starts) == 100
    assert starts[0] == 9900
    assert starts[-1] == 9999
    with pytest.raises(ValueError):
        survivalStarts(10, 1)

def test_survivalCount():
    assert survivalCount(10) == 12
    assert survivalCount(2) == 0
    assert survivalCount(5) == 4
    assert [survivalCount(b) for b in range(2, 11)] == DEATH_COUNTS[:9]

@pytest.mark.slow
def test_survivalCountAllBases():
    assert [survivalCount(b) for b in range(2, 25)] == DEATH_COUNTS

def test_windowIndependence():
    for b in range(2, 9):
        assert len({survivalCount(b, m) for m in (2, 3, 4)}) == 1

def test_generatingFunction():
    assert gfCoefficients(24)[2:] == DEATH_COUNTS
    assert gfCoefficients(24)[:2] == [0, 0]
    coefficients = gfCoefficients(100)
    for b in range(2, 101):
        assert coefficients[b] == oddDivisorPartialSum(b) - 1

def test_generatingFunctionExpansion():
    expr, t = gfExpression(16)
    expanded = list(reversed(Poly(expr.series(t, 0, 17).removeO(), t).all_coeffs()))
    assert expanded == gfCoefficients(16)[:len(expanded)]
    assert expanded[2:] == DEATH_COUNTS[:len(expanded) - 2]

def test_divisorHelpers():
    assert oddDivisorCount(6) == 2
    assert oddDivisorCount(16) == 1
    assert oddDivisorCount(45) == 6
    assert [j for j in range(30) if isTriangular(j)] == [0, 1, 3, 6, 10, 15, 21, 28]

def test_asymptotics():
    est = asymptoticEstimate(10)
    assert round(est.expectedLengthLog10, 2) == 8.69
    assert round(asymptoticEstimate(10, deaths=12).expectedLengthLog10, 2) == 8.33
    assert est.deathEstimate == pytest.approx(15.75, abs=0.01)
    assert EULER_GAMMA == pytest.approx(0.5772156649)
    assert naiveModelLog10(10) == 12.5
    with pytest.raises(ValueError):
        naiveModelLog10(2)

def test_survivalReport():
    report = survivalReport(10)
    assert report.matches
    assert (report.starts, report.deaths, report.gfCoefficient) == (100, 12, 12)
    assert round(report.expectedLengthLog10, 2) == 8.33
    assert report.naiveLengthLog10 == 12.5
    reports = survivalSweep(range(2, 8))
    assert [r.base for r in reports] == list(range(2, 8))
    assert all(r.matches for r in reports)
    assert reports[0].deaths == 0
    assert reports[0].expectedLengthLog10 == pytest.approx(4/math.log(10))
    assert reports[0].naiveLengthLog10 is None
