# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module contains the survival ("kangaroo") model of comma sequences.

The b^2 numbers (b-1)^m x y sit just below the power b^(m+2). The death count D(b) is the number of those
starts whose comma sequence ends at a landmine before reaching b^(m+2); it does not depend on m >= 2. D(b) is
conjectured to be the coefficient of t^b in

    1/(1-t) * (sum_{k>=1} t^(k(k+3)/2) / (1-t^k) - t^2)

which in turn equals the partial sums of (number of odd divisors of j) - (1 if j is triangular), minus one.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import logging
import math
from sympy import Add, EulerGamma, Poly, Symbol, ZZ, divisor_count
from commaSeq.core.Numeral import checkBase, checkPositive
from commaSeq.core.Runner import runFast

logger = logging.getLogger(__name__)

EULER_GAMMA = float(EulerGamma)

@dataclass(frozen=True)
class AsymptoticEstimate:
    """
    The asymptotic estimates of the survival model.
    """
    deathEstimate: float
    expectedLengthLog10: float

@dataclass(frozen=True)
class SurvivalReport:
    """
    Per-base statistics of the survival model.
    """
    base: int
    m: int
    starts: int
    deaths: int
    gfCoefficient: int
    asymptoticEstimate: float
    expectedLengthLog10: float
    naiveLengthLog10: float = None

    @property
    def matches(self):
        """
        :return: True if the death count equals the generating function coefficient
        """
        return self.deaths == self.gfCoefficient

def survivalStarts(b, m):
    """
    :param b: the base
    :param m: the number of leading (b-1) digits, m >= 2
    :return: list of the b^2 starts (b^m - 1)*b^2 + x*b + y
    """
    checkBase(b)
    if m < 2:
        raise ValueError(f"the window exponent must be >= 2, got {m}")
    offset = (b**m - 1)*b*b
    return [offset + x*b + y for x in range(b) for y in range(b)]

def survivalCount(b, m=2):
    """
    Counts the starts (b-1)^m x y whose comma sequence terminates before reaching b^(m+2).

    :param b: the base
    :param m: the window exponent (m >= 2)
    :return: the death count D(b)
    """
    ceiling = b**(m + 2)
    deaths = 0
    for start in survivalStarts(b, m):
        outcome = runFast(start, b, maxValue=ceiling)
        if outcome.terminated and outcome.finalTerm < ceiling:
            deaths += 1
    logger.debug("base %d, m=%d: %d of %d starts die", b, m, deaths, b*b)
    return deaths

def gfExpression(nMax):
    """
    Builds the generating function of the death counts as a sympy expression in t. Only the summands which
    contribute to the coefficients of t^0 .. t^nMax are included.

    :param nMax: truncation order
    :return: a tuple (expression, symbol)
    """
    checkPositive(nMax)
    t = Symbol("t")
    inner = Add(*[t**(k*(k + 3)//2) / (1 - t**k) for k in _gfSummands(nMax)])
    return (inner - t**2) / (1 - t), t

def _gfSummands(nMax):
    k = 1
    while k*(k + 3)//2 <= nMax:
        yield k
        k += 1

def _truncatedGeometric(t, step, first, nMax):
    return Poly(Add(*[t**e for e in range(first, nMax + 1, step)]), t, domain=ZZ)

def gfSeries(nMax):
    """
    Expands the generating function up to t^nMax. Every factor 1/(1-t^k) is replaced by its truncated geometric
    series, so the expansion stays in exact integer polynomial arithmetic.

    :param nMax: truncation order
    :return: a sympy Poly in t whose coefficients up to t^nMax are those of the generating function
    """
    checkPositive(nMax)
    t = Symbol("t")
    inner = Poly(-t**2, t, domain=ZZ)
    for k in _gfSummands(nMax):
        inner += _truncatedGeometric(t, k, k*(k + 3)//2, nMax)
    return inner * _truncatedGeometric(t, 1, 0, nMax)

def gfCoefficients(nMax):
    """
    :param nMax: the largest exponent
    :return: list of the coefficients of t^0 .. t^nMax
    """
    coefficients = [int(c) for c in reversed(gfSeries(nMax).all_coeffs())]
    return (coefficients + [0]*(nMax + 1))[:nMax + 1]

def oddDivisorCount(j):
    """
    :param j: a positive integer
    :return: the number of odd divisors of j
    """
    checkPositive(j)
    while j % 2 == 0:
        j //= 2
    return int(divisor_count(j))

def isTriangular(j):
    """
    :param j: a nonnegative integer
    :return: True if j = k(k+1)/2 for some k >= 0
    """
    r = math.isqrt(8*j + 1)
    return r*r == 8*j + 1

def oddDivisorPartialSum(b):
    """
    :param b: a positive integer
    :return: sum_{j=1..b} (oddDivisorCount(j) - (1 if j is triangular else 0))
    """
    checkPositive(b)
    return sum(oddDivisorCount(j) - (1 if isTriangular(j) else 0) for j in range(1, b + 1))

def asymptoticEstimate(b, deaths=None):
    """
    Evaluates the asymptotic form D(b) ~ b*(log(2b)/2 + gamma - 1/2) and the expected length of a comma sequence.
    Without an exact death count the expected length is e^(2b); with one it is b^(b^2/D(b)).

    :param b: the base
    :param deaths: optional exact death count D(b)
    :return: an AsymptoticEstimate instance
    """
    checkBase(b)
    estimate = b*(math.log(2*b)/2 + EULER_GAMMA - 0.5)
    if deaths is None:
        log10Length = 2*b/math.log(10)
    else:
        checkPositive(deaths)
        log10Length = b*b/deaths*math.log10(b)
    return AsymptoticEstimate(deathEstimate=estimate, expectedLengthLog10=log10Length)

def naiveModelLog10(b):
    """
    The crude model where each power of b is survived with probability 1 - (b-2)/b^2.

    :param b: the base (b >= 3)
    :return: log10 of the expected length b^(b^2/(b-2))
    """
    checkBase(b)
    if b < 3:
        raise ValueError("the naive survival model needs a base >= 3")
    return b*b/(b - 2)*math.log10(b)

def survivalReport(b, m=2, coefficients=None):
    """
    Computes the statistics for one base.

    :param b: the base
    :param m: the window exponent
    :param coefficients: optional precomputed result of gfCoefficients(n) with n >= b
    :return: a SurvivalReport instance
    """
    if coefficients is None:
        coefficients = gfCoefficients(b)
    deaths = survivalCount(b, m)
    estimate = asymptoticEstimate(b, deaths if deaths > 0 else None)
    return SurvivalReport(base=b, m=m, starts=b*b, deaths=deaths, gfCoefficient=coefficients[b],
                          asymptoticEstimate=estimate.deathEstimate,
                          expectedLengthLog10=estimate.expectedLengthLog10,
                          naiveLengthLog10=naiveModelLog10(b) if b >= 3 else None)

def survivalSweep(bases, m=2, workers=0):
    """
    Computes survival reports for several bases.

    :param bases: iterable of bases
    :param m: the window exponent
    :param workers: number of worker processes (0 or 1 for serial execution)
    :return: list of SurvivalReport instances
    """
    bases = list(bases)
    coefficients = gfCoefficients(max(bases))
    args = (bases, [m]*len(bases), [coefficients]*len(bases))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(survivalReport, *args))
    return list(map(survivalReport, *args))
