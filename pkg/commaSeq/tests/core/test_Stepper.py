# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import pytest
from hypothesis import given, settings, strategies as st
from commaSeq.core.Numeral import leadingDigit
from commaSeq.core.Stepper import CommaNumber, commaChildren, commaSuccessor, commaParent, isSuccessorOf, \
    commaNumber

def test_commaChildren():
    cs = commaChildren(14, 10)
    assert cs.children == (59, 60)
    assert [cn.value for cn in cs.commaNumbers] == [45, 46]
    assert cs.successor == 59
    assert 60 in cs
    assert len(cs) == 2
    assert len(commaChildren(18, 10)) == 0
    assert commaChildren(18, 10).successor is None
    cs = commaChildren(1, 10)
    assert list(cs) == [12]
    assert cs.commaNumbers[0].value == 11

def test_commaSuccessor():
    assert commaSuccessor(9, 10) == 100
    assert commaSuccessor(19, 10) == 110
    assert commaSuccessor(36, 10) is None
    assert isSuccessorOf(14, 59, 10)
    assert not isSuccessorOf(14, 60, 10)
    assert isSuccessorOf(1, 12, 10)

def test_commaParent():
    assert commaParent(12, 10) == 1
    assert commaParent(60, 10) == 14
    assert commaParent(59, 10) == 14
    assert commaParent(20, 10) is None

def test_CommaNumber():
    cn = CommaNumber(59, 10)
    assert cn.trailingDigit == 5
    assert cn.leadingDigit == 9
    for bad in (0, 20, 100):
        with pytest.raises(ValueError):
            CommaNumber(bad, 10)
    assert commaNumber(14, 60, 10) == CommaNumber(46, 10)
    with pytest.raises(ValueError):
        commaNumber(14, 61, 10)

def test_childStructure():
    for base in range(2, 17):
        for k in range(1, 3000):
            cs = commaChildren(k, base)
            assert len(cs) <= 2
            assert list(cs.children) == sorted(cs.children)
            assert len({leadingDigit(c, base) for c in cs}) == len(cs)
            for c, cn in zip(cs.children, cs.commaNumbers):
                assert 1 <= c - k <= base*base - 1
                assert (c - k) % base != 0
                assert cn.value == c - k
                # the parent is unique, so the child sets of distinct numbers are disjoint
                assert commaParent(c, base) == k

@pytest.mark.slow
def test_childStructureExhaustive():
    for base in range(2, 17):
        seen = set()
        for k in range(1, 10**5 + 1):
            for c in commaChildren(k, base):
                assert c not in seen
                seen.add(c)
                assert commaParent(c, base) == k

@given(n=st.integers(min_value=1, max_value=10**40), base=st.integers(min_value=2, max_value=36))
@settings(max_examples=300)
def test_childrenOfBigNumbers(n, base):
    children = commaChildren(n, base)
    assert len(children) <= 2
    dm = n % base
    expected = [n + dm*base + e for e in range(1, base) if leadingDigit(n + dm*base + e, base) == e]
    assert list(children) == expected
    for c in children:
        assert commaParent(c, base) == n
    assert commaSuccessor(n, base) == (expected[0] if expected else None)
