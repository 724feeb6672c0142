# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module implements the atomic moves of the successor graph and the child graph: the comma-children of a
number, its comma-successor (the smallest child) and its unique parent.
"""

from dataclasses import dataclass
import logging
from commaSeq.core.Numeral import checkBase, checkPositive, leadingDigit, topPower

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class CommaNumber:
    """
    The two-digit separator d_m*b + e_1 between a term and its child. It lies in [1, b^2-1] and is never a
    multiple of b, because the leading digit e_1 of the child is never zero.
    """
    value: int
    base: int

    def __post_init__(self):
        checkBase(self.base)
        if not 1 <= self.value <= self.base**2 - 1 or self.value % self.base == 0:
            raise ValueError(f"{self.value} is not a comma-number in base {self.base}")

    @property
    def trailingDigit(self):
        """
        :return: d_m, the trailing digit of the parent
        """
        return self.value // self.base

    @property
    def leadingDigit(self):
        """
        :return: e_1, the leading digit of the child
        """
        return self.value % self.base

@dataclass(frozen=True)
class ChildSet:
    """
    The (at most two) comma-children of a number in ascending order together with the corresponding
    comma-numbers. The first child, if any, is the comma-successor.
    """
    parent: int
    base: int
    children: tuple = ()
    commaNumbers: tuple = ()

    def __len__(self):
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    def __contains__(self, item):
        return item in self.children

    @property
    def successor(self):
        """
        :return: the smallest child or None if the parent is a landmine
        """
        return self.children[0] if self.children else None

def _leadingDigitAbove(value, place, base):
    # value >= place, place is a power of base; candidates lie at most two places above their parent
    while place * base <= value:
        place *= base
    return value // place

def childrenWithPlace(n, place, base):
    """
    Low level variant of commaChildren used by the runners, which already know the place value of the leading
    digit of n. No argument checks are performed.

    :param n: the parent
    :param place: topPower(n, base)
    :param base: the base
    :return: list of (child, commaNumber) tuples in ascending order
    """
    dm = n % base
    res = []
    for e in range(1, base):
        c = n + dm*base + e
        if _leadingDigitAbove(c, place, base) == e:
            res.append((c, dm*base + e))
    return res

def commaChildren(n, base):
    """
    Returns the comma-children of n: all numbers n' = n + d_m*b + e (1 <= e < b) whose leading digit is e.

    :param n: a positive integer
    :param base: the base
    :return: a ChildSet instance (empty if n is a landmine)
    """
    checkBase(base)
    checkPositive(n)
    res = childrenWithPlace(n, topPower(n, base), base)
    return ChildSet(parent=n, base=base,
                    children=tuple(c for c, _ in res),
                    commaNumbers=tuple(CommaNumber(cn, base) for _, cn in res))

def commaSuccessor(n, base):
    """
    Returns the comma-successor of n (its smallest comma-child).

    :param n: a positive integer
    :param base: the base
    :return: an integer or None if n is a landmine
    """
    checkBase(base)
    checkPositive(n)
    res = childrenWithPlace(n, topPower(n, base), base)
    return res[0][0] if res else None

def commaParent(n, base):
    """
    Returns the unique number k such that n is a comma-child of k. With f = delta(n) and x = (n-f) mod b the
    parent is k = n - x*b - f, provided that this is positive and n really is a child of k.

    :param n: a positive integer
    :param base: the base
    :return: an integer or None if n is not a comma-child
    """
    checkBase(base)
    checkPositive(n)
    f = leadingDigit(n, base)
    x = (n - f) % base
    k = n - x*base - f
    if k < 1:
        return None
    if n not in (c for c, _ in childrenWithPlace(k, topPower(k, base), base)):
        return None
    return k

def isSuccessorOf(k, n, base):
    """
    Edge test for the successor graph.

    :param k: a positive integer
    :param n: a positive integer
    :param base: the base
    :return: True iff n is the comma-successor of k
    """
    return commaSuccessor(k, base) == n

def commaNumber(k, child, base):
    """
    Returns the comma-number of the edge k -> child.

    :param k: the parent
    :param child: a comma-child of k
    :param base: the base
    :return: a CommaNumber instance
    """
    if child not in commaChildren(k, base):
        raise ValueError(f"{child} is not a comma-child of {k} in base {base}")
    return CommaNumber(child - k, base)
