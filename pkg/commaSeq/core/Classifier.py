# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module contains the closed-form classifiers of the successor graph and the child graph: landmines
(no children), branch-points (two children), numbers which are not comma-successors, numbers which are not
comma-children and the ancestor walks in both graphs.
"""

from dataclasses import dataclass
import logging
from commaSeq.core.Exceptions import NotABranchPointError
from commaSeq.core.Numeral import checkBase, checkPositive, digitsOf, fromDigits, numDigits
from commaSeq.core.Stepper import commaChildren, commaParent, commaSuccessor

logger = logging.getLogger(__name__)

GRAPH_SUCCESSOR = "successor"
GRAPH_CHILD = "child"

@dataclass(frozen=True)
class NodeClass:
    """
    Classification of a single node. isLandmine is equivalent to childCount == 0. A parent in the successor graph
    implies a parent in the child graph.
    """
    value: int
    base: int
    childCount: int
    children: tuple
    hasChildGraphParent: bool
    hasSuccessorGraphParent: bool

    @property
    def isLandmine(self):
        """
        :return: True if the node has no comma-children
        """
        return self.childCount == 0

    @property
    def isBranchPoint(self):
        """
        :return: True if the node has two comma-children
        """
        return self.childCount == 2

@dataclass(frozen=True)
class AncestorResult:
    """
    Result of rootAncestor. If complete is False, the step budget was used up before a root was found and root is
    the last node reached.
    """
    root: int
    steps: int
    complete: bool

def isLandmine(n, base):
    """
    Returns True iff n = b^2 (b^i - 1) + (b-1)(x+1) with i >= 0 and 1 <= x <= b-2, i.e. iff n has no comma-children.

    :param n: a positive integer
    :param base: the base
    :return: bool
    """
    checkBase(base)
    checkPositive(n)
    if base == 2:
        return False
    q, r = divmod(n, base*base)
    if r % (base - 1) != 0 or not 2 <= r // (base - 1) <= base - 1:
        return False
    q += 1
    while q % base == 0:
        q //= base
    return q == 1

def landminesUpTo(limit, base):
    """
    Enumerates all landmines <= limit from the closed form.

    :param limit: the upper limit (inclusive)
    :param base: the base
    :return: ascending list of integers
    """
    checkBase(base)
    checkPositive(limit)
    res = []
    i = 0
    while base*base*(base**i - 1) + 2*(base - 1) <= limit:
        offset = base*base*(base**i - 1)
        for x in range(1, base - 1):
            v = offset + (base - 1)*(x + 1)
            if v > limit:
                break
            res.append(v)
        i += 1
    return res

def _smallBranchPoints(base):
    # one- and two-digit branch points w*b + x with w = b-1-2x
    res = []
    for x in range(1, (base - 1)//2 + 1):
        w = base - 1 - 2*x
        if 0 <= w <= base - 3:
            res.append(w*base + x)
    return sorted(res)

def hasTwoChildren(n, base):
    """
    Returns True iff n is a branch-point. These are the numbers w*b + x with w = b-1-2x, 0 <= w <= b-3,
    1 <= x <= (b-1)/2 and the numbers d (b-1)^i d (b-1-d) with 1 <= d <= b-2 and i >= 0.

    :param n: a positive integer
    :param base: the base
    :return: bool
    """
    checkBase(base)
    checkPositive(n)
    if n < base*base:
        return n in _smallBranchPoints(base)
    digits = digitsOf(n, base)
    d = digits[0]
    if not 1 <= d <= base - 2:
        return False
    return digits[-2] == d and digits[-1] == base - 1 - d and all(x == base - 1 for x in digits[1:-2])

def branchChildren(n, base):
    """
    Returns the two children of a branch-point. For the multi-digit form d (b-1)^i d (b-1-d) these are
    d (b-1)^(i+2) and (d+1) 0^(i+2).

    :param n: a branch-point
    :param base: the base
    :return: tuple (lower, upper)
    """
    children = commaChildren(n, base)
    if len(children) != 2:
        raise NotABranchPointError(n, base, len(children))
    return children.children

def branchPointsUpTo(limit, base):
    """
    Enumerates all branch-points <= limit from the closed forms.

    :param limit: the upper limit (inclusive)
    :param base: the base
    :return: ascending list of integers
    """
    checkBase(base)
    checkPositive(limit)
    res = [v for v in _smallBranchPoints(base) if v <= limit]
    i = 0
    while base**(i + 2) <= limit:
        for d in range(1, base - 1):
            v = fromDigits([d] + [base - 1]*i + [d, base - 1 - d], base)
            if v > limit:
                break
            res.append(v)
        i += 1
    return res

def isNonSuccessor(n, base):
    """
    Returns True iff n is not the comma-successor of any number. For n >= b^2-1 these are exactly the numbers
    c*b^i with i >= 2 and 2 <= c <= b-1; below that the unique parent is examined.

    :param n: a positive integer
    :param base: the base
    :return: bool
    """
    checkBase(base)
    checkPositive(n)
    if n >= base*base - 1:
        m = numDigits(n, base)
        if m < 3:
            return False
        c, r = divmod(n, base**(m - 1))
        return r == 0 and 2 <= c <= base - 1
    k = commaParent(n, base)
    return k is None or commaSuccessor(k, base) != n

def isNonChild(n, base):
    """
    Returns True iff n is not a comma-child of any number. This never happens for n >= b^2.

    :param n: a positive integer
    :param base: the base
    :return: bool
    """
    checkBase(base)
    checkPositive(n)
    if n >= base*base:
        return False
    return commaParent(n, base) is None

def rootAncestor(n, base, graph=GRAPH_CHILD, budget=10**7):
    """
    Follows the parents of n until a node without parent is reached. In the successor graph, a step back from c
    to its parent k is taken only when c is the comma-successor of k.

    :param n: a positive integer
    :param base: the base
    :param graph: GRAPH_CHILD or GRAPH_SUCCESSOR
    :param budget: maximal number of steps
    :return: an AncestorResult instance
    """
    checkBase(base)
    checkPositive(n)
    if graph not in (GRAPH_CHILD, GRAPH_SUCCESSOR):
        raise ValueError(f"unknown graph {graph!r}")
    current = n
    steps = 0
    while steps < budget:
        k = commaParent(current, base)
        if k is None or (graph == GRAPH_SUCCESSOR and commaSuccessor(k, base) != current):
            return AncestorResult(root=current, steps=steps, complete=True)
        current = k
        steps += 1
    logger.warning("ancestor walk from %d stopped after %d steps at %d", n, steps, current)
    return AncestorResult(root=current, steps=steps, complete=False)

def classify(n, base):
    """
    Classifies a single node.

    :param n: a positive integer
    :param base: the base
    :return: a NodeClass instance
    """
    children = commaChildren(n, base)
    k = commaParent(n, base)
    return NodeClass(value=n, base=base, childCount=len(children), children=children.children,
                     hasChildGraphParent=k is not None,
                     hasSuccessorGraphParent=k is not None and commaSuccessor(k, base) == n)

def successorList(limit, base):
    """
    Lists the comma-successors of 1..limit, using -1 where no successor exists.

    :param limit: the upper limit (inclusive)
    :param base: the base
    :return: list of (n, successor) tuples
    """
    checkPositive(limit)
    res = []
    for n in range(1, limit + 1):
        s = commaSuccessor(n, base)
        res.append((n, -1 if s is None else s))
    return res

def nonSuccessorsBelow(limit, base):
    """
    :param limit: exclusive upper limit
    :param base: the base
    :return: ascending list of the numbers < limit which are not comma-successors
    """
    return [n for n in range(1, limit) if isNonSuccessor(n, base)]

def nonChildrenBelow(limit, base):
    """
    :param limit: exclusive upper limit
    :param base: the base
    :return: ascending list of the numbers < limit which are not comma-children (the roots of the child graph)
    """
    return [n for n in range(1, min(limit, base*base)) if isNonChild(n, base)]

def isolatedNodesUpTo(limit, base):
    """
    Lists the isolated nodes of the successor graph: landmines which are not comma-successors.

    :param limit: the upper limit (inclusive)
    :param base: the base
    :return: ascending list of integers
    """
    return [n for n in landminesUpTo(limit, base) if isNonSuccessor(n, base)]
