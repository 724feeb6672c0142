# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module implements the comma transform of arbitrary sequences. Comma sequences are the fixed points: their
first differences coincide with their comma transform.
"""

import logging
from commaSeq.core.Numeral import checkBase, leadingDigit
from commaSeq.core.Stepper import commaSuccessor

logger = logging.getLogger(__name__)

def _checkTerms(terms):
    terms = list(terms)
    if len(terms) < 2:
        raise ValueError("the comma transform needs at least two terms")
    for t in terms:
        if isinstance(t, bool) or not isinstance(t, int) or t < 0:
            raise ValueError(f"sequence terms must be nonnegative integers, got {t!r}")
    return terms

def commaTransform(terms, base):
    """
    Computes the comma transform: entry i is trailingDigit(terms[i])*b + leadingDigit(terms[i+1]). A zero term
    contributes the trailing digit 0, but it cannot provide a leading digit.

    :param terms: a list of at least two nonnegative integers
    :param base: the base
    :return: list of len(terms)-1 integers in [0, b^2-1]
    """
    checkBase(base)
    terms = _checkTerms(terms)
    res = []
    for i, (t, u) in enumerate(zip(terms[:-1], terms[1:])):
        if u == 0:
            raise ValueError(f"term {i+1} is zero and has no leading digit")
        res.append((t % base)*base + leadingDigit(u, base))
    return res

def isCommaSequence(terms, base):
    """
    Checks the fixed point property: all first differences equal the corresponding comma transform entries.

    :param terms: a list of at least two positive integers
    :param base: the base
    :return: bool
    """
    terms = _checkTerms(terms)
    if any(t == 0 for t in terms):
        return False
    cts = commaTransform(terms, base)
    return all(u - t == c for t, u, c in zip(terms[:-1], terms[1:], cts))

def isCommaSuccessorChain(terms, base):
    """
    Checks that every term is the comma-successor (the smallest comma-child) of its predecessor, i.e. that the
    terms form a contiguous piece of the comma sequence started at terms[0].

    :param terms: a list of at least two positive integers
    :param base: the base
    :return: bool
    """
    if not isCommaSequence(terms, base):
        return False
    return all(commaSuccessor(t, base) == u for t, u in zip(terms[:-1], terms[1:]))
