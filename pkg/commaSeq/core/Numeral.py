# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module contains the base-b digit machinery used by all other commaSeq modules. Numbers are plain python
integers (arbitrary precision); the base is passed explicitly or carried by a BaseNumber instance.
"""

from dataclasses import dataclass
import logging
import math
import string
from commaSeq.core.Exceptions import InvalidBaseError, NonPositiveNumberError

logger = logging.getLogger(__name__)

_DIGIT_CHARS = string.digits + string.ascii_lowercase

def checkBase(base):
    """
    Check that base is an integer >= 2. Raises InvalidBaseError.

    :param base: the base to be tested
    :return: None
    """
    if isinstance(base, bool) or not isinstance(base, int) or base < 2:
        raise InvalidBaseError(base)

def checkPositive(n):
    """
    Check that n is a positive integer. Raises NonPositiveNumberError.

    :param n: the number to be tested
    :return: None
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise NonPositiveNumberError(n)

def placeOfLeadingDigit(n, base):
    """
    Returns the place value of the leading digit of n together with the digit count.

    :param n: a positive integer
    :param base: the base
    :return: tuple (base**(m-1), m)
    """
    checkPositive(n)
    if base == 2:
        return 1 << (n.bit_length() - 1), n.bit_length()
    # the float estimate is at most one off, even for numbers with thousands of digits
    k = int((n.bit_length() - 1) / math.log2(base))
    p = base**k
    while p > n:
        p //= base
        k -= 1
    while p * base <= n:
        p *= base
        k += 1
    return p, k + 1

def topPower(n, base):
    """
    Returns the largest power of base which is <= n, i.e. the place value of the leading digit.

    :param n: a positive integer
    :param base: the base
    :return: base**(numDigits(n, base)-1)
    """
    return placeOfLeadingDigit(n, base)[0]

def numDigits(n, base):
    """
    Returns the number of base-b digits of n.

    :param n: a positive integer
    :param base: the base
    :return: the digit count m
    """
    return placeOfLeadingDigit(n, base)[1]

def digitsOf(n, base):
    """
    Returns the digits of n, most significant first.

    :param n: a positive integer
    :param base: the base
    :return: a list of integers in [0, base-1] without leading zeros
    """
    checkBase(base)
    checkPositive(n)
    res = []
    while n > 0:
        n, d = divmod(n, base)
        res.append(d)
    res.reverse()
    return res

def fromDigits(digits, base):
    """
    Inverse of digitsOf.

    :param digits: an iterable of digits, most significant first
    :param base: the base
    :return: the integer value
    """
    checkBase(base)
    res = 0
    for d in digits:
        if not 0 <= d < base:
            raise ValueError(f"digit {d} out of range for base {base}")
        res = res*base + d
    return res

def leadingDigit(n, base):
    """
    Returns the leading digit delta(n).

    :param n: a positive integer
    :param base: the base
    :return: the first digit of n
    """
    checkBase(base)
    checkPositive(n)
    return n // topPower(n, base)

def trailingDigit(n, base):
    """
    Returns the last digit d_m of n.

    :param n: a positive integer
    :param base: the base
    :return: n mod base
    """
    checkBase(base)
    checkPositive(n)
    return n % base

def toDigitString(n, base):
    """
    Returns the plain base-b digit string of n (letters are used for digits above 9, bases above 36 use
    colon-separated decimal digits).

    :param n: a nonnegative integer
    :param base: the base
    :return: a string
    """
    checkBase(base)
    if n == 0:
        return "0"
    digits = digitsOf(n, base)
    if base <= len(_DIGIT_CHARS):
        return "".join(_DIGIT_CHARS[d] for d in digits)
    return ":".join(str(d) for d in digits)

def parseDigitString(text, base):
    """
    Inverse of toDigitString.

    :param text: the digit string
    :param base: the base
    :return: the integer value
    """
    checkBase(base)
    text = text.strip()
    if base <= len(_DIGIT_CHARS):
        return int(text, base)
    return fromDigits([int(d) for d in text.split(":")], base)

@dataclass(frozen=True)
class BaseNumber:
    """
    An arbitrary-precision nonnegative integer paired with its base, exposing the digit views used throughout the
    comma sequence theory.
    """
    value: int
    base: int

    def __post_init__(self):
        checkBase(self.base)
        if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 0:
            raise NonPositiveNumberError(self.value)

    @staticmethod
    def parse(text, base):
        """
        Create a BaseNumber from a base-b digit string.

        :param text: the digit string
        :param base: the base
        :return: a BaseNumber instance
        """
        return BaseNumber(parseDigitString(text, base), base)

    def digits(self):
        """
        :return: the digits, most significant first
        """
        return digitsOf(self.value, self.base)

    def leadingDigit(self):
        """
        :return: the leading digit delta(n)
        """
        return leadingDigit(self.value, self.base)

    def trailingDigit(self):
        """
        :return: the trailing digit d_m
        """
        return trailingDigit(self.value, self.base)

    def numDigits(self):
        """
        :return: the digit count m
        """
        return numDigits(self.value, self.base)

    def __int__(self):
        return self.value

    def __str__(self):
        return toDigitString(self.value, self.base)
