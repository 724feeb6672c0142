# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module compares the built-in generators against OEIS b-files.

A generator is selected by a specification string "name:key=value,key=value", e.g. "run:base=10,start=1" or
"landmines". The parsed specification is validated against GeneratorSchema.json.
"""

from dataclasses import dataclass
import itertools
import logging
from pathlib import Path
import re
from jsonschema.exceptions import ValidationError
from commaSeq.core.ConfigFiles import loadValidator
from commaSeq.core.Exceptions import GeneratorSpecError
from commaSeq.core.Classifier import landminesUpTo, branchPointsUpTo, successorList, nonSuccessorsBelow, \
    nonChildrenBelow
from commaSeq.core.Kangaroo import survivalCount
from commaSeq.core.Paths import base3InfinitePath
from commaSeq.core.Runner import iterNaive
from commaSeq.core.Transform import commaTransform

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class VerifyResult:
    """
    Result of a comparison. firstMismatch is None or a tuple (index, expected, actual); actual is None when the
    generator ended before the b-file.
    """
    aNumber: str
    compared: int
    firstMismatch: tuple = None

    @property
    def ok(self):
        """
        :return: True if all compared entries are equal
        """
        return self.firstMismatch is None

class GeneratorSpec:
    """
    Parsing and validation of generator specification strings.
    """
    _validator = None

    @staticmethod
    def _getValidator():
        if GeneratorSpec._validator is None:
            GeneratorSpec._validator = loadValidator(Path(__file__).parent / "GeneratorSchema.json")
        return GeneratorSpec._validator

    @staticmethod
    def parse(text):
        """
        Parses a generator specification.

        :param text: a string like "run:base=10,start=1"
        :return: dictionary with all parameters (defaults applied)
        """
        name, _, params = text.strip().partition(":")
        spec = {"name": name.strip()}
        for item in filter(None, (p.strip() for p in params.split(","))):
            m = re.match(r'^([A-Za-z]+)\s*=\s*([0-9]+)$', item)
            if m is None:
                raise GeneratorSpecError(f"malformed generator parameter {item!r} in {text!r}")
            spec[m.group(1)] = int(m.group(2))
        if spec["name"] == "infinite-path" and spec.get("base", 3) != 3:
            raise GeneratorSpecError("the infinite-path generator exists for base 3 only")
        try:
            GeneratorSpec._getValidator().validate(spec)
        except ValidationError as e:
            raise GeneratorSpecError(f"invalid generator specification {text!r}: {e.message}") from e
        return spec

def _firstN(upTo, count, base):
    # widen the enumeration limit until count values exist
    limit = base**3
    while True:
        values = upTo(limit, base)
        if len(values) >= count:
            return values[:count]
        limit *= base

def _nonSuccessors(count, base):
    small = nonSuccessorsBelow(base*base - 1, base)
    large = (c*base**i for i in itertools.count(2) for c in range(2, base))
    return list(itertools.islice(itertools.chain(small, large), count))

def generate(spec, count):
    """
    Generates at most count values of the sequence described by spec.

    :param spec: dictionary as returned by GeneratorSpec.parse
    :param count: the number of values
    :return: list of integers (shorter than count for finite sequences)
    """
    name = spec["name"]
    base = spec["base"]
    if name == "run":
        return list(itertools.islice(iterNaive(spec["start"], base), count))
    if name == "transform":
        first = spec["first"]
        return commaTransform(range(first, first + count + 1), base)
    if name == "landmines":
        return _firstN(landminesUpTo, count, base)
    if name == "branch-points":
        return _firstN(branchPointsUpTo, count, base)
    if name == "successors":
        return [s for _, s in successorList(count, base)]
    if name == "non-successors":
        return _nonSuccessors(count, base)
    if name == "non-children":
        return nonChildrenBelow(base*base, base)[:count]
    if name == "infinite-path":
        return list(base3InfinitePath(count))
    if name == "deaths":
        return [survivalCount(b, spec["m"]) for b in range(spec["fromBase"], spec["fromBase"] + count)]
    raise GeneratorSpecError(f"unknown generator {name!r}")

def compareValues(aNumber, expected, actual):
    """
    Compares two value lists positionally. The comparison covers the expected values; missing actual values count
    as mismatch.

    :param aNumber: the A-number (for the result)
    :param expected: list of (index, value) tuples from the b-file
    :param actual: list of generated values
    :return: a VerifyResult instance
    """
    for i, (index, value) in enumerate(expected):
        if i >= len(actual):
            return VerifyResult(aNumber=aNumber, compared=i, firstMismatch=(index, value, None))
        if actual[i] != value:
            return VerifyResult(aNumber=aNumber, compared=i + 1, firstMismatch=(index, value, actual[i]))
    return VerifyResult(aNumber=aNumber, compared=len(expected))

def verifyAgainstOeis(client, aNumber, specText):
    """
    Compares a generated prefix with the b-file of aNumber.

    :param client: an OeisClient instance
    :param aNumber: the A-number
    :param specText: the generator specification string
    :return: a VerifyResult instance
    """
    spec = GeneratorSpec.parse(specText)
    bfile = client.fetchBFile(aNumber)
    expected = bfile.entries[:spec["limit"]]
    actual = generate(spec, len(expected))
    res = compareValues(aNumber, expected, actual)
    if res.ok:
        logger.info("%s matches %s over %d entries", aNumber, specText, res.compared)
    else:
        logger.warning("%s differs from %s at index %d", aNumber, specText, res.firstMismatch[0])
    return res
