# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import pytest
from commaSeq.core.Exceptions import GeneratorSpecError
from commaSeq.services.OeisClient import OeisClient
from commaSeq.services.Verification import GeneratorSpec, generate, compareValues, verifyAgainstOeis
from commaSeq.tests import COMMA_SEQUENCE_FROM_1, LANDMINES_BASE10, BRANCH_POINTS_BASE10, TRANSFORM_OF_NATURALS, \
    BASE3_INFINITE_PATH, DEATH_COUNTS, PUBLISHED_B121805, bfileText

@pytest.fixture
def cachedClient(tmp_path):
    files = {
        "A121805": bfileText(COMMA_SEQUENCE_FROM_1),
        "A367341": bfileText(LANDMINES_BASE10),
        "A367346": bfileText(BRANCH_POINTS_BASE10),
        "A367362": bfileText(TRANSFORM_OF_NATURALS, offset=0),
        "A367621": bfileText(BASE3_INFINITE_PATH),
        "A368364": bfileText(DEATH_COUNTS[:8], offset=2),
    }
    for aNumber, text in files.items():
        (tmp_path / f"b{aNumber[1:]}.txt").write_text(text, encoding="utf-8")
    return OeisClient(tmp_path, offline=True)

def test_GeneratorSpec():
    spec = GeneratorSpec.parse("run:base=10,start=1")
    assert (spec["name"], spec["base"], spec["start"], spec["limit"]) == ("run", 10, 1, 10000)
    assert GeneratorSpec.parse(" landmines ")["base"] == 10
    assert GeneratorSpec.parse("deaths:fromBase=3,m=3")["fromBase"] == 3
    for bad in ("run:base=ten", "run:base=1", "spiral", "run:colour=3", "infinite-path:base=10", "run:start"):
        with pytest.raises(GeneratorSpecError):
            GeneratorSpec.parse(bad)

def test_generate():
    assert generate(GeneratorSpec.parse("run"), 9) == COMMA_SEQUENCE_FROM_1
    assert generate(GeneratorSpec.parse("run:start=3"), 9) == [3, 36]
    assert generate(GeneratorSpec.parse("landmines"), 16) == LANDMINES_BASE10
    assert generate(GeneratorSpec.parse("landmines:base=3"), 3) == [4, 22, 76]
    assert generate(GeneratorSpec.parse("branch-points"), 15) == BRANCH_POINTS_BASE10
    assert generate(GeneratorSpec.parse("transform"), 13) == TRANSFORM_OF_NATURALS
    assert generate(GeneratorSpec.parse("successors"), 19)[-2:] == [-1, 110]
    assert generate(GeneratorSpec.parse("non-successors"), 58)[-4:] == [200, 300, 400, 500]
    assert len(generate(GeneratorSpec.parse("non-children"), 100)) == 50
    assert generate(GeneratorSpec.parse("infinite-path"), 20) == BASE3_INFINITE_PATH
    assert generate(GeneratorSpec.parse("deaths"), 6) == DEATH_COUNTS[:6]

def test_compareValues():
    expected = [(1, 1), (2, 12), (3, 35)]
    assert compareValues("A121805", expected, [1, 12, 35, 94]).ok
    res = compareValues("A121805", expected, [1, 12, 36])
    assert (res.ok, res.compared, res.firstMismatch) == (False, 3, (3, 35, 36))
    res = compareValues("A121805", expected, [1])
    assert (res.compared, res.firstMismatch) == (1, (2, 12, None))

def test_verifyAgainstOeis(cachedClient):
    for aNumber, spec in [("A121805", "run:base=10,start=1"),
                          ("A367341", "landmines"),
                          ("A367346", "branch-points"),
                          ("A367362", "transform"),
                          ("A367621", "infinite-path"),
                          ("A368364", "deaths")]:
        res = verifyAgainstOeis(cachedClient, aNumber, spec)
        assert res.ok, (aNumber, res.firstMismatch)
        assert res.compared > 0
    res = verifyAgainstOeis(cachedClient, "A121805", "run:base=10,start=1,limit=4")
    assert res.ok and res.compared == 4
    res = verifyAgainstOeis(cachedClient, "A367341", "branch-points")
    assert not res.ok
    assert res.firstMismatch == (1, 18, 14)

def test_verifyPublishedBFile(tmp_path):
    (tmp_path / "b121805.txt").write_text(PUBLISHED_B121805, encoding="utf-8")
    client = OeisClient(tmp_path, offline=True)
    bfile = client.fetchBFile("A121805")
    assert bfile.values()[:len(COMMA_SEQUENCE_FROM_1)] == COMMA_SEQUENCE_FROM_1
    res = verifyAgainstOeis(client, "A121805", "run:base=10,start=1")
    assert res.ok, res.firstMismatch
    assert res.compared == 40
    assert not verifyAgainstOeis(client, "A121805", "run:base=10,start=2").ok
