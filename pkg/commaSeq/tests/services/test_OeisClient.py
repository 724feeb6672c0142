# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import logging
import pytest
import requests
from commaSeq.core.Exceptions import BFileParseError, InvalidANumberError, OeisFetchError
from commaSeq.services.OeisClient import OeisClient, parseBFile
from commaSeq.tests import COMMA_SEQUENCE_FROM_1, bfileText

class FakeResponse:
    def __init__(self, status_code, text):
        self.status_code = status_code
        self.text = text

class FakeSession:
    """
    Stands in for requests.Session and records the requested urls.
    """
    def __init__(self, responses):
        self.responses = responses
        self.urls = []

    def get(self, url, timeout=None):
        self.urls.append((url, timeout))
        res = self.responses.pop(0)
        if isinstance(res, Exception):
            raise res
        return res

def test_parseBFile():
    assert parseBFile("A121805", bfileText(COMMA_SEQUENCE_FROM_1)) == list(enumerate(COMMA_SEQUENCE_FROM_1, 1))
    assert parseBFile("A121805", "\n  \n0 7\n1   8\n") == [(0, 7), (1, 8)]
    with pytest.raises(BFileParseError) as excinfo:
        parseBFile("A121805", "# header\n1 1\n2 x\n")
    assert excinfo.value.lineNumber == 3
    with pytest.raises(BFileParseError) as excinfo:
        parseBFile("A121805", "1 1\n2 12 35\n")
    assert excinfo.value.lineNumber == 2
    with pytest.raises(BFileParseError):
        parseBFile("A121805", "1 1\n3 12\n2 35\n")

def test_parseBFileDuplicates(caplog):
    with caplog.at_level(logging.WARNING, logger="commaSeq.services.OeisClient"):
        entries = parseBFile("A121805", "1 1\n2 12\n2 12\n3 35\n")
    assert entries == [(1, 1), (2, 12), (3, 35)]
    assert "duplicate" in caplog.text

def test_download(tmp_path):
    session = FakeSession([FakeResponse(requests.codes.ok, bfileText(COMMA_SEQUENCE_FROM_1))])
    client = OeisClient(tmp_path, timeout=5, session=session)
    bfile = client.fetchBFile("A121805")
    assert bfile.values() == COMMA_SEQUENCE_FROM_1
    assert len(bfile) == 9
    assert bfile.fetchedAt is not None
    assert session.urls == [("https://oeis.org/A121805/b121805.txt", 5)]
    assert (tmp_path / "b121805.txt").exists()
    # second access is served from the cache
    assert client.fetchBFile("A121805").values() == COMMA_SEQUENCE_FROM_1
    assert len(session.urls) == 1
    offline = OeisClient(tmp_path, offline=True)
    assert offline.offline
    assert offline.fetchBFile("A121805").values() == COMMA_SEQUENCE_FROM_1

def test_refresh(tmp_path):
    session = FakeSession([FakeResponse(requests.codes.ok, bfileText([1, 12])),
                           FakeResponse(requests.codes.ok, bfileText([1, 12, 35]))])
    client = OeisClient(tmp_path, session=session)
    assert client.fetchBFile("A121805").values() == [1, 12]
    assert client.fetchBFile("A121805", refresh=True).values() == [1, 12, 35]
    assert client.fetchBFile("A121805").values() == [1, 12, 35]

def test_fetchErrors(tmp_path):
    session = FakeSession([FakeResponse(404, "not found"), requests.ConnectionError("no route")])
    client = OeisClient(tmp_path, session=session)
    with pytest.raises(OeisFetchError):
        client.fetchBFile("A121805")
    with pytest.raises(OeisFetchError):
        client.fetchBFile("A121805")
    assert not (tmp_path / "b121805.txt").exists()
    with pytest.raises(OeisFetchError):
        OeisClient(tmp_path, offline=True).fetchBFile("A367341")
    with pytest.raises(InvalidANumberError):
        client.fetchBFile("121805")
    assert client.cacheFile("A367341") == tmp_path / "b367341.txt"
