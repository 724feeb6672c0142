# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module provides a small client for OEIS b-files with an on-disk cache.

Only the raw b-file bodies are cached, one file per A-number. Cache files are replaced atomically, so concurrent
commaSeq processes sharing a cache directory never see partially written files.
"""

from dataclasses import dataclass, field
import datetime
import logging
from pathlib import Path
import requests
from commaSeq.core.Exceptions import OeisFetchError, BFileParseError
from commaSeq.core.Utils import checkANumber, atomicWrite

logger = logging.getLogger(__name__)

OEIS_URL = "https://oeis.org/{aNumber}/b{digits}.txt"

@dataclass
class OeisBFile:
    """
    The parsed content of a b-file.
    """
    aNumber: str
    entries: list = field(default_factory=list)
    fetchedAt: datetime.datetime = None

    def values(self):
        """
        :return: list of the sequence values (without indices)
        """
        return [v for _, v in self.entries]

    def __len__(self):
        return len(self.entries)

def parseBFile(aNumber, text):
    """
    Parses the body of a b-file. Blank lines and lines starting with '#' are skipped, every other line must hold
    an index and a value separated by whitespace.

    :param aNumber: the A-number (used for diagnostics)
    :param text: the b-file body
    :return: list of (index, value) tuples with strictly increasing indices
    """
    entries = []
    for lineNumber, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped == "" or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise BFileParseError(aNumber, lineNumber, line, "expected 'index value'")
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError as e:
            raise BFileParseError(aNumber, lineNumber, line, "not an integer") from e
        if entries and index <= entries[-1][0]:
            if entries[-1] == (index, value):
                logger.warning("%s: duplicate b-file line %d ignored", aNumber, lineNumber)
                continue
            raise BFileParseError(aNumber, lineNumber, line, "indices are not strictly increasing")
        entries.append((index, value))
    return entries

class OeisClient:
    """
    Fetches OEIS b-files, serving them from a cache directory when possible.
    """

    def __init__(self, cacheDir, offline=False, timeout=30, session=None):
        """
        Constructor

        :param cacheDir: directory of the cached b-files
        :param offline: if True, only the cache is consulted
        :param timeout: HTTP timeout in seconds
        :param session: a requests.Session-like object (created lazily if None)
        """
        self._cacheDir = Path(cacheDir)
        self._offline = offline
        self._timeout = timeout
        self._session = session

    @property
    def offline(self):
        """
        :return: True if the client never uses the network
        """
        return self._offline

    def cacheFile(self, aNumber):
        """
        :param aNumber: an A-number
        :return: the Path of the cached b-file
        """
        checkANumber(aNumber)
        return self._cacheDir / f"b{aNumber[1:]}.txt"

    def url(self, aNumber):
        """
        :param aNumber: an A-number
        :return: the download URL of the b-file
        """
        checkANumber(aNumber)
        return OEIS_URL.format(aNumber=aNumber, digits=aNumber[1:])

    def _download(self, aNumber):
        if self._session is None:
            self._session = requests.Session()
        url = self.url(aNumber)
        logger.info("downloading %s", url)
        try:
            res = self._session.get(url, timeout=self._timeout)
        except requests.RequestException as e:
            raise OeisFetchError(f"cannot download {url}: {e}") from e
        if res.status_code != requests.codes.ok: # pylint: disable=no-member
            raise OeisFetchError(f"cannot download {url}: HTTP status {res.status_code}")
        return res.text

    def fetchRaw(self, aNumber, refresh=False):
        """
        Returns the raw b-file body, downloading it into the cache if needed.

        :param aNumber: an A-number
        :param refresh: if True, the cache is bypassed (not allowed in offline mode)
        :return: (text, fetchedAt)
        """
        cached = self.cacheFile(aNumber)
        if cached.exists() and not refresh:
            logger.info("%s served from cache %s", aNumber, cached)
            fetchedAt = datetime.datetime.fromtimestamp(cached.stat().st_mtime)
            return cached.read_text(encoding="utf-8"), fetchedAt
        if self._offline:
            raise OeisFetchError(f"{aNumber} is not in the cache {self._cacheDir} and offline mode is active")
        logger.info("%s not cached, fetching", aNumber)
        text = self._download(aNumber)
        atomicWrite(str(cached), text.encode("utf-8"))
        return text, datetime.datetime.now()

    def fetchBFile(self, aNumber, refresh=False):
        """
        Fetches and parses a b-file.

        :param aNumber: an A-number like "A121805"
        :param refresh: if True, the cache is bypassed
        :return: an OeisBFile instance
        """
        text, fetchedAt = self.fetchRaw(aNumber, refresh)
        entries = parseBFile(aNumber, text)
        logger.debug("%s: %d entries", aNumber, len(entries))
        return OeisBFile(aNumber=aNumber, entries=entries, fetchedAt=fetchedAt)
