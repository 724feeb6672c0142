# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

import logging
import sqlite3
import pytest
from commaSeq.core.Exceptions import InvalidANumberError
from commaSeq.core.Utils import checkANumber, parseRange, atomicWrite, SQLiteHandler

def test_checkANumber():
    checkANumber("A121805")
    for bad in ("a121805", "A12180", "A1218051", "121805", None):
        with pytest.raises(InvalidANumberError):
            checkANumber(bad)

def test_parseRange():
    assert parseRange("2..24") == range(2, 25)
    assert parseRange(" 10 ") == range(10, 11)
    assert parseRange("3 .. 3") == range(3, 4)
    for bad in ("24..2", "a..b", "1-5", ""):
        with pytest.raises(ValueError):
            parseRange(bad)

def test_atomicWrite(tmp_path):
    target = tmp_path / "sub" / "b121805.txt"
    atomicWrite(str(target), b"1 1\n")
    assert target.read_bytes() == b"1 1\n"
    atomicWrite(str(target), b"1 1\n2 12\n")
    assert target.read_bytes() == b"1 1\n2 12\n"
    assert [p.name for p in target.parent.iterdir()] == ["b121805.txt"]

@pytest.mark.parametrize("threadSafety", [SQLiteHandler.ONE_CONNECTION_PER_THREAD, SQLiteHandler.SINGLE_CONNECTION])
def test_SQLiteHandler(tmp_path, threadSafety):
    db = tmp_path / "log.db"
    handler = SQLiteHandler(str(db), threadSafety)
    logger = logging.getLogger("commaSeq.tests.sqlite")
    logger.addHandler(handler)
    logger.propagate = False
    try:
        logger.warning("landmine at %d", 99999945)
    finally:
        logger.removeHandler(handler)
        handler.close()
    with sqlite3.connect(str(db)) as conn:
        rows = conn.execute("SELECT level, msg FROM debug").fetchall()
    assert rows == [("WARNING", "landmine at 99999945")]
    with pytest.raises(RuntimeError):
        SQLiteHandler(str(db), 5)
