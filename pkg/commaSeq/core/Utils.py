# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module contains various small utility classes and functions.
"""

import datetime
import logging
import os
import re
import sqlite3
import sys
import tempfile
import threading
from commaSeq.core.Exceptions import InvalidANumberError

logger = logging.getLogger(__name__)

def checkANumber(aNumber):
    """
    Check that aNumber is a valid OEIS identifier (A followed by six digits). Raises InvalidANumberError.

    :param aNumber: string
    :return: None
    """
    if not isinstance(aNumber, str) or re.match(r'^A[0-9]{6}$', aNumber) is None:
        raise InvalidANumberError(aNumber)

def parseRange(text):
    """
    Parses an inclusive integer range like "2..24" or a single integer like "10".

    :param text: the range specification
    :return: a range instance
    """
    m = re.match(r'^\s*([0-9]+)\s*(?:\.\.\s*([0-9]+))?\s*$', text)
    if m is None:
        raise ValueError(f"invalid range {text!r}; expected something like '2..24'")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)

def atomicWrite(filename, data):
    """
    Writes data to a temporary file in the target directory and renames it to filename afterwards, so that
    concurrent readers see either the old or the new content.

    :param filename: the target file name
    :param data: bytes to be written
    :return: None
    """
    dirname = os.path.dirname(os.path.abspath(filename))
    os.makedirs(dirname, exist_ok=True)
    fd, tmpname = tempfile.mkstemp(dir=dirname, prefix=".tmp-", suffix=os.path.basename(filename))
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmpname, filename)
    except BaseException:
        if os.path.exists(tmpname):
            os.remove(tmpname)
        raise

# https://github.com/ar4s/python-sqlite-logging/blob/master/sqlite_handler.py
class SQLiteHandler(logging.Handler):
    """
    Logging handler that write logs to SQLite DB
    """
    ONE_CONNECTION_PER_THREAD = 0
    SINGLE_CONNECTION = 1

    _CREATE = ("CREATE TABLE IF NOT EXISTS "
               "debug(date datetime, loggername text, filename, srclineno integer, func text, level text, msg text)")

    def __init__(self, filename, threadSafety=ONE_CONNECTION_PER_THREAD):
        """
        Construct sqlite handler appending to filename

        :param filename: the database file
        :param threadSafety: ONE_CONNECTION_PER_THREAD or SINGLE_CONNECTION
        """
        logging.Handler.__init__(self)
        self.filename = filename
        self.threadSafety = threadSafety
        if self.threadSafety == self.SINGLE_CONNECTION:
            self.dbConn = sqlite3.connect(self.filename, check_same_thread=False)
            self.dbConn.execute(self._CREATE)
            self.dbConn.commit()
        elif self.threadSafety == self.ONE_CONNECTION_PER_THREAD:
            self.mutex = threading.RLock()
            self.dbs = {}
        else:
            raise RuntimeError(f"Unknown threadSafety option {repr(self.threadSafety)}")

    def _getDB(self):
        if self.threadSafety == self.SINGLE_CONNECTION:
            return self.dbConn
        # create a new connection for each thread
        with self.mutex:
            tid = threading.get_ident()
            if not tid in self.dbs:
                db = sqlite3.connect(self.filename)
                if len(self.dbs) == 0:
                    db.execute(self._CREATE)
                    db.commit()
                self.dbs[tid] = db
            return self.dbs[tid]

    def emit(self, record):
        """
        save record to sqlite db

        :param record: a logging record
        :return: None
        """
        db = self._getDB()
        db.execute(
            'INSERT INTO debug(date, loggername, filename, srclineno, func, level, msg) VALUES(?,?,?,?,?,?,?)',
            (
                datetime.datetime.now().isoformat(sep=" "),
                record.name,
                os.path.abspath(record.pathname),
                record.lineno,
                record.funcName,
                record.levelname,
                record.getMessage(),
            )
        )
        if self.threadSafety != self.SINGLE_CONNECTION:
            db.commit()

    def close(self):
        """
        closes all database connections

        :return: None
        """
        if self.threadSafety == self.SINGLE_CONNECTION:
            self.dbConn.commit()
            self.dbConn.close()
        else:
            with self.mutex:
                for db in self.dbs.values():
                    db.close()
                self.dbs = {}
        super().close()

# https://stackoverflow.com/questions/6234405/logging-uncaught-exceptions-in-python
def excepthook(*args):
    """
    Generic exception handler for logging uncaught exceptions.

    :param args: the exception info tuple
    :return: None
    """
    exc_type = args[0]
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(*args)
        return
    logger.error("Uncaught exception", exc_info=args)
