# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module formats command line results as JSON lines, CSV or plain text.

Integers are always written exactly. In JSON, integers outside the signed 64 bit range are written as decimal
strings.
"""

import csv
import json
import sys

FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_PLAIN = "plain"
FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_PLAIN)

_INT64_LIMIT = 2**63

def jsonValue(value):
    """
    :param value: a result value
    :return: a json-serializable value
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -_INT64_LIMIT <= value < _INT64_LIMIT else str(value)
    if isinstance(value, (list, tuple)):
        return [jsonValue(v) for v in value]
    if isinstance(value, dict):
        return {k: jsonValue(v) for k, v in value.items()}
    return value

def textValue(value):
    """
    :param value: a result value
    :return: the string written in csv and plain output
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return " ".join(textValue(v) for v in value)
    return str(value)

class Output:
    """
    Writes records (dictionaries with identical keys) to a stream.
    """

    def __init__(self, fmt=FORMAT_PLAIN, stream=None):
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self._format = fmt
        self._stream = sys.stdout if stream is None else stream

    @property
    def format(self):
        """
        :return: the output format
        """
        return self._format

    def summary(self, record):
        """
        Writes a single record. Plain output is a line of key=value pairs.

        :param record: a dictionary
        :return: None
        """
        if self._format == FORMAT_PLAIN:
            self._stream.write(" ".join(f"{k}={textValue(v)}" for k, v in record.items()) + "\n")
        else:
            self.table([record])

    def values(self, name, values):
        """
        Writes a list of single values. Plain output is one line of space separated values.

        :param name: the field name used in json and csv output
        :param values: iterable of values
        :return: None
        """
        if self._format == FORMAT_PLAIN:
            self._stream.write(" ".join(textValue(v) for v in values) + "\n")
        else:
            self.table({name: v} for v in values)

    def table(self, records):
        """
        Writes a sequence of records. Plain output is an aligned table with a header line.

        :param records: iterable of dictionaries
        :return: None
        """
        if self._format == FORMAT_JSON:
            for r in records:
                self._stream.write(json.dumps(jsonValue(r)) + "\n")
            return
        records = list(records)
        if not records:
            return
        fields = list(records[0].keys())
        if self._format == FORMAT_CSV:
            writer = csv.writer(self._stream, lineterminator="\n")
            writer.writerow(fields)
            for r in records:
                writer.writerow([textValue(r[f]) for f in fields])
            return
        rows = [fields] + [[textValue(r[f]) for f in fields] for r in records]
        widths = [max(len(row[i]) for row in rows) for i in range(len(fields))]
        for row in rows:
            self._stream.write("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() + "\n")

    def stream(self, name, values):
        """
        Writes values one per line without buffering them (used for long term listings).

        :param name: the field name used in json and csv output
        :param values: iterable of values
        :return: None
        """
        if self._format == FORMAT_CSV:
            self._stream.write(name + "\n")
        for v in values:
            if self._format == FORMAT_JSON:
                self._stream.write(json.dumps({name: jsonValue(v)}) + "\n")
            else:
                self._stream.write(textValue(v) + "\n")
