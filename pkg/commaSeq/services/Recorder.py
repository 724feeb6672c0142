# SPDX-License-Identifier: Apache-2.0
# Copyright (C) 2024 commaSeq authors
#
# THE PROGRAM IS PROVIDED "AS IS" WITHOUT WARRANTY OF ANY KIND.
#

"""
This module provides an HDF5 export of runs: the outcome, the sampled ratio series and the region decomposition.

Exact integers are stored as strings, so that arbitrarily large terms survive the round trip.
"""

import logging
from pathlib import Path
import numpy as np
import h5py

logger = logging.getLogger(__name__)

_STR = h5py.string_dtype()

RATIO_DTYPE = [('index', _STR),
               ('value', _STR),
               ('ratio', np.float64),
               ]

REGION_DTYPE = [('leadingDigit', np.int64),
                ('numDigits', np.int64),
                ('firstIndex', _STR),
                ('lastIndex', _STR),
                ('firstTerm', _STR),
                ('lastTerm', _STR),
                ('periodSum', _STR),
                ]

def _hdf5Name(filename):
    filename = str(filename)
    if not (filename.endswith(".h5") or filename.endswith(".hdf5") or filename.endswith(".hdf")):
        filename += ".h5"
    return Path(filename)

def writeRun(filename, outcome, ratioSeries=(), regions=(), overwrite=False):
    """
    Writes a run to an HDF5 file.

    :param filename: the file name (".h5" is appended if there is no HDF5 suffix)
    :param outcome: a RunOutcome instance
    :param ratioSeries: list of (index, value, ratio) tuples
    :param regions: list of RegionStretch instances; the irregular prefix is stored with leadingDigit = -1
    :param overwrite: whether or not silently overwrite existing files
    :return: the Path of the written file
    """
    path = _hdf5Name(filename)
    mode = "w" if overwrite else "x"
    with h5py.File(path, mode=mode) as f:
        run = f.create_group("run")
        for key in ("start", "base", "length", "finalTerm", "commaSum"):
            run.attrs[key] = str(getattr(outcome, key))
        run.attrs["status"] = outcome.status
        ratio = np.array([(str(i), str(v), r) for i, v, r in ratioSeries], dtype=RATIO_DTYPE)
        f.create_dataset("ratio_series", data=ratio, dtype=RATIO_DTYPE)
        rows = [(-1 if r.leadingDigit is None else r.leadingDigit,
                 -1 if r.numDigits is None else r.numDigits,
                 str(r.firstIndex), str(r.lastIndex), str(r.firstTerm), str(r.lastTerm),
                 "" if r.periodSum is None else str(r.periodSum)) for r in regions]
        f.create_dataset("regions", data=np.array(rows, dtype=REGION_DTYPE), dtype=REGION_DTYPE)
    logger.info("wrote %s (%d ratio samples, %d regions)", path, len(ratioSeries), len(regions))
    return path

class RunFile:
    """
    Read access to files written by writeRun.
    """
    def __init__(self, filename):
        self._file = h5py.File(filename, "r")

    def close(self):
        """
        Closes the file.

        :return:
        """
        self._file.close()

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()

    def attrs(self):
        """
        :return: dictionary of the run attributes with integers converted back
        """
        res = {}
        for k, v in self._file["run"].attrs.items():
            v = v.decode() if isinstance(v, bytes) else str(v)
            res[k] = v if k == "status" else int(v)
        return res

    def ratioSeries(self):
        """
        :return: list of (index, value, ratio) tuples
        """
        return [(int(_decode(i)), int(_decode(v)), float(r)) for i, v, r in self._file["ratio_series"][()]]

    def regionRows(self):
        """
        :return: list of dictionaries, one per region stretch
        """
        res = []
        for row in self._file["regions"][()]:
            periodSum = _decode(row["periodSum"])
            res.append(dict(leadingDigit=None if row["leadingDigit"] < 0 else int(row["leadingDigit"]),
                            numDigits=None if row["numDigits"] < 0 else int(row["numDigits"]),
                            firstIndex=int(_decode(row["firstIndex"])),
                            lastIndex=int(_decode(row["lastIndex"])),
                            firstTerm=int(_decode(row["firstTerm"])),
                            lastTerm=int(_decode(row["lastTerm"])),
                            periodSum=int(periodSum) if periodSum else None))
        return res

def _decode(v):
    return v.decode() if isinstance(v, bytes) else str(v)
