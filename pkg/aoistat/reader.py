# aoistat.reader
# Reading and writing the canonical sweep CSV
#
# Created:  Sat Oct 17 17:44:08 2026 +0000
#
# Copyright (C) 2026 The aoistat authors
# For license information, see LICENSE.txt
#
# ID: reader.py [] $

"""
Reading and writing the canonical sweep CSV.

Numbers are written with twelve decimal places, missing values as empty
fields and lines end with a bare newline, so that equal rows always give
equal bytes and reading a file back and writing it again is byte-exact.
"""

##########################################################################
## Imports
##########################################################################

import os
import io

import unicodecsv as csv

from aoistat.analyze import SweepRow
from aoistat.policies import PolicyId, Method
from aoistat.exceptions import ReaderException, WriterException, AoIStatException

##########################################################################
## Expected Fields
##########################################################################

POLICY   = "policy"
RHO1     = "rho1"
RHO2     = "rho2"
MU       = "mu"
DELTA1   = "delta1"
DELTA2   = "delta2"
SUM_AOI  = "sum_aoi"
JAIN     = "jain"
METHOD   = "method"
CI_LOW   = "ci_low"
CI_HIGH  = "ci_high"
SEED     = "seed"

FIELDS   = (
    POLICY, RHO1, RHO2, MU, DELTA1, DELTA2,
    SUM_AOI, JAIN, METHOD, CI_LOW, CI_HIGH, SEED,
)

NUMBERS  = (RHO1, RHO2, MU, DELTA1, DELTA2, SUM_AOI, JAIN, CI_LOW, CI_HIGH)

ENCODING = 'utf-8'
NUMFMT   = '%.12f'

TRACE_FIELDS = ("policy", "replication", "source", "generated", "delivered")

##########################################################################
## Formatting
##########################################################################

def format_number(value):
    if value is None:
        return ""
    return NUMFMT % value


def quantize(row):
    """
    The row as it reads back from CSV: numbers rounded to the file format.
    """
    values = dict(
        (name, None if getattr(row, name) is None else float(format_number(getattr(row, name))))
        for name in NUMBERS
    )
    return SweepRow(row.policy, method=row.method, seed=row.seed, **values)


def row_values(row):
    return (
        str(row.policy),
        format_number(row.rho1),
        format_number(row.rho2),
        format_number(row.mu),
        format_number(row.delta1),
        format_number(row.delta2),
        format_number(row.sum_aoi),
        format_number(row.jain),
        str(row.method),
        format_number(row.ci_low),
        format_number(row.ci_high),
        "" if row.seed is None else "%d" % row.seed,
    )

##########################################################################
## Writing
##########################################################################

def write_rows(rows, stream):
    writer = csv.writer(stream, encoding=ENCODING, lineterminator='\n')
    writer.writerow(FIELDS)
    for row in rows:
        writer.writerow(row_values(row))


def emit_csv(rows, destination):
    """
    Writes sweep rows with a header to a path or a binary file object.
    """
    rows = list(rows)
    if not rows:
        raise WriterException("empty sweep")

    if hasattr(destination, 'write'):
        write_rows(rows, destination)
        return destination

    path = os.path.abspath(os.path.expanduser(os.fspath(destination)))
    try:
        with open(path, 'wb') as stream:
            write_rows(rows, stream)
    except OSError as e:
        raise WriterException("could not write '%s': %s" % (path, e.strerror or e))
    return path


def csv_bytes(rows):
    """
    The exact bytes emit_csv writes for the rows.
    """
    buffer = io.BytesIO()
    emit_csv(rows, buffer)
    return buffer.getvalue()


class TraceWriter(object):
    """
    Callable that writes one line per simulated delivery to a binary stream.
    """

    def __init__(self, stream, policy):
        self.policy = str(policy)
        self.writer = csv.writer(stream, encoding=ENCODING, lineterminator='\n')
        self.writer.writerow(TRACE_FIELDS)
        self.count  = 0

    def __call__(self, replication, delivery):
        self.count += 1
        self.writer.writerow((
            self.policy, "%d" % replication, "%d" % delivery.source,
            format_number(delivery.generated), format_number(delivery.delivered),
        ))

##########################################################################
## Reader Class
##########################################################################

class SweepReader(object):
    """
    Iterable that munges and validates sweep CSV data into rows.
    """

    def __init__(self, path, **kwargs):
        self.path = path
        self.encoding = kwargs.get('encoding', ENCODING)

    @property
    def path(self):
        return self._path

    @path.setter
    def path(self, path):
        """
        Expands the path and checks that a file exists there.
        """
        path = os.path.expanduser(os.fspath(path))
        path = os.path.expandvars(path)
        path = os.path.abspath(path)

        if not os.path.exists(path) or not os.path.isfile(path):
            raise ReaderException("No CSV file found at '%s'" % path)

        self._path = path

    def munge(self, row, line):
        """
        Converts the text fields of a row to Python types, empty fields
        becoming None.
        """
        converters = [(key, float) for key in NUMBERS] + [
            (POLICY, PolicyId.parse),
            (METHOD, Method.parse),
            (SEED,   int),
        ]

        if None in row:
            raise ReaderException("%s, row %i: more fields than the header" % (self.path, line))

        for key, func in converters:
            if row[key] == "":
                row[key] = None
                continue
            try:
                row[key] = func(row[key])
            except (TypeError, ValueError, AoIStatException) as e:
                raise ReaderException("%s, row %i: bad %s %r (%s)" % (
                    self.path, line, key, row[key], e))

        return SweepRow(**row)

    def __iter__(self):
        """
        Iterable for rows in CSV file. The count for len is only kept
        once every row has been read.
        """
        with open(self.path, 'rb') as data:
            reader = csv.DictReader(data, encoding=self.encoding)
            if tuple(reader.fieldnames or ()) != FIELDS:
                raise ReaderException("%s: expected header %s" % (self.path, ",".join(FIELDS)))

            count = 0
            for row in reader:
                count += 1
                yield self.munge(row, count)

        self._lines = count

    def __len__(self):
        """
        If iteration has already run, returns the number of rows, else will
        iterate through the CSV file to determine its length.
        """
        if not hasattr(self, '_lines'):
            for _ in self: continue
        return self._lines

    def __str__(self):
        return "<SweepReader (%i rows) at '%s'>" % (len(self), self.path)
