# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors
"""
Delimited-text tables with a provenance comment block.
"""

from __future__ import absolute_import, division, print_function
from .errors import DomainError
from .version import version
import csv
import io
import json
import math
import sys

import logging
log = logging.getLogger(__name__)


class Table(object):
    """
    Named columns and rows of values, written as CSV.
    """

    def __init__(self, columns, rows=None):
        """
        :param list columns: Column names.
        :param list rows: Rows as sequences (in column order) or dicts.
        """
        super(Table, self).__init__()
        if not columns:
            raise DomainError("columns", columns, "at least one column")
        self._columns = list(columns)
        self._rows = []
        for row in rows or []:
            self.append(row)

    @property
    def columns(self):
        """
        :type: list
        """
        return self._columns

    @property
    def rows(self):
        """
        Rows as dicts.

        :type: list
        """
        return self._rows

    def append(self, row):
        if not isinstance(row, dict):
            row = list(row)
            if len(row) != len(self._columns):
                raise DomainError("row", row, "{} values".format(
                    len(self._columns)))
            row = dict(zip(self._columns, row))
        unknown = set(row) - set(self._columns)
        if unknown:
            raise DomainError("row", sorted(unknown), "known column names")
        self._rows.append(row)

    def column(self, name):
        """
        Values of one column.

        :rtype: list
        """
        return [row.get(name) for row in self._rows]

    def __len__(self):
        return len(self._rows)

    def __repr__(self):
        return "Table(columns={}, rows={})".format(self._columns,
                                                   len(self._rows))


def format_value(value):
    """
    Text of one cell: ``repr`` precision for floats, empty for ``None``.

    :rtype: str
    """
    if value is None:
        return ""
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)
    return str(value)


def provenance(command, scenario=None, seed=None, **details):
    """
    Comment lines identifying how a table was produced.

    :param str command: Subcommand name.
    :param ~emf_coverage.scenario.Scenario scenario: Scenario, optional.
    :param seed: Master seed, optional.
    :param details: Further ``key=value`` pairs.
    :rtype: list
    """
    lines = ["emf-coverage {} {}".format(version, command)]
    if scenario is not None:
        lines.append("scenario={} digest={}".format(scenario.name or "-",
                                                    scenario.digest))
    lines.append("seed={}".format("none" if seed is None else seed))
    for key in sorted(details):
        lines.append("{}={}".format(key, details[key]))
    return lines


def _open(path):
    if path in (None, "-"):
        return sys.stdout, False
    return io.open(path, "w", encoding="utf-8", newline=""), True


def write_table(path, table, comments=(), footer=()):
    """
    Writes ``table`` as CSV: ``#`` comment lines, the header line, the rows
    and optional ``#`` footer lines.

    :param str path: Output file; ``None`` or ``"-"`` writes to stdout.
    :param ~emf_coverage.output.Table table: Table.
    :param comments: Leading comment lines.
    :param footer: Trailing comment lines.
    """
    stream, owned = _open(path)
    try:
        for line in comments:
            stream.write(u"# {}\n".format(line))
        writer = csv.DictWriter(stream, fieldnames=table.columns,
                                lineterminator="\n")
        writer.writeheader()
        for row in table.rows:
            writer.writerow({k: format_value(row.get(k))
                             for k in table.columns})
        for line in footer:
            stream.write(u"# {}\n".format(line))
    finally:
        if owned:
            stream.close()
    log.debug("write_table wrote: " +
              "path={} ".format(path or "-") +
              "rows={} ".format(len(table)) +
              "columns={}".format(len(table.columns)))


def write_json(path, document, comments=()):
    """
    Writes a JSON document; the comment lines go into a ``provenance`` key.

    :param str path: Output file; ``None`` or ``"-"`` writes to stdout.
    :param dict document: Document.
    """
    document = dict(document)
    if comments:
        document["provenance"] = list(comments)
    stream, owned = _open(path)
    try:
        stream.write(json.dumps(document, indent=2, sort_keys=True) + "\n")
    finally:
        if owned:
            stream.close()
