# -*- coding: utf-8 -*-
# (c) Copyright 2026 emf-coverage contributors

from __future__ import absolute_import, division, print_function
from emf_coverage.errors import DomainError
from emf_coverage.output import Table, format_value, provenance, \
    write_json, write_table
from emf_coverage.scenario import load_scenario
from emf_coverage.version import version
import io
import json
import numpy as np
import pytest


def read_lines(path):
    return io.open(str(path), encoding="utf-8").read().splitlines()


def test_table():
    table = Table(["t", "p"], [(1.0, 0.5), {"t": 2.0}])
    assert len(table) == 2
    assert table.column("p") == [0.5, None]
    assert table.rows[0] == {"t": 1.0, "p": 0.5}


@pytest.mark.parametrize("make", [
    lambda: Table([]),
    lambda: Table(["t"], [(1.0, 2.0)]),
    lambda: Table(["t"], [{"p": 1.0}]),
])
def test_table_domain(make):
    with pytest.raises(DomainError):
        make()


@pytest.mark.parametrize("value,text", [
    (None, ""),
    (True, "true"),
    (0.1, "0.1"),
    (np.float64(1e-7), "1e-07"),
    (float("nan"), "nan"),
    (np.int64(3), "3"),
    ("hppp", "hppp"),
])
def test_format_value(value, text):
    assert format_value(value) == text


def test_provenance():
    scenario = load_scenario("paris-5gnr2100")
    lines = provenance("analyze", scenario, seed=7, metric="exposure-cdf")
    assert lines[0] == "emf-coverage {} analyze".format(version)
    assert lines[1] == "scenario=paris-5gnr2100 digest={}".format(
        scenario.digest)
    assert lines[2:] == ["seed=7", "metric=exposure-cdf"]
    assert provenance("fit") == ["emf-coverage {} fit".format(version),
                                 "seed=none"]


def test_write_table(tmp_path):
    path = tmp_path / "out.csv"
    table = Table(["t_db", "ccdf"], [(0.0, 0.25), (3.0, None)])
    write_table(str(path), table, comments=["head"], footer=["tail"])
    assert read_lines(path) == ["# head", "t_db,ccdf", "0.0,0.25", "3.0,",
                                "# tail"]


def test_write_table_stdout(capsys):
    write_table("-", Table(["a"], [(1,)]))
    assert capsys.readouterr().out == "a\n1\n"


def test_write_json(tmp_path):
    path = tmp_path / "out.json"
    write_json(str(path), {"mean": 1.5}, comments=["emf-coverage"])
    document = json.loads(io.open(str(path), encoding="utf-8").read())
    assert document == {"mean": 1.5, "provenance": ["emf-coverage"]}
