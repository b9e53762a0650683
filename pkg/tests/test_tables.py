"""Embedded row data and its verification pipeline."""
from __future__ import annotations

import pytest

from linkinv.tables import (
    DEFAULT_ORACLE_CAP,
    TableRow,
    load_table,
    parse_row_selection,
    verify_row,
    verify_table,
)


def test_load_counts():
    assert len(load_table(1)) == 31
    assert len(load_table(2)) == 6


def test_load_rejects_unknown():
    with pytest.raises(ValueError):
        load_table(3)


def test_first_rows_pinned():
    row = load_table(1)[0]
    assert row.weights == (701, 2103, 342, 786, 276, 2103)
    assert row.degree == 4206
    assert row.m3 == 701
    assert row.label == "Kervaire"
    row2 = load_table(2)[0]
    assert row2.weights == (1766, 8830, 5835, 155, 1075, 8830)
    assert row2.degree == 17660
    assert row2.m3 == 3532
    assert row2.label == "S4xS5"


def test_row_selection_parsing():
    assert parse_row_selection("1,3,5-7", 31) == (1, 3, 5, 6, 7)
    assert parse_row_selection("4", 31) == (4,)
    assert parse_row_selection("2-2,1", 31) == (2, 1)
    with pytest.raises(ValueError):
        parse_row_selection("0", 31)
    with pytest.raises(ValueError):
        parse_row_selection("32", 31)
    with pytest.raises(ValueError):
        parse_row_selection("a-b", 31)


def test_verify_table_one_closed_forms():
    result = verify_table(1, oracle_cap=0)
    assert result.passed
    assert result.failures == ()
    assert len(result.reports) == 31
    assert all(not r.oracle_ran for r in result.reports)


def test_verify_table_two():
    result = verify_table(2, oracle_cap=0)
    assert result.passed
    for report in result.reports:
        names = {c.name for c in report.checks}
        assert {"weights", "degree", "betti_one", "torsion_free", "label"} <= names


def test_verify_row_oracle_runs_under_cap():
    row = load_table(1)[0]
    report = verify_row(row, oracle_cap=DEFAULT_ORACLE_CAP)
    assert report.oracle_ran
    assert report.passed
    names = {c.name for c in report.checks}
    assert {"oracle_degree", "oracle_eval_1", "oracle_eval_minus1"} <= names


def test_table_one_delta_matches_m3_column():
    result = verify_table(1, oracle_cap=0)
    assert all(r.m3_matches_delta_minus1 for r in result.reports)


def test_table_two_delta_column_mismatch_reported():
    # |Delta(-1)| is m2 m3 on every row, so the m3 column never matches;
    # the mismatch is reported without failing the row
    result = verify_table(2, oracle_cap=0)
    assert result.passed
    for report in result.reports:
        assert report.delta_minus1 == -report.row.degree
        assert not report.m3_matches_delta_minus1


def test_corrupted_row_fails():
    row = load_table(1)[0]
    bad = TableRow(
        table=row.table,
        index=row.index,
        weights=(701, 2103, 342, 786, 277, 2103),
        polynomial=row.polynomial,
        degree=row.degree,
        m3=row.m3,
        label=row.label,
    )
    report = verify_row(bad, oracle_cap=0)
    assert not report.passed
    assert any(not c.passed for c in report.checks)


def test_unparseable_row_fails_cleanly():
    row = load_table(1)[0]
    bad = TableRow(
        table=row.table,
        index=row.index,
        weights=row.weights,
        polynomial="z0^2 +",
        degree=row.degree,
        m3=row.m3,
        label=row.label,
    )
    report = verify_row(bad, oracle_cap=0)
    assert not report.passed


def test_selection_subset():
    result = verify_table(1, rows="1-2", oracle_cap=0)
    assert len(result.reports) == 2
    assert result.passed


def test_as_dict_shape():
    result = verify_table(2, rows="1", oracle_cap=0)
    payload = result.as_dict()
    assert payload["table"] == 2
    assert payload["passed"] is True
    assert payload["rows"] == 1
    entry = payload["reports"][0]
    assert entry["m3_matches_delta_minus1"] is False
    assert isinstance(entry["checks"], list)
