"""The bundled check suite and its CSV/figure report."""

import csv
import pathlib

import pytest

from haft.reduction import numeral_value
from haft.report import write_report
from haft.suite import numeral_add, numeral_mul, render_suite, run_suite

EXPECTED_ROWS = [
    ("identity-law", 4),
    ("composition-law", 64),
    ("transposition-law", 64),
    ("congruence-argument", 16),
    ("congruence-function", 16),
    ("equality-equivalence", 12),
    ("observational-principle", 3),
    ("self-interpretation", 271),
    ("beta-expansion", 120),
    ("recursor-arithmetic", 242),
    ("proof-discharge", 30),
]


def test_recursor_encodings_match_native_arithmetic():
    for m, n in ((0, 0), (1, 0), (0, 1), (3, 4), (7, 6)):
        assert numeral_value(numeral_add(m, n)) == m + n
        assert numeral_value(numeral_mul(m, n)) == m * n


@pytest.fixture(scope="module")
def report():
    return run_suite()


def test_run_suite_rows_and_counts(report):
    got = [(row.name, row.checks) for row in report.rows]
    assert got == EXPECTED_ROWS
    assert all(row.ok for row in report.rows)
    assert report.ok


def test_render_suite_is_stable(report):
    text = render_suite(report)
    assert render_suite(report) == text
    lines = text.splitlines()
    assert len(lines) == 12
    assert lines[0] == "identity-law             ok       4 checks"
    assert lines[-1] == "overall: ok (11 rows)"


def test_write_report_artifacts(report, tmp_path):
    paths = write_report(report, str(tmp_path))
    assert [pathlib.Path(p).name for p in paths] == ["suite.csv", "suite.png"]
    with open(paths[0], newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["row", "ok", "checks"]
    assert [(r[0], int(r[2])) for r in rows[1:]] == EXPECTED_ROWS
    assert all(r[1] == "ok" for r in rows[1:])
    png = pathlib.Path(paths[1]).read_bytes()
    assert png[:8] == b"\x89PNG\r\n\x1a\n"
