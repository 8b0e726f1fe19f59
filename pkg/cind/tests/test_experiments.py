import io

import pytest

from cind.experiments import (ExperimentReport, run_suite, SUITES,
                              REPORT_COLUMNS, REPORT_VERSION)


def test_report():
    rows = [{'oracle': 3, 'expected': 3}, {'oracle': 2, 'expected': 3}]
    report = ExperimentReport('demo', rows,
                              lambda r: r['oracle'] == r['expected'])
    assert len(report) == 2
    assert (report.passed, report.failed) == (1, 1)
    assert not report.ok
    assert report.summary() == '1/2 pass'
    assert list(report.data.columns) == list(REPORT_COLUMNS)
    assert list(report.data['instance']) == [0, 1]
    assert set(report.data['version']) == {REPORT_VERSION}

    text = report.to_csv()
    lines = text.splitlines()
    assert lines[0] == ','.join(REPORT_COLUMNS)
    assert lines[1].startswith('1,demo,0,,')
    assert lines[2].endswith(',3,,False')


def test_report_verdicts_are_recomputed():
    # a stale verdict in the input is ignored
    rows = [{'oracle': 1, 'expected': 2, 'verdict': True}]
    report = ExperimentReport('demo', rows,
                              lambda r: r['oracle'] == r['expected'])
    assert report.failed == 1


def test_chordal_bound_suite():
    report = run_suite('chordal-bound', count=4, n=10, seed=1)
    assert report.ok
    assert len(report) == 4
    text = report.to_csv()
    assert 'Fraction' not in text
    # same seed, same report
    assert run_suite('chordal-bound', count=4, n=10, seed=1).to_csv() == text

    buf = io.StringIO()
    report.to_csv(buf)
    assert buf.getvalue() == text


@pytest.mark.parametrize('name, count, n', [
    ('independence-bound', 3, 10),
    ('classification', 3, None),
    ('roundtrip', 5, None),
    ('cubic4', 5, 4),
    ('oracle', 4, 8),
])
def test_suites(name, count, n):
    report = run_suite(name, count=count, n=n, seed=3)
    assert report.ok, report.data[~report.data['verdict'].astype(bool)]
    assert len(report) > 0


def test_tightness_suite():
    report = run_suite('tightness', n=3, count=0)
    assert len(report) == 2
    assert report.ok
    assert list(report.data['solver_order']) == [7, 12]


def test_tightness_suite_random():
    report = run_suite('tightness', count=4, n=3, seed=5, oracle_max_n=20)
    assert len(report) == 6
    assert report.ok
    random_rows = report.data.iloc[2:]
    assert (random_rows['n'] <= 20).all()
    assert list(random_rows['instance']) == [
        'random:{}'.format(i) for i in range(4)]


def test_oracle_columns_respect_cap():
    report = run_suite('chordal-bound', count=2, n=12, oracle_max_n=10)
    assert report.data['oracle'].isna().all()
    assert report.to_csv().splitlines()[1].count(',,') >= 1


@pytest.mark.slow
def test_table_suite():
    report = run_suite('table')
    assert report.ok
    assert len(report) == 12


@pytest.mark.slow
@pytest.mark.parametrize('name', sorted(SUITES))
def test_default_suites(name):
    assert run_suite(name).ok


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite('nonsense')
