from seqcontrol.diff import run_diff
from seqcontrol.enumeration import EnumerationBounds


def test_small_bounds_zero_mismatches():
    report = run_diff(EnumerationBounds(2, 1))
    assert report.ok
    assert report.checked == 489
    assert report.mismatches == []
    assert report.guard_skipped == 0


def test_empty_bounds_empty_report():
    report = run_diff(EnumerationBounds(1, 0, ()))
    assert report.checked == 0
    assert report.ok
    assert report.summary()["mismatches"] == []


def test_reproducible_reports():
    bounds = EnumerationBounds(2, 1)
    first = run_diff(bounds)
    second = run_diff(bounds)
    assert first.summary() == second.summary()


def test_guard_skips_recorded_not_fatal():
    report = run_diff(EnumerationBounds(3, 2, ("CCDC",)), guard=10)
    assert report.guard_skipped > 0
    assert report.checked > report.guard_skipped  # terminal-ish ones still ran
    assert report.ok


def test_discrepancy_ledger_sites():
    report = run_diff(EnumerationBounds(2, 1))
    assert "constructive:no-good-cowinner" in report.discrepancies
    entry = report.discrepancies["constructive:no-good-cowinner"]
    assert entry.count >= 1
    assert entry.examples
    # oracle sided with the strict ladder everywhere
    assert report.mismatches == []


def test_pure_engine_agrees():
    strict = run_diff(EnumerationBounds(2, 1), engine="pure")
    fast = run_diff(EnumerationBounds(2, 1))
    assert strict.summary() == fast.summary()


def test_report_dict_shape():
    report = run_diff(EnumerationBounds(2, 0))
    data = report.to_dict()
    assert data["checked"] == report.checked
    assert "wall_time_seconds" in data
    assert data["bounds"]["max_candidates"] == 2
