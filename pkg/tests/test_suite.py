import json
import time

from stablekc.suite import DEFAULT_SEED, EXAMPLES, run_paper_suite


def test_suite_passes_and_is_fast():
    t = time.perf_counter()
    report = run_paper_suite()
    elapsed = time.perf_counter() - t
    failed = [e.name + ": " + e.detail for e in report.entries if not e.passed]
    assert report.passed, failed
    assert elapsed < 60
    assert report.seed == DEFAULT_SEED


def test_suite_covers_every_example():
    report = run_paper_suite()
    names = [e.name for e in report.entries]
    assert len(names) == len(set(names))
    assert {name for name, _, _ in EXAMPLES} <= set(names)


def test_suite_json_is_deterministic_across_threads():
    one = json.dumps(run_paper_suite(threads=1).to_json(timings=False), sort_keys=True)
    four = json.dumps(run_paper_suite(threads=4).to_json(timings=False), sort_keys=True)
    assert one == four


def test_suite_lines():
    report = run_paper_suite()
    *rows, summary = report.lines()
    assert len(rows) == len(report.entries)
    assert all(row.startswith("PASS") for row in rows)
    assert summary.startswith(f"{len(rows)}/{len(rows)} checks passed")
